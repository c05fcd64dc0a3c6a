// SPDX-License-Identifier: Apache-2.0
//
// eigensense: eigenvalue-based spectrum sensing with overlapping sensor subgroups
// Copyright (C) 2026 The eigensense authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "eigensense/errors.hpp"
#include "eigensense/overlap.hpp"

namespace eigensense {

enum class Hypothesis { h0, h1 };

enum class FieldMode { real_valued, complex_valued };

enum class ChannelModel { unit, fixed, rayleigh_per_trial };

/// How the stacked subgroup matrix is synthesized in Monte Carlo trials.
///
/// independent: every stacked row gets its own AWGN draw, i.e. the p
///   subgroups behave like pM' distinct sensors observing the same primary
///   signal through the stacked channel gains. This is the regime the
///   bundled experiment recipes target; it keeps the stacked covariance
///   full rank whenever pM' <= N.
/// shared: the stacked matrix reuses the physical rows of the one M x N
///   received matrix, so duplicated rows carry identical noise and the
///   stacked covariance is exactly the block rearrangement of the plain
///   covariance (rank <= min(M, N); blind ratio detectors that divide by
///   the minimum eigenvalue are rejected for p >= 2 in this mode).
enum class SubgroupNoise { independent, shared };

/// Full description of one sensing scenario. Defaults mirror the bundled
/// experiment recipes (8 sensors, 200 samples, -13 dB, complex field).
struct ScenarioConfig {
    int num_sensors = 8;   // M
    int num_samples = 200; // N
    int overlap = 1;       // p, subgroups of M-p+1 consecutive sensors

    double noise_variance = 1.0;  // sigma_n^2, linear power
    // Exactly one of the two signal-level parameterizations may be set;
    // snr_db defines sigma_s^2 = sigma_n^2 * 10^(snr_db/10) per sensor.
    std::optional<double> snr_db = -13.0;
    std::optional<double> signal_variance;

    FieldMode field = FieldMode::complex_valued;
    ChannelModel channel = ChannelModel::unit;
    std::vector<cdouble> fixed_gains;  // used iff channel == fixed

    SubgroupNoise subgroup_noise = SubgroupNoise::independent;

    std::uint64_t master_seed = 1;

    int m_prime() const { return subgroup_size(num_sensors, overlap); }
    int stacked_dim() const { return stacked_size(num_sensors, overlap); }

    double resolved_signal_variance() const {
        if (signal_variance) return *signal_variance;
        return noise_variance * std::pow(10.0, *snr_db / 10.0);
    }

    ScenarioConfig with_overlap(int p) const {
        ScenarioConfig c = *this;
        c.overlap = p;
        return c;
    }

    ScenarioConfig with_snr_db(double db) const {
        ScenarioConfig c = *this;
        c.signal_variance.reset();
        c.snr_db = db;
        return c;
    }

    void validate() const {
        if (num_sensors < 2) throw ConfigError("scenario: num_sensors must be >= 2");
        if (num_samples < 1) throw ConfigError("scenario: num_samples must be >= 1");
        validate_overlap(num_sensors, overlap);
        if (!(noise_variance > 0.0)) {
            throw ConfigError("scenario: noise_variance must be > 0");
        }
        if (snr_db.has_value() == signal_variance.has_value()) {
            throw ConfigError(
                "scenario: exactly one of snr_db and signal_variance must be set");
        }
        if (signal_variance && *signal_variance < 0.0) {
            throw ConfigError("scenario: signal_variance must be >= 0");
        }
        if (snr_db && !std::isfinite(*snr_db)) {
            throw ConfigError("scenario: snr_db must be finite");
        }
        if (channel == ChannelModel::fixed &&
            fixed_gains.size() != static_cast<std::size_t>(num_sensors)) {
            throw ConfigError("scenario: fixed channel gains must have length M");
        }
    }
};

}  // namespace eigensense
