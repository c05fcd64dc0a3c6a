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

#include "eigensense/signal_model.hpp"

#include <cmath>
#include <string>

namespace eigensense {

SignalVector gen_pu_signal(int num_samples, double signal_variance, FieldMode field,
                           rng::GaussianStream& stream) {
    if (num_samples < 1) throw ConfigError("gen_pu_signal: num_samples must be >= 1");
    if (signal_variance < 0.0) throw ConfigError("gen_pu_signal: variance must be >= 0");

    const double scale = std::sqrt(signal_variance);
    SignalVector s;
    s.samples.resize(num_samples);
    if (field == FieldMode::complex_valued) {
        for (auto& v : s.samples) v = stream.next_complex() * scale;
    } else {
        for (auto& v : s.samples) v = cdouble{stream.next() * scale, 0.0};
    }
    return s;
}

ChannelVector gen_channel(int num_sensors, const ScenarioConfig& scenario,
                          rng::GaussianStream& stream) {
    if (num_sensors < 2) throw ConfigError("gen_channel: need at least 2 sensors");

    ChannelVector a;
    switch (scenario.channel) {
        case ChannelModel::unit:
            a.gains.assign(num_sensors, cdouble{1.0, 0.0});
            break;
        case ChannelModel::fixed:
            if (scenario.fixed_gains.size() != static_cast<std::size_t>(num_sensors)) {
                throw ConfigError("gen_channel: fixed gain vector has length " +
                                  std::to_string(scenario.fixed_gains.size()) +
                                  ", expected " + std::to_string(num_sensors));
            }
            a.gains = scenario.fixed_gains;
            break;
        case ChannelModel::rayleigh_per_trial: {
            a.gains.resize(num_sensors);
            double sum_sq = 0.0;
            for (auto& g : a.gains) {
                g = scenario.field == FieldMode::complex_valued
                        ? stream.next_complex()
                        : cdouble{stream.next(), 0.0};
                sum_sq += std::norm(g);
            }
            // Normalize so (1/M) sum |a_m|^2 == 1 exactly.
            const double scale = std::sqrt(num_sensors / sum_sq);
            for (auto& g : a.gains) g *= scale;
            break;
        }
    }
    return a;
}

CMatrix gen_noise(int num_rows, int num_samples, double noise_variance, FieldMode field,
                  rng::GaussianStream& stream) {
    if (num_rows < 1 || num_samples < 1) {
        throw ConfigError("gen_noise: dimensions must be >= 1");
    }
    if (!(noise_variance > 0.0)) throw ConfigError("gen_noise: variance must be > 0");

    const double scale = std::sqrt(noise_variance);
    CMatrix w(num_rows, num_samples);
    if (field == FieldMode::complex_valued) {
        for (auto& v : w.data()) v = stream.next_complex() * scale;
    } else {
        for (auto& v : w.data()) v = cdouble{stream.next() * scale, 0.0};
    }
    return w;
}

ReceivedMatrix synthesize_received(Hypothesis hypothesis, const ChannelVector& channel,
                                   const SignalVector& signal, const CMatrix& noise) {
    const std::size_t m = noise.rows();
    const std::size_t n = noise.cols();
    if (channel.gains.size() != m || signal.samples.size() != n) {
        throw ConfigError("synthesize_received: dimension mismatch (A: " +
                          std::to_string(channel.gains.size()) + ", S: " +
                          std::to_string(signal.samples.size()) + ", W: " +
                          std::to_string(m) + "x" + std::to_string(n) + ")");
    }

    ReceivedMatrix x;
    x.hypothesis = hypothesis;
    x.data = noise;
    if (hypothesis == Hypothesis::h1) {
        for (std::size_t i = 0; i < m; ++i) {
            const cdouble a = channel.gains[i];
            cdouble* row = x.data.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                row[j] += a * signal.samples[j];
            }
        }
    }
    return x;
}

ChannelVector stack_subgroup_gains(const ChannelVector& channel, int overlap) {
    const int m = static_cast<int>(channel.gains.size());
    const auto rows = stacked_row_sensors(m, overlap);
    ChannelVector stacked;
    stacked.gains.reserve(rows.size());
    for (int sensor : rows) stacked.gains.push_back(channel.gains[sensor]);
    return stacked;
}

}  // namespace eigensense
