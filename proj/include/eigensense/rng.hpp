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
#include <random>

namespace eigensense::rng {

/// SplitMix64 finalizer step. Used as the mixing primitive of the seed
/// derivation scheme below; full 64-bit avalanche.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// One step of the splittable-counter derivation: jump to position `word`
/// in the SplitMix64 stream whose state is `base`.
constexpr std::uint64_t derive(std::uint64_t base, std::uint64_t word) noexcept {
    return splitmix64(base + word * 0x9E3779B97F4A7C15ULL);
}

/// Independent sub-streams drawn by one Monte Carlo trial.
enum class Stream : std::uint64_t { signal = 1, channel = 2, noise = 3 };

/// Campaign phases get disjoint seed spaces so that calibration data can
/// never leak into evaluation data.
enum class Purpose : std::uint64_t { generic = 0, calibration = 1, evaluation = 2 };

/// Seed for the (trial, stream) generator of a campaign:
///   seed = derive(derive(derive(splitmix64(master), purpose), trial), stream).
/// Trials therefore own fully independent streams, every worker schedule
/// produces the same numbers, and an H0 run shares its noise stream with
/// the H1 run of the same master seed.
constexpr std::uint64_t trial_stream_seed(std::uint64_t master_seed, Purpose purpose,
                                          std::uint64_t trial, Stream stream) noexcept {
    std::uint64_t s = splitmix64(master_seed);
    s = derive(s, static_cast<std::uint64_t>(purpose));
    s = derive(s, trial);
    return derive(s, static_cast<std::uint64_t>(stream));
}

/// Standard normal generator over a dedicated engine: Box-Muller on top of
/// mt19937_64, both fully specified, so sequences are identical across
/// platforms with the same floating-point environment. std::normal_distribution
/// is implementation-defined and deliberately not used.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in (0, 1]; never returns 0 so log() below is safe.
    double next_uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// One standard normal sample. Box-Muller produces pairs; the second
    /// value is cached for the next call.
    double next() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric standard complex normal (unit total variance,
    /// i.e. each component has variance 1/2).
    std::complex<double> next_complex() {
        const double re = next();
        const double im = next();
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

    /// Uniform integer in [0, bound); rejection-free Lemire reduction is not
    /// needed at these bounds, plain rejection keeps it exact and portable.
    std::uint64_t next_index(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % bound;
    }

  private:
    static constexpr double kPi = 3.14159265358979323846;
    static constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace eigensense::rng
