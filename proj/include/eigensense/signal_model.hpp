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

#include <vector>

#include "eigensense/matrix.hpp"
#include "eigensense/rng.hpp"
#include "eigensense/scenario.hpp"

namespace eigensense {

/// Primary-user samples, length N.
struct SignalVector {
    std::vector<cdouble> samples;
};

/// Per-sensor channel gains, length M (or pM' after stacking).
struct ChannelVector {
    std::vector<cdouble> gains;
};

/// Received data matrix under one hypothesis: X = A S + W (h1) or X = W (h0).
struct ReceivedMatrix {
    CMatrix data;
    Hypothesis hypothesis = Hypothesis::h0;
};

/// Zero-mean Gaussian primary signal of the given variance. Complex mode is
/// circularly symmetric (components carry variance/2 each). Scaling is a
/// pure multiplication by sqrt(variance), so draws at different variances
/// under the same seed are exact scalings of each other.
SignalVector gen_pu_signal(int num_samples, double signal_variance, FieldMode field,
                           rng::GaussianStream& stream);

/// Channel gains for one trial. unit: all ones (no draws); fixed: copies the
/// configured vector; rayleigh_per_trial: i.i.d. complex normal entries
/// normalized so the mean square gain is exactly 1.
ChannelVector gen_channel(int num_sensors, const ScenarioConfig& scenario,
                          rng::GaussianStream& stream);

/// M x N i.i.d. zero-mean AWGN of the given variance, filled row-major.
CMatrix gen_noise(int num_rows, int num_samples, double noise_variance, FieldMode field,
                  rng::GaussianStream& stream);

/// X = W under h0; X = A S + W (rank-one outer product plus noise) under h1.
ReceivedMatrix synthesize_received(Hypothesis hypothesis, const ChannelVector& channel,
                                   const SignalVector& signal, const CMatrix& noise);

/// Channel gains of the stacked subgroup matrix: subgroup i contributes
/// gains i .. i+M'-1, giving a length-pM' vector.
ChannelVector stack_subgroup_gains(const ChannelVector& channel, int overlap);

}  // namespace eigensense
