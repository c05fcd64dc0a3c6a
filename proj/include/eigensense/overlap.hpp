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

#include <string>
#include <vector>

#include "eigensense/errors.hpp"

namespace eigensense {

/// Index arithmetic for overlapping sensor subgroups. With M sensors and
/// overlap count p, subgroup i (0-based) covers sensors i .. i+M'-1 where
/// M' = M - p + 1; consecutive subgroups share M'-1 sensors. Stacking the
/// p subgroups yields pM' rows.

inline void validate_overlap(int num_sensors, int overlap) {
    if (num_sensors < 2) {
        throw ConfigError("overlap: need at least 2 sensors, got " +
                          std::to_string(num_sensors));
    }
    if (overlap < 1 || overlap > num_sensors - 1) {
        throw ConfigError("overlap: p must satisfy 1 <= p <= M-1, got p=" +
                          std::to_string(overlap) + " with M=" + std::to_string(num_sensors));
    }
}

inline int subgroup_size(int num_sensors, int overlap) {
    return num_sensors - overlap + 1;  // M'
}

inline int stacked_size(int num_sensors, int overlap) {
    return overlap * subgroup_size(num_sensors, overlap);  // pM'
}

/// Sensor picked by each row of the stacked subgroup matrix, in stacking
/// order: (0, 1, .., M'-1, 1, 2, .., M', .., p-1, .., M-1).
inline std::vector<int> stacked_row_sensors(int num_sensors, int overlap) {
    validate_overlap(num_sensors, overlap);
    const int m_prime = subgroup_size(num_sensors, overlap);
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(overlap) * m_prime);
    for (int group = 0; group < overlap; ++group) {
        for (int k = 0; k < m_prime; ++k) {
            rows.push_back(group + k);
        }
    }
    return rows;
}

}  // namespace eigensense
