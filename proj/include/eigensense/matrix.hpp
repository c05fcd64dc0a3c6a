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

#include <complex>
#include <cstddef>
#include <vector>

namespace eigensense {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Deliberately minimal: the library only
/// needs storage, element access, and contiguous rows for dot products.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    cdouble* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const cdouble* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

    const std::vector<cdouble>& data() const noexcept { return data_; }
    std::vector<cdouble>& data() noexcept { return data_; }

    bool operator==(const CMatrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

}  // namespace eigensense
