// Copyright 2026 The qface Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Classical vectors to quantum states: amplitude and basis encoding, plus the
// qubit budget of a swap-test circuit.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qface/qsim.hpp"

namespace qface::encoding {

/// Smallest input norm that can be encoded.
inline constexpr double kMinNorm = 1e-12;
/// Allowed deviation of a unit vector's sum of squares from 1.
inline constexpr double kUnitTolerance = 1e-10;

bool is_power_of_two(std::size_t n) noexcept;
/// log2(n) for n a power of two >= 2; throws InvalidArgument otherwise.
int log2_exact(std::size_t n);

/// Real feature vector whose dimension is a power of two >= 2, all entries finite.
class FeatureVector {
public:
    explicit FeatureVector(std::vector<double> values);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

/// FeatureVector with unit Euclidean norm.
class UnitFeatureVector {
public:
    /// Validates that `values` already has unit norm within kUnitTolerance.
    static UnitFeatureVector from_unit(std::vector<double> values);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    FeatureVector as_feature() const { return FeatureVector(values_); }

private:
    explicit UnitFeatureVector(std::vector<double> values) : values_(std::move(values)) {}
    friend UnitFeatureVector normalize(const FeatureVector&);

    std::vector<double> values_;
};

/// x / ||x||_2. Throws InvalidArgument when ||x|| <= kMinNorm.
UnitFeatureVector normalize(const FeatureVector& x);

/// Register on log2(dim) qubits with amplitude i equal to X[i].
qsim::QuantumRegister amplitude_encode(const UnitFeatureVector& x);

/// Computational basis state for a bit string; the leftmost character is the
/// most significant bit, so "010" lands on index 2.
qsim::QuantumRegister basis_encode(std::string_view bits);

/// Qubits for a swap test on two dim-dimensional states plus one ancilla:
/// 2 * log2(dim) + 1.
int required_qubits(std::size_t dim);

}  // namespace qface::encoding
