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

#include "qface/encoding.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qface/error.hpp"

namespace qface::encoding {

bool is_power_of_two(std::size_t n) noexcept { return n >= 2 && std::has_single_bit(n); }

int log2_exact(std::size_t n) {
    require(is_power_of_two(n), ErrorCode::InvalidArgument,
            "dimension " + std::to_string(n) + " is not a power of two >= 2");
    return std::countr_zero(n);
}

FeatureVector::FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    log2_exact(values_.size());
    for (double v : values_) {
        require(std::isfinite(v), ErrorCode::InvalidArgument, "feature vector: non-finite entry");
    }
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

UnitFeatureVector UnitFeatureVector::from_unit(std::vector<double> values) {
    const FeatureVector checked(values);
    const double n = norm2(checked.values());
    require(std::abs(n * n - 1.0) <= kUnitTolerance, ErrorCode::InvalidArgument,
            "unit feature vector: sum of squares " + std::to_string(n * n) + " is not 1");
    return UnitFeatureVector(std::move(values));
}

UnitFeatureVector normalize(const FeatureVector& x) {
    const double n = norm2(x.values());
    require(n > kMinNorm, ErrorCode::InvalidArgument,
            "normalize: zero-norm vector cannot be amplitude encoded");
    std::vector<double> out(x.values().begin(), x.values().end());
    for (double& v : out) v /= n;
    return UnitFeatureVector(std::move(out));
}

qsim::QuantumRegister amplitude_encode(const UnitFeatureVector& x) {
    log2_exact(x.dim());
    std::vector<qsim::Amplitude> amps(x.values().begin(), x.values().end());
    return qsim::QuantumRegister::from_amplitudes(std::move(amps));
}

qsim::QuantumRegister basis_encode(std::string_view bits) {
    require(!bits.empty(), ErrorCode::InvalidArgument, "basis_encode: empty bit string");
    require(bits.size() <= static_cast<std::size_t>(qsim::kMaxQubits), ErrorCode::OutOfRange,
            "basis_encode: bit string longer than " + std::to_string(qsim::kMaxQubits));
    std::size_t index = 0;
    for (char c : bits) {
        require(c == '0' || c == '1', ErrorCode::InvalidArgument,
                std::string("basis_encode: invalid character '") + c + "'");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    std::vector<qsim::Amplitude> amps(std::size_t{1} << bits.size());
    amps[index] = 1.0;
    return qsim::QuantumRegister::from_amplitudes(std::move(amps));
}

int required_qubits(std::size_t dim) { return 2 * log2_exact(dim) + 1; }

}  // namespace qface::encoding
