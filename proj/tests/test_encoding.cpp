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

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace qface;
using namespace qface::encoding;
using qface::testing::code_of;

namespace {

double sum_sq(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

TEST_CASE("FeatureVector enforces power-of-two dimension and finiteness") {
    CHECK_NOTHROW(FeatureVector({1.0, 2.0}));
    CHECK(code_of([] { FeatureVector({1.0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { FeatureVector({1.0, 2.0, 3.0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { FeatureVector(std::vector<double>{}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { FeatureVector({1.0, NAN}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("normalize examples") {
    const auto u = normalize(FeatureVector({3, 4, 0, 0}));
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(u[1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(u[2] == 0.0);
    CHECK(u[3] == 0.0);

    CHECK(code_of([] { normalize(FeatureVector({0, 0, 0, 0})); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { normalize(FeatureVector({1e-13, 0})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("normalize produces unit vectors and is idempotent") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> pix(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(64);
        for (double& x : v) x = pix(rng);
        const auto u = normalize(FeatureVector(v));
        CHECK(std::abs(sum_sq(u.values()) - 1.0) < 1e-10);
        const auto uu = normalize(u.as_feature());
        for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(uu[i] - u[i]) < 1e-12);
        const double n = std::sqrt(sum_sq(v));
        for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(u[i] - v[i] / n) < 1e-15);
    }
}

TEST_CASE("from_unit accepts unit vectors and rejects others") {
    CHECK_NOTHROW(UnitFeatureVector::from_unit({0.6, 0.8}));
    CHECK(code_of([] { UnitFeatureVector::from_unit({0.6, 0.7}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { UnitFeatureVector::from_unit({1.0, 0.0, 0.0}); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("amplitude_encode examples") {
    const auto r = amplitude_encode(UnitFeatureVector::from_unit({0.6, 0.8}));
    REQUIRE(r.num_qubits() == 1);
    CHECK(r[0] == qsim::Amplitude(0.6, 0));
    CHECK(r[1] == qsim::Amplitude(0.8, 0));

    const auto z = amplitude_encode(UnitFeatureVector::from_unit({1, 0, 0, 0}));
    REQUIRE(z.num_qubits() == 2);
    CHECK(z[0] == qsim::Amplitude(1, 0));

    std::mt19937_64 rng(6);
    const auto x = qface::testing::random_unit(64, rng);
    const auto s = amplitude_encode(x);
    CHECK(s.num_qubits() == 6);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(std::abs(s[i].real() - x[i]) < 1e-12);
        CHECK(s[i].imag() == 0.0);
    }
}

TEST_CASE("amplitude_encode keeps signs and reproduces squared mass in marginals") {
    const double a = 0.5, b = -0.5, c = 0.5, d = -0.5;
    const auto r = amplitude_encode(UnitFeatureVector::from_unit({a, b, c, d}));
    CHECK(r[1].real() == -0.5);
    // P(q0 = 0) sums indices 0 and 2.
    CHECK(qsim::probability_zero(r, 0) == doctest::Approx(a * a + c * c));
    CHECK(qsim::probability_zero(r, 1) == doctest::Approx(a * a + b * b));
}

TEST_CASE("basis_encode") {
    const auto r = basis_encode("010");
    REQUIRE(r.num_qubits() == 3);
    for (std::size_t i = 0; i < 8; ++i) CHECK(r[i] == qsim::Amplitude(i == 2 ? 1 : 0, 0));
    const auto z = basis_encode("0");
    CHECK(z[0] == qsim::Amplitude(1, 0));
    CHECK(z[1] == qsim::Amplitude(0, 0));
    CHECK(basis_encode("11")[3] == qsim::Amplitude(1, 0));
    CHECK(basis_encode("100")[4] == qsim::Amplitude(1, 0));

    CHECK(code_of([] { basis_encode(""); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { basis_encode("012"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { basis_encode(std::string(25, '0')); }) == ErrorCode::OutOfRange);
}

TEST_CASE("required_qubits") {
    CHECK(required_qubits(16) == 9);
    CHECK(required_qubits(64) == 13);
    CHECK(required_qubits(256) == 17);
    CHECK(required_qubits(2) == 3);
    CHECK(code_of([] { required_qubits(48); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { required_qubits(1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { required_qubits(0); }) == ErrorCode::InvalidArgument);

    std::mt19937_64 rng(8);
    for (std::size_t dim = 2; dim <= 1024; dim *= 2) {
        const auto reg = amplitude_encode(qface::testing::random_unit(dim, rng));
        CHECK(required_qubits(dim) == 2 * reg.num_qubits() + 1);
    }
}

TEST_CASE("power-of-two helpers") {
    CHECK(is_power_of_two(2));
    CHECK(is_power_of_two(1024));
    CHECK_FALSE(is_power_of_two(1));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(6));
    CHECK(log2_exact(256) == 8);
}
