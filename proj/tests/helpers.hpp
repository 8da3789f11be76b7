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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qface/encoding.hpp"
#include "qface/error.hpp"
#include "qface/qsim.hpp"

namespace qface::testing {

inline std::vector<double> random_gaussian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (double& x : v) x = g(rng);
    return v;
}

inline encoding::UnitFeatureVector random_unit(std::size_t n, std::mt19937_64& rng) {
    return encoding::normalize(encoding::FeatureVector(random_gaussian(n, rng)));
}

// Random complex state, normalised in test code so the library's own
// normalisation is not on the checked path.
inline qsim::QuantumRegister random_register(int qubits, std::mt19937_64& rng) {
    const std::size_t n = std::size_t{1} << qubits;
    const auto re = random_gaussian(n, rng);
    const auto im = random_gaussian(n, rng);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += re[i] * re[i] + im[i] * im[i];
    norm = std::sqrt(norm);
    std::vector<std::complex<double>> amps(n);
    for (std::size_t i = 0; i < n; ++i) amps[i] = {re[i] / norm, im[i] / norm};
    return qsim::QuantumRegister::from_amplitudes(std::move(amps));
}

inline double max_abs_diff(const qsim::QuantumRegister& a, const qsim::QuantumRegister& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Code of the qface::Error thrown by f; Internal when nothing is thrown
// (Internal is never expected by these tests).
template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

// Scratch directory removed on scope exit.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("qface_" + tag + "_" + std::to_string(std::random_device{}()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

}  // namespace qface::testing
