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

#include "qface/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "qface/error.hpp"
#include "qface/rng.hpp"

namespace qface::qsim {

namespace {

void check_qubit(const QuantumRegister& reg, int qubit, const char* what) {
    require(qubit >= 0 && qubit < reg.num_qubits(), ErrorCode::OutOfRange,
            std::string(what) + ": qubit index " + std::to_string(qubit) +
                " out of range for " + std::to_string(reg.num_qubits()) + "-qubit register");
}

}  // namespace

QuantumRegister::QuantumRegister(int num_qubits) {
    require(num_qubits >= 1 && num_qubits <= kMaxQubits, ErrorCode::OutOfRange,
            "register: qubit count " + std::to_string(num_qubits) + " outside [1, " +
                std::to_string(kMaxQubits) + "]");
    num_qubits_ = num_qubits;
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{});
    amplitudes_[0] = 1.0;
}

QuantumRegister QuantumRegister::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t n = amplitudes.size();
    require(n >= 2 && std::has_single_bit(n), ErrorCode::InvalidArgument,
            "register: amplitude count " + std::to_string(n) + " is not a power of two >= 2");
    const int qubits = std::countr_zero(n);
    require(qubits <= kMaxQubits, ErrorCode::OutOfRange, "register: too many qubits");
    for (const auto& a : amplitudes) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), ErrorCode::InvalidArgument,
                "register: non-finite amplitude");
    }
    QuantumRegister reg;
    reg.num_qubits_ = qubits;
    reg.amplitudes_ = std::move(amplitudes);
    const double drift = std::abs(reg.norm_squared() - 1.0);
    require(drift <= kNormTolerance, ErrorCode::InvalidArgument,
            "register: amplitudes are not unit norm (squared-norm drift " +
                std::to_string(drift) + ")");
    return reg;
}

double QuantumRegister::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum;
}

void QuantumRegister::check_norm(const char* after) const {
    const double n = norm_squared();
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        fail(ErrorCode::Internal,
             std::string("norm drift after ") + after + ": squared norm " + std::to_string(n));
    }
}

QuantumRegister new_register(int num_qubits) { return QuantumRegister(num_qubits); }

QuantumRegister tensor_product(const QuantumRegister& a, const QuantumRegister& b) {
    const int total = a.num_qubits() + b.num_qubits();
    require(total <= kMaxQubits, ErrorCode::OutOfRange,
            "tensor_product: combined size " + std::to_string(total) + " qubits exceeds cap of " +
                std::to_string(kMaxQubits));
    QuantumRegister out;
    out.num_qubits_ = total;
    out.amplitudes_.resize(a.size() * b.size());
    const std::size_t nb = b.size();
    for (std::size_t ia = 0; ia < a.size(); ++ia) {
        const Amplitude ea = a.amplitudes_[ia];
        Amplitude* row = out.amplitudes_.data() + ia * nb;
        for (std::size_t ib = 0; ib < nb; ++ib) row[ib] = ea * b.amplitudes_[ib];
    }
    out.check_norm("tensor_product");
    return out;
}

QuantumRegister apply_hadamard(QuantumRegister reg, int qubit) {
    check_qubit(reg, qubit, "apply_hadamard");
    const double s = 1.0 / std::sqrt(2.0);
    const std::size_t stride = std::size_t{1} << qubit;
    auto& amp = reg.amplitudes_;
    // Blocks of 2*stride: the low half has the target bit clear, the high half set.
    for (std::size_t base = 0; base < amp.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amp[i];
            const Amplitude a1 = amp[i + stride];
            amp[i] = (a0 + a1) * s;
            amp[i + stride] = (a0 - a1) * s;
        }
    }
    reg.check_norm("apply_hadamard");
    return reg;
}

QuantumRegister apply_controlled_swap(QuantumRegister reg, int control, int target_a,
                                      int target_b) {
    check_qubit(reg, control, "apply_controlled_swap");
    check_qubit(reg, target_a, "apply_controlled_swap");
    check_qubit(reg, target_b, "apply_controlled_swap");
    require(control != target_a && control != target_b && target_a != target_b,
            ErrorCode::InvalidArgument, "apply_controlled_swap: qubit indices must be distinct");
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t amask = std::size_t{1} << target_a;
    const std::size_t bmask = std::size_t{1} << target_b;
    auto& amp = reg.amplitudes_;
    // Visit each exchanged pair once: control set, target_a set, target_b clear.
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((i & cmask) && (i & amask) && !(i & bmask)) {
            std::swap(amp[i], amp[(i & ~amask) | bmask]);
        }
    }
    reg.check_norm("apply_controlled_swap");
    return reg;
}

double probability_zero(const QuantumRegister& reg, int qubit) {
    check_qubit(reg, qubit, "probability_zero");
    const std::size_t mask = std::size_t{1} << qubit;
    const auto amp = reg.amplitudes();
    double p = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (!(i & mask)) p += std::norm(amp[i]);
    }
    // Rounding can push the sum a hair past 1.
    return std::clamp(p, 0.0, 1.0);
}

std::uint64_t sample_ancilla(const QuantumRegister& reg, int qubit, std::uint64_t shots,
                             std::uint64_t seed) {
    require(shots >= 1, ErrorCode::InvalidArgument, "sample_ancilla: shots must be >= 1");
    const double p0 = probability_zero(reg, qubit);
    if (p0 >= 1.0) return shots;
    if (p0 <= 0.0) return 0;
    Rng rng(mix64(seed));
    std::binomial_distribution<std::uint64_t> dist(shots, p0);
    return dist(rng);
}

}  // namespace qface::qsim
