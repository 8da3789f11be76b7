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

// Dense state-vector simulator with the handful of operations a swap test
// needs: register preparation, tensor products, Hadamard, controlled swap and
// single-qubit Z measurement.
//
// Bit convention: qubit k is bit k of the basis index (qubit 0 is the least
// significant bit). tensor_product(a, b) puts a in the high bits.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qface::qsim {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;
/// Allowed drift of the squared norm away from 1 after any operation.
inline constexpr double kNormTolerance = 1e-9;

class QuantumRegister {
public:
    /// |0...0> on num_qubits qubits, 1 <= num_qubits <= kMaxQubits.
    explicit QuantumRegister(int num_qubits);

    /// Takes ownership of a full amplitude array. The length must be a power
    /// of two (at least 2) and the squared norm within kNormTolerance of 1.
    static QuantumRegister from_amplitudes(std::vector<Amplitude> amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm_squared() const noexcept;

private:
    QuantumRegister() = default;

    friend QuantumRegister tensor_product(const QuantumRegister&, const QuantumRegister&);
    friend QuantumRegister apply_hadamard(QuantumRegister, int);
    friend QuantumRegister apply_controlled_swap(QuantumRegister, int, int, int);

    void check_norm(const char* after) const;

    int num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

QuantumRegister new_register(int num_qubits);

/// Kronecker product; amplitude (ia << b.num_qubits()) | ib equals a[ia] * b[ib].
QuantumRegister tensor_product(const QuantumRegister& a, const QuantumRegister& b);

/// Hadamard on one qubit. Throws Internal if the norm drifts past kNormTolerance.
QuantumRegister apply_hadamard(QuantumRegister reg, int qubit);

/// Fredkin gate: exchanges target_a and target_b on basis states whose control bit is 1.
QuantumRegister apply_controlled_swap(QuantumRegister reg, int control, int target_a, int target_b);

/// Probability of reading 0 on `qubit` in the Z basis. Does not collapse the state.
double probability_zero(const QuantumRegister& reg, int qubit);

/// Number of zero outcomes in `shots` independent Z measurements of `qubit`.
/// Deterministic for fixed (state, qubit, shots, seed).
std::uint64_t sample_ancilla(const QuantumRegister& reg, int qubit, std::uint64_t shots,
                             std::uint64_t seed);

}  // namespace qface::qsim
