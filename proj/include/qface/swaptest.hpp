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

// Swap-test fidelity estimation.
//
// Circuit layout on 2m+1 qubits, built as |0> (x) |psi> (x) |phi>:
//   qubit 2m          ancilla
//   qubits m..2m-1    psi (psi qubit i at m+i)
//   qubits 0..m-1     phi
// H(ancilla), CSWAP(ancilla; m+i, i) for i = 0..m-1, H(ancilla). The ancilla
// then reads 0 with probability 1/2 + |<psi|phi>|^2 / 2.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qface/encoding.hpp"
#include "qface/qsim.hpp"

namespace qface::swaptest {

enum class EstimatorMode { CircuitExact, Analytic, Sampled };

inline constexpr std::uint64_t kDefaultShots = 8192;

std::string_view to_string(EstimatorMode mode) noexcept;
std::optional<EstimatorMode> parse_mode(std::string_view text) noexcept;

struct FidelityEstimate {
    double value = 0.0;
    EstimatorMode method = EstimatorMode::CircuitExact;
    std::uint64_t shots = 0;  // 0 unless sampled
    double std_error = 0.0;
};

struct EstimatorConfig {
    EstimatorMode mode = EstimatorMode::CircuitExact;
    std::uint64_t shots = kDefaultShots;  // ignored unless sampled
    std::uint64_t seed = 0;
};

/// Ancilla qubit index for a swap test over two m-qubit registers.
constexpr int ancilla_qubit(int data_qubits) noexcept { return 2 * data_qubits; }

/// Register after the full H / CSWAP / H sequence. psi and phi must have equal
/// qubit counts m with 2m+1 <= qsim::kMaxQubits.
qsim::QuantumRegister build_swap_test_state(const qsim::QuantumRegister& psi,
                                            const qsim::QuantumRegister& phi);

/// (sum_i psi_i phi_i)^2, the reference the circuit is checked against.
FidelityEstimate fidelity_analytic(const encoding::UnitFeatureVector& psi,
                                   const encoding::UnitFeatureVector& phi);

/// Inverts P(0) = 1/2 + F/2, clamped to [0, 1].
double fidelity_from_p0(double p0);

FidelityEstimate estimate_fidelity(const encoding::UnitFeatureVector& psi,
                                   const encoding::UnitFeatureVector& phi, EstimatorMode mode,
                                   std::uint64_t shots, std::uint64_t seed);

inline FidelityEstimate estimate_fidelity(const encoding::UnitFeatureVector& psi,
                                          const encoding::UnitFeatureVector& phi,
                                          const EstimatorConfig& config) {
    return estimate_fidelity(psi, phi, config.mode, config.shots, config.seed);
}

}  // namespace qface::swaptest
