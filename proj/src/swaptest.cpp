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

#include "qface/swaptest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qface/error.hpp"

namespace qface::swaptest {

std::string_view to_string(EstimatorMode mode) noexcept {
    switch (mode) {
        case EstimatorMode::CircuitExact: return "exact";
        case EstimatorMode::Analytic: return "analytic";
        case EstimatorMode::Sampled: return "sampled";
    }
    return "exact";
}

std::optional<EstimatorMode> parse_mode(std::string_view text) noexcept {
    if (text == "exact" || text == "circuit_exact") return EstimatorMode::CircuitExact;
    if (text == "analytic") return EstimatorMode::Analytic;
    if (text == "sampled") return EstimatorMode::Sampled;
    return std::nullopt;
}

qsim::QuantumRegister build_swap_test_state(const qsim::QuantumRegister& psi,
                                            const qsim::QuantumRegister& phi) {
    const int m = psi.num_qubits();
    require(phi.num_qubits() == m, ErrorCode::InvalidArgument,
            "swap test: register sizes differ (" + std::to_string(m) + " vs " +
                std::to_string(phi.num_qubits()) + " qubits)");
    require(2 * m + 1 <= qsim::kMaxQubits, ErrorCode::OutOfRange,
            "swap test: " + std::to_string(2 * m + 1) + " qubits exceeds the simulator cap");

    auto state = qsim::tensor_product(qsim::new_register(1), qsim::tensor_product(psi, phi));
    const int anc = ancilla_qubit(m);
    state = qsim::apply_hadamard(std::move(state), anc);
    for (int i = 0; i < m; ++i) {
        state = qsim::apply_controlled_swap(std::move(state), anc, m + i, i);
    }
    return qsim::apply_hadamard(std::move(state), anc);
}

FidelityEstimate fidelity_analytic(const encoding::UnitFeatureVector& psi,
                                   const encoding::UnitFeatureVector& phi) {
    require(psi.dim() == phi.dim(), ErrorCode::InvalidArgument,
            "fidelity: dimension mismatch (" + std::to_string(psi.dim()) + " vs " +
                std::to_string(phi.dim()) + ")");
    double dot = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) dot += psi[i] * phi[i];
    FidelityEstimate est;
    est.value = std::clamp(dot * dot, 0.0, 1.0);
    est.method = EstimatorMode::Analytic;
    return est;
}

double fidelity_from_p0(double p0) {
    require(p0 >= 0.0 && p0 <= 1.0, ErrorCode::InvalidArgument,
            "fidelity_from_p0: probability " + std::to_string(p0) + " outside [0, 1]");
    return std::clamp(2.0 * p0 - 1.0, 0.0, 1.0);
}

FidelityEstimate estimate_fidelity(const encoding::UnitFeatureVector& psi,
                                   const encoding::UnitFeatureVector& phi, EstimatorMode mode,
                                   std::uint64_t shots, std::uint64_t seed) {
    if (mode == EstimatorMode::Analytic) return fidelity_analytic(psi, phi);
    require(psi.dim() == phi.dim(), ErrorCode::InvalidArgument,
            "fidelity: dimension mismatch (" + std::to_string(psi.dim()) + " vs " +
                std::to_string(phi.dim()) + ")");
    if (mode == EstimatorMode::Sampled) {
        require(shots >= 1, ErrorCode::InvalidArgument, "sampled fidelity needs shots >= 1");
    }

    const auto state =
        build_swap_test_state(encoding::amplitude_encode(psi), encoding::amplitude_encode(phi));
    const int anc = ancilla_qubit(encoding::log2_exact(psi.dim()));

    FidelityEstimate est;
    est.method = mode;
    if (mode == EstimatorMode::CircuitExact) {
        est.value = fidelity_from_p0(qsim::probability_zero(state, anc));
        return est;
    }
    const std::uint64_t zeros = qsim::sample_ancilla(state, anc, shots, seed);
    const double p0_hat = static_cast<double>(zeros) / static_cast<double>(shots);
    est.value = fidelity_from_p0(p0_hat);
    est.shots = shots;
    est.std_error = 2.0 * std::sqrt(p0_hat * (1.0 - p0_hat) / static_cast<double>(shots));
    return est;
}

}  // namespace qface::swaptest
