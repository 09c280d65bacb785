// Copyright 2026 The jsampler Authors
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

/**
 * @file fidelity.hpp
 * @brief State fidelity (exact and direct fidelity estimation from sampled
 * Pauli expectations) and cross-entropy based information fidelity.
 *
 * Logarithms are base 2 throughout; entropies are in bits.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "jsampler/rng.hpp"
#include "jsampler/statevector.hpp"

namespace jsampler {

/// Ideal probabilities are floored here before taking log2(1/p).
inline constexpr double kProbabilityFloor = 1e-15;
/// Largest register for which all 4^n Pauli weights are tabulated.
inline constexpr int kMaxDfeQubits = 10;

/// Depolarized pure state (1 - eps)|psi><psi| + eps I / N.
struct NoisyState {
    StateVector state;
    double epsilon = 0.0;
};

struct FidelityEstimate {
    double value = 0.0;     ///< not clipped to [0, 1]
    double std_error = 0.0; ///< sample standard deviation of the ratios / sqrt(r)
    int r = 0;
    std::uint64_t shots = 0; ///< per Pauli; 0 means exact expectations
};

struct DistSummary {
    double ave = 0.0;
    double std = 0.0;
    double shannon = 0.0;
    double mean_index = 0.0;
};

struct SurpriseMoments {
    double s_ideal = 0.0; ///< sum_x p(x) log2(1/p(x))
    double s_unif = 0.0;  ///< (1/N) sum_x log2(1/p(x))
};

/// Tr(rho rho_t) for rho = (1 - eps)|psi><psi| + eps I/N.
double state_fidelity_exact(const StateVector &target, const StateVector &state,
                            double epsilon = 0.0);

double pauli_expectation(const StateVector &state, const PauliString &p);
double pauli_expectation(const NoisyState &noisy, const PauliString &p);

/// Average of `shots` simulated +-1 outcomes with mean `exact`.
double sample_pauli_outcomes(double exact, std::uint64_t shots, Rng &rng);
double pauli_expectation_shots(const StateVector &state, const PauliString &p,
                               std::uint64_t shots, Seed seed);

/// Tr(rho_t P) for every Pauli, indexed by x_mask * 2^n + z_mask. Uses one
/// Walsh-Hadamard transform per x_mask, O(4^n n) in total.
std::vector<double> pauli_characteristic(const StateVector &target);

/// Direct fidelity estimation. Samples r Paulis with probability
/// Tr(rho_t P)^2 / N, measures each on `noisy` (exactly when shots == 0) and
/// averages the ratios Tr(rho P) / Tr(rho_t P).
FidelityEstimate dfe_estimate(const StateVector &target, const NoisyState &noisy, int r,
                              std::uint64_t shots, Seed seed);

double shannon_entropy(const ProbDist &p);
SurpriseMoments surprise_moments(const ProbDist &p_ideal);
/// sum_x p_meas(x) log2(1/p_ideal(x)), with the ideal floored.
double cross_entropy(const ProbDist &p_meas, const ProbDist &p_ideal);
/// (S_unif - H_c) / (S_unif - S_ideal). Throws DegenerateError when p_ideal is
/// uniform.
double information_fidelity(const ProbDist &p_meas, const ProbDist &p_ideal);
/// (1/N) sum_x |p_meas(x) - p_ideal(x)|
double l1_error(const ProbDist &p_meas, const ProbDist &p_ideal);
DistSummary dist_summary(const ProbDist &p);

} // namespace jsampler
