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
 * @file entanglement.hpp
 * @brief Single-qubit-subsystem entanglement measures averaged along the
 * chain, and their Haar-random reference values.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "jsampler/rng.hpp"
#include "jsampler/stats.hpp"
#include "jsampler/statevector.hpp"

namespace jsampler {

struct EntanglementReport {
    std::vector<double> gammas; ///< purity of each qubit, qubit 1 first
    double gamma_bar = 1.0;
    double Q = 0.0;  ///< 2 (1 - gamma_bar)
    double S2 = 0.0; ///< -(1/n) sum log2 gamma_i
    double Se = 0.0; ///< -(1/n) sum Tr(rho_i log2 rho_i)
};

/// Tr(rho^2).
double purity(const SingleQubitRDM &rdm);
/// -Tr(rho log2 rho), with 0 log 0 = 0.
double von_neumann_entropy(const SingleQubitRDM &rdm);

EntanglementReport entanglement_report(const std::vector<SingleQubitRDM> &rdms);
/// Exact report from partial traces. Throws ArgumentError for n < 2.
EntanglementReport entanglement_report(const StateVector &state);
/// Report from shot-based tomography of each qubit in turn.
EntanglementReport tomographic_entanglement_report(const StateVector &state,
                                                   std::uint64_t shots, Seed seed);

double q_measure(const StateVector &state);
double renyi2(const StateVector &state);
double entanglement_entropy(const StateVector &state);

/// Haar average of Q: (N - 2) / (N + 1).
double haar_q(int n);

struct LinearizedRenyi {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0; ///< a - b * gamma_bar
};

/// Tangent-line approximation of S2 around purity gamma0.
LinearizedRenyi linearized_renyi(double gamma_bar, double gamma0);

/// Haar-averaged entanglement entropy (bits) of a dA x dB bipartition.
/// Throws ArgumentError unless 1 <= dA <= dB.
double page_entropy(std::uint64_t dA, std::uint64_t dB);

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
StateVector haar_random_state(int n, Rng &rng);

inline constexpr int kMaxHaarOracleQubits = 8;

struct HaarReferenceSample {
    int n = 0;
    std::vector<double> Q, S2, Se;

    SampleStats q_stats() const { return sample_stats(Q); }
    SampleStats s2_stats() const { return sample_stats(S2); }
    SampleStats se_stats() const { return sample_stats(Se); }
};

/// Metrics of `count` Haar-random states; draw i uses derive_seed(seed, {i}).
HaarReferenceSample haar_reference_sample(int n, int count, Seed seed);

} // namespace jsampler
