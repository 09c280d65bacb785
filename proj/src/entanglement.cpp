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

#include "jsampler/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

void require_chain(int n) {
    if (n < 2) throw ArgumentError("entanglement measures need n >= 2");
}

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

} // namespace

double purity(const SingleQubitRDM &rdm) {
    return std::norm(rdm.m00) + std::norm(rdm.m11) + std::norm(rdm.m01) + std::norm(rdm.m10);
}

double von_neumann_entropy(const SingleQubitRDM &rdm) {
    const auto [lo, hi] = rdm.eigenvalues();
    return -(xlog2x(std::clamp(lo, 0.0, 1.0)) + xlog2x(std::clamp(hi, 0.0, 1.0)));
}

EntanglementReport entanglement_report(const std::vector<SingleQubitRDM> &rdms) {
    const int n = static_cast<int>(rdms.size());
    require_chain(n);
    EntanglementReport rep;
    rep.gammas.reserve(n);
    double gamma_sum = 0.0, log_sum = 0.0, entropy_sum = 0.0;
    for (const auto &rdm : rdms) {
        const double g = purity(rdm);
        rep.gammas.push_back(g);
        gamma_sum += g;
        log_sum += std::log2(g);
        entropy_sum += von_neumann_entropy(rdm);
    }
    rep.gamma_bar = gamma_sum / n;
    rep.Q = 2.0 * (1.0 - rep.gamma_bar);
    rep.S2 = -log_sum / n;
    rep.Se = entropy_sum / n;
    return rep;
}

EntanglementReport entanglement_report(const StateVector &state) {
    require_chain(state.num_qubits());
    std::vector<SingleQubitRDM> rdms;
    for (int q = 1; q <= state.num_qubits(); ++q) rdms.push_back(reduced_density_matrix(state, q));
    return entanglement_report(rdms);
}

EntanglementReport tomographic_entanglement_report(const StateVector &state,
                                                   std::uint64_t shots, Seed seed) {
    require_chain(state.num_qubits());
    std::vector<SingleQubitRDM> rdms;
    for (int q = 1; q <= state.num_qubits(); ++q) {
        rdms.push_back(tomographic_rdm(state, q, shots, derive_seed(seed, {std::uint64_t(q)})));
    }
    return entanglement_report(rdms);
}

double q_measure(const StateVector &state) { return entanglement_report(state).Q; }
double renyi2(const StateVector &state) { return entanglement_report(state).S2; }
double entanglement_entropy(const StateVector &state) { return entanglement_report(state).Se; }

double haar_q(int n) {
    if (n < 1) throw ArgumentError("haar_q needs n >= 1");
    const double dim = std::ldexp(1.0, n);
    return (dim - 2.0) / (dim + 1.0);
}

LinearizedRenyi linearized_renyi(double gamma_bar, double gamma0) {
    if (!(gamma0 > 0.0 && gamma0 <= 1.0)) throw ArgumentError("reference purity outside (0, 1]");
    LinearizedRenyi lin;
    lin.a = std::log2(1.0 / gamma0) + 1.0 / std::numbers::ln2;
    lin.b = 1.0 / (gamma0 * std::numbers::ln2);
    lin.value = lin.a - lin.b * gamma_bar;
    return lin;
}

double page_entropy(std::uint64_t dA, std::uint64_t dB) {
    if (dA < 1 || dB < 1) throw ArgumentError("subsystem dimensions must be >= 1");
    if (dA > dB) throw ArgumentError("page_entropy requires dA <= dB");
    double harmonic = 0.0;
    for (std::uint64_t k = dA * dB; k > dB; --k) harmonic += 1.0 / static_cast<double>(k);
    const double correction = static_cast<double>(dA - 1) / (2.0 * static_cast<double>(dB));
    return (harmonic - correction) / std::numbers::ln2;
}

StateVector haar_random_state(int n, Rng &rng) {
    StateVector s(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto &a : s.amps()) a = Complex{gauss(rng), gauss(rng)};
    const double norm = std::sqrt(s.norm_squared());
    for (auto &a : s.amps()) a /= norm;
    return s;
}

HaarReferenceSample haar_reference_sample(int n, int count, Seed seed) {
    if (n > kMaxHaarOracleQubits) {
        throw SizeError("Haar oracle limited to " + std::to_string(kMaxHaarOracleQubits) +
                        " qubits");
    }
    require_chain(n);
    if (count < 1) throw ArgumentError("count must be >= 1");
    HaarReferenceSample out;
    out.n = n;
    out.Q.reserve(count);
    out.S2.reserve(count);
    out.Se.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto rng = make_rng(derive_seed(seed, {std::uint64_t(i)}));
        const auto rep = entanglement_report(haar_random_state(n, rng));
        out.Q.push_back(rep.Q);
        out.S2.push_back(rep.S2);
        out.Se.push_back(rep.Se);
    }
    return out;
}

} // namespace jsampler
