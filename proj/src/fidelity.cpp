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

#include "jsampler/fidelity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

void check_same_size(const ProbDist &a, const ProbDist &b) {
    if (a.size() != b.size()) throw ArgumentError("distributions have different lengths");
}

void check_same_size(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) throw ArgumentError("states have different sizes");
}

double surprise(double p) { return -std::log2(std::max(p, kProbabilityFloor)); }

void walsh_hadamard(std::vector<Complex> &v) {
    for (std::size_t h = 1; h < v.size(); h *= 2) {
        for (std::size_t i = 0; i < v.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

} // namespace

double state_fidelity_exact(const StateVector &target, const StateVector &state, double epsilon) {
    check_same_size(target, state);
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ArgumentError("epsilon outside [0, 1]");
    const double overlap = std::norm(target.inner(state));
    return (1.0 - epsilon) * overlap + epsilon / static_cast<double>(target.dim());
}

double pauli_expectation(const StateVector &state, const PauliString &p) {
    if (p.size() != state.num_qubits()) throw ArgumentError("Pauli string length mismatch");
    StateVector image = state;
    image.apply_pauli(p);
    return state.inner(image).real();
}

double pauli_expectation(const NoisyState &noisy, const PauliString &p) {
    const double pure = pauli_expectation(noisy.state, p);
    return (1.0 - noisy.epsilon) * pure + (p.is_identity() ? noisy.epsilon : 0.0);
}

double sample_pauli_outcomes(double exact, std::uint64_t shots, Rng &rng) {
    if (shots == 0) throw ArgumentError("shots must be >= 1");
    std::binomial_distribution<std::uint64_t> plus(shots, std::clamp((1.0 + exact) / 2, 0.0, 1.0));
    const auto k = static_cast<double>(plus(rng));
    const auto s = static_cast<double>(shots);
    return (2.0 * k - s) / s;
}

double pauli_expectation_shots(const StateVector &state, const PauliString &p,
                               std::uint64_t shots, Seed seed) {
    auto rng = make_rng(seed);
    return sample_pauli_outcomes(pauli_expectation(state, p), shots, rng);
}

std::vector<double> pauli_characteristic(const StateVector &target) {
    const int n = target.num_qubits();
    if (n > kMaxDfeQubits) {
        throw SizeError("Pauli weight table limited to " + std::to_string(kMaxDfeQubits) +
                        " qubits");
    }
    const std::size_t dim = target.dim();
    const auto amps = target.amps();
    static constexpr Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    std::vector<double> chi(dim * dim);
    std::vector<Complex> row(dim);
    for (BasisIndex xm = 0; xm < dim; ++xm) {
        for (BasisIndex x = 0; x < dim; ++x) row[x] = std::conj(amps[x ^ xm]) * amps[x];
        walsh_hadamard(row);
        for (BasisIndex zm = 0; zm < dim; ++zm) {
            chi[xm * dim + zm] = (kPowI[std::popcount(xm & zm) % 4] * row[zm]).real();
        }
    }
    return chi;
}

FidelityEstimate dfe_estimate(const StateVector &target, const NoisyState &noisy, int r,
                              std::uint64_t shots, Seed seed) {
    if (r < 1) throw ArgumentError("DFE needs r >= 1 Pauli samples");
    check_same_size(target, noisy.state);
    const int n = target.num_qubits();
    const std::size_t dim = target.dim();

    const auto chi = pauli_characteristic(target);
    std::vector<double> weights(chi.size());
    std::transform(chi.begin(), chi.end(), weights.begin(), [](double c) { return c * c; });

    auto rng = make_rng(seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::vector<double> ratios;
    ratios.reserve(r);
    for (int k = 0; k < r; ++k) {
        const std::size_t idx = pick(rng);
        const auto pauli = PauliString::from_masks(n, idx / dim, idx % dim);
        double measured = pauli_expectation(noisy, pauli);
        if (shots > 0 && !pauli.is_identity()) measured = sample_pauli_outcomes(measured, shots, rng);
        ratios.push_back(measured / chi[idx]);
    }

    FidelityEstimate est;
    est.r = r;
    est.shots = shots;
    double sum = 0.0;
    for (double v : ratios) sum += v;
    est.value = sum / r;
    if (r > 1) {
        double ss = 0.0;
        for (double v : ratios) ss += (v - est.value) * (v - est.value);
        est.std_error = std::sqrt(ss / (r - 1)) / std::sqrt(static_cast<double>(r));
    }
    return est;
}

double shannon_entropy(const ProbDist &p) {
    double h = 0.0;
    for (double v : p.values()) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

SurpriseMoments surprise_moments(const ProbDist &p_ideal) {
    SurpriseMoments m;
    for (double v : p_ideal.values()) {
        const double s = surprise(v);
        m.s_ideal += v * s;
        m.s_unif += s;
    }
    m.s_unif /= static_cast<double>(p_ideal.size());
    return m;
}

double cross_entropy(const ProbDist &p_meas, const ProbDist &p_ideal) {
    check_same_size(p_meas, p_ideal);
    double h = 0.0;
    for (std::size_t x = 0; x < p_meas.size(); ++x) h += p_meas[x] * surprise(p_ideal[x]);
    return h;
}

double information_fidelity(const ProbDist &p_meas, const ProbDist &p_ideal) {
    const auto m = surprise_moments(p_ideal);
    const double spread = m.s_unif - m.s_ideal;
    if (spread < 1e-12) {
        throw DegenerateError("information fidelity undefined: ideal distribution is uniform");
    }
    return (m.s_unif - cross_entropy(p_meas, p_ideal)) / spread;
}

double l1_error(const ProbDist &p_meas, const ProbDist &p_ideal) {
    check_same_size(p_meas, p_ideal);
    double d = 0.0;
    for (std::size_t x = 0; x < p_meas.size(); ++x) d += std::abs(p_meas[x] - p_ideal[x]);
    return d / static_cast<double>(p_meas.size());
}

DistSummary dist_summary(const ProbDist &p) {
    const auto dim = static_cast<double>(p.size());
    DistSummary s;
    s.ave = 1.0 / dim;
    double var = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        var += (p[x] - s.ave) * (p[x] - s.ave);
        s.mean_index += static_cast<double>(x) * p[x];
    }
    s.std = std::sqrt(var / dim);
    s.shannon = shannon_entropy(p);
    return s;
}

} // namespace jsampler
