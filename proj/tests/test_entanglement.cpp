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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "jsampler/entanglement.hpp"
#include "jsampler/errors.hpp"
#include "jsampler/sampler_circuit.hpp"
#include "test_helpers.hpp"

using namespace jsampler;
using namespace jsampler::testing;

namespace {

StateVector bell() {
    const double h = 1.0 / std::sqrt(2.0);
    return StateVector(2, {h, 0.0, 0.0, h});
}

StateVector ghz(int n) {
    StateVector s(n);
    s[0] = 1.0 / std::sqrt(2.0);
    s[s.dim() - 1] = 1.0 / std::sqrt(2.0);
    return s;
}

StateVector product_state(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    StateVector s(n);
    for (int q = 1; q <= n; ++q) s.apply_u(q, angle(rng), angle(rng));
    return s;
}

/// Relabels qubits: new qubit perm[k] carries old qubit k + 1.
StateVector permute_qubits(const StateVector &s, const std::vector<int> &perm) {
    const int n = s.num_qubits();
    std::vector<Complex> out(s.dim());
    for (BasisIndex x = 0; x < s.dim(); ++x) {
        BasisIndex y = 0;
        for (int k = 0; k < n; ++k)
            if ((x >> (n - 1 - k)) & 1) y |= BasisIndex{1} << (n - perm[k]);
        out[y] = s[x];
    }
    return StateVector(n, std::move(out));
}

StateVector deep_circuit_state(int n, int layers, Seed seed) {
    auto s = init_zero(n);
    apply_sampler(s, random_spec(n, layers, AngleEnsemble::Continuous, seed));
    return s;
}

} // namespace

TEST_CASE("purity") {
    CHECK(purity(SingleQubitRDM::from_bloch(0, 0, 1)) == doctest::Approx(1.0));
    CHECK(purity(SingleQubitRDM::from_bloch(0, 0, 0)) == doctest::Approx(0.5));
    CHECK(purity(SingleQubitRDM::from_bloch(0.6, 0, 0)) == doctest::Approx(0.68));
}

TEST_CASE("von_neumann_entropy") {
    CHECK(von_neumann_entropy(SingleQubitRDM::from_bloch(0, 0, 1)) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(SingleQubitRDM::from_bloch(0, 0, 0)) == doctest::Approx(1.0));
    // eigenvalues 0.8 and 0.2
    const double h = -(0.8 * std::log2(0.8) + 0.2 * std::log2(0.2));
    CHECK(von_neumann_entropy(SingleQubitRDM::from_bloch(0.36, 0.48, 0.0)) == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("Q measure") {
    CHECK(q_measure(init_zero(4)) == doctest::Approx(0.0));
    CHECK(q_measure(bell()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(q_measure(init_zero(1)), ArgumentError);
    CHECK_THROWS_AS(entanglement_report(init_zero(1)), ArgumentError);
}

TEST_CASE("haar_q") {
    CHECK(haar_q(3) == doctest::Approx(0.667).epsilon(1e-3));
    CHECK(haar_q(4) == doctest::Approx(0.824).epsilon(1e-3));
    CHECK(haar_q(5) == doctest::Approx(0.909).epsilon(1e-3));
    CHECK(haar_q(6) == doctest::Approx(0.954).epsilon(1e-3));
    CHECK(haar_q(1) == doctest::Approx(0.0));
}

TEST_CASE("Renyi-2 and entanglement entropy") {
    std::mt19937_64 rng(1);
    const auto prod = product_state(5, rng);
    CHECK(renyi2(prod) == doctest::Approx(0.0).scale(1.0));
    CHECK(entanglement_entropy(prod) < 1e-9);
    CHECK(renyi2(bell()) == doctest::Approx(1.0));
    CHECK(entanglement_entropy(bell()) == doctest::Approx(1.0));
    CHECK(renyi2(ghz(3)) == doctest::Approx(1.0));
    const auto report = entanglement_report(ghz(3));
    for (double g : report.gammas) CHECK(g == doctest::Approx(0.5));
}

TEST_CASE("linearized_renyi") {
    const auto lin = linearized_renyi(0.6, 0.7);
    CHECK(std::round(lin.a * 100) / 100 == doctest::Approx(1.96));
    CHECK(std::round(lin.b * 100) / 100 == doctest::Approx(2.06));
    CHECK(lin.value == doctest::Approx(lin.a - lin.b * 0.6));
    CHECK(linearized_renyi(0.7, 0.7).value == doctest::Approx(-std::log2(0.7)).epsilon(1e-14));
    CHECK(linearized_renyi(0.5, 0.5).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(linearized_renyi(0.5, 0.0), ArgumentError);
    CHECK_THROWS_AS(linearized_renyi(0.5, 1.5), ArgumentError);
}

TEST_CASE("page_entropy") {
    CHECK(page_entropy(2, 2) == doctest::Approx((1.0 / 3) / std::numbers::ln2).epsilon(1e-14));
    CHECK(page_entropy(2, 2) == doctest::Approx(0.4809).epsilon(1e-4));
    CHECK(page_entropy(1, 8) == 0.0);
    CHECK_THROWS_AS(page_entropy(4, 2), ArgumentError);
    CHECK_THROWS_AS(page_entropy(0, 2), ArgumentError);
    double prev = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const double v = page_entropy(2, std::uint64_t{1} << (n - 1));
        CHECK(v < 1.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(page_entropy(2, std::uint64_t{1} << 20) > 0.999);
}

TEST_CASE("Haar oracle examples") {
    const auto h3 = haar_reference_sample(3, 2000, 11);
    CHECK(std::abs(h3.q_stats().mean - 0.667) < 0.01);
    const auto h5 = haar_reference_sample(5, 2000, 12);
    CHECK(std::abs(h5.q_stats().mean - 0.909) < 0.01);
    CHECK(std::abs(h5.se_stats().mean - page_entropy(2, 16)) < 0.01);
    CHECK(haar_reference_sample(4, 50, 3).Q == haar_reference_sample(4, 50, 3).Q);
    CHECK_THROWS_AS(haar_reference_sample(9, 10, 1), SizeError);
}

TEST_CASE("property: Haar averages match closed forms within 3 standard errors") {
    double prev_std = 1.0;
    for (int n = 3; n <= 6; ++n) {
        const auto h = haar_reference_sample(n, 2000, 100 + n);
        const auto q = h.q_stats(), se = h.se_stats();
        CHECK(std::abs(q.mean - haar_q(n)) < 3 * q.sem);
        CHECK(std::abs(se.mean - page_entropy(2, std::uint64_t{1} << (n - 1))) < 3 * se.sem);
        // concentration of measure
        CHECK(q.stddev < prev_std);
        prev_std = q.stddev;
    }
}

TEST_CASE("deep sampler entanglement entropy approaches the Page value") {
    const double page = page_entropy(2, 32);
    SUBCASE("single instance") {
        CHECK(std::abs(entanglement_entropy(deep_circuit_state(6, 8, 1)) - page) < 0.02);
    }
    SUBCASE("average over seeds") {
        double mean = 0.0;
        for (Seed seed = 1; seed <= 8; ++seed) mean += entanglement_entropy(deep_circuit_state(6, 8, seed)) / 8;
        CHECK(std::abs(mean - page) < 0.02);
    }
}

TEST_CASE("property: report bounds") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const auto s = trial % 2 ? random_state(n, rng) : deep_circuit_state(n, trial % 6, 40 + trial);
        const auto r = entanglement_report(s);
        CHECK(r.gammas.size() == std::size_t(n));
        for (double g : r.gammas) {
            CHECK(g >= 0.5 - 1e-9);
            CHECK(g <= 1.0 + 1e-9);
        }
        CHECK(r.Q >= -1e-12);
        CHECK(r.Q <= 1.0 + 1e-12);
        CHECK(r.S2 >= -1e-12);
        CHECK(r.S2 <= 1.0 + 1e-12);
        CHECK(r.Se >= -1e-12);
        CHECK(r.Se <= 1.0 + 1e-12);
        // Tr rho^2 >= 2^{-S}: Renyi-2 never exceeds von Neumann
        CHECK(r.S2 <= r.Se + 1e-12);
    }
}

TEST_CASE("property: S2 tracks Q in the linearization regime") {
    // g(gamma) = -log2(gamma) - 2 (1 - gamma) is the per-qubit gap; on
    // [0.55, 0.95] it lies in [g(1 / (2 ln 2)), g(0.95)] = [-0.0861, -0.0260].
    const double g_min = -std::log2(1 / (2 * std::numbers::ln2)) - 2 * (1 - 1 / (2 * std::numbers::ln2));
    CHECK(g_min == doctest::Approx(-0.0861).epsilon(1e-3));
    std::mt19937_64 rng(5);
    int in_regime = 0;
    for (int trial = 0; in_regime < 100 && trial < 5000; ++trial) {
        const int n = 2 + trial % 5;
        const auto r = entanglement_report(deep_circuit_state(n, 1 + trial % 3, 9000 + trial));
        const bool regime = std::all_of(r.gammas.begin(), r.gammas.end(),
                                        [](double g) { return g >= 0.55 && g <= 0.95; });
        if (!regime) continue;
        ++in_regime;
        CHECK(r.S2 - r.Q <= 0.0);
        CHECK(r.S2 - r.Q >= g_min - 1e-12);
    }
    CHECK(in_regime == 100);
    // high-entanglement end: gap below 0.05 once every gamma <= 0.57
    for (int n = 4; n <= 6; ++n) {
        const auto r = entanglement_report(deep_circuit_state(n, 10, 70 + n));
        if (std::all_of(r.gammas.begin(), r.gammas.end(), [](double g) { return g <= 0.57; }))
            CHECK(std::abs(r.S2 - r.Q) < 0.05);
    }
}

TEST_CASE("property: measures vanish on product states and are permutation covariant") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const auto prod = entanglement_report(product_state(n, rng));
        CHECK(prod.Q < 1e-12);
        CHECK(prod.S2 < 1e-12);
        CHECK(prod.Se < 1e-6);

        const auto s = random_state(n, rng);
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto a = entanglement_report(s), b = entanglement_report(permute_qubits(s, perm));
        for (int k = 0; k < n; ++k) CHECK(b.gammas[perm[k] - 1] == doctest::Approx(a.gammas[k]).epsilon(1e-12));
        CHECK(b.Q == doctest::Approx(a.Q).epsilon(1e-12));
        CHECK(b.S2 == doctest::Approx(a.S2).epsilon(1e-12));
        CHECK(b.Se == doctest::Approx(a.Se).epsilon(1e-12));
    }
}

TEST_CASE("property: ideal circuits stay below the Page ceiling") {
    for (int n = 4; n <= 6; ++n) {
        const auto h = haar_reference_sample(n, 1000, 500 + n);
        const double ceiling = page_entropy(2, std::uint64_t{1} << (n - 1)) + 5 * h.se_stats().stddev;
        for (int trial = 0; trial < 40; ++trial) {
            CHECK(entanglement_entropy(deep_circuit_state(n, 1 + trial % 12, 600 + trial)) <= ceiling);
        }
    }
}

TEST_CASE("tomographic report converges to the exact report") {
    const auto s = deep_circuit_state(4, 4, 3);
    const auto exact = entanglement_report(s);
    const auto tomo = tomographic_entanglement_report(s, 2000000, 17);
    CHECK(std::abs(tomo.Q - exact.Q) < 0.01);
    CHECK(std::abs(tomo.S2 - exact.S2) < 0.01);
    CHECK(std::abs(tomo.Se - exact.Se) < 0.01);
    const auto again = tomographic_entanglement_report(s, 1000, 17);
    CHECK(again.gammas == tomographic_entanglement_report(s, 1000, 17).gammas);
}
