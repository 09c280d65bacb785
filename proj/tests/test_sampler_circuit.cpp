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


#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "jsampler/errors.hpp"
#include "jsampler/fidelity.hpp"
#include "jsampler/sampler_circuit.hpp"
#include "test_helpers.hpp"

using namespace jsampler;
using namespace jsampler::testing;

namespace {

constexpr double kPi = std::numbers::pi;

/// Dense U built column by column from basis states.
Dense circuit_matrix(const SamplerSpec &spec) {
    const std::size_t d = std::size_t{1} << spec.n;
    Dense u(d, std::vector<Complex>(d));
    for (std::size_t c = 0; c < d; ++c) {
        auto s = StateVector::basis(spec.n, c);
        apply_sampler(s, spec);
        for (std::size_t r = 0; r < d; ++r) u[r][c] = s[r];
    }
    return u;
}

Dense adjoint(const Dense &m) {
    Dense out(m.size(), std::vector<Complex>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[j][i] = std::conj(m[i][j]);
    return out;
}

/// Tr(A B) / d.
Complex normalized_overlap(const Dense &a, const Dense &b) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k) acc += a[i][k] * b[k][i];
    return acc / double(a.size());
}

} // namespace

TEST_CASE("param_count") {
    CHECK(param_count(4, 1) == 12);
    CHECK(param_count(6, 2) == 40);
    CHECK(param_count(2, 0) == 0);
    CHECK_THROWS_AS(param_count(1, 1), ArgumentError);
    CHECK_THROWS_AS(param_count(3, -1), ArgumentError);
}

TEST_CASE("build_layer structure") {
    SUBCASE("n=2") {
        const std::vector<double> x(4, 0.1);
        const auto seq = build_layer(2, x);
        CHECK(seq.u_count() == 2);
        CHECK(seq.cz_count() == 1);
        CHECK(seq.gates.back() == Gate::cz(1, 2));
    }
    SUBCASE("n=4") {
        const std::vector<double> x(12, 0.1);
        const auto seq = build_layer(4, x);
        CHECK(seq.u_count() == 6);
        CHECK(seq.cz_count() == 3);
        std::vector<std::pair<int, int>> pairs;
        for (const auto &g : seq.gates)
            if (g.kind == Gate::Kind::CZ) pairs.emplace_back(g.q1, g.q2);
        CHECK(pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {2, 3}});
    }
    SUBCASE("n=6") {
        const std::vector<double> x(20, 0.1);
        const auto seq = build_layer(6, x);
        CHECK(seq.u_count() == 10);
        CHECK(seq.cz_count() == 5);
    }
    SUBCASE("angle order is top to bottom, theta before phi") {
        std::vector<double> x(12);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = double(i);
        const auto seq = build_layer(4, x);
        std::vector<Gate> us;
        for (const auto &g : seq.gates)
            if (g.kind == Gate::Kind::U) us.push_back(g);
        REQUIRE(us.size() == 6);
        const int qubits[] = {1, 2, 3, 4, 2, 3};
        for (std::size_t k = 0; k < us.size(); ++k) {
            CHECK(us[k].q1 == qubits[k]);
            CHECK(us[k].theta == double(2 * k));
            CHECK(us[k].phi == double(2 * k + 1));
        }
        // the interior column sits between the two CZ columns
        CHECK(seq.gates[4].kind == Gate::Kind::CZ);
        CHECK(seq.gates[5].kind == Gate::Kind::CZ);
        CHECK(seq.gates[6].kind == Gate::Kind::U);
    }
    CHECK_THROWS_AS(build_layer(4, std::vector<double>(11)), ArgumentError);
}

TEST_CASE("build_circuit") {
    CHECK(build_circuit({4, 0, {}}).gates.empty());
    const auto spec = random_spec(4, 2, AngleEnsemble::Continuous, 7);
    const auto seq = build_circuit(spec);
    CHECK(seq.u_count() == 12);
    CHECK(seq.cz_count() == 6);
    CHECK(build_circuit(spec) == seq);
    CHECK_THROWS_AS(build_circuit({4, 1, std::vector<double>(5)}), ArgumentError);
}

TEST_CASE("apply_sampler examples") {
    SUBCASE("forward then inverse returns |0...0>") {
        for (int n = 2; n <= 6; ++n) {
            const auto spec = random_spec(n, 3, AngleEnsemble::Continuous, 100 + n);
            auto s = init_zero(n);
            apply_sampler(s, spec);
            apply_inverse_sampler(s, spec);
            CHECK(max_abs_diff(s.amps(), init_zero(n).amps()) < 1e-9);
        }
    }
    SUBCASE("all-zero angles leave |0...0> unchanged") {
        const SamplerSpec spec{5, 3, std::vector<double>(param_count(5, 3), 0.0)};
        auto s = init_zero(5);
        apply_sampler(s, spec);
        CHECK(max_abs_diff(s.amps(), init_zero(5).amps()) < 1e-15);
    }
    SUBCASE("n=4, L=1 output is not uniform") {
        const auto spec = random_spec(4, 1, AngleEnsemble::Continuous, 2024);
        auto s = init_zero(4);
        apply_sampler(s, spec);
        CHECK(shannon_entropy(probabilities(s)) < 4.0 - 1e-6);
    }
    SUBCASE("dimension mismatch") {
        auto s = init_zero(3);
        CHECK_THROWS_AS(apply_sampler(s, random_spec(4, 1, AngleEnsemble::Continuous, 1)),
                        ArgumentError);
    }
}

TEST_CASE("circuit matches the dense layer product") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 3;
        const auto spec = random_spec(n, 2, AngleEnsemble::Continuous, 300 + trial);
        Dense u = identity_matrix(std::size_t{1} << n);
        for (const auto &g : build_circuit(spec).gates) {
            const Dense step = g.kind == Gate::Kind::CZ ? dense_cz(n, g.q1, g.q2)
                                                        : embed(n, g.q1, u_matrix(g.theta, g.phi));
            u = matmul(step, u);
        }
        const auto psi = random_state(n, rng);
        auto s = psi;
        apply_sampler(s, spec);
        CHECK(max_abs_diff(s.amps(), matvec(u, psi.amps())) < 1e-12);
    }
}

TEST_CASE("random_params respects ensemble support") {
    const auto cliff = random_params(5, 4, AngleEnsemble::CliffordHalfPi, 3);
    CHECK(cliff.size() == std::size_t(param_count(5, 4)));
    for (double v : cliff) {
        const double k = v / (kPi / 2);
        CHECK(std::abs(k - std::round(k)) < 1e-12);
        CHECK(std::abs(k) <= 4.0 + 1e-12);
    }
    for (double v : random_params(5, 4, AngleEnsemble::EighthPi, 3)) {
        const double k = v / (kPi / 4);
        CHECK(std::abs(k - std::round(k)) < 1e-12);
        CHECK(std::abs(k) <= 8.0 + 1e-12);
    }
    const auto cont = random_params(5, 4, AngleEnsemble::Continuous, 3);
    for (double v : cont) {
        CHECK(v >= -2 * kPi);
        CHECK(v <= 2 * kPi);
    }
    CHECK(random_params(5, 4, AngleEnsemble::Continuous, 3) == cont);
    CHECK(random_params(5, 4, AngleEnsemble::Continuous, 4) != cont);
}

TEST_CASE("ensemble names round trip") {
    for (auto e : {AngleEnsemble::Continuous, AngleEnsemble::CliffordHalfPi, AngleEnsemble::EighthPi})
        CHECK(parse_ensemble(to_string(e)) == e);
    CHECK_THROWS_AS(parse_ensemble("gaussian"), ArgumentError);
}

TEST_CASE("SamplerSpec JSON round trip") {
    const auto spec = random_spec(3, 2, AngleEnsemble::EighthPi, 12);
    const auto j = to_json(spec);
    CHECK(j.at("n") == 3);
    CHECK(j.at("L") == 2);
    CHECK(j.at("x").size() == 16);
    CHECK(spec_from_json(j) == spec);
    CHECK(spec_from_json(nlohmann::json::parse(j.dump())) == spec);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"n", 3}, {"L", 1}, {"x", {1.0}}}), ArgumentError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"n", 3}}), ArgumentError);
}

TEST_CASE("angles are 4pi periodic") {
    auto spec = random_spec(3, 2, AngleEnsemble::Continuous, 5);
    auto shifted = spec;
    for (auto &v : shifted.x) v += 4 * kPi;
    auto a = init_zero(3), b = init_zero(3);
    apply_sampler(a, spec);
    apply_sampler(b, shifted);
    CHECK(max_abs_diff(a.amps(), b.amps()) < 1e-12);
}

TEST_CASE("property: parameter count consistency") {
    for (int n = 2; n <= 10; ++n) {
        for (int L = 0; L <= 12; ++L) {
            const auto spec = random_spec(n, L, AngleEnsemble::Continuous, 1000 * n + L);
            const auto seq = build_circuit(spec);
            CHECK(seq.u_count() == spec.x.size() / 2);
            CHECK(int(seq.u_count()) == param_count(n, L) / 2);
            for (const auto &g : seq.gates) {
                CHECK(g.q1 >= 1);
                CHECK(g.q1 <= n);
                if (g.kind == Gate::Kind::CZ) CHECK(std::abs(g.q1 - g.q2) == 1);
            }
        }
    }
}

TEST_CASE("property: inverse sampler undoes the forward sampler") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const int L = trial % 6;
        const auto ens = static_cast<AngleEnsemble>(trial % 3);
        const auto spec = random_spec(n, L, ens, 5000 + trial);
        const auto psi = random_state(n, rng);
        auto s = psi;
        apply_sampler(s, spec);
        apply_inverse_sampler(s, spec);
        double err = 0.0;
        for (std::size_t x = 0; x < s.dim(); ++x) err += std::norm(s[x] - psi[x]);
        CHECK(std::sqrt(err) < 1e-9);
        CHECK(build_circuit(spec).inverse().inverse() == build_circuit(spec));
    }
}

TEST_CASE("property: half-pi circuits are Clifford") {
    // U P U^dag has unit-modulus overlap with exactly one Pauli Q; since both are
    // unitary that forces U P U^dag = +-Q. The x-mask of Q is read off row 0.
    for (int n = 2; n <= 5; ++n) {
        const auto spec = random_spec(n, 2, AngleEnsemble::CliffordHalfPi, 900 + n);
        const Dense u = circuit_matrix(spec);
        const Dense ud = adjoint(u);
        const BasisIndex N = BasisIndex{1} << n;
        int failures = 0;
        for (BasisIndex xm = 0; xm < N; ++xm) {
            for (BasisIndex zm = 0; zm < N; ++zm) {
                const Dense conj = matmul(matmul(u, dense_pauli(PauliString::from_masks(n, xm, zm))), ud);
                BasisIndex col = 0;
                for (BasisIndex j = 0; j < N; ++j)
                    if (std::abs(conj[0][j]) > std::abs(conj[0][col])) col = j;
                int hits = 0;
                for (BasisIndex z2 = 0; z2 < N; ++z2) {
                    const Complex c = normalized_overlap(dense_pauli(PauliString::from_masks(n, col, z2)), conj);
                    if (std::abs(c) > 1e-6) {
                        ++hits;
                        if (std::abs(std::abs(c.real()) - 1.0) > 1e-9 || std::abs(c.imag()) > 1e-9) ++failures;
                    }
                }
                if (hits != 1) ++failures;
            }
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("eighth-pi circuits are generically not Clifford") {
    const auto spec = random_spec(3, 2, AngleEnsemble::EighthPi, 41);
    const Dense u = circuit_matrix(spec);
    const Dense conj = matmul(matmul(u, dense_pauli(PauliString::single(3, 1, Pauli::Z))), adjoint(u));
    int hits = 0;
    for (BasisIndex xm = 0; xm < 8; ++xm)
        for (BasisIndex zm = 0; zm < 8; ++zm)
            if (std::abs(normalized_overlap(dense_pauli(PauliString::from_masks(3, xm, zm)), conj)) > 1e-6)
                ++hits;
    CHECK(hits > 1);
}
