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

#include "jsampler/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_size(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

// Probability that qubit `mask` reads 1.
double marginal_one(std::span<const Complex> amps, BasisIndex mask) {
    double p1 = 0.0;
    for (BasisIndex x = 0; x < amps.size(); ++x) {
        if (x & mask) p1 += std::norm(amps[x]);
    }
    return std::clamp(p1, 0.0, 1.0);
}

double measure_expectation(const StateVector &state, BasisIndex mask, std::uint64_t shots,
                           Rng &rng) {
    std::binomial_distribution<std::uint64_t> ones(shots, marginal_one(state.amps(), mask));
    const auto k = static_cast<double>(ones(rng));
    const auto s = static_cast<double>(shots);
    return (s - 2.0 * k) / s;
}

} // namespace

char to_char(Pauli p) {
    switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> labels;
    labels.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I': case 'i': case '_': labels.push_back(Pauli::I); break;
        case 'X': case 'x': labels.push_back(Pauli::X); break;
        case 'Y': case 'y': labels.push_back(Pauli::Y); break;
        case 'Z': case 'z': labels.push_back(Pauli::Z); break;
        default: throw ArgumentError(std::string("invalid Pauli label '") + c + "'");
        }
    }
    return PauliString(std::move(labels));
}

PauliString PauliString::single(int n, int q, Pauli p) {
    if (q < 1 || q > n) throw IndexError("qubit " + std::to_string(q) + " outside [1, n]");
    auto s = identity(n);
    s.labels_[q - 1] = p;
    return s;
}

PauliString PauliString::from_masks(int n, BasisIndex x_mask, BasisIndex z_mask) {
    std::vector<Pauli> labels(n, Pauli::I);
    for (int q = 1; q <= n; ++q) {
        const BasisIndex bit = BasisIndex{1} << (n - q);
        const bool x = x_mask & bit, z = z_mask & bit;
        labels[q - 1] = x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
    }
    return PauliString(std::move(labels));
}

BasisIndex PauliString::x_mask() const {
    BasisIndex m = 0;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (labels_[i] == Pauli::X || labels_[i] == Pauli::Y) m |= BasisIndex{1} << (n - 1 - i);
    }
    return m;
}

BasisIndex PauliString::z_mask() const {
    BasisIndex m = 0;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (labels_[i] == Pauli::Z || labels_[i] == Pauli::Y) m |= BasisIndex{1} << (n - 1 - i);
    }
    return m;
}

int PauliString::y_count() const {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), Pauli::Y));
}

bool PauliString::is_identity() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(labels_.size());
    for (Pauli p : labels_) s.push_back(to_char(p));
    return s;
}

StateVector::StateVector(int n) : n_(n) {
    check_size(n);
    amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    check_size(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw ArgumentError("amplitude vector length " + std::to_string(amps_.size()) +
                            " is not 2^" + std::to_string(n));
    }
}

StateVector StateVector::basis(int n, BasisIndex x) {
    StateVector s(n);
    if (x >= s.dim()) throw IndexError("basis index " + std::to_string(x) + " out of range");
    s.amps_[0] = 0.0;
    s.amps_[x] = 1.0;
    return s;
}

void StateVector::check_qubit(int q) const {
    if (q < 1 || q > n_) {
        throw IndexError("qubit " + std::to_string(q) + " outside [1, " + std::to_string(n_) + "]");
    }
}

BasisIndex StateVector::mask(int q) const {
    check_qubit(q);
    return BasisIndex{1} << (n_ - q);
}

void StateVector::apply_matrix(int q, const Mat2 &m) {
    const BasisIndex stride = mask(q);
    const BasisIndex d = dim();
    for (BasisIndex base = 0; base < d; base += 2 * stride) {
        for (BasisIndex j = base; j < base + stride; ++j) {
            const Complex a0 = amps_[j];
            const Complex a1 = amps_[j + stride];
            amps_[j] = m[0] * a0 + m[1] * a1;
            amps_[j + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void StateVector::apply_u(int q, double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Complex em = std::exp(-kI * (phi / 2)), ep = std::exp(kI * (phi / 2));
    apply_matrix(q, {em * c, -em * s, ep * s, ep * c});
}

void StateVector::apply_u_inverse(int q, double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Complex em = std::exp(-kI * (phi / 2)), ep = std::exp(kI * (phi / 2));
    apply_matrix(q, {ep * c, em * s, -ep * s, em * c});
}

void StateVector::apply_cz(int q1, int q2) {
    if (q1 == q2) throw ArgumentError("CZ needs two distinct qubits");
    const BasisIndex both = mask(q1) | mask(q2);
    for (BasisIndex x = 0; x < dim(); ++x) {
        if ((x & both) == both) amps_[x] = -amps_[x];
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.size() != n_) {
        throw ArgumentError("Pauli string length " + std::to_string(p.size()) +
                            " does not match " + std::to_string(n_) + " qubits");
    }
    // P = i^{#Y} X^{xm} Z^{zm}, Z applied first.
    const BasisIndex xm = p.x_mask(), zm = p.z_mask();
    static constexpr std::array<Complex, 4> kPowI{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                  Complex{0, -1}};
    const Complex phase = kPowI[p.y_count() % 4];
    std::vector<Complex> out(dim());
    for (BasisIndex x = 0; x < dim(); ++x) {
        const double sign = (std::popcount(x & zm) & 1) ? -1.0 : 1.0;
        out[x ^ xm] = phase * sign * amps_[x];
    }
    amps_ = std::move(out);
}

void StateVector::apply_pauli(int q, Pauli p) {
    check_qubit(q);
    apply_pauli(PauliString::single(n_, q, p));
}

void StateVector::apply_hadamard(int q) {
    const double h = 1.0 / std::sqrt(2.0);
    apply_matrix(q, {h, h, h, -h});
}

void StateVector::apply_sdg(int q) { apply_matrix(q, {1.0, 0.0, 0.0, -kI}); }

double StateVector::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Complex &a) { return acc + std::norm(a); });
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) throw ArgumentError("inner product of registers with different sizes");
    Complex acc{0.0, 0.0};
    for (BasisIndex x = 0; x < dim(); ++x) acc += std::conj(amps_[x]) * other.amps_[x];
    return acc;
}

StateVector init_zero(int n) { return StateVector(n); }

ProbDist::ProbDist(int n, std::vector<double> p) : n_(n), p_(std::move(p)) {
    check_size(n);
    if (p_.size() != (std::size_t{1} << n)) {
        throw ArgumentError("distribution length " + std::to_string(p_.size()) + " is not 2^" +
                            std::to_string(n));
    }
    double total = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) throw ArgumentError("negative or NaN probability");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ArgumentError("probabilities sum to " + std::to_string(total));
    }
}

ProbDist ProbDist::uniform(int n) {
    check_size(n);
    const std::size_t d = std::size_t{1} << n;
    return ProbDist(n, std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbDist ProbDist::delta(int n, BasisIndex x) {
    check_size(n);
    std::vector<double> p(std::size_t{1} << n, 0.0);
    if (x >= p.size()) throw IndexError("basis index out of range");
    p[x] = 1.0;
    return ProbDist(n, std::move(p));
}

ProbDist probabilities(const StateVector &state) {
    std::vector<double> p(state.dim());
    std::transform(state.amps().begin(), state.amps().end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return ProbDist(state.num_qubits(), std::move(p));
}

ProbDist sample_counts(const ProbDist &dist, std::uint64_t shots, Seed seed) {
    if (shots == 0) throw ArgumentError("shots must be >= 1");
    auto rng = make_rng(seed);
    std::discrete_distribution<std::size_t> draw(dist.values().begin(), dist.values().end());
    std::vector<std::uint64_t> counts(dist.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) ++counts[draw(rng)];
    std::vector<double> freq(dist.size());
    const auto total = static_cast<double>(shots);
    std::transform(counts.begin(), counts.end(), freq.begin(),
                   [total](std::uint64_t c) { return static_cast<double>(c) / total; });
    return ProbDist(dist.num_qubits(), std::move(freq));
}

SingleQubitRDM SingleQubitRDM::from_bloch(double rx, double ry, double rz) {
    return {Complex{(1.0 + rz) / 2, 0.0}, Complex{rx / 2, -ry / 2}, Complex{rx / 2, ry / 2},
            Complex{(1.0 - rz) / 2, 0.0}};
}

std::array<double, 3> SingleQubitRDM::bloch() const {
    return {2.0 * m01.real(), -2.0 * m01.imag(), (m00 - m11).real()};
}

std::array<double, 2> SingleQubitRDM::eigenvalues() const {
    const double half_trace = trace() / 2;
    const double half_diff = (m00 - m11).real() / 2;
    const double r = std::sqrt(half_diff * half_diff + std::norm(m01));
    return {half_trace - r, half_trace + r};
}

SingleQubitRDM reduced_density_matrix(const StateVector &state, int q) {
    const BasisIndex m = state.mask(q);
    const auto amps = state.amps();
    double p0 = 0.0, p1 = 0.0;
    Complex coherence{0.0, 0.0};
    for (BasisIndex x = 0; x < amps.size(); ++x) {
        if (x & m) {
            p1 += std::norm(amps[x]);
        } else {
            p0 += std::norm(amps[x]);
            coherence += amps[x] * std::conj(amps[x | m]);
        }
    }
    return {Complex{p0, 0.0}, coherence, std::conj(coherence), Complex{p1, 0.0}};
}

SingleQubitRDM rdm_from_expectations(double ex, double ey, double ez) {
    const double r = std::sqrt(ex * ex + ey * ey + ez * ez);
    if (r == 0.0) return SingleQubitRDM::from_bloch(0.0, 0.0, 0.0);
    double hi = std::clamp((1.0 + r) / 2, 0.0, 1.0);
    double lo = std::clamp((1.0 - r) / 2, 0.0, 1.0);
    const double total = hi + lo;
    hi /= total;
    lo /= total;
    const double scale = (hi - lo) / r;
    return SingleQubitRDM::from_bloch(ex * scale, ey * scale, ez * scale);
}

SingleQubitRDM tomographic_rdm(const StateVector &state, int q, std::uint64_t shots, Seed seed) {
    if (shots == 0) throw ArgumentError("shots must be >= 1");
    const BasisIndex m = state.mask(q);
    auto rng = make_rng(seed);

    const double ez = measure_expectation(state, m, shots, rng);

    StateVector rotated = state;
    rotated.apply_hadamard(q);
    const double ex = measure_expectation(rotated, m, shots, rng);

    rotated = state;
    rotated.apply_sdg(q);
    rotated.apply_hadamard(q);
    const double ey = measure_expectation(rotated, m, shots, rng);

    return rdm_from_expectations(ex, ey, ez);
}

} // namespace jsampler
