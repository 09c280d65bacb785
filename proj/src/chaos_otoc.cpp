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

#include "jsampler/chaos_otoc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

// Forward and inverse gate lists built once per spec.
class OtocEngine {
  public:
    OtocEngine(const SamplerSpec &spec, const OtocOperators &ops)
        : n_(spec.n), forward_(build_circuit(spec)), inverse_(forward_.inverse()), ops_(ops) {
        check(ops.v);
        check(ops.w);
    }

    Complex wvwv(BasisIndex x) const {
        auto s = start(x);
        apply_v(s);
        apply_w(s);
        apply_v(s);
        apply_w(s);
        return s[x];
    }

    Complex wvvw(BasisIndex x) const {
        auto s = start(x);
        apply_w(s);
        apply_v(s);
        apply_v(s);
        apply_w(s);
        return s[x];
    }

  private:
    void check(const LocalPauli &p) const {
        if (p.qubit < 1 || p.qubit > n_) throw IndexError("OTOC operator qubit out of range");
    }

    StateVector start(BasisIndex x) const {
        if (x >= (BasisIndex{1} << n_)) {
            throw IndexError("basis index " + std::to_string(x) + " out of range");
        }
        return StateVector::basis(n_, x);
    }

    void apply_v(StateVector &s) const { s.apply_pauli(ops_.v.qubit, ops_.v.label); }

    // W = U^dagger P U: the rightmost factor acts first.
    void apply_w(StateVector &s) const {
        apply_sequence(s, forward_);
        s.apply_pauli(ops_.w.qubit, ops_.w.label);
        apply_sequence(s, inverse_);
    }

    int n_;
    GateSequence forward_;
    GateSequence inverse_;
    OtocOperators ops_;
};

Complex mean(const std::vector<Complex> &values) {
    Complex sum{0.0, 0.0};
    for (const auto &v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

} // namespace

double pt_entropy(int n) {
    if (n < 1) throw ArgumentError("pt_entropy needs n >= 1");
    return n - 1 + std::numbers::egamma;
}

double PtHistogram::observed_mass() const {
    double mass = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        mass += observed[i] * (edges[i + 1] - edges[i]) * inverse_n;
    }
    return mass;
}

PtHistogram pt_histogram(const std::vector<ProbDist> &dists, int bins, double max_scaled) {
    if (dists.empty()) throw ArgumentError("pt_histogram needs at least one distribution");
    if (bins < 1 || !(max_scaled > 0.0)) throw ArgumentError("invalid histogram binning");
    const int n = dists.front().num_qubits();
    for (const auto &d : dists) {
        if (d.num_qubits() != n) throw ArgumentError("distributions differ in qubit count");
    }
    const double dim = std::ldexp(1.0, n);
    const double width = max_scaled / bins;

    PtHistogram h;
    h.n = n;
    h.inverse_n = 1.0 / dim;
    h.counts.assign(bins, 0);
    for (int i = 0; i <= bins; ++i) h.edges.push_back(i * width);

    for (const auto &d : dists) {
        for (double p : d.values()) {
            const double y = p * dim;
            const auto bin = static_cast<std::size_t>(std::floor(y / width));
            if (bin < h.counts.size()) {
                ++h.counts[bin];
            } else {
                ++h.overflow;
            }
            ++h.total;
        }
    }

    for (int i = 0; i < bins; ++i) {
        const double lo = h.edges[i], hi = h.edges[i + 1];
        const double frac = static_cast<double>(h.counts[i]) / static_cast<double>(h.total);
        h.observed.push_back(frac / (width / dim));
        h.reference.push_back(dim * (std::exp(-lo) - std::exp(-hi)) / width);
    }
    return h;
}

Complex otoc_G(const SamplerSpec &spec, BasisIndex x) {
    return otoc_G(spec, x, OtocOperators::chain_ends(spec.n));
}

Complex otoc_G(const SamplerSpec &spec, BasisIndex x, const OtocOperators &ops) {
    return OtocEngine(spec, ops).wvwv(x);
}

Complex wvvw_correlator(const SamplerSpec &spec, BasisIndex x) {
    return wvvw_correlator(spec, x, OtocOperators::chain_ends(spec.n));
}

Complex wvvw_correlator(const SamplerSpec &spec, BasisIndex x, const OtocOperators &ops) {
    return OtocEngine(spec, ops).wvvw(x);
}

OtocTrace otoc_F_exact(const SamplerSpec &spec) {
    return otoc_F_exact(spec, OtocOperators::chain_ends(spec.n));
}

OtocTrace otoc_F_exact(const SamplerSpec &spec, const OtocOperators &ops) {
    if (spec.n > kMaxOtocExactQubits) {
        throw SizeError("exact OTOC trace limited to " + std::to_string(kMaxOtocExactQubits) +
                        " qubits");
    }
    const OtocEngine engine(spec, ops);
    const BasisIndex dim = BasisIndex{1} << spec.n;
    OtocTrace t;
    t.G.reserve(dim);
    for (BasisIndex x = 0; x < dim; ++x) {
        t.G.push_back(engine.wvwv(x));
        t.max_im_G = std::max(t.max_im_G, std::abs(t.G.back().imag()));
    }
    const Complex f = mean(t.G);
    if (std::abs(f.imag()) > 1e-6) {
        throw ConsistencyError("OTOC trace has imaginary part " + std::to_string(f.imag()));
    }
    t.F = f.real();
    t.C = 2.0 * (1.0 - t.F);
    return t;
}

std::vector<BasisIndex> sample_basis_states(int n, std::uint64_t nu, Seed seed) {
    const BasisIndex dim = BasisIndex{1} << n;
    if (nu < 1 || nu > dim) {
        throw ArgumentError("nu = " + std::to_string(nu) + " outside [1, " + std::to_string(dim) +
                            "]");
    }
    std::vector<BasisIndex> pool(dim);
    std::iota(pool.begin(), pool.end(), BasisIndex{0});
    auto rng = make_rng(seed);
    for (std::uint64_t i = 0; i < nu; ++i) {
        std::uniform_int_distribution<BasisIndex> pick(i, dim - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(nu);
    return pool;
}

double otoc_F_stochastic(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode) {
    return otoc_F_stochastic(spec, nu, seed, mode, OtocOperators::chain_ends(spec.n));
}

double otoc_F_stochastic(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode,
                         const OtocOperators &ops) {
    const OtocEngine engine(spec, ops);
    double sum = 0.0;
    for (BasisIndex x : sample_basis_states(spec.n, nu, seed)) {
        const Complex g = engine.wvwv(x);
        sum += mode == TraceMode::RealPart ? g.real() : std::abs(g);
    }
    return sum / static_cast<double>(nu);
}

CorrelatorPair sampled_correlators(const SamplerSpec &spec, std::uint64_t nu, Seed seed,
                                   double epsilon) {
    return sampled_correlators(spec, nu, seed, epsilon, OtocOperators::chain_ends(spec.n));
}

CorrelatorPair sampled_correlators(const SamplerSpec &spec, std::uint64_t nu, Seed seed,
                                   double epsilon, const OtocOperators &ops) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ArgumentError("epsilon outside [0, 1]");
    const OtocEngine engine(spec, ops);
    std::vector<Complex> wvwv, wvvw;
    for (BasisIndex x : sample_basis_states(spec.n, nu, seed)) {
        wvwv.push_back(engine.wvwv(x));
        wvvw.push_back(engine.wvvw(x));
    }
    const double damping = 1.0 - epsilon;
    return {damping * mean(wvwv), damping * mean(wvvw)};
}

double otoc_ratio(const CorrelatorPair &pair) {
    const double denominator = std::abs(pair.wvvw);
    if (denominator < 1e-6) throw DegenerateError("WVVW correlator vanished; ratio undefined");
    return std::abs(pair.wvwv) / denominator;
}

double otoc_ratio(const SamplerSpec &spec, std::uint64_t nu, Seed seed, double epsilon) {
    return otoc_ratio(sampled_correlators(spec, nu, seed, epsilon));
}

OtocRecord otoc_record(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode,
                       double epsilon) {
    OtocRecord rec;
    rec.spec = spec;
    rec.nu = nu;
    auto trace = otoc_F_exact(spec);
    rec.F_exact = trace.F;
    rec.C = trace.C;
    rec.max_im_G = trace.max_im_G;

    double sum = 0.0;
    std::vector<Complex> wvwv, wvvw;
    const OtocEngine engine(spec, OtocOperators::chain_ends(spec.n));
    for (BasisIndex x : sample_basis_states(spec.n, nu, seed)) {
        const Complex g = trace.G[x];
        sum += mode == TraceMode::RealPart ? g.real() : std::abs(g);
        wvwv.push_back(g);
        wvvw.push_back(engine.wvvw(x));
    }
    rec.F_stochastic = sum / static_cast<double>(nu);
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ArgumentError("epsilon outside [0, 1]");
    const CorrelatorPair pair{(1.0 - epsilon) * mean(wvwv), (1.0 - epsilon) * mean(wvvw)};
    rec.wvvw = std::abs(pair.wvvw);
    rec.ratio = otoc_ratio(pair);
    rec.G = std::move(trace.G);
    return rec;
}

} // namespace jsampler
