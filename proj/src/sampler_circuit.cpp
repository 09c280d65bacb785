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

#include "jsampler/sampler_circuit.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "jsampler/errors.hpp"

namespace jsampler {

void SamplerSpec::validate() const {
    const int m = param_count(n, layers);
    if (static_cast<int>(x.size()) != m) {
        throw ArgumentError("parameter vector has length " + std::to_string(x.size()) +
                            ", expected " + std::to_string(m));
    }
}

std::string to_string(AngleEnsemble e) {
    switch (e) {
    case AngleEnsemble::Continuous: return "continuous";
    case AngleEnsemble::CliffordHalfPi: return "clifford_half_pi";
    case AngleEnsemble::EighthPi: return "eighth_pi";
    }
    return "unknown";
}

AngleEnsemble parse_ensemble(std::string_view name) {
    if (name == "continuous") return AngleEnsemble::Continuous;
    if (name == "clifford_half_pi" || name == "clifford") return AngleEnsemble::CliffordHalfPi;
    if (name == "eighth_pi") return AngleEnsemble::EighthPi;
    throw ArgumentError("unknown angle ensemble '" + std::string(name) + "'");
}

std::size_t GateSequence::u_count() const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return g.kind != Gate::Kind::CZ;
    }));
}

std::size_t GateSequence::cz_count() const { return gates.size() - u_count(); }

GateSequence GateSequence::inverse() const {
    GateSequence inv{n, {}};
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == Gate::Kind::U) {
            g.kind = Gate::Kind::UInverse;
        } else if (g.kind == Gate::Kind::UInverse) {
            g.kind = Gate::Kind::U;
        }
        inv.gates.push_back(g);
    }
    return inv;
}

int param_count(int n, int layers) {
    if (n < 2) throw ArgumentError("a sampler chain needs n >= 2, got " + std::to_string(n));
    if (layers < 0) throw ArgumentError("layer count must be >= 0");
    return 2 * (2 * n - 2) * layers;
}

GateSequence build_layer(int n, std::span<const double> layer_params) {
    const auto expected = static_cast<std::size_t>(param_count(n, 1));
    if (layer_params.size() != expected) {
        throw ArgumentError("layer slice has " + std::to_string(layer_params.size()) +
                            " angles, expected " + std::to_string(expected));
    }
    GateSequence seq{n, {}};
    seq.gates.reserve(3 * n);
    std::size_t k = 0;
    auto push_u = [&](int q) {
        seq.gates.push_back(Gate::u(q, layer_params[k], layer_params[k + 1]));
        k += 2;
    };

    for (int q = 1; q <= n; ++q) push_u(q);
    for (int q = 1; q + 1 <= n; q += 2) seq.gates.push_back(Gate::cz(q, q + 1));
    for (int q = 2; q <= n - 1; ++q) push_u(q);
    for (int q = 2; q + 1 <= n; q += 2) seq.gates.push_back(Gate::cz(q, q + 1));
    return seq;
}

GateSequence build_circuit(const SamplerSpec &spec) {
    spec.validate();
    GateSequence seq{spec.n, {}};
    const auto per_layer = static_cast<std::size_t>(param_count(spec.n, 1));
    const std::span<const double> x(spec.x);
    for (int l = 0; l < spec.layers; ++l) {
        auto layer = build_layer(spec.n, x.subspan(l * per_layer, per_layer));
        seq.gates.insert(seq.gates.end(), layer.gates.begin(), layer.gates.end());
    }
    return seq;
}

void apply_sequence(StateVector &state, const GateSequence &seq) {
    if (state.num_qubits() != seq.n) {
        throw ArgumentError("circuit acts on " + std::to_string(seq.n) + " qubits, state has " +
                            std::to_string(state.num_qubits()));
    }
    for (const Gate &g : seq.gates) {
        switch (g.kind) {
        case Gate::Kind::U: state.apply_u(g.q1, g.theta, g.phi); break;
        case Gate::Kind::UInverse: state.apply_u_inverse(g.q1, g.theta, g.phi); break;
        case Gate::Kind::CZ: state.apply_cz(g.q1, g.q2); break;
        }
    }
}

void apply_sampler(StateVector &state, const SamplerSpec &spec) {
    apply_sequence(state, build_circuit(spec));
}

void apply_inverse_sampler(StateVector &state, const SamplerSpec &spec) {
    apply_sequence(state, build_circuit(spec).inverse());
}

std::vector<double> random_params(int n, int layers, AngleEnsemble ensemble, Seed seed) {
    const int m = param_count(n, layers);
    auto rng = make_rng(seed);
    std::vector<double> x(m);
    constexpr double pi = std::numbers::pi;
    switch (ensemble) {
    case AngleEnsemble::Continuous: {
        std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
        for (double &v : x) v = angle(rng);
        break;
    }
    case AngleEnsemble::CliffordHalfPi: {
        std::uniform_int_distribution<int> k(-4, 4);
        for (double &v : x) v = k(rng) * (pi / 2);
        break;
    }
    case AngleEnsemble::EighthPi: {
        std::uniform_int_distribution<int> k(-8, 8);
        for (double &v : x) v = k(rng) * (pi / 4);
        break;
    }
    }
    return x;
}

SamplerSpec random_spec(int n, int layers, AngleEnsemble ensemble, Seed seed) {
    return SamplerSpec{n, layers, random_params(n, layers, ensemble, seed)};
}

nlohmann::json to_json(const SamplerSpec &spec) {
    return nlohmann::json{{"n", spec.n}, {"L", spec.layers}, {"x", spec.x}};
}

SamplerSpec spec_from_json(const nlohmann::json &j) {
    SamplerSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        spec.layers = j.at("L").get<int>();
        spec.x = j.at("x").get<std::vector<double>>();
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed sampler spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

} // namespace jsampler
