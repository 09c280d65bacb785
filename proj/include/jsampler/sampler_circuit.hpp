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
 * @file sampler_circuit.hpp
 * @brief Layered sampler circuits on a qubit chain.
 *
 * One layer consumes 2(2n-2) angles, as (theta, phi) pairs for u gates:
 *
 *   u on qubits 1..n        CZ (1,2) (3,4) ...
 *   u on qubits 2..n-1      CZ (2,3) (4,5) ...
 *
 * Angles are assigned top to bottom within each sub-column, theta before phi.
 */

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jsampler/rng.hpp"
#include "jsampler/statevector.hpp"

namespace jsampler {

/// (n, L, x) fully determining one sampler circuit.
struct SamplerSpec {
    int n = 2;
    int layers = 0;
    std::vector<double> x;

    /// Throws ArgumentError unless n >= 2, layers >= 0 and |x| == param_count.
    void validate() const;

    friend bool operator==(const SamplerSpec &, const SamplerSpec &) = default;
};

enum class AngleEnsemble { Continuous, CliffordHalfPi, EighthPi };

std::string to_string(AngleEnsemble e);
/// Accepts "continuous", "clifford_half_pi", "eighth_pi".
AngleEnsemble parse_ensemble(std::string_view name);

struct Gate {
    enum class Kind { U, UInverse, CZ };
    Kind kind;
    int q1;
    int q2 = 0; // CZ partner
    double theta = 0.0;
    double phi = 0.0;

    static Gate u(int q, double theta, double phi) { return {Kind::U, q, 0, theta, phi}; }
    static Gate cz(int a, int b) { return {Kind::CZ, a, b, 0.0, 0.0}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct GateSequence {
    int n = 0;
    std::vector<Gate> gates;

    std::size_t u_count() const;
    std::size_t cz_count() const;

    /// Reversed order with each u replaced by its explicit inverse record.
    GateSequence inverse() const;

    friend bool operator==(const GateSequence &, const GateSequence &) = default;
};

/// 2(2n - 2)L. Throws ArgumentError for n < 2 or L < 0.
int param_count(int n, int layers);

/// One layer from a slice of 2(2n - 2) angles.
GateSequence build_layer(int n, std::span<const double> layer_params);

GateSequence build_circuit(const SamplerSpec &spec);

void apply_sequence(StateVector &state, const GateSequence &seq);
void apply_sampler(StateVector &state, const SamplerSpec &spec);
void apply_inverse_sampler(StateVector &state, const SamplerSpec &spec);

/// Pseudorandom parameter vector. Continuous: uniform on [-2pi, 2pi];
/// CliffordHalfPi: k pi/2, k in [-4, 4]; EighthPi: k pi/4, k in [-8, 8].
std::vector<double> random_params(int n, int layers, AngleEnsemble ensemble, Seed seed);

SamplerSpec random_spec(int n, int layers, AngleEnsemble ensemble, Seed seed);

/// {"n": int, "L": int, "x": [floats]}
nlohmann::json to_json(const SamplerSpec &spec);
SamplerSpec spec_from_json(const nlohmann::json &j);

} // namespace jsampler
