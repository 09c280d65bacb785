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

#include "jsampler/noise_model.hpp"

#include <cmath>
#include <string>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

void check_epsilon(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw ArgumentError("depolarizing strength " + std::to_string(eps) + " outside [0, 1]");
    }
}

} // namespace

void DepolarizingModel::validate() const { check_epsilon(epsilon); }

ReadoutModel ReadoutModel::uniform(int n, double flip) {
    ReadoutModel m{std::vector<std::pair<double, double>>(n, {flip, flip})};
    m.validate();
    return m;
}

void ReadoutModel::validate() const {
    for (const auto &[p01, p10] : flips) {
        if (!(p01 >= 0.0 && p01 <= 0.5 && p10 >= 0.0 && p10 <= 0.5)) {
            throw ArgumentError("readout flip probabilities must lie in [0, 0.5]");
        }
    }
}

ProbDist depolarize_dist(const ProbDist &p_ideal, double epsilon) {
    check_epsilon(epsilon);
    const double floor = epsilon / static_cast<double>(p_ideal.size());
    std::vector<double> out(p_ideal.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = (1.0 - epsilon) * p_ideal[x] + floor;
    return ProbDist(p_ideal.num_qubits(), std::move(out));
}

double depolarized_state_fidelity(double epsilon, int n) {
    check_epsilon(epsilon);
    return 1.0 - epsilon * (1.0 - std::ldexp(1.0, -n));
}

ProbDist apply_readout_error(const ProbDist &p, const ReadoutModel &model) {
    const int n = p.num_qubits();
    if (model.num_qubits() != n) {
        throw ArgumentError("readout model covers " + std::to_string(model.num_qubits()) +
                            " qubits, distribution has " + std::to_string(n));
    }
    model.validate();
    std::vector<double> out(p.values().begin(), p.values().end());
    const std::size_t dim = out.size();
    for (int q = 1; q <= n; ++q) {
        const auto [p01, p10] = model.flips[q - 1];
        const std::size_t stride = std::size_t{1} << (n - q);
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t j = base; j < base + stride; ++j) {
                const double zero = out[j], one = out[j + stride];
                out[j] = (1.0 - p01) * zero + p10 * one;
                out[j + stride] = p01 * zero + (1.0 - p10) * one;
            }
        }
    }
    return ProbDist(n, std::move(out));
}

nlohmann::json to_json(const ReadoutModel &model) {
    nlohmann::json flips = nlohmann::json::array();
    for (const auto &[p01, p10] : model.flips) flips.push_back({p01, p10});
    return nlohmann::json{{"flips", flips}};
}

ReadoutModel readout_from_json(const nlohmann::json &j) {
    ReadoutModel m;
    try {
        for (const auto &pair : j.at("flips")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ArgumentError("each readout entry must be [p01, p10]");
            }
            m.flips.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed readout model: ") + e.what());
    }
    m.validate();
    return m;
}

} // namespace jsampler
