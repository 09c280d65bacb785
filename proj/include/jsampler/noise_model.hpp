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

#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "jsampler/statevector.hpp"

namespace jsampler {

inline constexpr double kDefaultReadoutFlip = 0.03;

/// Global depolarizing channel rho -> (1 - eps) rho + eps I / N.
struct DepolarizingModel {
    double epsilon = 0.0;

    void validate() const; ///< eps in [0, 1]
};

/// Independent per-qubit readout flips. flips[q - 1] = (p01, p10): the
/// probability of reading 1 when the qubit is 0, and 0 when it is 1.
struct ReadoutModel {
    std::vector<std::pair<double, double>> flips;

    static ReadoutModel uniform(int n, double flip = kDefaultReadoutFlip);

    int num_qubits() const { return static_cast<int>(flips.size()); }
    void validate() const; ///< each probability in [0, 0.5]
};

/// (1 - eps) p + eps / N.
ProbDist depolarize_dist(const ProbDist &p_ideal, double epsilon);

/// Fidelity of the depolarized state with its pure target: 1 - eps (1 - 2^-n).
double depolarized_state_fidelity(double epsilon, int n);

/// Tensor product of per-qubit confusion matrices applied to p.
ProbDist apply_readout_error(const ProbDist &p, const ReadoutModel &model);

/// {"flips": [[p01, p10], ...]}
nlohmann::json to_json(const ReadoutModel &model);
ReadoutModel readout_from_json(const nlohmann::json &j);

} // namespace jsampler
