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
 * @file experiment.hpp
 * @brief Seeded parameter sweeps producing CSV/JSON tables.
 *
 * Every circuit in a sweep gets the seed derive_seed(master_seed, {n, L, i}),
 * so adding or removing sweep points never changes other rows. Points run on
 * a thread pool; tables are assembled in (n, L, i) order, so the output does
 * not depend on the thread count.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jsampler/chaos_otoc.hpp"
#include "jsampler/noise_model.hpp"
#include "jsampler/rng.hpp"
#include "jsampler/sampler_circuit.hpp"
#include "jsampler/table.hpp"

namespace jsampler {

struct ExperimentConfig {
    std::string experiment;
    std::vector<int> n_list{4};
    std::vector<int> L_list{0, 1, 2, 3, 4};
    AngleEnsemble ensemble = AngleEnsemble::Continuous;
    int s = 4;                         ///< circuits per (n, L) point
    std::uint64_t shots = kDefaultShots;
    int r = 8;                         ///< DFE Pauli samples
    std::uint64_t dfe_shots = 0;       ///< shots per DFE Pauli; 0 = exact expectations
    std::uint64_t nu = 8;              ///< OTOC trace samples
    TraceMode otoc_mode = TraceMode::Abs;
    double epsilon = 0.0;
    std::optional<ReadoutModel> readout; ///< explicit per-qubit flips
    double readout_flip = kDefaultReadoutFlip; ///< used when `readout` is unset
    bool tomography = false;           ///< entanglement from shot-based tomography
    int bins = 20;
    double max_scaled = 10.0;
    int count = 2000;                  ///< Haar oracle draws per n
    Seed master_seed = 1;
    std::string output_dir = ".";
    std::string format = "csv";
    int threads = 1;

    /// Missing fields keep their defaults. Throws ConfigError naming the field.
    static ExperimentConfig from_json(const nlohmann::json &j);
    nlohmann::ordered_json to_json() const;
    /// Field-level validation for the selected experiment.
    void validate() const;

    ReadoutModel readout_for(int n) const;
};

inline const std::vector<std::string> &experiment_names() {
    static const std::vector<std::string> names{"fidelity", "sampling", "entanglement",
                                                "otoc",     "pt-hist",  "haar-oracle"};
    return names;
}

Seed circuit_seed(Seed master, int n, int layers, int index);

struct ExperimentOutput {
    std::vector<std::pair<std::string, Table>> tables; ///< first is the primary table
    std::vector<std::string> warnings;

    const Table &table(const std::string &name) const &;
    Table table(const std::string &name) &&;
};

ExperimentOutput run_fidelity_sweep(const ExperimentConfig &config);
ExperimentOutput run_sampling_experiment(const ExperimentConfig &config);
ExperimentOutput run_entanglement_sweep(const ExperimentConfig &config);
ExperimentOutput run_otoc_sweep(const ExperimentConfig &config);
ExperimentOutput run_pt_histogram(const ExperimentConfig &config);
ExperimentOutput run_haar_oracle(const ExperimentConfig &config);

/// Validates and dispatches on config.experiment.
ExperimentOutput run_experiment(const ExperimentConfig &config);

/// Writes each table to <output_dir>/<name>.<format> and the resolved config
/// to <output_dir>/<experiment>.config.json. Returns the written paths.
std::vector<std::string> write_output(const ExperimentOutput &out, const ExperimentConfig &config);

} // namespace jsampler
