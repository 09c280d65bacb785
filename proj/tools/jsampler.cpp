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

// jsampler <subcommand> --config file.json [--seed INT] [--out DIR]
//          [--format csv|json] [--threads INT]
//
// Exit codes: 0 ok, 1 runtime error, 2 config error, 3 internal consistency error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jsampler/errors.hpp"
#include "jsampler/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConsistency = 3;

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<int> threads;
};

jsampler::ExperimentConfig load_config(const std::string &subcommand, const Overrides &o) {
    std::ifstream in(o.config_path);
    if (!in) throw jsampler::ConfigError("--config", "cannot read " + o.config_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw jsampler::ConfigError("--config", e.what());
    }
    auto config = jsampler::ExperimentConfig::from_json(j);
    if (!config.experiment.empty() && config.experiment != subcommand) {
        throw jsampler::ConfigError("experiment", "config names '" + config.experiment +
                                                      "' but subcommand is '" + subcommand + "'");
    }
    config.experiment = subcommand;
    if (o.seed) config.master_seed = *o.seed;
    if (o.out) config.output_dir = *o.out;
    if (o.format) config.format = *o.format;
    if (o.threads) config.threads = *o.threads;
    config.validate();
    return config;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Layered qubit-chain sampler simulator and metrics toolkit"};
    app.require_subcommand(1);

    Overrides overrides;
    for (const auto &name : jsampler::experiment_names()) {
        auto *sub = app.add_subcommand(name, "Run the " + name + " experiment");
        sub->add_option("--config", overrides.config_path, "Experiment config (JSON)")->required();
        sub->add_option("--seed", overrides.seed, "Override master_seed");
        sub->add_option("--out", overrides.out, "Output directory");
        sub->add_option("--format", overrides.format, "Table format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", overrides.threads, "Worker threads")
            ->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();
    try {
        const auto config = load_config(subcommand, overrides);
        const auto output = jsampler::run_experiment(config);
        for (const auto &w : output.warnings) std::cerr << "warning: " << w << '\n';
        for (const auto &path : jsampler::write_output(output, config)) {
            std::cout << path << '\n';
        }
    } catch (const jsampler::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const jsampler::ConsistencyError &e) {
        std::cerr << "internal consistency error: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
