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

#include "jsampler/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

#include "jsampler/entanglement.hpp"
#include "jsampler/errors.hpp"
#include "jsampler/fidelity.hpp"
#include "jsampler/stats.hpp"

namespace jsampler {

namespace {

// Sub-stream tags under a circuit seed.
enum StreamTag : std::uint64_t { kDfeStream = 1, kShotStream = 2, kTomographyStream = 3,
                                 kOtocStream = 4 };

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn &&fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const std::size_t extra = std::min<std::size_t>(std::max(threads, 1), count) - 1;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(worker);
    if (count > 0) worker();
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct SweepPoint {
    int n;
    int layers;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig &c) {
    std::vector<SweepPoint> pts;
    for (int n : c.n_list) {
        for (int l : c.L_list) pts.push_back({n, l});
    }
    return pts;
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Seeds are 64-bit; CSV readers that parse through doubles would lose bits,
// so seeds are written as decimal strings.
std::string seed_text(Seed s) { return std::to_string(s); }

std::string join_doubles(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += format_double(values[i]);
    }
    return out;
}

double safe_information_fidelity(const ProbDist &p_meas, const ProbDist &p_ideal) {
    try {
        return information_fidelity(p_meas, p_ideal);
    } catch (const DegenerateError &) {
        return kNaN;
    }
}

StateVector ideal_state(const SamplerSpec &spec) {
    StateVector psi = init_zero(spec.n);
    apply_sampler(psi, spec);
    return psi;
}

template <class T>
void read_field(const nlohmann::json &j, const char *key, T &out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(key, e.what());
    }
}

void require(bool ok, const char *field, const std::string &what) {
    if (!ok) throw ConfigError(field, what);
}

} // namespace

Seed circuit_seed(Seed master, int n, int layers, int index) {
    return derive_seed(master, {std::uint64_t(n), std::uint64_t(layers), std::uint64_t(index)});
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");
    static const std::set<std::string> known{
        "experiment", "n_list", "L_list",     "ensemble", "s",         "shots",
        "r",          "dfe_shots", "nu",      "otoc_mode", "epsilon",  "readout",
        "readout_flip", "tomography", "bins", "max_scaled", "count",   "master_seed",
        "output_dir", "format",     "threads"};
    for (const auto &item : j.items()) {
        if (!known.contains(item.key())) throw ConfigError(item.key(), "unknown field");
    }

    ExperimentConfig c;
    read_field(j, "experiment", c.experiment);
    read_field(j, "n_list", c.n_list);
    read_field(j, "L_list", c.L_list);
    if (j.contains("ensemble")) {
        std::string name;
        read_field(j, "ensemble", name);
        try {
            c.ensemble = parse_ensemble(name);
        } catch (const ArgumentError &e) {
            throw ConfigError("ensemble", e.what());
        }
    }
    read_field(j, "s", c.s);
    read_field(j, "shots", c.shots);
    read_field(j, "r", c.r);
    read_field(j, "dfe_shots", c.dfe_shots);
    read_field(j, "nu", c.nu);
    if (j.contains("otoc_mode")) {
        std::string mode;
        read_field(j, "otoc_mode", mode);
        if (mode == "abs") {
            c.otoc_mode = TraceMode::Abs;
        } else if (mode == "real_part") {
            c.otoc_mode = TraceMode::RealPart;
        } else {
            throw ConfigError("otoc_mode", "expected \"abs\" or \"real_part\"");
        }
    }
    read_field(j, "epsilon", c.epsilon);
    if (j.contains("readout") && !j.at("readout").is_null()) {
        const auto &r = j.at("readout");
        try {
            if (r.is_number()) {
                c.readout_flip = r.get<double>();
            } else {
                c.readout = readout_from_json(r);
            }
        } catch (const std::exception &e) {
            throw ConfigError("readout", e.what());
        }
    }
    read_field(j, "readout_flip", c.readout_flip);
    read_field(j, "tomography", c.tomography);
    read_field(j, "bins", c.bins);
    read_field(j, "max_scaled", c.max_scaled);
    read_field(j, "count", c.count);
    read_field(j, "master_seed", c.master_seed);
    read_field(j, "output_dir", c.output_dir);
    read_field(j, "format", c.format);
    read_field(j, "threads", c.threads);
    return c;
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["n_list"] = n_list;
    j["L_list"] = L_list;
    j["ensemble"] = to_string(ensemble);
    j["s"] = s;
    j["shots"] = shots;
    j["r"] = r;
    j["dfe_shots"] = dfe_shots;
    j["nu"] = nu;
    j["otoc_mode"] = otoc_mode == TraceMode::Abs ? "abs" : "real_part";
    j["epsilon"] = epsilon;
    if (readout) {
        j["readout"] = nlohmann::ordered_json::parse(jsampler::to_json(*readout).dump());
    } else {
        j["readout"] = nullptr;
    }
    j["readout_flip"] = readout_flip;
    j["tomography"] = tomography;
    j["bins"] = bins;
    j["max_scaled"] = max_scaled;
    j["count"] = count;
    j["master_seed"] = master_seed;
    j["output_dir"] = output_dir;
    j["format"] = format;
    j["threads"] = threads;
    return j;
}

void ExperimentConfig::validate() const {
    const auto &names = experiment_names();
    require(std::find(names.begin(), names.end(), experiment) != names.end(), "experiment",
            "unknown experiment '" + experiment + "'");

    int max_n = kMaxQubits;
    if (experiment == "fidelity") max_n = kMaxDfeQubits;
    if (experiment == "otoc") max_n = kMaxOtocExactQubits;
    if (experiment == "haar-oracle") max_n = kMaxHaarOracleQubits;
    require(!n_list.empty(), "n_list", "must not be empty");
    for (int n : n_list) {
        require(n >= 2 && n <= max_n, "n_list",
                "n = " + std::to_string(n) + " outside [2, " + std::to_string(max_n) + "]");
    }
    if (experiment != "haar-oracle") {
        require(!L_list.empty(), "L_list", "must not be empty");
        for (int l : L_list) require(l >= 0, "L_list", "layer counts must be >= 0");
    }
    require(s >= 1, "s", "must be >= 1");
    require(shots >= 1, "shots", "must be >= 1");
    require(r >= 1, "r", "must be >= 1");
    require(nu >= 1, "nu", "must be >= 1");
    if (experiment == "otoc") {
        for (int n : n_list) {
            require(nu <= (std::uint64_t{1} << n), "nu",
                    "nu = " + std::to_string(nu) + " exceeds 2^" + std::to_string(n));
        }
    }
    require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon", "must lie in [0, 1]");
    require(readout_flip >= 0.0 && readout_flip <= 0.5, "readout_flip", "must lie in [0, 0.5]");
    if (readout) {
        for (int n : n_list) {
            require(readout->num_qubits() == n, "readout",
                    "flip list covers " + std::to_string(readout->num_qubits()) +
                        " qubits but n_list contains " + std::to_string(n));
        }
    }
    require(bins >= 1, "bins", "must be >= 1");
    require(max_scaled > 0.0, "max_scaled", "must be > 0");
    require(count >= 1, "count", "must be >= 1");
    require(format == "csv" || format == "json", "format", "expected csv or json");
    require(threads >= 1, "threads", "must be >= 1");
}

ReadoutModel ExperimentConfig::readout_for(int n) const {
    if (readout) return *readout;
    return ReadoutModel::uniform(n, readout_flip);
}

const Table &ExperimentOutput::table(const std::string &name) const & {
    for (const auto &[key, t] : tables) {
        if (key == name) return t;
    }
    throw ArgumentError("no output table named '" + name + "'");
}

Table ExperimentOutput::table(const std::string &name) && {
    for (auto &[key, t] : tables) {
        if (key == name) return std::move(t);
    }
    throw ArgumentError("no output table named '" + name + "'");
}

ExperimentOutput run_fidelity_sweep(const ExperimentConfig &config) {
    struct CircuitRow {
        Seed seed;
        double f_exact, f_dfe, f_dfe_err, f_in, l1, shannon, mean_index;
    };
    const auto points = sweep_points(config);
    std::vector<std::vector<CircuitRow>> results(points.size());

    parallel_for(points.size(), config.threads, [&](std::size_t p) {
        const auto [n, layers] = points[p];
        for (int i = 0; i < config.s; ++i) {
            const Seed seed = circuit_seed(config.master_seed, n, layers, i);
            const auto spec = random_spec(n, layers, config.ensemble, seed);
            const auto psi = ideal_state(spec);
            const auto p_ideal = probabilities(psi);
            const auto p_meas = depolarize_dist(p_ideal, config.epsilon);
            const auto dfe = dfe_estimate(psi, NoisyState{psi, config.epsilon}, config.r,
                                          config.dfe_shots, derive_seed(seed, {kDfeStream}));
            const auto summary = dist_summary(p_meas);
            results[p].push_back({seed, state_fidelity_exact(psi, psi, config.epsilon),
                                  dfe.value, dfe.std_error,
                                  safe_information_fidelity(p_meas, p_ideal),
                                  l1_error(p_meas, p_ideal), summary.shannon,
                                  summary.mean_index});
        }
    });

    Table agg({"n", "L", "s", "epsilon", "F_model", "F_exact_mean", "F_exact_sem", "F_dfe_mean",
               "F_dfe_sem", "F_in_mean", "F_in_sem", "seeds"});
    Table circuits({"n", "L", "index", "seed", "F_exact", "F_dfe", "F_dfe_err", "F_in", "l1",
                    "shannon", "mean_index"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [n, layers] = points[p];
        std::vector<double> fe, fd, fi;
        std::string seeds;
        for (std::size_t i = 0; i < results[p].size(); ++i) {
            const auto &r = results[p][i];
            circuits.add_row({std::int64_t(n), std::int64_t(layers), as_int(i), seed_text(r.seed),
                              r.f_exact, r.f_dfe, r.f_dfe_err, r.f_in, r.l1, r.shannon,
                              r.mean_index});
            fe.push_back(r.f_exact);
            fd.push_back(r.f_dfe);
            fi.push_back(r.f_in);
            seeds += (i ? ";" : "") + seed_text(r.seed);
        }
        const auto se = sample_stats(fe), sd = sample_stats(fd), si = sample_stats(fi);
        agg.add_row({std::int64_t(n), std::int64_t(layers), std::int64_t(config.s), config.epsilon,
                     depolarized_state_fidelity(config.epsilon, n), se.mean, se.sem, sd.mean,
                     sd.sem, si.mean, si.sem, seeds});
    }
    ExperimentOutput out;
    out.tables.emplace_back("fidelity", std::move(agg));
    out.tables.emplace_back("fidelity_circuits", std::move(circuits));
    return out;
}

ExperimentOutput run_sampling_experiment(const ExperimentConfig &config) {
    struct CircuitResult {
        Seed seed;
        ProbDist p_ideal, p_noisy, p_meas;
    };
    const auto points = sweep_points(config);
    std::vector<std::vector<CircuitResult>> results(points.size());

    parallel_for(points.size(), config.threads, [&](std::size_t p) {
        const auto [n, layers] = points[p];
        const auto readout = config.readout_for(n);
        for (int i = 0; i < config.s; ++i) {
            const Seed seed = circuit_seed(config.master_seed, n, layers, i);
            const auto spec = random_spec(n, layers, config.ensemble, seed);
            auto p_ideal = probabilities(ideal_state(spec));
            auto p_noisy = apply_readout_error(depolarize_dist(p_ideal, config.epsilon), readout);
            auto p_meas = sample_counts(p_noisy, config.shots, derive_seed(seed, {kShotStream}));
            results[p].push_back({seed, std::move(p_ideal), std::move(p_noisy), std::move(p_meas)});
        }
    });

    Table summary({"n", "L", "index", "seed", "ave", "std", "shannon", "mean_index", "ideal_std",
                   "ideal_shannon", "ideal_mean_index", "l1", "one_minus_F", "one_minus_F_in"});
    Table dists({"n", "L", "index", "seed", "x", "p_ideal", "p_noisy", "p_meas"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [n, layers] = points[p];
        for (std::size_t i = 0; i < results[p].size(); ++i) {
            const auto &r = results[p][i];
            const auto meas = dist_summary(r.p_meas);
            const auto ideal = dist_summary(r.p_ideal);
            summary.add_row({std::int64_t(n), std::int64_t(layers), as_int(i), seed_text(r.seed),
                             meas.ave, meas.std, meas.shannon, meas.mean_index, ideal.std,
                             ideal.shannon, ideal.mean_index, l1_error(r.p_meas, r.p_ideal),
                             1.0 - depolarized_state_fidelity(config.epsilon, n),
                             1.0 - safe_information_fidelity(r.p_meas, r.p_ideal)});
            for (std::size_t x = 0; x < r.p_ideal.size(); ++x) {
                dists.add_row({std::int64_t(n), std::int64_t(layers), as_int(i),
                               seed_text(r.seed), as_int(x), r.p_ideal[x], r.p_noisy[x],
                               r.p_meas[x]});
            }
        }
    }
    ExperimentOutput out;
    out.tables.emplace_back("sampling", std::move(summary));
    out.tables.emplace_back("sampling_dists", std::move(dists));
    return out;
}

ExperimentOutput run_entanglement_sweep(const ExperimentConfig &config) {
    struct CircuitRow {
        Seed seed;
        EntanglementReport report;
    };
    const auto points = sweep_points(config);
    std::vector<std::vector<CircuitRow>> results(points.size());

    parallel_for(points.size(), config.threads, [&](std::size_t p) {
        const auto [n, layers] = points[p];
        for (int i = 0; i < config.s; ++i) {
            const Seed seed = circuit_seed(config.master_seed, n, layers, i);
            const auto psi = ideal_state(random_spec(n, layers, config.ensemble, seed));
            auto report = config.tomography
                              ? tomographic_entanglement_report(
                                    psi, config.shots, derive_seed(seed, {kTomographyStream}))
                              : entanglement_report(psi);
            results[p].push_back({seed, std::move(report)});
        }
    });

    const std::string mode = config.tomography ? "tomographic" : "exact";
    Table agg({"n", "L", "s", "mode", "Q_mean", "Q_sem", "S2_mean", "S2_sem", "Se_mean", "Se_sem",
               "haar_Q", "page_Se"});
    Table circuits({"n", "L", "index", "seed", "gammas", "Q", "S2", "Se", "haar_Q", "page_Se"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [n, layers] = points[p];
        const double hq = haar_q(n);
        const double page = page_entropy(2, std::uint64_t{1} << (n - 1));
        std::vector<double> q, s2, se;
        for (std::size_t i = 0; i < results[p].size(); ++i) {
            const auto &r = results[p][i];
            circuits.add_row({std::int64_t(n), std::int64_t(layers), as_int(i), seed_text(r.seed),
                              join_doubles(r.report.gammas), r.report.Q, r.report.S2, r.report.Se,
                              hq, page});
            q.push_back(r.report.Q);
            s2.push_back(r.report.S2);
            se.push_back(r.report.Se);
        }
        const auto sq = sample_stats(q), ss2 = sample_stats(s2), sse = sample_stats(se);
        agg.add_row({std::int64_t(n), std::int64_t(layers), std::int64_t(config.s), mode, sq.mean,
                     sq.sem, ss2.mean, ss2.sem, sse.mean, sse.sem, hq, page});
    }
    ExperimentOutput out;
    out.tables.emplace_back("entanglement", std::move(agg));
    out.tables.emplace_back("entanglement_circuits", std::move(circuits));
    return out;
}

ExperimentOutput run_otoc_sweep(const ExperimentConfig &config) {
    struct CircuitRow {
        Seed seed;
        OtocRecord record;
    };
    const auto points = sweep_points(config);
    std::vector<std::vector<CircuitRow>> results(points.size());

    parallel_for(points.size(), config.threads, [&](std::size_t p) {
        const auto [n, layers] = points[p];
        for (int i = 0; i < config.s; ++i) {
            const Seed seed = circuit_seed(config.master_seed, n, layers, i);
            const auto spec = random_spec(n, layers, config.ensemble, seed);
            results[p].push_back({seed, otoc_record(spec, config.nu, derive_seed(seed, {kOtocStream}),
                                                    config.otoc_mode, config.epsilon)});
        }
    });

    const std::string ensemble = to_string(config.ensemble);
    ExperimentOutput out;
    Table rows({"n", "L", "ensemble", "index", "seed", "F_exact", "abs_F_exact", "C",
                "F_stochastic", "nu", "wvvw", "ratio", "max_im_G"});
    Table agg({"n", "L", "ensemble", "s", "abs_F_mean", "abs_F_sem", "F_stochastic_mean",
               "wvvw_mean", "ratio_mean"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [n, layers] = points[p];
        std::vector<double> abs_f, stoch, wvvw, ratio;
        for (std::size_t i = 0; i < results[p].size(); ++i) {
            const auto &r = results[p][i];
            const auto &rec = r.record;
            rows.add_row({std::int64_t(n), std::int64_t(layers), ensemble, as_int(i),
                          seed_text(r.seed), rec.F_exact, std::abs(rec.F_exact), rec.C,
                          rec.F_stochastic, as_int(rec.nu), rec.wvvw, rec.ratio, rec.max_im_G});
            if (rec.imaginary_warning()) {
                out.warnings.push_back("max |Im G(x)| = " + format_double(rec.max_im_G) +
                                       " at n=" + std::to_string(n) + " L=" +
                                       std::to_string(layers) + " index=" + std::to_string(i));
            }
            abs_f.push_back(std::abs(rec.F_exact));
            stoch.push_back(rec.F_stochastic);
            wvvw.push_back(rec.wvvw);
            ratio.push_back(rec.ratio);
        }
        const auto sf = sample_stats(abs_f);
        agg.add_row({std::int64_t(n), std::int64_t(layers), ensemble, std::int64_t(config.s),
                     sf.mean, sf.sem, sample_stats(stoch).mean, sample_stats(wvvw).mean,
                     sample_stats(ratio).mean});
    }
    out.tables.emplace_back("otoc", std::move(rows));
    out.tables.emplace_back("otoc_summary", std::move(agg));
    return out;
}

ExperimentOutput run_pt_histogram(const ExperimentConfig &config) {
    struct PointResult {
        PtHistogram hist;
        std::vector<double> entropies;
    };
    const auto points = sweep_points(config);
    std::vector<PointResult> results(points.size());

    parallel_for(points.size(), config.threads, [&](std::size_t p) {
        const auto [n, layers] = points[p];
        std::vector<ProbDist> dists;
        for (int i = 0; i < config.s; ++i) {
            const Seed seed = circuit_seed(config.master_seed, n, layers, i);
            dists.push_back(probabilities(ideal_state(random_spec(n, layers, config.ensemble, seed))));
            results[p].entropies.push_back(shannon_entropy(dists.back()));
        }
        results[p].hist = pt_histogram(dists, config.bins, config.max_scaled);
    });

    Table hist({"n", "L", "bin", "Np_lo", "Np_hi", "p_lo", "p_hi", "count", "observed",
                "reference"});
    Table entropy({"n", "L", "s", "shannon_mean", "shannon_sem", "pt_entropy", "max_entropy",
                   "inverse_n", "overflow_fraction"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [n, layers] = points[p];
        const auto &h = results[p].hist;
        for (std::size_t b = 0; b < h.counts.size(); ++b) {
            hist.add_row({std::int64_t(n), std::int64_t(layers), as_int(b), h.edges[b],
                          h.edges[b + 1], h.edges[b] * h.inverse_n, h.edges[b + 1] * h.inverse_n,
                          as_int(h.counts[b]), h.observed[b], h.reference[b]});
        }
        const auto st = sample_stats(results[p].entropies);
        entropy.add_row({std::int64_t(n), std::int64_t(layers), std::int64_t(config.s), st.mean,
                         st.sem, pt_entropy(n), double(n), h.inverse_n,
                         static_cast<double>(h.overflow) / static_cast<double>(h.total)});
    }
    ExperimentOutput out;
    out.tables.emplace_back("pt_hist", std::move(hist));
    out.tables.emplace_back("pt_entropy", std::move(entropy));
    return out;
}

ExperimentOutput run_haar_oracle(const ExperimentConfig &config) {
    const auto &ns = config.n_list;
    std::vector<HaarReferenceSample> results(ns.size());
    parallel_for(ns.size(), config.threads, [&](std::size_t k) {
        results[k] = haar_reference_sample(ns[k], config.count,
                                           derive_seed(config.master_seed, {std::uint64_t(ns[k])}));
    });

    Table t({"n", "count", "seed", "Q_mean", "Q_std", "Q_sem", "haar_Q", "S2_mean", "S2_sem",
             "Se_mean", "Se_std", "Se_sem", "page_Se"});
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const int n = ns[k];
        const auto q = results[k].q_stats(), s2 = results[k].s2_stats(), se = results[k].se_stats();
        t.add_row({std::int64_t(n), std::int64_t(config.count),
                   seed_text(derive_seed(config.master_seed, {std::uint64_t(n)})), q.mean,
                   q.stddev, q.sem, haar_q(n), s2.mean, s2.sem, se.mean, se.stddev, se.sem,
                   page_entropy(2, std::uint64_t{1} << (n - 1))});
    }
    ExperimentOutput out;
    out.tables.emplace_back("haar_oracle", std::move(t));
    return out;
}

ExperimentOutput run_experiment(const ExperimentConfig &config) {
    config.validate();
    const auto &e = config.experiment;
    if (e == "fidelity") return run_fidelity_sweep(config);
    if (e == "sampling") return run_sampling_experiment(config);
    if (e == "entanglement") return run_entanglement_sweep(config);
    if (e == "otoc") return run_otoc_sweep(config);
    if (e == "pt-hist") return run_pt_histogram(config);
    return run_haar_oracle(config);
}

std::vector<std::string> write_output(const ExperimentOutput &out, const ExperimentConfig &config) {
    namespace fs = std::filesystem;
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    std::vector<std::string> written;
    auto write = [&](const fs::path &path, const std::string &text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
        f << text;
        written.push_back(path.string());
    };
    for (const auto &[name, table] : out.tables) {
        if (config.format == "json") {
            write(dir / (name + ".json"), table.to_json().dump(2) + "\n");
        } else {
            write(dir / (name + ".csv"), table.to_csv());
        }
    }
    write(dir / (config.experiment + ".config.json"), config.to_json().dump(2) + "\n");
    return written;
}

} // namespace jsampler
