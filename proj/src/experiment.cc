// Copyright 2026 The spinctl Authors
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

#include "spinctl/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "spinctl/csv.h"

namespace spinctl {

namespace {

namespace fs = std::filesystem;

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

MeanStd mean_std(const std::vector<double> &v) {
    MeanStd m;
    if (v.empty()) {
        return m;
    }
    for (double x : v) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) {
        var += (x - m.mean) * (x - m.mean);
    }
    m.stddev = std::sqrt(var / static_cast<double>(v.size()));
    return m;
}

fs::path prepare_out(const ExperimentConfig &config) {
    const fs::path out(config.out);
    fs::create_directories(out);
    return out;
}

void write_table(RunSummary &summary, const CsvTable &table, const fs::path &path) {
    table.write(path);
    summary.files.push_back(path);
}

void write_traces(RunSummary &summary, const SchemeSummary &s, const fs::path &out) {
    const std::string name(scheme_name(s.scheme));
    for (const RealizationResult &r : s.runs) {
        if (!r.ok) {
            continue;
        }
        CsvTable trace({"eval_index", "J"});
        for (std::size_t q = 0; q < r.trace.evals.size(); ++q) {
            trace.row().cell(q).cell(r.trace.evals[q]);
        }
        write_table(summary, trace, out / ("trace_" + name + "_" + std::to_string(r.index) + ".csv"));
    }
    if (s.completed > 0) {
        CsvTable mean({"eval_index", "mean_J", "std_J"});
        for (std::size_t q = 0; q < s.curve.mean.size(); ++q) {
            mean.row().cell(q).cell(s.curve.mean[q]).cell(s.curve.stddev[q]);
        }
        write_table(summary, mean, out / ("summary_" + name + ".csv"));
    }
}

void write_runs(RunSummary &summary, const SchemeSummary &s, const fs::path &out) {
    CsvTable runs({"realization", "seed", "status", "final_J", "final_F", "n_evals", "n_iters", "stop_reason"});
    for (const RealizationResult &r : s.runs) {
        runs.row().cell(r.index).cell(static_cast<std::size_t>(r.seed));
        if (r.ok) {
            runs.cell("ok")
                .cell(r.trace.final_value)
                .cell(r.trace.final_fidelity)
                .cell(r.trace.n_evals)
                .cell(r.trace.n_iters)
                .cell(stop_reason_name(r.trace.stop_reason));
        } else {
            runs.cell("failed").cell("").cell("").cell("").cell("").cell("");
        }
    }
    write_table(summary, runs, out / ("runs_" + std::string(scheme_name(s.scheme)) + ".csv"));
}

RealizationResult run_one(const ExperimentConfig &config, SchemeKind kind, bool noisy, std::size_t r) {
    RealizationResult result;
    result.scheme = kind;
    result.index = r;
    result.seed = config.seed + r;
    const auto start = std::chrono::steady_clock::now();
    try {
        const ObjectiveSpec spec = experiment_objective(config, kind, noisy);
        const ParamVector x0 = initial_params(spec.scheme, result.seed);
        result.trace = minimize(spec, x0.values, bounds(spec.scheme), config.stop_rule(), config.optimizer_options());
        result.ok = true;
    } catch (const std::exception &e) {
        result.error = e.what();
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

const SchemeSummary *RunSummary::find(SchemeKind kind) const {
    for (const SchemeSummary &s : schemes) {
        if (s.scheme == kind) {
            return &s;
        }
    }
    return nullptr;
}

ObjectiveSpec experiment_objective(const ExperimentConfig &config, SchemeKind kind, bool noisy) {
    ObjectiveSpec spec = transfer_spec(config.chain(), config.control_scheme(kind), config.total_time);
    if (noisy) {
        spec.noise = NoiseSpec{config.noise_p};
    }
    spec.lambda_reg = config.lambda_reg;
    return spec;
}

std::vector<RealizationResult> run_realizations(const ExperimentConfig &config, SchemeKind kind, bool noisy) {
    std::vector<RealizationResult> results(config.realizations);
    const std::size_t workers = std::min(config.workers, config.realizations);
    if (workers <= 1) {
        for (std::size_t r = 0; r < config.realizations; ++r) {
            results[r] = run_one(config, kind, noisy, r);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t r = next++; r < config.realizations; r = next++) {
                results[r] = run_one(config, kind, noisy, r);
            }
        });
    }
    for (std::thread &t : pool) {
        t.join();
    }
    return results;
}

SchemeSummary summarize(SchemeKind kind, std::vector<RealizationResult> runs, double threshold) {
    SchemeSummary s;
    s.scheme = kind;
    s.runs = std::move(runs);
    std::vector<std::vector<double>> series;
    std::vector<double> final_j;
    std::vector<double> final_f;
    for (const RealizationResult &r : s.runs) {
        if (!r.ok) {
            continue;
        }
        series.push_back(r.trace.evals);
        final_j.push_back(r.trace.final_value);
        final_f.push_back(r.trace.final_fidelity);
    }
    s.completed = series.size();
    if (s.completed == 0) {
        return s;
    }
    s.curve = mean_curve(series);
    s.time_to_threshold = time_to_threshold(std::span<const std::vector<double>>(series), threshold);
    const MeanStd j = mean_std(final_j);
    const MeanStd f = mean_std(final_f);
    s.mean_final_j = j.mean;
    s.std_final_j = j.stddev;
    s.mean_final_f = f.mean;
    s.std_final_f = f.stddev;
    return s;
}

std::vector<StateVector> layer_states(const Circuit &circuit, const StateVector &initial) {
    circuit.validate();
    std::vector<StateVector> states;
    states.reserve(circuit.layers + 1);
    states.push_back(initial);
    StateVector psi = initial;
    auto next = circuit.gates.begin();
    for (std::size_t layer = 1; layer <= circuit.layers; ++layer) {
        for (; next != circuit.gates.end() && next->layer == layer; ++next) {
            psi.apply(*next);
        }
        states.push_back(psi);
    }
    return states;
}

RunSummary run_convergence(const ExperimentConfig &config) {
    config.validate();
    RunSummary summary;
    summary.experiment = ExperimentKind::Convergence;
    const fs::path out = prepare_out(config);
    CsvTable overview({"scheme", "completed", "mean_final_J", "std_final_J", "time_to_threshold"});
    for (SchemeKind kind : config.schemes()) {
        SchemeSummary s = summarize(kind, run_realizations(config, kind, false), config.threshold);
        write_traces(summary, s, out);
        write_runs(summary, s, out);
        overview.row()
            .cell(scheme_name(kind))
            .cell(s.completed)
            .cell(s.mean_final_j)
            .cell(s.std_final_j)
            .cell(s.time_to_threshold ? std::to_string(*s.time_to_threshold) : std::string());
        summary.schemes.push_back(std::move(s));
    }
    write_table(summary, overview, out / "convergence_summary.csv");
    return summary;
}

RunSummary run_dynamics(const ExperimentConfig &config) {
    config.validate();
    RunSummary summary;
    summary.experiment = ExperimentKind::Dynamics;
    const fs::path out = prepare_out(config);
    const std::vector<SchemeKind> kinds = config.schemes();
    if (kinds.size() != 1) {
        throw ConfigError("dynamics runs a single scheme; set scheme = local or scheme = global");
    }
    const SchemeKind kind = kinds.front();
    SchemeSummary s = summarize(kind, run_realizations(config, kind, false), config.threshold);
    write_runs(summary, s, out);
    if (s.completed == 0) {
        throw std::runtime_error("every realization failed");
    }

    const ObjectiveSpec spec = experiment_objective(config, kind, false);
    const std::size_t n = config.n_sites;
    const std::size_t steps = config.layers + 1;
    std::vector<std::vector<double>> f_tar(steps);
    std::vector<std::vector<double>> f_in(steps);
    std::vector<std::vector<std::vector<double>>> pops(steps, std::vector<std::vector<double>>(n));
    const RealizationResult *best = nullptr;
    double best_f = -1.0;
    for (const RealizationResult &r : s.runs) {
        if (!r.ok) {
            continue;
        }
        const Circuit circuit = compile_params(r.trace.final_params, spec);
        const std::vector<StateVector> states = layer_states(circuit, spec.psi_in);
        for (std::size_t l = 0; l < steps; ++l) {
            f_tar[l].push_back(fidelity_pure(spec.psi_target, states[l]));
            f_in[l].push_back(fidelity_pure(spec.psi_in, states[l]));
            const std::vector<double> p = site_populations(states[l]);
            for (std::size_t j = 0; j < n; ++j) {
                pops[l][j].push_back(p[j]);
            }
        }
        if (f_tar.back().back() > best_f) {
            best_f = f_tar.back().back();
            best = &r;
        }
    }

    std::vector<std::string> header = {"t", "mean_F_tar", "std_F_tar", "mean_F_in", "std_F_in"};
    for (std::size_t j = 0; j < n; ++j) {
        header.push_back("mean_pop_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < n; ++j) {
        header.push_back("std_pop_" + std::to_string(j));
    }
    CsvTable dynamics(header);
    const double dt = config.total_time / static_cast<double>(config.layers);
    for (std::size_t l = 0; l < steps; ++l) {
        const MeanStd ft = mean_std(f_tar[l]);
        const MeanStd fi = mean_std(f_in[l]);
        dynamics.row().cell(static_cast<double>(l) * dt).cell(ft.mean).cell(ft.stddev).cell(fi.mean).cell(fi.stddev);
        std::vector<MeanStd> p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p[j] = mean_std(pops[l][j]);
            dynamics.cell(p[j].mean);
        }
        for (std::size_t j = 0; j < n; ++j) {
            dynamics.cell(p[j].stddev);
        }
    }
    write_table(summary, dynamics, out / "dynamics.csv");

    const SliceControls u = unpack(best->trace.final_params, spec.scheme);
    CsvTable controls({"layer", "t_start", "site", "u"});
    for (std::size_t l = 0; l < u.layers(); ++l) {
        for (std::size_t j = 0; j < n; ++j) {
            controls.row().cell(l).cell(static_cast<double>(l) * dt).cell(j).cell(u(l, j));
        }
    }
    write_table(summary, controls, out / "controls_best.csv");
    summary.schemes.push_back(std::move(s));
    return summary;
}

RunSummary run_noise_compare(const ExperimentConfig &config) {
    config.validate();
    RunSummary summary;
    summary.experiment = ExperimentKind::NoiseCompare;
    const fs::path out = prepare_out(config);
    for (SchemeKind kind : {SchemeKind::Global, SchemeKind::Local}) {
        SchemeSummary s = summarize(kind, run_realizations(config, kind, true), config.threshold);
        write_traces(summary, s, out);
        write_runs(summary, s, out);
        summary.schemes.push_back(std::move(s));
    }
    const SchemeSummary &global = *summary.find(SchemeKind::Global);
    const SchemeSummary &local = *summary.find(SchemeKind::Local);
    if (global.completed > 0 && local.completed > 0 && local.mean_final_f > 0.0) {
        summary.robustness_ratio = global.mean_final_f / local.mean_final_f;
    }
    summary.flagged = local.completed > 0 && local.mean_final_f > 0.75;

    CsvTable table({"scheme", "mean_final_F", "std_final_F", "robustness_ratio"});
    const std::string ratio = summary.robustness_ratio ? format_real(*summary.robustness_ratio) : std::string();
    for (const SchemeSummary &s : summary.schemes) {
        table.row().cell(scheme_name(s.scheme)).cell(s.mean_final_f).cell(s.std_final_f).cell(std::string_view(ratio));
    }
    write_table(summary, table, out / "noise_summary.csv");
    return summary;
}

RunSummary run_experiment(const ExperimentConfig &config) {
    switch (config.experiment) {
        case ExperimentKind::Convergence:
            return run_convergence(config);
        case ExperimentKind::Dynamics:
            return run_dynamics(config);
        case ExperimentKind::NoiseCompare:
            return run_noise_compare(config);
    }
    throw ConfigError("unknown experiment");
}

Circuit initial_circuit(const ExperimentConfig &config, SchemeKind kind) {
    config.validate();
    const ObjectiveSpec spec = experiment_objective(config, kind, false);
    return compile_params(initial_params(spec.scheme, config.seed).values, spec);
}

}  // namespace spinctl
