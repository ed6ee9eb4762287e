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

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "spinctl/circuit.h"
#include "spinctl/config.h"
#include "spinctl/csv.h"
#include "spinctl/experiment.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

using spinctl::ExperimentConfig;

// Config file first, then every `--key value` given on the command line.
ExperimentConfig resolve_config(const std::string &path, const std::map<std::string, std::string> &overrides) {
    ExperimentConfig config = spinctl::load_config(path);
    for (const auto &[key, value] : overrides) {
        config.set(key, value);
    }
    config.validate();
    return config;
}

void print_summary(const spinctl::RunSummary &summary) {
    for (const spinctl::SchemeSummary &s : summary.schemes) {
        double wall = 0.0;
        for (const auto &r : s.runs) {
            wall += r.wall_seconds;
            if (!r.ok) {
                std::cerr << "realization " << r.index << " (" << spinctl::scheme_name(s.scheme)
                          << ") failed: " << r.error << "\n";
            }
        }
        std::cout << spinctl::scheme_name(s.scheme) << ": completed " << s.completed << "/" << s.runs.size()
                  << ", mean final J " << spinctl::format_real(s.mean_final_j) << " (std "
                  << spinctl::format_real(s.std_final_j) << "), mean final F "
                  << spinctl::format_real(s.mean_final_f) << ", time to threshold ";
        if (s.time_to_threshold) {
            std::cout << *s.time_to_threshold;
        } else {
            std::cout << "not reached";
        }
        std::cout << ", optimizer wall time " << wall << " s\n";
    }
    if (summary.robustness_ratio) {
        std::cout << "robustness ratio (global/local) " << spinctl::format_real(*summary.robustness_ratio) << "\n";
    }
    if (summary.flagged) {
        std::cout << "FLAG: noisy local control exceeds 0.75 mean fidelity; inspect before comparing ratios\n";
    }
    for (const auto &file : summary.files) {
        std::cout << "wrote " << file.string() << "\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational Trotterized control of XXZ spin-chain state transfer"};
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> overrides;

    auto add_overrides = [&](CLI::App *cmd) {
        cmd->add_option("config", config_path, "Config file (key = value lines)")->required();
        for (std::string_view key : ExperimentConfig::keys()) {
            const std::string name(key);
            cmd->add_option_function<std::string>(
                "--" + name, [&overrides, name](const std::string &v) { overrides[name] = v; },
                "Override config key '" + name + "'");
        }
    };

    CLI::App *run = app.add_subcommand("run", "Run the configured experiment and write CSV outputs");
    CLI::App *validate = app.add_subcommand("validate", "Parse and check a config without running it");
    CLI::App *circuit = app.add_subcommand("circuit", "Print the circuit for the seeded initial parameters");
    add_overrides(run);
    add_overrides(validate);
    add_overrides(circuit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    ExperimentConfig config;
    try {
        config = resolve_config(config_path, overrides);
    } catch (const spinctl::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (validate->parsed()) {
            std::cout << "config ok: experiment " << spinctl::experiment_name(config.experiment) << ", N "
                      << config.n_sites << ", L " << config.layers << ", T " << spinctl::format_real(config.total_time)
                      << ", " << config.realizations << " realizations\n";
            return kExitOk;
        }
        if (circuit->parsed()) {
            const auto schemes = config.schemes();
            if (schemes.size() != 1) {
                std::cerr << "config error: circuit needs scheme = global or scheme = local\n";
                return kExitConfig;
            }
            spinctl::write_circuit(std::cout, spinctl::initial_circuit(config, schemes.front()));
            return kExitOk;
        }
        print_summary(spinctl::run_experiment(config));
        return kExitOk;
    } catch (const spinctl::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
