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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinctl/control_params.h"
#include "spinctl/optimizer.h"

namespace spinctl {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Convergence, Dynamics, NoiseCompare };

std::string_view experiment_name(ExperimentKind kind);

/// Declarative experiment description. Read from flat `key = value` text; every key
/// can also be overridden individually (the CLI exposes each as `--key value`).
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Convergence;
    std::size_t n_sites = 3;
    double total_time = 2.0;
    std::size_t layers = 8;
    double jx = 1.0;
    double jy = 1.0;
    double jz = 0.2;
    /// "global", "local" or "both"; empty picks the experiment's default.
    std::string scheme;
    std::size_t realizations = 10;
    std::uint64_t seed = 1234;
    double tol = 1e-4;
    std::size_t max_iters = 100;
    double fd_step = 1e-6;
    double c_bound = 3.0;
    double c_init_low = -0.5;
    double c_init_high = 0.5;
    std::optional<double> di;
    std::optional<double> df;
    double local_bound = 2 * std::numbers::pi;
    double local_init_low = -0.5;
    double local_init_high = 0.5;
    double noise_p = 1e-3;
    double lambda_reg = 0.0;
    double threshold = 1e-2;
    std::size_t workers = 1;
    std::string out = "out";

    /// Throws ConfigError on an unknown key or a value that does not parse.
    void set(std::string_view key, std::string_view value);
    /// Throws ConfigError if any invariant fails.
    void validate() const;

    std::vector<SchemeKind> schemes() const;
    ChainSpec chain() const;
    ControlScheme control_scheme(SchemeKind kind) const;
    StopRule stop_rule() const;
    OptimizerOptions optimizer_options() const;

    static const std::vector<std::string_view> &keys();
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are ignored.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

}  // namespace spinctl
