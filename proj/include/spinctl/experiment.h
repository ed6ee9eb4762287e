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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spinctl/config.h"
#include "spinctl/optimizer.h"
#include "spinctl/state_vector.h"

namespace spinctl {

struct RealizationResult {
    SchemeKind scheme = SchemeKind::Local;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    OptTrace trace;
    double wall_seconds = 0.0;
};

struct SchemeSummary {
    SchemeKind scheme = SchemeKind::Local;
    std::vector<RealizationResult> runs;
    std::size_t completed = 0;
    /// Mean and spread per evaluation index over completed runs.
    MeanCurve curve;
    std::optional<std::size_t> time_to_threshold;
    double mean_final_j = 0.0;
    double std_final_j = 0.0;
    double mean_final_f = 0.0;
    double std_final_f = 0.0;
};

struct RunSummary {
    ExperimentKind experiment = ExperimentKind::Convergence;
    std::vector<SchemeSummary> schemes;
    /// Global mean final fidelity over local mean final fidelity (noise-compare only).
    std::optional<double> robustness_ratio;
    /// Set when noisy local control exceeds 0.75 mean fidelity, which needs a closer look.
    bool flagged = false;
    std::vector<std::filesystem::path> files;

    const SchemeSummary *find(SchemeKind kind) const;
};

/// Objective for one scheme of `config`; `noisy` attaches the depolarizing model.
ObjectiveSpec experiment_objective(const ExperimentConfig &config, SchemeKind kind, bool noisy);

/// Runs realizations r = 0..R-1 with seed = base + r, up to config.workers at a time.
/// A failing realization is recorded with ok = false; the others still run.
std::vector<RealizationResult> run_realizations(const ExperimentConfig &config, SchemeKind kind, bool noisy);

SchemeSummary summarize(SchemeKind kind, std::vector<RealizationResult> runs, double threshold);

/// States at every layer boundary t_l = l dt, l = 0..L (noiseless).
std::vector<StateVector> layer_states(const Circuit &circuit, const StateVector &initial);

RunSummary run_convergence(const ExperimentConfig &config);
RunSummary run_dynamics(const ExperimentConfig &config);
RunSummary run_noise_compare(const ExperimentConfig &config);
RunSummary run_experiment(const ExperimentConfig &config);

/// Circuit for the seeded initial parameters of `kind` (realization 0).
Circuit initial_circuit(const ExperimentConfig &config, SchemeKind kind);

}  // namespace spinctl
