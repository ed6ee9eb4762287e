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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinctl/control_params.h"
#include "spinctl/objective.h"

namespace spinctl {

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Stop when an accepted step changes J by less than `tol` or lands below `tol`,
/// or after `max_iters` accepted steps.
struct StopRule {
    double tol = 1e-4;
    std::size_t max_iters = 100;

    void validate() const;
};

struct OptimizerOptions {
    /// Finite-difference step is fd_step * max(1, |x_i|).
    double fd_step = 1e-6;
    double armijo = 1e-4;
    std::size_t max_backtracks = 30;
    /// Cap on the infinity norm of the very first trial step.
    double first_step = 1.0;
};

enum class StopReason { Tolerance, SmallGradient, MaxIterations, LineSearchFailed };

std::string_view stop_reason_name(StopReason reason);

struct OptTrace {
    /// J at every objective call, in call order; index = evaluation index q.
    std::vector<double> evals;
    /// J at the initial point and after each accepted step.
    std::vector<double> iterates;
    std::vector<double> final_params;
    double final_value = 0.0;
    double final_fidelity = 0.0;
    std::size_t n_evals = 0;
    std::size_t n_iters = 0;
    bool converged = false;
    StopReason stop_reason = StopReason::MaxIterations;
};

/// Central differences, falling back to a one-sided difference on coordinates
/// where the central stencil would leave the box. `evals` counts objective calls.
std::vector<double> fd_gradient(const ObjectiveFn &f, std::span<const double> x, double h,
                                const Bounds *box = nullptr, std::size_t *evals = nullptr);

/// Box-constrained SQP: damped BFGS model, active-set box QP for the step, Armijo
/// backtracking, finite-difference gradients. Every objective call is appended to the trace.
OptTrace minimize(const ObjectiveFn &f, std::span<const double> x0, const Bounds &box, const StopRule &stop,
                  const OptimizerOptions &options = {});

/// Same loop on the spin-chain objective; also fills final_fidelity.
OptTrace minimize(const ObjectiveSpec &spec, std::span<const double> x0, const Bounds &box, const StopRule &stop,
                  const OptimizerOptions &options = {});

struct MeanCurve {
    std::vector<double> mean;
    std::vector<double> stddev;
};

/// Mean and population standard deviation per evaluation index, shorter series padded
/// by carrying their last value forward.
MeanCurve mean_curve(std::span<const std::vector<double>> series);

/// Smallest q with mean_q J < eps over the padded traces.
std::optional<std::size_t> time_to_threshold(std::span<const OptTrace> traces, double eps);
std::optional<std::size_t> time_to_threshold(std::span<const std::vector<double>> series, double eps);

struct EvalCostReport {
    std::size_t n_evals = 0;
    std::size_t n_iters = 0;
    std::size_t bound = 0;
    double evals_per_iter = 0.0;
    bool within_bound = false;
};

/// Checks n_evals <= 1 + n_iters * (2d + c): one initial call plus, per iteration, a
/// central-difference gradient and at most c line-search trials on average.
EvalCostReport eval_cost_check(const OptTrace &trace, std::size_t d, std::size_t c = 4);

}  // namespace spinctl
