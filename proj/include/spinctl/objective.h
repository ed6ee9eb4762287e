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

#include <optional>
#include <span>

#include "spinctl/control_params.h"
#include "spinctl/density_matrix.h"
#include "spinctl/spin_chain.h"
#include "spinctl/state_vector.h"

namespace spinctl {

/// Everything needed to turn a parameter vector into a terminal infidelity.
struct ObjectiveSpec {
    ChainSpec chain;
    ControlScheme scheme = LocalScheme{};
    double total_time = 2.0;
    StateVector psi_in;
    StateVector psi_target;
    std::optional<NoiseSpec> noise;
    /// Weight of the control-effort term lambda * dt * sum_{l,j} u_j(t_l)^2.
    double lambda_reg = 0.0;

    void validate() const;
};

/// Default single-excitation transfer |10..0> -> |0..01> on `chain`.
ObjectiveSpec transfer_spec(const ChainSpec &chain, const ControlScheme &scheme, double total_time);

Circuit compile_params(std::span<const double> params, const ObjectiveSpec &spec);

/// Terminal fidelity F with the target; density backend when spec.noise is set.
double terminal_fidelity(std::span<const double> params, const ObjectiveSpec &spec);

double control_effort(const SliceControls &controls, double dt);

/// J = 1 - F + lambda_reg * dt * sum u^2.
double objective(std::span<const double> params, const ObjectiveSpec &spec);

}  // namespace spinctl
