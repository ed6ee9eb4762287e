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

#include "spinctl/objective.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinctl {

namespace {

std::size_t scheme_sites(const ControlScheme &scheme) {
    return std::visit([](const auto &s) { return s.n_sites; }, scheme);
}

void check_finite(std::span<const double> params) {
    for (double v : params) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("parameter vector contains a non-finite value");
        }
    }
}

}  // namespace

void ObjectiveSpec::validate() const {
    chain.validate();
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
        throw std::invalid_argument("total time must be positive");
    }
    if (scheme_sites(scheme) != chain.n_sites) {
        throw std::invalid_argument("control scheme and chain disagree on the number of sites");
    }
    if (psi_in.n_qubits() != chain.n_sites || psi_target.n_qubits() != chain.n_sites) {
        throw std::invalid_argument("initial and target states must have one qubit per site");
    }
    if (std::abs(psi_in.norm_squared() - 1.0) > 1e-9 || std::abs(psi_target.norm_squared() - 1.0) > 1e-9) {
        throw std::invalid_argument("initial and target states must be normalized");
    }
    if (noise) {
        noise->validate();
    }
    if (!(lambda_reg >= 0.0) || !std::isfinite(lambda_reg)) {
        throw std::invalid_argument("lambda_reg must be a non-negative number");
    }
}

ObjectiveSpec transfer_spec(const ChainSpec &chain, const ControlScheme &scheme, double total_time) {
    ObjectiveSpec spec;
    spec.chain = chain;
    spec.scheme = scheme;
    spec.total_time = total_time;
    std::string in(chain.n_sites, '0');
    std::string out(chain.n_sites, '0');
    in.front() = '1';
    out.back() = '1';
    spec.psi_in = basis_state(chain.n_sites, in);
    spec.psi_target = basis_state(chain.n_sites, out);
    return spec;
}

Circuit compile_params(std::span<const double> params, const ObjectiveSpec &spec) {
    check_finite(params);
    return compile(spec.chain, unpack(params, spec.scheme), spec.total_time);
}

double terminal_fidelity(std::span<const double> params, const ObjectiveSpec &spec) {
    const Circuit circuit = compile_params(params, spec);
    if (spec.noise) {
        const DensityMatrix rho = run_noisy_circuit(from_pure(spec.psi_in), circuit, *spec.noise);
        return fidelity_against_pure(rho, spec.psi_target);
    }
    return fidelity_pure(spec.psi_target, run_circuit(spec.psi_in, circuit));
}

double control_effort(const SliceControls &controls, double dt) {
    double total = 0.0;
    for (double u : controls.values()) {
        total += u * u;
    }
    return dt * total;
}

double objective(std::span<const double> params, const ObjectiveSpec &spec) {
    double j = 1.0 - terminal_fidelity(params, spec);
    if (spec.lambda_reg > 0.0) {
        const SliceControls u = unpack(params, spec.scheme);
        j += spec.lambda_reg * control_effort(u, spec.total_time / static_cast<double>(u.layers()));
    }
    return j;
}

}  // namespace spinctl
