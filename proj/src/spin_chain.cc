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

#include "spinctl/spin_chain.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinctl {

void ChainSpec::validate() const {
    if (n_sites < 2) {
        throw std::invalid_argument("chain needs at least 2 sites");
    }
    if (!std::isfinite(jx) || !std::isfinite(jy) || !std::isfinite(jz)) {
        throw std::invalid_argument("couplings must be finite");
    }
}

SliceControls::SliceControls(std::size_t layers, std::size_t n_sites)
    : layers_(layers), n_sites_(n_sites), u_(layers * n_sites, 0.0) {}

SliceControls::SliceControls(std::size_t layers, std::size_t n_sites, std::vector<double> values)
    : layers_(layers), n_sites_(n_sites), u_(std::move(values)) {
    if (u_.size() != layers * n_sites) {
        throw std::invalid_argument("control table has " + std::to_string(u_.size()) + " entries, expected " +
                                    std::to_string(layers * n_sites));
    }
    for (double v : u_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("control values must be finite");
        }
    }
}

std::vector<Gate> drift_layer(const ChainSpec &chain, double dt, std::size_t layer) {
    std::vector<Gate> gates;
    gates.reserve(3 * (chain.n_sites - 1));
    for (std::size_t k = 0; k + 1 < chain.n_sites; ++k) {
        gates.push_back(Gate::two(GateKind::RXX, k, k + 1, 2 * chain.jx * dt, layer));
        gates.push_back(Gate::two(GateKind::RYY, k, k + 1, 2 * chain.jy * dt, layer));
        gates.push_back(Gate::two(GateKind::RZZ, k, k + 1, 2 * chain.jz * dt, layer));
    }
    return gates;
}

std::vector<Gate> control_layer(std::span<const double> u_row, double dt, std::size_t layer) {
    std::vector<Gate> gates;
    gates.reserve(u_row.size());
    for (std::size_t j = 0; j < u_row.size(); ++j) {
        gates.push_back(Gate::rz(j, 2 * u_row[j] * dt, layer));
    }
    return gates;
}

Circuit compile(const ChainSpec &chain, const SliceControls &controls, double total_time) {
    chain.validate();
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
        throw std::invalid_argument("total time must be positive");
    }
    if (controls.layers() < 1) {
        throw std::invalid_argument("at least one slice is required");
    }
    if (controls.n_sites() != chain.n_sites) {
        throw std::invalid_argument("control table width does not match the chain length");
    }
    Circuit circuit;
    circuit.n_qubits = chain.n_sites;
    circuit.layers = controls.layers();
    circuit.dt = total_time / static_cast<double>(controls.layers());
    circuit.gates.reserve(circuit.layers * gates_per_layer(chain.n_sites));
    for (std::size_t l = 0; l < controls.layers(); ++l) {
        for (const Gate &g : drift_layer(chain, circuit.dt, l + 1)) {
            circuit.gates.push_back(g);
        }
        for (const Gate &g : control_layer(controls.row(l), circuit.dt, l + 1)) {
            circuit.gates.push_back(g);
        }
    }
    return circuit;
}

}  // namespace spinctl
