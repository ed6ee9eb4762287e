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

#include "spinctl/state_vector.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gate_kernels.h"

namespace spinctl {

namespace {

std::size_t checked_dim(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw std::invalid_argument("n_qubits must be in 1..30, got " + std::to_string(n_qubits));
    }
    return std::size_t{1} << n_qubits;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(checked_dim(n_qubits)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_dim(n_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^n_qubits");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::string_view bitstring) {
    if (bitstring.size() != n_qubits) {
        throw std::invalid_argument("bitstring '" + std::string(bitstring) + "' does not have " +
                                    std::to_string(n_qubits) + " characters");
    }
    StateVector s(n_qubits, std::vector<cplx>(checked_dim(n_qubits)));
    std::size_t index = 0;
    for (char ch : bitstring) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<std::size_t>(ch == '1');
    }
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const cplx &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::apply(const Gate &gate) {
    gate.validate(n_qubits_);
    detail::apply_gate_strided(amps_.data(), 1, n_qubits_, gate);
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.n_qubits != n_qubits_) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.n_qubits) + " qubits, state has " +
                                    std::to_string(n_qubits_));
    }
    for (const Gate &g : circuit.gates) {
        apply(g);
    }
}

StateVector basis_state(std::size_t n_qubits, std::string_view bitstring) {
    return StateVector::basis(n_qubits, bitstring);
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector run_circuit(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state dimensions differ");
    }
    cplx total = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double fidelity_pure(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

std::vector<double> site_populations(const StateVector &state) {
    const std::size_t n = state.n_qubits();
    std::vector<double> pops(n, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (i & detail::site_mask(n, j)) {
                pops[j] += p;
            }
        }
    }
    for (double &p : pops) {
        p = std::clamp(p, 0.0, 1.0);
    }
    return pops;
}

}  // namespace spinctl
