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

#include "spinctl/density_matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gate_kernels.h"

namespace spinctl {

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(StateVector(n_qubits).dim()), m_(dim_ * dim_) {}

DensityMatrix DensityMatrix::from_pure(const StateVector &state) {
    DensityMatrix rho(state.n_qubits());
    for (std::size_t r = 0; r < rho.dim_; ++r) {
        for (std::size_t c = 0; c < rho.dim_; ++c) {
            rho(r, c) = state[r] * std::conj(state[c]);
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    DensityMatrix rho(n_qubits);
    for (std::size_t i = 0; i < rho.dim_; ++i) {
        rho(i, i) = 1.0 / static_cast<double>(rho.dim_);
    }
    return rho;
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
    double total = 0.0;
    for (const cplx &v : m_) {
        total += std::norm(v);
    }
    return total;
}

void DensityMatrix::apply(const Gate &gate) {
    gate.validate(n_qubits_);
    // Columns: A = U rho. Rows: A U^dagger, where each row is acted on by conj(U) = U(-angle).
    for (std::size_t c = 0; c < dim_; ++c) {
        detail::apply_gate_strided(m_.data() + c, dim_, n_qubits_, gate);
    }
    const Gate conj = gate.inverse();
    for (std::size_t r = 0; r < dim_; ++r) {
        detail::apply_gate_strided(m_.data() + r * dim_, 1, n_qubits_, conj);
    }
}

void DensityMatrix::depolarize(std::size_t qubit, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    if (qubit >= n_qubits_) {
        throw std::invalid_argument("depolarizing qubit " + std::to_string(qubit) + " out of range");
    }
    if (p == 0.0) {
        return;
    }
    // Kraus set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z} summed blockwise over the
    // qubit's (row bit, column bit): diagonal blocks mix as (1-p/2, p/2), off-diagonal blocks scale by 1-p.
    const std::size_t m = detail::site_mask(n_qubits_, qubit);
    const double keep = 1.0 - p / 2;
    const double swap = p / 2;
    const double coherence = 1.0 - p;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r & m) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c & m) {
                continue;
            }
            cplx &a00 = (*this)(r, c);
            cplx &a11 = (*this)(r | m, c | m);
            const cplx b00 = keep * a00 + swap * a11;
            const cplx b11 = keep * a11 + swap * a00;
            a00 = b00;
            a11 = b11;
            (*this)(r, c | m) *= coherence;
            (*this)(r | m, c) *= coherence;
        }
    }
}

void NoiseSpec::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("noise probability must lie in [0, 1]");
    }
}

DensityMatrix from_pure(const StateVector &state) { return DensityMatrix::from_pure(state); }

DensityMatrix apply_gate_density(DensityMatrix rho, const Gate &gate) {
    rho.apply(gate);
    return rho;
}

DensityMatrix apply_depolarizing(DensityMatrix rho, std::size_t qubit, double p) {
    rho.depolarize(qubit, p);
    return rho;
}

DensityMatrix run_noisy_circuit(DensityMatrix rho, const Circuit &circuit, const NoiseSpec &noise) {
    noise.validate();
    if (circuit.n_qubits != rho.n_qubits()) {
        throw std::invalid_argument("circuit and density matrix qubit counts differ");
    }
    circuit.validate();
    auto next = circuit.gates.begin();
    for (std::size_t layer = 1; layer <= circuit.layers; ++layer) {
        for (; next != circuit.gates.end() && next->layer == layer; ++next) {
            rho.apply(*next);
        }
        for (std::size_t q = 0; q < rho.n_qubits(); ++q) {
            rho.depolarize(q, noise.p);
        }
    }
    return rho;
}

double fidelity_against_pure(const DensityMatrix &rho, const StateVector &target) {
    if (rho.dim() != target.dim()) {
        throw std::invalid_argument("density matrix and target dimensions differ");
    }
    cplx total = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            row += rho(r, c) * target[c];
        }
        total += std::conj(target[r]) * row;
    }
    return std::clamp(total.real(), 0.0, 1.0);
}

}  // namespace spinctl
