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

#include "spinctl/reference_oracle.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spinctl::oracle {

namespace {

using cplx = std::complex<double>;

Matrix pauli(char which) {
    Matrix m = Matrix::Zero(2, 2);
    switch (which) {
        case 'I':
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 'X':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 'Y':
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument("unknown Pauli label");
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Tensor product over sites 0..n-1 with site 0 leftmost (most significant).
Matrix pauli_string(std::size_t n, std::size_t a, char pa, std::size_t b = SIZE_MAX, char pb = 'I') {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t site = 0; site < n; ++site) {
        char label = 'I';
        if (site == a) {
            label = pa;
        } else if (site == b) {
            label = pb;
        }
        out = kron(out, pauli(label));
    }
    return out;
}

}  // namespace

Matrix build_hamiltonian(const ChainSpec &chain, std::span<const double> u_row) {
    chain.validate();
    if (u_row.size() != chain.n_sites) {
        throw std::invalid_argument("control row length must equal the number of sites");
    }
    const std::size_t n = chain.n_sites;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix h = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h += chain.jx * pauli_string(n, k, 'X', k + 1, 'X');
        h += chain.jy * pauli_string(n, k, 'Y', k + 1, 'Y');
        h += chain.jz * pauli_string(n, k, 'Z', k + 1, 'Z');
    }
    for (std::size_t j = 0; j < n; ++j) {
        h += u_row[j] * pauli_string(n, j, 'Z');
    }
    return h;
}

Matrix expm_unitary(const Matrix &hamiltonian, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hamiltonian);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::exp(cplx(0.0, -lambda(i) * t));
    }
    const Matrix &v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix exact_evolution(const ChainSpec &chain, const SliceControls &controls, double total_time) {
    if (controls.layers() < 1 || controls.n_sites() != chain.n_sites || !(total_time > 0.0)) {
        throw std::invalid_argument("invalid controls or total time for exact evolution");
    }
    const double dt = total_time / static_cast<double>(controls.layers());
    const Eigen::Index dim = Eigen::Index{1} << chain.n_sites;
    Matrix u = Matrix::Identity(dim, dim);
    for (std::size_t l = 0; l < controls.layers(); ++l) {
        u = expm_unitary(build_hamiltonian(chain, controls.row(l)), dt) * u;
    }
    return u;
}

Matrix gate_matrix(const Gate &gate, std::size_t n_qubits) {
    gate.validate(n_qubits);
    Matrix p;
    switch (gate.kind) {
        case GateKind::RZ:
            p = pauli_string(n_qubits, gate.q0, 'Z');
            break;
        case GateKind::RXX:
            p = pauli_string(n_qubits, gate.q0, 'X', gate.q1, 'X');
            break;
        case GateKind::RYY:
            p = pauli_string(n_qubits, gate.q0, 'Y', gate.q1, 'Y');
            break;
        case GateKind::RZZ:
            p = pauli_string(n_qubits, gate.q0, 'Z', gate.q1, 'Z');
            break;
    }
    // P squares to I, so exp(-i a P / 2) = cos(a/2) I - i sin(a/2) P.
    const Eigen::Index dim = p.rows();
    return std::cos(gate.angle / 2) * Matrix::Identity(dim, dim) - cplx(0.0, std::sin(gate.angle / 2)) * p;
}

Matrix circuit_matrix(const Circuit &circuit) {
    const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    for (const Gate &g : circuit.gates) {
        u = gate_matrix(g, circuit.n_qubits) * u;
    }
    return u;
}

Matrix statevector_columns(const Circuit &circuit) {
    const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
    Matrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        std::vector<cplx> amps(static_cast<std::size_t>(dim), 0.0);
        amps[static_cast<std::size_t>(c)] = 1.0;
        const StateVector out = run_circuit(StateVector(circuit.n_qubits, std::move(amps)), circuit);
        u.col(c) = to_eigen(out);
    }
    return u;
}

double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_error(const Matrix &u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

Eigen::VectorXcd to_eigen(const StateVector &state) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = state[i];
    }
    return v;
}

}  // namespace spinctl::oracle
