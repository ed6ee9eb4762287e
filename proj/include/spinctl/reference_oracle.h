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

#include <span>

#include <Eigen/Dense>

#include "spinctl/circuit.h"
#include "spinctl/spin_chain.h"
#include "spinctl/state_vector.h"

namespace spinctl::oracle {

// Dense exact evolution used to validate the Trotterized backends. Small N only.

using Matrix = Eigen::MatrixXcd;

/// H = H_d + sum_j u_j Z_j as a dense 2^N x 2^N matrix, site 0 = most significant bit.
Matrix build_hamiltonian(const ChainSpec &chain, std::span<const double> u_row);

/// exp(-i H t) via Hermitian eigendecomposition.
Matrix expm_unitary(const Matrix &hamiltonian, double t);

/// U(L) ... U(1) with exact slice propagators exp(-i H(u_l) dt).
Matrix exact_evolution(const ChainSpec &chain, const SliceControls &controls, double total_time);

/// Dense matrix of a single gate, built from Kronecker products of Pauli matrices.
Matrix gate_matrix(const Gate &gate, std::size_t n_qubits);

/// Ordered product of gate matrices for the whole circuit.
Matrix circuit_matrix(const Circuit &circuit);

/// Unitary realized by running `circuit` on every basis state (columns of U).
Matrix statevector_columns(const Circuit &circuit);

double max_abs(const Matrix &m);
double unitarity_error(const Matrix &u);

Eigen::VectorXcd to_eigen(const StateVector &state);

}  // namespace spinctl::oracle
