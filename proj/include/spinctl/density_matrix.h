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
#include <vector>

#include "spinctl/circuit.h"
#include "spinctl/state_vector.h"

namespace spinctl {

/// Mixed state of `n_qubits` spins, stored row-major as a dense 2^n x 2^n matrix.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    /// Zero matrix; not a valid state until filled.
    explicit DensityMatrix(std::size_t n_qubits);

    static DensityMatrix from_pure(const StateVector &state);
    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
    cplx &operator()(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }

    cplx trace() const;
    double purity() const;

    /// rho -> U rho U^dagger.
    void apply(const Gate &gate);
    /// Single-qubit depolarizing channel (1-p) rho + p I/2 on `qubit`.
    void depolarize(std::size_t qubit, double p);

  private:
    std::size_t n_qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<cplx> m_;
};

/// Per-qubit depolarizing probability applied after each complete layer.
struct NoiseSpec {
    double p = 1e-3;

    void validate() const;
};

DensityMatrix from_pure(const StateVector &state);
DensityMatrix apply_gate_density(DensityMatrix rho, const Gate &gate);
DensityMatrix apply_depolarizing(DensityMatrix rho, std::size_t qubit, double p);

/// For each layer in order: conjugate by that layer's gates, then depolarize every qubit.
DensityMatrix run_noisy_circuit(DensityMatrix rho, const Circuit &circuit, const NoiseSpec &noise);

/// <target| rho |target>.
double fidelity_against_pure(const DensityMatrix &rho, const StateVector &target);

}  // namespace spinctl
