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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "spinctl/circuit.h"

namespace spinctl {

using cplx = std::complex<double>;

/// Pure state of `n_qubits` spins as 2^n amplitudes.
///
/// Basis index bit (n-1-j) holds site j, so the ket label |100> for three
/// sites is index 4.
class StateVector {
  public:
    StateVector() = default;
    /// |0...0>.
    explicit StateVector(std::size_t n_qubits);
    /// Takes ownership of `amplitudes`; the length must be 2^n_qubits. No normalization is done.
    StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

    static StateVector basis(std::size_t n_qubits, std::string_view bitstring);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }
    cplx &operator[](std::size_t i) { return amps_[i]; }

    double norm_squared() const;

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

  private:
    std::size_t n_qubits_ = 0;
    std::vector<cplx> amps_;
};

StateVector basis_state(std::size_t n_qubits, std::string_view bitstring);
StateVector apply_gate(StateVector state, const Gate &gate);
StateVector run_circuit(StateVector state, const Circuit &circuit);

cplx inner_product(const StateVector &a, const StateVector &b);
/// |<a|b>|^2.
double fidelity_pure(const StateVector &a, const StateVector &b);
/// Probability of finding an excitation (bit 1) at each site.
std::vector<double> site_populations(const StateVector &state);

}  // namespace spinctl
