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

#include <cmath>
#include <complex>
#include <cstddef>

#include "spinctl/circuit.h"

namespace spinctl::detail {

using cplx = std::complex<double>;

inline std::size_t site_mask(std::size_t n_qubits, std::size_t site) {
    return std::size_t{1} << (n_qubits - 1 - site);
}

/// Applies `gate` in place to the vector `data[0], data[stride], ...` of length 2^n_qubits.
/// Works directly on amplitude pairs; no matrix is formed.
inline void apply_gate_strided(cplx *data, std::size_t stride, std::size_t n_qubits, const Gate &gate) {
    if (gate.angle == 0.0) {
        return;
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double c = std::cos(gate.angle / 2);
    const double s = std::sin(gate.angle / 2);
    auto at = [&](std::size_t i) -> cplx & { return data[i * stride]; };

    switch (gate.kind) {
        case GateKind::RZ: {
            const std::size_t m = site_mask(n_qubits, gate.q0);
            const cplx down(c, -s);  // e^{-i a/2} on bit 0
            const cplx up(c, s);
            for (std::size_t i = 0; i < dim; ++i) {
                at(i) *= (i & m) ? up : down;
            }
            return;
        }
        case GateKind::RZZ: {
            const std::size_t m0 = site_mask(n_qubits, gate.q0);
            const std::size_t m1 = site_mask(n_qubits, gate.q1);
            const cplx even(c, -s);
            const cplx odd(c, s);
            for (std::size_t i = 0; i < dim; ++i) {
                const bool parity = ((i & m0) != 0) != ((i & m1) != 0);
                at(i) *= parity ? odd : even;
            }
            return;
        }
        case GateKind::RXX:
        case GateKind::RYY: {
            // P|j> = sign(j) |j ^ flip> with P = XX (sign +1) or YY (sign -1 when both bits equal).
            const std::size_t m0 = site_mask(n_qubits, gate.q0);
            const std::size_t m1 = site_mask(n_qubits, gate.q1);
            const std::size_t flip = m0 | m1;
            const bool yy = gate.kind == GateKind::RYY;
            for (std::size_t i = 0; i < dim; ++i) {
                const std::size_t j = i ^ flip;
                if (j < i) {
                    continue;
                }
                const bool equal_bits = ((i & m0) != 0) == ((i & m1) != 0);
                const double sign = (yy && equal_bits) ? -1.0 : 1.0;
                const cplx a = at(i);
                const cplx b = at(j);
                const cplx mis(0.0, -s * sign);
                at(i) = c * a + mis * b;
                at(j) = c * b + mis * a;
            }
            return;
        }
    }
}

}  // namespace spinctl::detail
