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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinctl/circuit.h"
#include "spinctl/density_matrix.h"
#include "spinctl/state_vector.h"

namespace spinctl::test_util {

inline StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (cplx &a : amps) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (cplx &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n, std::move(amps));
}

inline Gate random_gate(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind_dist(0, n > 1 ? 3 : 0);
    std::uniform_int_distribution<std::size_t> site(0, n - 1);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    const auto kind = static_cast<GateKind>(kind_dist(rng));
    if (kind == GateKind::RZ) {
        return Gate::rz(site(rng), angle(rng));
    }
    std::size_t a = site(rng);
    std::size_t b = site(rng);
    while (b == a) {
        b = site(rng);
    }
    return Gate::two(kind, a, b, angle(rng));
}

/// Random mixed state: sum of `rank` random pure projectors with random weights.
inline DensityMatrix random_density(std::size_t n, std::mt19937_64 &rng, int rank = 3) {
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    DensityMatrix rho(n);
    std::vector<double> w(static_cast<std::size_t>(rank));
    double total = 0.0;
    for (double &x : w) {
        x = weight(rng);
        total += x;
    }
    for (double x : w) {
        const StateVector psi = random_state(n, rng);
        for (std::size_t r = 0; r < rho.dim(); ++r) {
            for (std::size_t c = 0; c < rho.dim(); ++c) {
                rho(r, c) += (x / total) * psi[r] * std::conj(psi[c]);
            }
        }
    }
    return rho;
}

inline Eigen::MatrixXcd to_matrix(const DensityMatrix &rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = rho(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return m;
}

/// Kronecker product of single-site Paulis, leftmost label = site 0 = most significant bit.
inline Eigen::MatrixXcd pauli_string(const std::string &labels) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (char label : labels) {
        Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
        switch (label) {
            case 'X':
                p << 0, 1, 1, 0;
                break;
            case 'Y':
                p << 0, cplx(0, -1), cplx(0, 1), 0;
                break;
            case 'Z':
                p << 1, 0, 0, -1;
                break;
            default:
                p << 1, 0, 0, 1;
        }
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * p;
            }
        }
        out = next;
    }
    return out;
}

/// exp(a) by a plain Taylor series with scaling and squaring; independent of any eigensolver.
inline Eigen::MatrixXcd taylor_expm(const Eigen::MatrixXcd &a) {
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace spinctl::test_util
