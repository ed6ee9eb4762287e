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

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "spinctl/control_params.h"
#include "test_util.h"

using namespace spinctl;

namespace {

constexpr double kPi = std::numbers::pi;

SliceControls random_controls(std::size_t layers, std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<double> v(layers * n);
    for (double &x : v) {
        x = u(rng);
    }
    return SliceControls(layers, n, v);
}

}  // namespace

TEST(Oracle, two_site_hamiltonian) {
    const std::vector<double> u = {1.0, -1.0};
    const oracle::Matrix h = oracle::build_hamiltonian(ChainSpec{2, 1.0, 1.0, 0.0}, u);
    EXPECT_NEAR(std::abs(h(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(1, 1) - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(2, 2) + 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(3, 3)), 0.0, 1e-15);
    // XX + YY hops |01> <-> |10> with amplitude 2 and cancels on |00> <-> |11>.
    EXPECT_NEAR(std::abs(h(1, 2) - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(0, 3)), 0.0, 1e-15);
}

TEST(Oracle, hamiltonian_matches_pauli_sum) {
    const ChainSpec chain{3, 0.7, 1.3, -0.4};
    const std::vector<double> u = {0.2, -0.5, 1.1};
    oracle::Matrix expected = oracle::Matrix::Zero(8, 8);
    for (const char *edge : {"XXI", "IXX"}) expected += chain.jx * test_util::pauli_string(edge);
    for (const char *edge : {"YYI", "IYY"}) expected += chain.jy * test_util::pauli_string(edge);
    for (const char *edge : {"ZZI", "IZZ"}) expected += chain.jz * test_util::pauli_string(edge);
    expected += u[0] * test_util::pauli_string("ZII") + u[1] * test_util::pauli_string("IZI") +
                u[2] * test_util::pauli_string("IIZ");
    EXPECT_LT(oracle::max_abs(oracle::build_hamiltonian(chain, u) - expected), 1e-14);
}

TEST(Oracle, zero_hamiltonian_and_zero_time) {
    const oracle::Matrix zero = oracle::Matrix::Zero(4, 4);
    EXPECT_LT(oracle::max_abs(oracle::expm_unitary(zero, 3.0) - oracle::Matrix::Identity(4, 4)), 1e-15);
    std::mt19937_64 rng(1);
    const SliceControls c = random_controls(1, 3, rng);
    const oracle::Matrix h = oracle::build_hamiltonian(ChainSpec{}, c.row(0));
    EXPECT_LT(oracle::max_abs(oracle::expm_unitary(h, 0.0) - oracle::Matrix::Identity(8, 8)), 1e-14);
    EXPECT_LT(oracle::max_abs(h - h.adjoint()), 1e-15);
}

TEST(Oracle, z_rotation_at_quarter_period) {
    // exp(-i Z pi/2) = -i Z.
    const oracle::Matrix z = test_util::pauli_string("Z");
    const oracle::Matrix u = oracle::expm_unitary(z, kPi / 2);
    EXPECT_LT(oracle::max_abs(u - cplx(0, -1) * z), 1e-15);
}

TEST(Oracle, expm_matches_taylor_and_inverts) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const SliceControls c = random_controls(1, 3, rng);
        const oracle::Matrix h = oracle::build_hamiltonian(ChainSpec{3, 1.0, 0.6, 0.2}, c.row(0));
        const oracle::Matrix u = oracle::expm_unitary(h, 0.37);
        EXPECT_LT(oracle::max_abs(u - test_util::taylor_expm(cplx(0, -0.37) * h)), 1e-12);
        EXPECT_LT(oracle::max_abs(u * oracle::expm_unitary(h, -0.37) - oracle::Matrix::Identity(8, 8)), 1e-12);
        EXPECT_LT(oracle::unitarity_error(u), 1e-12);
    }
}

TEST(Oracle, constant_controls_collapse_to_single_exponential) {
    std::mt19937_64 rng(3);
    const SliceControls one = random_controls(1, 3, rng);
    std::vector<double> v;
    for (int l = 0; l < 5; ++l) {
        v.insert(v.end(), one.values().begin(), one.values().end());
    }
    const ChainSpec chain{};
    const oracle::Matrix sliced = oracle::exact_evolution(chain, SliceControls(5, 3, v), 2.0);
    const oracle::Matrix whole = oracle::expm_unitary(oracle::build_hamiltonian(chain, one.row(0)), 2.0);
    EXPECT_LT(oracle::max_abs(sliced - whole), 1e-12);
}

TEST(Oracle, slice_order_is_first_slice_first) {
    const ChainSpec chain{2, 1.0, 1.0, 0.0};
    const SliceControls c(2, 2, {1.0, 0.0, 0.0, -2.0});
    const oracle::Matrix u0 = oracle::expm_unitary(oracle::build_hamiltonian(chain, c.row(0)), 0.5);
    const oracle::Matrix u1 = oracle::expm_unitary(oracle::build_hamiltonian(chain, c.row(1)), 0.5);
    EXPECT_LT(oracle::max_abs(oracle::exact_evolution(chain, c, 1.0) - u1 * u0), 1e-13);
}

TEST(OracleProperty, gate_matrices_match_pauli_exponentials) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Gate g = test_util::random_gate(3, rng);
        std::string labels = "III";
        const char p = g.kind == GateKind::RXX ? 'X' : g.kind == GateKind::RYY ? 'Y' : 'Z';
        labels[g.q0] = p;
        if (is_two_qubit(g.kind)) {
            labels[g.q1] = p;
        }
        const oracle::Matrix expected = test_util::taylor_expm(cplx(0, -g.angle / 2) * test_util::pauli_string(labels));
        EXPECT_LT(oracle::max_abs(oracle::gate_matrix(g, 3) - expected), 1e-12);
    }
}

TEST(OracleProperty, backends_agree_on_compiled_circuits) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 2; n <= 4; ++n) {
        const LocalScheme scheme{6, n};
        const Circuit c = compile(ChainSpec{n, 1, 1, 0.2}, unpack(initial_params(scheme, rng()).values, scheme), 1.5);
        const oracle::Matrix dense = oracle::circuit_matrix(c);
        EXPECT_LT(oracle::max_abs(oracle::statevector_columns(c) - dense), 1e-10);
        EXPECT_LT(oracle::unitarity_error(dense), 1e-10);
    }
}

TEST(OracleProperty, evolution_conserves_excitation_number) {
    // Jx = Jy commutes with total Z, so the single-excitation sector is closed.
    std::mt19937_64 rng(6);
    const ChainSpec chain{4, 1.0, 1.0, 0.3};
    const oracle::Matrix u = oracle::exact_evolution(chain, random_controls(4, 4, rng), 2.0);
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            if (std::popcount(static_cast<unsigned>(r)) != std::popcount(static_cast<unsigned>(c))) {
                EXPECT_LT(std::abs(u(r, c)), 1e-12);
            }
        }
    }
    EXPECT_LT(oracle::unitarity_error(u), 1e-12);
}
