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

#include "spinctl/objective.h"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

using namespace spinctl;

namespace {

ObjectiveSpec default_spec(const ControlScheme &scheme) { return transfer_spec(ChainSpec{}, scheme, 2.0); }

}  // namespace

TEST(Objective, transfer_spec_states) {
    const ObjectiveSpec spec = default_spec(LocalScheme{});
    EXPECT_EQ(spec.psi_in[4], cplx(1.0));
    EXPECT_EQ(spec.psi_target[1], cplx(1.0));
    EXPECT_NO_THROW(spec.validate());
}

TEST(Objective, zero_couplings_cannot_move_the_excitation) {
    // Only Z rotations remain, so |100> picks up a phase and never reaches |001>.
    ObjectiveSpec spec = transfer_spec(ChainSpec{3, 0, 0, 0}, LocalScheme{}, 2.0);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 5; ++trial) {
        const ParamVector p = initial_params(spec.scheme, rng());
        EXPECT_NEAR(objective(p.values, spec), 1.0, 1e-15);
        spec.psi_target = spec.psi_in;
        EXPECT_NEAR(objective(p.values, spec), 0.0, 1e-14);
        spec.psi_target = basis_state(3, "001");
    }
}

TEST(Objective, non_finite_parameters_throw) {
    const ObjectiveSpec spec = default_spec(LocalScheme{});
    std::vector<double> p(24, 0.0);
    p[3] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(objective(p, spec), std::invalid_argument);
    p[3] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(objective(p, spec), std::invalid_argument);
}

TEST(Objective, spec_validation) {
    ObjectiveSpec spec = default_spec(LocalScheme{8, 4});
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = default_spec(LocalScheme{});
    spec.lambda_reg = -1;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = default_spec(LocalScheme{});
    spec.noise = NoiseSpec{1.5};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Objective, control_effort_penalty) {
    ObjectiveSpec spec = default_spec(LocalScheme{});
    const std::vector<double> p(24, 0.5);
    const double base = objective(p, spec);
    spec.lambda_reg = 0.1;
    // dt * sum u^2 = 0.25 * 24 * 0.25 = 1.5
    EXPECT_NEAR(objective(p, spec) - base, 0.15, 1e-14);
    EXPECT_DOUBLE_EQ(control_effort(unpack(p, LocalScheme{}), 0.25), 1.5);
}

TEST(ObjectiveProperty, value_in_unit_interval) {
    std::mt19937_64 rng(8);
    for (const ControlScheme &scheme : {ControlScheme{LocalScheme{}}, ControlScheme{GlobalScheme::for_chain(3, 8)}}) {
        ObjectiveSpec spec = default_spec(scheme);
        const Bounds b = bounds(scheme);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> x(b.lower.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = std::uniform_real_distribution<double>(b.lower[i], b.upper[i])(rng);
            }
            spec.noise.reset();
            const double j = objective(x, spec);
            EXPECT_GE(j, 0.0);
            EXPECT_LE(j, 1.0);
            spec.noise = NoiseSpec{1e-2};
            const double jn = objective(x, spec);
            EXPECT_GE(jn, 0.0);
            EXPECT_LE(jn, 1.0);
        }
    }
}

TEST(ObjectiveProperty, noiseless_density_matches_statevector) {
    std::mt19937_64 rng(9);
    for (const ControlScheme &scheme : {ControlScheme{LocalScheme{}}, ControlScheme{GlobalScheme::for_chain(3, 8)}}) {
        ObjectiveSpec pure = default_spec(scheme);
        ObjectiveSpec dens = pure;
        dens.noise = NoiseSpec{0.0};
        for (int trial = 0; trial < 10; ++trial) {
            const ParamVector p = initial_params(scheme, rng());
            EXPECT_NEAR(objective(p.values, pure), objective(p.values, dens), 1e-10);
        }
    }
}
