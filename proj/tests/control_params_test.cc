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

#include "spinctl/control_params.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace spinctl;

namespace {

GlobalScheme global3(std::size_t layers) { return GlobalScheme::for_chain(3, layers); }

}  // namespace

TEST(ControlParams, harmonic_profile_examples) {
    EXPECT_EQ(harmonic_profile(1, 1, 1), 0.0);
    EXPECT_EQ(harmonic_profile(1, 1, 0), 0.5);
    EXPECT_EQ(harmonic_profile(2, 0, 2), 4.0);
    EXPECT_EQ(harmonic_profile(-3, 0.5, 2), -3.375);
}

TEST(ControlParams, param_counts) {
    EXPECT_EQ(param_count(LocalScheme{8, 3}), 24u);
    EXPECT_EQ(param_count(global3(8)), 14u);
    EXPECT_EQ(param_count(global3(2)), 2u);
    EXPECT_EQ(param_count(LocalScheme{1, 2}), 2u);
}

TEST(ControlParams, global_two_slices_unpack) {
    const std::vector<double> p = {1.0, 1.0};
    const SliceControls u = unpack(p, global3(2));
    ASSERT_EQ(u.layers(), 2u);
    const std::vector<double> expected = {0, 0.5, 2, 2, 0.5, 0};
    EXPECT_EQ(std::vector<double>(u.values().begin(), u.values().end()), expected);
}

TEST(ControlParams, global_needs_two_slices) {
    EXPECT_THROW(bounds(global3(1)), std::invalid_argument);
    EXPECT_THROW(initial_params(global3(1), 1), std::invalid_argument);
}

TEST(ControlParams, local_zero_and_round_trip) {
    const LocalScheme scheme{8, 3};
    const SliceControls zero = unpack(std::vector<double>(24, 0.0), scheme);
    for (double v : zero.values()) {
        EXPECT_EQ(v, 0.0);
    }
    std::vector<double> p(24);
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = 0.1 * static_cast<double>(i) - 1;
    }
    const SliceControls u = unpack(p, scheme);
    EXPECT_EQ(u(2, 1), p[2 * 3 + 1]);
    EXPECT_EQ(pack_local(u), p);
}

TEST(ControlParams, length_mismatch_throws) {
    EXPECT_THROW(unpack(std::vector<double>(23), LocalScheme{8, 3}), std::invalid_argument);
    EXPECT_THROW(unpack(std::vector<double>(16), global3(8)), std::invalid_argument);
}

TEST(ControlParams, global_initial_centers_follow_ramp) {
    const ParamVector p = initial_params(global3(8), 42);
    ASSERT_EQ(p.values.size(), 14u);
    EXPECT_EQ(p.scheme, SchemeKind::Global);
    for (std::size_t l = 1; l <= 6; ++l) {
        EXPECT_NEAR(p.values[7 + l], 2.0 * static_cast<double>(l) / 7.0, 1e-15);
    }
    const std::vector<double> d = global_centers(p.values, global3(8));
    EXPECT_EQ(d.front(), 0.0);
    EXPECT_EQ(d.back(), 2.0);
    EXPECT_EQ(d.size(), 8u);
}

TEST(ControlParams, bounds_layout) {
    const Bounds g = bounds(global3(8));
    ASSERT_EQ(g.lower.size(), 14u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(g.lower[i], -3.0);
        EXPECT_EQ(g.upper[i], 3.0);
    }
    for (std::size_t i = 8; i < 14; ++i) {
        EXPECT_EQ(g.lower[i], -1.0);
        EXPECT_EQ(g.upper[i], 3.0);
    }
    const Bounds l = bounds(LocalScheme{8, 3});
    ASSERT_EQ(l.lower.size(), 24u);
    EXPECT_EQ(l.upper[5], 2 * std::numbers::pi);
    EXPECT_EQ(l.lower[5], -2 * std::numbers::pi);
    EXPECT_FALSE(l.contains(std::vector<double>(23, 0.0)));
    EXPECT_FALSE(l.contains(std::vector<double>(24, 7.0)));
    EXPECT_TRUE(l.contains(std::vector<double>(24, 0.0)));
}

TEST(ControlParamsProperty, initial_points_in_range_and_bounds) {
    const ControlScheme schemes[] = {global3(8), LocalScheme{8, 3}, GlobalScheme::for_chain(5, 12)};
    for (const ControlScheme &scheme : schemes) {
        const Bounds b = bounds(scheme);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const ParamVector p = initial_params(scheme, seed);
            EXPECT_TRUE(b.contains(p.values));
            const std::size_t random_count =
                scheme_kind(scheme) == SchemeKind::Global ? std::get<GlobalScheme>(scheme).layers : p.values.size();
            for (std::size_t i = 0; i < random_count; ++i) {
                EXPECT_GE(p.values[i], -0.5);
                EXPECT_LT(p.values[i], 0.5);
            }
        }
    }
}

TEST(ControlParamsProperty, same_seed_same_point) {
    for (std::uint64_t seed : {0ull, 7ull, 1234ull}) {
        EXPECT_EQ(initial_params(LocalScheme{}, seed).values, initial_params(LocalScheme{}, seed).values);
        EXPECT_EQ(initial_params(global3(8), seed).values, initial_params(global3(8), seed).values);
    }
    EXPECT_NE(initial_params(LocalScheme{}, 1).values, initial_params(LocalScheme{}, 2).values);
}

TEST(ControlParamsProperty, endpoint_centers_are_anchored) {
    // Perturbing any free center changes only its own slice; the first and last slices
    // depend on C_0 and C_{L-1} alone.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1, 3);
    const GlobalScheme scheme = global3(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> p = initial_params(scheme, static_cast<std::uint64_t>(trial)).values;
        const SliceControls before = unpack(p, scheme);
        for (std::size_t i = 8; i < 14; ++i) {
            p[i] = dist(rng);
        }
        const SliceControls after = unpack(p, scheme);
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(before(0, j), after(0, j));
            EXPECT_EQ(before(7, j), after(7, j));
            EXPECT_EQ(after(0, j), harmonic_profile(p[0], 0.0, static_cast<double>(j)));
            EXPECT_EQ(after(7, j), harmonic_profile(p[7], 2.0, static_cast<double>(j)));
        }
    }
}
