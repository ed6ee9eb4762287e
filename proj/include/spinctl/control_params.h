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
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "spinctl/spin_chain.h"

namespace spinctl {

/// Shared harmonic profile: site fields u_j = C/2 (j - d)^2 with time series C(t_l), d(t_l).
///
/// The parameter vector is [C_0 .. C_{L-1}, d_1 .. d_{L-2}]; d_0 = di and
/// d_{L-1} = df are anchored and never appear in it.
struct GlobalScheme {
    std::size_t layers = 8;
    std::size_t n_sites = 3;
    double di = 0.0;
    double df = 2.0;
    double c_bound = 3.0;
    double init_low = -0.5;
    double init_high = 0.5;

    static GlobalScheme for_chain(std::size_t n_sites, std::size_t layers);
    void validate() const;
};

/// Independent field per site per slice, packed row-major: [u_{0,0} .. u_{0,N-1}, u_{1,0}, ...].
struct LocalScheme {
    std::size_t layers = 8;
    std::size_t n_sites = 3;
    double bound = 2 * std::numbers::pi;
    double init_low = -0.5;
    double init_high = 0.5;

    void validate() const;
};

using ControlScheme = std::variant<GlobalScheme, LocalScheme>;

enum class SchemeKind { Global, Local };

std::string_view scheme_name(SchemeKind kind);
SchemeKind scheme_kind(const ControlScheme &scheme);

struct ParamVector {
    SchemeKind scheme = SchemeKind::Local;
    std::vector<double> values;
};

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    bool contains(std::span<const double> x) const;
};

double harmonic_profile(double c, double d, double j);

std::size_t param_count(const ControlScheme &scheme);
Bounds bounds(const ControlScheme &scheme);

/// Seeded initial point: C ~ U(init) with d on the linear ramp di -> df (global), or i.i.d. U(init) (local).
ParamVector initial_params(const ControlScheme &scheme, std::uint64_t seed);

/// Slice-by-site field table described by `params`.
SliceControls unpack(std::span<const double> params, const ControlScheme &scheme);

/// Inverse of unpack for the local scheme.
std::vector<double> pack_local(const SliceControls &controls);

/// Full d(t_l) series including the anchored endpoints.
std::vector<double> global_centers(std::span<const double> params, const GlobalScheme &scheme);

}  // namespace spinctl
