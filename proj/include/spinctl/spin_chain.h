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
#include <span>
#include <vector>

#include "spinctl/circuit.h"

namespace spinctl {

/// Open XXZ-type chain H_d = sum_k Jx X_k X_k+1 + Jy Y_k Y_k+1 + Jz Z_k Z_k+1 (hbar = 1).
struct ChainSpec {
    std::size_t n_sites = 3;
    double jx = 1.0;
    double jy = 1.0;
    double jz = 0.2;

    void validate() const;
};

/// Piecewise-constant on-site Z fields; u(l, j) is the field on site j during slice l (0-based).
class SliceControls {
  public:
    SliceControls() = default;
    SliceControls(std::size_t layers, std::size_t n_sites);
    SliceControls(std::size_t layers, std::size_t n_sites, std::vector<double> values);

    std::size_t layers() const { return layers_; }
    std::size_t n_sites() const { return n_sites_; }
    double operator()(std::size_t l, std::size_t j) const { return u_[l * n_sites_ + j]; }
    double &operator()(std::size_t l, std::size_t j) { return u_[l * n_sites_ + j]; }
    std::span<const double> row(std::size_t l) const { return {u_.data() + l * n_sites_, n_sites_}; }
    std::span<const double> values() const { return u_; }

  private:
    std::size_t layers_ = 0;
    std::size_t n_sites_ = 0;
    std::vector<double> u_;
};

/// RXX(2 Jx dt), RYY(2 Jy dt), RZZ(2 Jz dt) on each edge (k, k+1), edges left to right.
std::vector<Gate> drift_layer(const ChainSpec &chain, double dt, std::size_t layer);

/// RZ(2 u_j dt) on every site j.
std::vector<Gate> control_layer(std::span<const double> u_row, double dt, std::size_t layer);

/// First-order Trotter circuit: for each slice, the drift layer followed by the control layer.
/// Zero-angle gates are kept so every layer has 3(N-1) + N gates.
Circuit compile(const ChainSpec &chain, const SliceControls &controls, double total_time);

inline std::size_t gates_per_layer(std::size_t n_sites) { return 3 * (n_sites - 1) + n_sites; }

}  // namespace spinctl
