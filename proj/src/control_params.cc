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
#include <random>
#include <stdexcept>
#include <string>

namespace spinctl {

namespace {

void check_init_range(double low, double high) {
    if (!(low < high) || !std::isfinite(low) || !std::isfinite(high)) {
        throw std::invalid_argument("initialization range must satisfy low < high");
    }
}

}  // namespace

GlobalScheme GlobalScheme::for_chain(std::size_t n_sites, std::size_t layers) {
    GlobalScheme s;
    s.n_sites = n_sites;
    s.layers = layers;
    s.di = 0.0;
    s.df = static_cast<double>(n_sites) - 1.0;
    return s;
}

void GlobalScheme::validate() const {
    if (layers < 2) {
        throw std::invalid_argument("global control needs at least 2 slices to anchor both endpoints");
    }
    if (n_sites < 2) {
        throw std::invalid_argument("global control needs at least 2 sites");
    }
    if (!(c_bound > 0.0) || !std::isfinite(di) || !std::isfinite(df)) {
        throw std::invalid_argument("global scheme bounds must be finite and c_bound positive");
    }
    check_init_range(init_low, init_high);
    if (init_low < -c_bound || init_high > c_bound) {
        throw std::invalid_argument("global initialization range exceeds the C bounds");
    }
}

void LocalScheme::validate() const {
    if (layers < 1 || n_sites < 1) {
        throw std::invalid_argument("local scheme needs at least one slice and one site");
    }
    if (!(bound > 0.0) || !std::isfinite(bound)) {
        throw std::invalid_argument("local bound must be positive");
    }
    check_init_range(init_low, init_high);
    if (init_low < -bound || init_high > bound) {
        throw std::invalid_argument("local initialization range exceeds the bounds");
    }
}

std::string_view scheme_name(SchemeKind kind) { return kind == SchemeKind::Global ? "global" : "local"; }

SchemeKind scheme_kind(const ControlScheme &scheme) {
    return std::holds_alternative<GlobalScheme>(scheme) ? SchemeKind::Global : SchemeKind::Local;
}

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
            return false;
        }
    }
    return true;
}

double harmonic_profile(double c, double d, double j) { return 0.5 * c * (j - d) * (j - d); }

std::size_t param_count(const ControlScheme &scheme) {
    if (const auto *g = std::get_if<GlobalScheme>(&scheme)) {
        return 2 * g->layers - 2;
    }
    const auto &l = std::get<LocalScheme>(scheme);
    return l.n_sites * l.layers;
}

Bounds bounds(const ControlScheme &scheme) {
    Bounds b;
    if (const auto *g = std::get_if<GlobalScheme>(&scheme)) {
        g->validate();
        b.lower.assign(g->layers, -g->c_bound);
        b.upper.assign(g->layers, g->c_bound);
        b.lower.resize(2 * g->layers - 2, g->di - 1.0);
        b.upper.resize(2 * g->layers - 2, g->df + 1.0);
        return b;
    }
    const auto &l = std::get<LocalScheme>(scheme);
    l.validate();
    b.lower.assign(param_count(scheme), -l.bound);
    b.upper.assign(param_count(scheme), l.bound);
    return b;
}

ParamVector initial_params(const ControlScheme &scheme, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ParamVector p;
    p.scheme = scheme_kind(scheme);
    if (const auto *g = std::get_if<GlobalScheme>(&scheme)) {
        g->validate();
        std::uniform_real_distribution<double> dist(g->init_low, g->init_high);
        p.values.reserve(param_count(scheme));
        for (std::size_t l = 0; l < g->layers; ++l) {
            p.values.push_back(dist(rng));
        }
        const double step = (g->df - g->di) / static_cast<double>(g->layers - 1);
        for (std::size_t l = 1; l + 1 < g->layers; ++l) {
            p.values.push_back(g->di + static_cast<double>(l) * step);
        }
        return p;
    }
    const auto &l = std::get<LocalScheme>(scheme);
    l.validate();
    std::uniform_real_distribution<double> dist(l.init_low, l.init_high);
    p.values.resize(param_count(scheme));
    for (double &v : p.values) {
        v = dist(rng);
    }
    return p;
}

std::vector<double> global_centers(std::span<const double> params, const GlobalScheme &scheme) {
    std::vector<double> d(scheme.layers);
    d.front() = scheme.di;
    d.back() = scheme.df;
    for (std::size_t l = 1; l + 1 < scheme.layers; ++l) {
        d[l] = params[scheme.layers + l - 1];
    }
    return d;
}

SliceControls unpack(std::span<const double> params, const ControlScheme &scheme) {
    const std::size_t expected = param_count(scheme);
    if (params.size() != expected) {
        throw std::invalid_argument("parameter vector has " + std::to_string(params.size()) + " entries, expected " +
                                    std::to_string(expected));
    }
    if (const auto *g = std::get_if<GlobalScheme>(&scheme)) {
        g->validate();
        const std::vector<double> d = global_centers(params, *g);
        SliceControls u(g->layers, g->n_sites);
        for (std::size_t l = 0; l < g->layers; ++l) {
            for (std::size_t j = 0; j < g->n_sites; ++j) {
                u(l, j) = harmonic_profile(params[l], d[l], static_cast<double>(j));
            }
        }
        return u;
    }
    const auto &l = std::get<LocalScheme>(scheme);
    l.validate();
    return SliceControls(l.layers, l.n_sites, std::vector<double>(params.begin(), params.end()));
}

std::vector<double> pack_local(const SliceControls &controls) {
    return {controls.values().begin(), controls.values().end()};
}

}  // namespace spinctl
