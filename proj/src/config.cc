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

#include "spinctl/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spinctl {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

ConfigError bad_value(std::string_view key, std::string_view value, std::string_view what) {
    return ConfigError("invalid value '" + std::string(value) + "' for '" + std::string(key) + "': " +
                       std::string(what));
}

// Accepts plain numbers plus a trailing "pi" multiplier ("pi", "2pi", "-4pi").
double parse_real(std::string_view key, std::string_view value) {
    double scale = 1.0;
    std::string_view digits = value;
    if (digits.ends_with("pi")) {
        scale = std::numbers::pi;
        digits.remove_suffix(2);
        if (digits.empty() || digits == "+") {
            return scale;
        }
        if (digits == "-") {
            return -scale;
        }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(v)) {
        throw bad_value(key, value, "expected a finite number");
    }
    return v * scale;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view value) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw bad_value(key, value, "expected a non-negative integer");
    }
    return v;
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Convergence:
            return "convergence";
        case ExperimentKind::Dynamics:
            return "dynamics";
        case ExperimentKind::NoiseCompare:
            return "noise-compare";
    }
    return "unknown";
}

const std::vector<std::string_view> &ExperimentConfig::keys() {
    static const std::vector<std::string_view> k = {
        "experiment", "n_sites",     "total_time",     "layers",          "jx",
        "jy",         "jz",          "scheme",         "realizations",    "seed",
        "tol",        "max_iters",   "fd_step",        "c_bound",         "c_init_low",
        "c_init_high", "di",         "df",             "local_bound",     "local_init_low",
        "local_init_high", "noise_p", "lambda",        "threshold",       "workers",
        "out"};
    return k;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "experiment") {
        if (value == "convergence") {
            experiment = ExperimentKind::Convergence;
        } else if (value == "dynamics") {
            experiment = ExperimentKind::Dynamics;
        } else if (value == "noise-compare") {
            experiment = ExperimentKind::NoiseCompare;
        } else {
            throw bad_value(key, value, "expected convergence, dynamics or noise-compare");
        }
    } else if (key == "n_sites") {
        n_sites = parse_integer<std::size_t>(key, value);
    } else if (key == "total_time") {
        total_time = parse_real(key, value);
    } else if (key == "layers") {
        layers = parse_integer<std::size_t>(key, value);
    } else if (key == "jx") {
        jx = parse_real(key, value);
    } else if (key == "jy") {
        jy = parse_real(key, value);
    } else if (key == "jz") {
        jz = parse_real(key, value);
    } else if (key == "scheme") {
        if (value != "global" && value != "local" && value != "both") {
            throw bad_value(key, value, "expected global, local or both");
        }
        scheme = std::string(value);
    } else if (key == "realizations") {
        realizations = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
        seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "tol") {
        tol = parse_real(key, value);
    } else if (key == "max_iters") {
        max_iters = parse_integer<std::size_t>(key, value);
    } else if (key == "fd_step") {
        fd_step = parse_real(key, value);
    } else if (key == "c_bound") {
        c_bound = parse_real(key, value);
    } else if (key == "c_init_low") {
        c_init_low = parse_real(key, value);
    } else if (key == "c_init_high") {
        c_init_high = parse_real(key, value);
    } else if (key == "di") {
        di = parse_real(key, value);
    } else if (key == "df") {
        df = parse_real(key, value);
    } else if (key == "local_bound") {
        local_bound = parse_real(key, value);
    } else if (key == "local_init_low") {
        local_init_low = parse_real(key, value);
    } else if (key == "local_init_high") {
        local_init_high = parse_real(key, value);
    } else if (key == "noise_p") {
        noise_p = parse_real(key, value);
    } else if (key == "lambda") {
        lambda_reg = parse_real(key, value);
    } else if (key == "threshold") {
        threshold = parse_real(key, value);
    } else if (key == "workers") {
        workers = parse_integer<std::size_t>(key, value);
    } else if (key == "out") {
        if (value.empty()) {
            throw bad_value(key, value, "expected a directory path");
        }
        out = std::string(value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

std::vector<SchemeKind> ExperimentConfig::schemes() const {
    std::string_view s = scheme;
    if (experiment == ExperimentKind::NoiseCompare) {
        s = "both";
    } else if (s.empty()) {
        s = experiment == ExperimentKind::Dynamics ? "local" : "both";
    }
    if (s == "global") {
        return {SchemeKind::Global};
    }
    if (s == "local") {
        return {SchemeKind::Local};
    }
    return {SchemeKind::Global, SchemeKind::Local};
}

ChainSpec ExperimentConfig::chain() const { return ChainSpec{n_sites, jx, jy, jz}; }

ControlScheme ExperimentConfig::control_scheme(SchemeKind kind) const {
    if (kind == SchemeKind::Global) {
        GlobalScheme g = GlobalScheme::for_chain(n_sites, layers);
        g.di = di.value_or(g.di);
        g.df = df.value_or(g.df);
        g.c_bound = c_bound;
        g.init_low = c_init_low;
        g.init_high = c_init_high;
        return g;
    }
    LocalScheme l;
    l.layers = layers;
    l.n_sites = n_sites;
    l.bound = local_bound;
    l.init_low = local_init_low;
    l.init_high = local_init_high;
    return l;
}

StopRule ExperimentConfig::stop_rule() const { return StopRule{tol, max_iters}; }

OptimizerOptions ExperimentConfig::optimizer_options() const {
    OptimizerOptions o;
    o.fd_step = fd_step;
    return o;
}

void ExperimentConfig::validate() const {
    auto require = [](bool ok, const std::string &message) {
        if (!ok) {
            throw ConfigError(message);
        }
    };
    require(n_sites >= 2, "n_sites must be at least 2");
    require(n_sites <= 12, "n_sites above 12 is not supported");
    require(layers >= 1, "layers must be at least 1");
    require(total_time > 0.0, "total_time must be positive");
    require(realizations >= 1, "realizations must be at least 1");
    require(tol > 0.0, "tol must be positive");
    require(fd_step > 0.0, "fd_step must be positive");
    require(noise_p >= 0.0 && noise_p <= 1.0, "noise_p must lie in [0, 1]");
    require(lambda_reg >= 0.0, "lambda must be non-negative");
    require(threshold > 0.0, "threshold must be positive");
    require(workers >= 1, "workers must be at least 1");
    for (SchemeKind kind : schemes()) {
        try {
            const ControlScheme s = control_scheme(kind);
            std::visit([](const auto &scheme) { scheme.validate(); }, s);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string(scheme_name(kind)) + " scheme: " + e.what());
        }
    }
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        try {
            config.set(key, line.substr(eq + 1));
        } catch (const ConfigError &e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return config;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace spinctl
