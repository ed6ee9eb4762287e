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

#include "spinctl/optimizer.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinctl {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Dense BFGS Hessian approximation with Powell damping; parameter counts here are tens, not thousands.
class HessianModel {
  public:
    explicit HessianModel(std::size_t n) : n_(n), b_(n * n, 0.0) { reset(1.0); }

    void reset(double scale) {
        std::fill(b_.begin(), b_.end(), 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            b_[i * n_ + i] = scale;
        }
    }

    double operator()(std::size_t i, std::size_t k) const { return b_[i * n_ + k]; }

    std::vector<double> times(std::span<const double> v) const {
        std::vector<double> out(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                out[i] += b_[i * n_ + k] * v[k];
            }
        }
        return out;
    }

    // Damped update keeps s^T y >= 0.2 s^T B s so B stays positive definite.
    void update(std::span<const double> s, std::span<const double> y_raw) {
        const std::vector<double> bs = times(s);
        const double sbs = dot(s, bs);
        if (!(sbs > 0.0)) {
            return;
        }
        std::vector<double> y(y_raw.begin(), y_raw.end());
        double sy = dot(s, y);
        if (sy < 0.2 * sbs) {
            const double theta = 0.8 * sbs / (sbs - sy);
            for (std::size_t i = 0; i < n_; ++i) {
                y[i] = theta * y[i] + (1.0 - theta) * bs[i];
            }
            sy = dot(s, y);
        }
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                b_[i * n_ + k] += y[i] * y[k] / sy - bs[i] * bs[k] / sbs;
            }
        }
    }

  private:
    std::size_t n_;
    std::vector<double> b_;
};

// Solves the symmetric positive definite system a x = rhs (a is m x m, row-major) by Cholesky.
// Returns false if a is not numerically positive definite.
bool cholesky_solve(std::vector<double> a, std::size_t m, std::vector<double> &rhs) {
    for (std::size_t j = 0; j < m; ++j) {
        double d = a[j * m + j];
        for (std::size_t k = 0; k < j; ++k) {
            d -= a[j * m + k] * a[j * m + k];
        }
        if (!(d > 0.0)) {
            return false;
        }
        d = std::sqrt(d);
        a[j * m + j] = d;
        for (std::size_t i = j + 1; i < m; ++i) {
            double v = a[i * m + j];
            for (std::size_t k = 0; k < j; ++k) {
                v -= a[i * m + k] * a[j * m + k];
            }
            a[i * m + j] = v / d;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        double v = rhs[i];
        for (std::size_t k = 0; k < i; ++k) {
            v -= a[i * m + k] * rhs[k];
        }
        rhs[i] = v / a[i * m + i];
    }
    for (std::size_t i = m; i-- > 0;) {
        double v = rhs[i];
        for (std::size_t k = i + 1; k < m; ++k) {
            v -= a[k * m + i] * rhs[k];
        }
        rhs[i] = v / a[i * m + i];
    }
    return true;
}

enum class Bound : unsigned char { Free, Lower, Upper };

// Primal active-set solve of  min g^T p + 1/2 p^T B p  s.t.  lo <= p <= hi  (lo <= 0 <= hi).
std::vector<double> box_qp_step(const HessianModel &b, std::span<const double> g, std::span<const double> lo,
                                std::span<const double> hi) {
    const std::size_t n = g.size();
    std::vector<double> p(n, 0.0);
    std::vector<Bound> state(n, Bound::Free);
    // Start with bounds that the gradient pushes against already active.
    for (std::size_t i = 0; i < n; ++i) {
        if (lo[i] == 0.0 && g[i] > 0.0) {
            state[i] = Bound::Lower;
        } else if (hi[i] == 0.0 && g[i] < 0.0) {
            state[i] = Bound::Upper;
        }
    }

    for (std::size_t iter = 0; iter < 10 * n + 10; ++iter) {
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i] == Bound::Free) {
                free.push_back(i);
            }
        }
        // Minimizer over the free coordinates with the active ones held at their bounds.
        std::vector<double> target = p;
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i] == Bound::Lower) {
                target[i] = lo[i];
            } else if (state[i] == Bound::Upper) {
                target[i] = hi[i];
            }
        }
        const std::size_t m = free.size();
        if (m > 0) {
            std::vector<double> a(m * m);
            std::vector<double> rhs(m);
            for (std::size_t r = 0; r < m; ++r) {
                double v = -g[free[r]];
                for (std::size_t k = 0; k < n; ++k) {
                    if (state[k] != Bound::Free) {
                        v -= b(free[r], k) * target[k];
                    }
                }
                rhs[r] = v;
                for (std::size_t c = 0; c < m; ++c) {
                    a[r * m + c] = b(free[r], free[c]);
                }
            }
            if (!cholesky_solve(std::move(a), m, rhs)) {
                break;
            }
            for (std::size_t r = 0; r < m; ++r) {
                target[free[r]] = rhs[r];
            }
        }

        // Walk from p toward target until the first bound blocks.
        double t = 1.0;
        std::size_t blocking = n;
        for (std::size_t i : free) {
            const double delta = target[i] - p[i];
            if (target[i] > hi[i] && delta > 0.0) {
                const double ti = (hi[i] - p[i]) / delta;
                if (ti < t) {
                    t = ti;
                    blocking = i;
                }
            } else if (target[i] < lo[i] && delta < 0.0) {
                const double ti = (lo[i] - p[i]) / delta;
                if (ti < t) {
                    t = ti;
                    blocking = i;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            p[i] += t * (target[i] - p[i]);
        }
        if (blocking < n) {
            state[blocking] = target[blocking] > hi[blocking] ? Bound::Upper : Bound::Lower;
            p[blocking] = state[blocking] == Bound::Upper ? hi[blocking] : lo[blocking];
            continue;
        }

        // Release the active bound whose multiplier has the wrong sign, if any.
        const std::vector<double> bp = b.times(p);
        std::size_t release = n;
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double grad = g[i] + bp[i];
            double violation = 0.0;
            if (state[i] == Bound::Lower && grad < 0.0) {
                violation = -grad;
            } else if (state[i] == Bound::Upper && grad > 0.0) {
                violation = grad;
            }
            if (violation > worst) {
                worst = violation;
                release = i;
            }
        }
        if (release == n) {
            break;
        }
        state[release] = Bound::Free;
    }
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = std::clamp(p[i], lo[i], hi[i]);
    }
    return p;
}

double projected_gradient_norm(std::span<const double> x, std::span<const double> g, const Bounds &box) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double moved = std::clamp(x[i] - g[i], box.lower[i], box.upper[i]);
        m = std::max(m, std::abs(moved - x[i]));
    }
    return m;
}

}  // namespace

void StopRule::validate() const {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("stop tolerance must be positive");
    }
}

std::string_view stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::Tolerance:
            return "tolerance";
        case StopReason::SmallGradient:
            return "small_gradient";
        case StopReason::MaxIterations:
            return "max_iterations";
        case StopReason::LineSearchFailed:
            return "line_search_failed";
    }
    return "unknown";
}

std::vector<double> fd_gradient(const ObjectiveFn &f, std::span<const double> x, double h, const Bounds *box,
                                std::size_t *evals) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    std::vector<double> g(x.size());
    std::vector<double> probe(x.begin(), x.end());
    std::optional<double> f0;
    auto call = [&](std::span<const double> at) {
        const double v = f(at);
        if (evals) {
            ++*evals;
        }
        if (!std::isfinite(v)) {
            throw std::runtime_error("objective returned a non-finite value");
        }
        return v;
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double step = h * std::max(1.0, std::abs(x[i]));
        const bool up_ok = !box || x[i] + step <= box->upper[i];
        const bool down_ok = !box || x[i] - step >= box->lower[i];
        if (up_ok && down_ok) {
            probe[i] = x[i] + step;
            const double fp = call(probe);
            probe[i] = x[i] - step;
            const double fm = call(probe);
            g[i] = (fp - fm) / (2 * step);
        } else {
            if (!f0) {
                f0 = call(x);
            }
            probe[i] = up_ok ? x[i] + step : x[i] - step;
            const double fs = call(probe);
            g[i] = up_ok ? (fs - *f0) / step : (*f0 - fs) / step;
        }
        probe[i] = x[i];
    }
    return g;
}

OptTrace minimize(const ObjectiveFn &f, std::span<const double> x0, const Bounds &box, const StopRule &stop,
                  const OptimizerOptions &options) {
    stop.validate();
    if (box.lower.size() != x0.size() || box.upper.size() != x0.size()) {
        throw std::invalid_argument("bounds do not match the parameter vector length");
    }
    if (!box.contains(x0)) {
        throw std::invalid_argument("initial point lies outside the bounds");
    }

    OptTrace trace;
    const ObjectiveFn recorded = [&](std::span<const double> x) {
        const double v = f(x);
        trace.evals.push_back(v);
        return v;
    };

    const std::size_t n = x0.size();
    std::vector<double> x(x0.begin(), x0.end());
    double fx = recorded(x);
    trace.iterates.push_back(fx);

    HessianModel hessian(n);
    bool fresh_model = true;
    std::vector<double> g;
    std::vector<double> lo(n);
    std::vector<double> hi(n);

    while (true) {
        if (trace.n_iters >= stop.max_iters) {
            trace.stop_reason = StopReason::MaxIterations;
            break;
        }
        if (g.empty()) {
            g = fd_gradient(recorded, x, options.fd_step, &box);
        }
        if (projected_gradient_norm(x, g, box) < 1e-12) {
            trace.stop_reason = StopReason::SmallGradient;
            trace.converged = true;
            break;
        }

        // Step box relative to x; the untrained model is also held to first_step per coordinate.
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = box.lower[i] - x[i];
            hi[i] = box.upper[i] - x[i];
            if (fresh_model) {
                lo[i] = std::max(lo[i], -options.first_step);
                hi[i] = std::min(hi[i], options.first_step);
            }
        }
        const std::vector<double> p = box_qp_step(hessian, g, lo, hi);
        const double slope = dot(g, p);

        std::vector<double> x_new(n);
        double f_new = fx;
        bool accepted = false;
        if (slope < 0.0) {
            double alpha = 1.0;
            for (std::size_t k = 0; k <= options.max_backtracks; ++k, alpha *= 0.5) {
                for (std::size_t i = 0; i < n; ++i) {
                    x_new[i] = std::clamp(x[i] + alpha * p[i], box.lower[i], box.upper[i]);
                }
                const double ft = recorded(x_new);
                if (ft <= fx + options.armijo * alpha * slope) {
                    f_new = ft;
                    accepted = true;
                    break;
                }
            }
        }

        if (!accepted) {
            if (!fresh_model) {
                // Drop the curvature model and retry from a scaled identity.
                hessian.reset(1.0);
                fresh_model = true;
                continue;
            }
            trace.stop_reason = StopReason::LineSearchFailed;
            break;
        }

        ++trace.n_iters;
        trace.iterates.push_back(f_new);
        const double change = std::abs(f_new - fx);
        std::vector<double> s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - x[i];
        }
        x = x_new;
        fx = f_new;

        if (change < stop.tol || f_new < stop.tol) {
            trace.stop_reason = StopReason::Tolerance;
            trace.converged = true;
            break;
        }
        if (trace.n_iters >= stop.max_iters) {
            trace.stop_reason = StopReason::MaxIterations;
            break;
        }

        std::vector<double> g_new = fd_gradient(recorded, x, options.fd_step, &box);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = g_new[i] - g[i];
        }
        const double sy = dot(s, y);
        if (fresh_model && sy > 0.0) {
            hessian.reset(dot(y, y) / sy);
        }
        hessian.update(s, y);
        fresh_model = false;
        g = std::move(g_new);
    }

    trace.final_params = std::move(x);
    trace.final_value = fx;
    trace.final_fidelity = 1.0 - fx;
    trace.n_evals = trace.evals.size();
    return trace;
}

OptTrace minimize(const ObjectiveSpec &spec, std::span<const double> x0, const Bounds &box, const StopRule &stop,
                  const OptimizerOptions &options) {
    spec.validate();
    if (x0.size() != param_count(spec.scheme)) {
        throw std::invalid_argument("initial parameter vector does not match the control scheme");
    }
    OptTrace trace = minimize([&spec](std::span<const double> x) { return objective(x, spec); }, x0, box, stop,
                              options);
    trace.final_fidelity = terminal_fidelity(trace.final_params, spec);
    return trace;
}

MeanCurve mean_curve(std::span<const std::vector<double>> series) {
    if (series.empty()) {
        throw std::invalid_argument("mean_curve needs at least one series");
    }
    std::size_t len = 0;
    for (const auto &s : series) {
        if (s.empty()) {
            throw std::invalid_argument("mean_curve got an empty series");
        }
        len = std::max(len, s.size());
    }
    MeanCurve curve{std::vector<double>(len), std::vector<double>(len)};
    const double count = static_cast<double>(series.size());
    for (std::size_t q = 0; q < len; ++q) {
        double sum = 0.0;
        for (const auto &s : series) {
            sum += q < s.size() ? s[q] : s.back();
        }
        const double mean = sum / count;
        double var = 0.0;
        for (const auto &s : series) {
            const double v = (q < s.size() ? s[q] : s.back()) - mean;
            var += v * v;
        }
        curve.mean[q] = mean;
        curve.stddev[q] = std::sqrt(var / count);
    }
    return curve;
}

std::optional<std::size_t> time_to_threshold(std::span<const std::vector<double>> series, double eps) {
    const MeanCurve curve = mean_curve(series);
    for (std::size_t q = 0; q < curve.mean.size(); ++q) {
        if (curve.mean[q] < eps) {
            return q;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> time_to_threshold(std::span<const OptTrace> traces, double eps) {
    std::vector<std::vector<double>> series;
    series.reserve(traces.size());
    for (const OptTrace &t : traces) {
        series.push_back(t.evals);
    }
    return time_to_threshold(std::span<const std::vector<double>>(series), eps);
}

EvalCostReport eval_cost_check(const OptTrace &trace, std::size_t d, std::size_t c) {
    EvalCostReport report;
    report.n_evals = trace.n_evals;
    report.n_iters = trace.n_iters;
    report.bound = 1 + trace.n_iters * (2 * d + c);
    report.evals_per_iter = trace.n_iters == 0 ? 0.0
                                               : static_cast<double>(trace.n_evals - 1) /
                                                     static_cast<double>(trace.n_iters);
    report.within_bound = trace.n_evals <= report.bound;
    return report;
}

}  // namespace spinctl
