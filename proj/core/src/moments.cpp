// Copyright 2026 The phasemoments Authors
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

#include "phasemoments/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "phasemoments/errors.hpp"
#include "phasemoments/quadrature.hpp"
#include "phasemoments/specfun.hpp"

namespace phasemoments::moments {

namespace {

double int_pow(double x, unsigned p) {
    double r = 1.0;
    for (unsigned i = 0; i < p; ++i) {
        r *= x;
    }
    return r;
}

void enumerate(std::size_t dim, unsigned budget, MultiIndex &current, std::size_t slot,
               std::vector<MultiIndex> &out) {
    if (slot + 1 == dim) {
        current[slot] = budget;
        out.push_back(current);
        return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
        current[slot] = budget - v;
        enumerate(dim, v, current, slot + 1, out);
    }
}

/// Visits every grid point with its trapezoid weight.
void for_each_grid_point(const GridDensity &g,
                         const std::function<void(const std::vector<double> &, double)> &visit) {
    const std::size_t dim = g.shape.size();
    const std::size_t total = g.values.size();
    std::vector<double> x(dim);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        double w = 1.0;
        for (std::size_t ax = dim; ax-- > 0;) {
            const std::size_t i = rem % g.shape[ax];
            rem /= g.shape[ax];
            x[ax] = g.x0[ax] + static_cast<double>(i) * g.dx[ax];
            const bool edge = g.shape[ax] > 1 && (i == 0 || i + 1 == g.shape[ax]);
            w *= edge ? 0.5 * g.dx[ax] : g.dx[ax];
        }
        visit(x, w * g.values[flat]);
    }
}

double norm(const std::vector<double> &x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return std::sqrt(s);
}

/// Angular factor int_0^{2pi} cos^p sin^q dtheta.
double trig_moment(unsigned p, unsigned q) {
    if (p % 2 == 1 || q % 2 == 1) {
        return 0.0;
    }
    return 2.0 * std::exp(std::lgamma(0.5 * (p + 1)) + std::lgamma(0.5 * (q + 1)) -
                          std::lgamma(0.5 * (p + q) + 1.0));
}

double phase_space_moment(const PhaseSpaceDiagonal &f, unsigned p, unsigned q) {
    const double angular = trig_moment(p, q);
    if (angular == 0.0) {
        return 0.0;
    }
    const std::vector<double> c = specfun::diagonal_radial_coefficients(f.s, f.k);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        // int_0^inf e^{-r^2} r^{2j+p+q} r dr = Gamma(j + (p+q)/2 + 1) / 2
        sum += c[j] * 0.5 * std::tgamma(static_cast<double>(j) + 0.5 * (p + q) + 1.0);
    }
    return sum * angular / std::numbers::pi;
}

double gaussian_moment(const GaussianDensity &g, unsigned k) {
    double sum = 0.0;
    double double_factorial = 1.0; // (i-1)!! for even i
    for (unsigned i = 0; i <= k; i += 2) {
        if (i > 0) {
            double_factorial *= static_cast<double>(i - 1);
        }
        sum += specfun::binomial(k, i) * int_pow(g.mean, k - i) * int_pow(g.sigma, i) * double_factorial;
    }
    return sum;
}

double standard_normal_cdf(double t) { return 0.5 * std::erfc(-t / std::numbers::sqrt2); }

double gaussian_exp_integral(const GaussianDensity &g, double a) {
    const double var = g.sigma * g.sigma;
    return std::exp(a * g.mean + 0.5 * a * a * var) * standard_normal_cdf((g.mean + a * var) / g.sigma) +
           std::exp(-a * g.mean + 0.5 * a * a * var) * standard_normal_cdf((-g.mean + a * var) / g.sigma);
}

double phase_space_exp_integral(const PhaseSpaceDiagonal &f, double a) {
    const std::vector<double> c = specfun::diagonal_radial_coefficients(f.s, f.k);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        sum += c[j] * 2.0 * quadrature::shifted_radial_integral(a, static_cast<unsigned>(2 * j + 1));
    }
    return sum;
}

/// Tail verdict for a grid density: finite, divergent, or throws.
bool grid_tail_is_finite(const GridDensity &g, double a) {
    switch (g.tail.kind) {
    case TailKind::undeclared:
        throw UndecidableTailError("grid density has no declared tail envelope; the exponential "
                                   "integral cannot be classified from a finite grid");
    case TailKind::compact:
        return true;
    case TailKind::gaussian:
        return g.tail.rate > 0.0;
    case TailKind::exponential:
        return a < g.tail.rate;
    case TailKind::polynomial:
        return false;
    }
    return false;
}

template <typename Weight>
ExpBound exp_integral_impl(const MeasureRep &mu, double a, Weight &&weight, bool &norm_bound) {
    if (!(a > 0.0)) {
        throw DomainError("exponential bound requires a > 0");
    }
    validate(mu);
    norm_bound = false;
    ExpBound result;
    if (const auto *atoms = std::get_if<AtomicMeasure>(&mu.body)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < atoms->points.size(); ++i) {
            sum += atoms->weights[i] * std::exp(a * weight(atoms->points[i]));
        }
        result.value = sum;
    } else if (const auto *grid = std::get_if<GridDensity>(&mu.body)) {
        if (!grid_tail_is_finite(*grid, a)) {
            return result;
        }
        double sum = 0.0;
        for_each_grid_point(*grid, [&](const std::vector<double> &x, double w) {
            sum += w * std::exp(a * weight(x));
        });
        result.value = sum;
    } else {
        const auto &closed = std::get<ClosedForm>(mu.body);
        if (const auto *ps = std::get_if<PhaseSpaceDiagonal>(&closed)) {
            result.value = phase_space_exp_integral(*ps, a);
            norm_bound = true;
        } else {
            result.value = gaussian_exp_integral(std::get<GaussianDensity>(closed), a);
        }
    }
    if (result.value && !std::isfinite(*result.value)) {
        throw OverflowError("exponential integral overflows double range");
    }
    return result;
}

} // namespace

unsigned order(const MultiIndex &k) { return std::accumulate(k.begin(), k.end(), 0U); }

std::vector<MultiIndex> multi_indices(std::size_t dim, unsigned max_order) {
    if (dim == 0) {
        throw DomainError("multi_indices: dimension must be positive");
    }
    std::vector<MultiIndex> out;
    MultiIndex current(dim, 0U);
    for (unsigned total = 0; total <= max_order; ++total) {
        enumerate(dim, total, current, 0, out);
    }
    return out;
}

double MomentSequence::at(const MultiIndex &k) const {
    const auto it = entries.find(k);
    if (it == entries.end()) {
        throw DomainError("moment sequence has no entry for the requested multi-index");
    }
    return it->second;
}

std::string to_string(AxisKind kind) {
    switch (kind) {
    case AxisKind::real_line:
        return "real_line";
    case AxisKind::lower_bounded:
        return "lower_bounded";
    case AxisKind::upper_bounded:
        return "upper_bounded";
    case AxisKind::compact:
        return "compact";
    }
    return "unknown";
}

std::string to_string(TailKind kind) {
    switch (kind) {
    case TailKind::undeclared:
        return "undeclared";
    case TailKind::compact:
        return "compact";
    case TailKind::gaussian:
        return "gaussian";
    case TailKind::exponential:
        return "exponential";
    case TailKind::polynomial:
        return "polynomial";
    }
    return "unknown";
}

AxisSupport MeasureRep::axis_support(std::size_t axis) const {
    if (axis >= dim) {
        throw DomainError("axis index out of range");
    }
    return support.empty() ? AxisSupport::real_line() : support[axis];
}

MeasureRep make_atomic(std::vector<std::vector<double>> points, std::vector<double> weights) {
    MeasureRep mu;
    mu.dim = points.empty() ? 1 : points.front().size();
    mu.body = AtomicMeasure{std::move(points), std::move(weights)};
    validate(mu);
    return mu;
}

MeasureRep make_phase_space_diagonal(unsigned s, unsigned k) {
    MeasureRep mu;
    mu.dim = 2;
    mu.body = ClosedForm{PhaseSpaceDiagonal{s, k}};
    return mu;
}

MeasureRep make_gaussian(double mean, double sigma) {
    MeasureRep mu;
    mu.dim = 1;
    mu.body = ClosedForm{GaussianDensity{mean, sigma}};
    validate(mu);
    return mu;
}

MeasureRep make_grid_density(std::vector<double> x0, std::vector<double> dx,
                             std::vector<std::size_t> shape, std::vector<double> values,
                             TailEnvelope tail) {
    MeasureRep mu;
    mu.dim = shape.size();
    mu.body = GridDensity{std::move(x0), std::move(dx), std::move(shape), std::move(values), tail};
    validate(mu);
    return mu;
}

void validate(const MeasureRep &mu) {
    if (mu.dim == 0) {
        throw DomainError("measure dimension must be positive");
    }
    if (!mu.support.empty() && mu.support.size() != mu.dim) {
        throw DomainError("support must list one axis per dimension");
    }
    for (const AxisSupport &ax : mu.support) {
        if (ax.kind == AxisKind::compact && !(ax.lo <= ax.hi)) {
            throw DomainError("compact axis requires lo <= hi");
        }
    }
    if (const auto *atoms = std::get_if<AtomicMeasure>(&mu.body)) {
        if (atoms->points.empty() || atoms->points.size() != atoms->weights.size()) {
            throw DomainError("atomic measure needs matching, nonempty point and weight lists");
        }
        for (std::size_t i = 0; i < atoms->points.size(); ++i) {
            if (atoms->points[i].size() != mu.dim) {
                throw DomainError("atom dimension does not match measure dimension");
            }
            if (!(atoms->weights[i] > 0.0) || !std::isfinite(atoms->weights[i])) {
                throw DomainError("atom weights must be finite and > 0");
            }
        }
    } else if (const auto *grid = std::get_if<GridDensity>(&mu.body)) {
        if (grid->shape.size() != mu.dim || grid->x0.size() != mu.dim || grid->dx.size() != mu.dim) {
            throw DomainError("grid spec does not match measure dimension");
        }
        std::size_t count = 1;
        for (std::size_t ax = 0; ax < mu.dim; ++ax) {
            if (grid->shape[ax] == 0 || !(grid->dx[ax] > 0.0)) {
                throw DomainError("grid axes need positive size and spacing");
            }
            count *= grid->shape[ax];
        }
        if (count != grid->values.size()) {
            throw DomainError("grid value count does not match shape");
        }
        double mass = 0.0;
        for (double v : grid->values) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw DomainError("grid density values must be finite and nonnegative");
            }
            mass += v;
        }
        if (!(mass > 0.0)) {
            throw DomainError("grid density has zero mass");
        }
    } else {
        const auto &closed = std::get<ClosedForm>(mu.body);
        if (std::holds_alternative<PhaseSpaceDiagonal>(closed) && mu.dim != 2) {
            throw DomainError("phase-space diagonal family lives on R^2");
        }
        if (const auto *g = std::get_if<GaussianDensity>(&closed)) {
            if (mu.dim != 1 || !(g->sigma > 0.0)) {
                throw DomainError("gaussian family is one-dimensional with sigma > 0");
            }
        }
    }
}

double moment(const MeasureRep &mu, const MultiIndex &k, const MomentOptions &options) {
    if (k.size() != mu.dim) {
        throw DomainError("multi-index dimension does not match measure dimension");
    }
    if (order(k) > options.max_order) {
        throw DomainError("moment order " + std::to_string(order(k)) + " exceeds the configured limit " +
                          std::to_string(options.max_order));
    }
    validate(mu);
    auto monomial = [&k](const std::vector<double> &x) {
        double v = 1.0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            v *= int_pow(x[i], k[i]);
        }
        return v;
    };
    if (const auto *atoms = std::get_if<AtomicMeasure>(&mu.body)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < atoms->points.size(); ++i) {
            sum += atoms->weights[i] * monomial(atoms->points[i]);
        }
        return sum;
    }
    if (const auto *grid = std::get_if<GridDensity>(&mu.body)) {
        double sum = 0.0;
        for_each_grid_point(*grid, [&](const std::vector<double> &x, double w) { sum += w * monomial(x); });
        return sum;
    }
    const auto &closed = std::get<ClosedForm>(mu.body);
    if (const auto *ps = std::get_if<PhaseSpaceDiagonal>(&closed)) {
        return phase_space_moment(*ps, k[0], k[1]);
    }
    return gaussian_moment(std::get<GaussianDensity>(closed), k[0]);
}

double total_mass(const MeasureRep &mu) { return moment(mu, MultiIndex(mu.dim, 0U)); }

MomentSequence moment_sequence(const MeasureRep &mu, unsigned max_order) {
    MomentSequence c;
    c.dim = mu.dim;
    c.max_order = max_order;
    const MomentOptions options{std::max(max_order, MomentOptions{}.max_order)};
    for (const MultiIndex &k : multi_indices(mu.dim, max_order)) {
        c.entries.emplace(k, moment(mu, k, options));
    }
    return c;
}

MomentSequence translate_moments(const MomentSequence &c, double a, Direction direction) {
    if (c.dim != 1) {
        throw DomainError("translate_moments is defined for one-dimensional sequences");
    }
    const double shift = (direction == Direction::forward) ? a : -a;
    MomentSequence out;
    out.dim = 1;
    out.max_order = c.max_order;
    for (unsigned k = 0; k <= c.max_order; ++k) {
        double sum = 0.0;
        for (unsigned i = 0; i <= k; ++i) {
            sum += specfun::binomial(k, i) * int_pow(shift, k - i) * c.at({i});
        }
        out.entries[{k}] = sum;
    }
    return out;
}

MomentSequence reflect_moments(const MomentSequence &c) {
    MomentSequence out = c;
    for (auto &[k, v] : out.entries) {
        if (order(k) % 2 == 1) {
            v = -v;
        }
    }
    return out;
}

MomentSequence reduce_to_positive_half_line(const MomentSequence &c, const AxisSupport &support) {
    switch (support.kind) {
    case AxisKind::lower_bounded:
        // [a, inf) -> [0, inf) by u = x - a
        return translate_moments(c, support.lo, Direction::inverse);
    case AxisKind::upper_bounded:
        // (-inf, b] -> [-b, inf) by x -> -x, then u = -x + b
        return translate_moments(reflect_moments(c), support.hi, Direction::forward);
    default:
        throw DomainError("reduce_to_positive_half_line needs a half-line axis, got " +
                          to_string(support.kind));
    }
}

MomentSequence marginal_moments(const MomentSequence &c, std::size_t axis) {
    if (axis >= c.dim) {
        throw DomainError("marginal_moments: axis out of range");
    }
    MomentSequence out;
    out.dim = 1;
    out.max_order = c.max_order;
    for (unsigned j = 0; j <= c.max_order; ++j) {
        MultiIndex k(c.dim, 0U);
        k[axis] = j;
        out.entries[{j}] = c.at(k);
    }
    return out;
}

ExpBound exp_bound_integral(const MeasureRep &mu, double a) {
    bool norm_bound = false;
    return exp_integral_impl(mu, a, [](const std::vector<double> &x) { return norm(x); }, norm_bound);
}

ExpBound axis_exp_bound_integral(const MeasureRep &mu, std::size_t axis, double a) {
    if (axis >= mu.dim) {
        throw DomainError("axis index out of range");
    }
    bool norm_bound = false;
    return exp_integral_impl(mu, a, [axis](const std::vector<double> &x) { return std::abs(x[axis]); },
                             norm_bound);
}

DeterminacyReport determinacy_report(const MeasureRep &mu, const DeterminacyOptions &options) {
    validate(mu);
    if (!(options.a_start > 0.0) || !(options.a_min > 0.0)) {
        throw DomainError("determinacy search needs positive a_start and a_min");
    }
    const bool closed_2d = std::holds_alternative<ClosedForm>(mu.body) && mu.dim > 1;
    DeterminacyReport report;
    report.determinate_verdict = true;
    for (std::size_t axis = 0; axis < mu.dim; ++axis) {
        AxisVerdict verdict;
        verdict.axis = axis;
        verdict.support = mu.axis_support(axis);
        if (verdict.support.kind == AxisKind::compact) {
            verdict.exp_bounded = true;
            verdict.basis = "compact";
        } else {
            verdict.basis = closed_2d ? "norm-bound" : "marginal";
            for (double a = options.a_start; a >= options.a_min; a *= 0.5) {
                if (axis_exp_bound_integral(mu, axis, a).finite()) {
                    verdict.exp_bounded = true;
                    verdict.witness_a = a;
                    break;
                }
            }
        }
        report.determinate_verdict = report.determinate_verdict && verdict.exp_bounded;
        report.per_axis.push_back(verdict);
    }
    return report;
}

bool moment_match(const MeasureRep &mu, const MeasureRep &nu, unsigned max_order, double tol) {
    if (mu.dim != nu.dim) {
        throw DomainError("moment_match: dimensions differ");
    }
    const MomentOptions options{std::max(max_order, MomentOptions{}.max_order)};
    for (const MultiIndex &k : multi_indices(mu.dim, max_order)) {
        const double cm = moment(mu, k, options);
        const double cn = moment(nu, k, options);
        if (std::abs(cm - cn) > tol * std::max(1.0, std::abs(cm))) {
            return false;
        }
    }
    return true;
}

} // namespace phasemoments::moments
