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

#include "phasemoments/margins.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phasemoments/errors.hpp"
#include "phasemoments/specfun.hpp"

namespace phasemoments::margins {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double hermite_sq(unsigned s, double u) {
    const double f = specfun::hermite_function(s, u);
    return f * f;
}

// Interval outside which the position density is negligible.
Interval natural_window(unsigned s, const WavefunctionRep &phi, const MarginOptions &options) {
    const double spread = options.window + 2.0 * std::sqrt(static_cast<double>(s) + 1.0);
    if (const auto *v = std::get_if<povm::FockVector>(&phi.basis)) {
        const double w = spread + 2.0 * std::sqrt(static_cast<double>(v->dim()) + 1.0);
        return {-w, w};
    }
    const auto &g = std::get<GridWavefunction>(phi.basis);
    return {g.lo() - spread, g.hi() + spread};
}

IntervalSet merge(IntervalSet set) {
    std::sort(set.begin(), set.end(), [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    IntervalSet out;
    for (const Interval &iv : set) {
        if (!(iv.hi > iv.lo)) {
            continue;
        }
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

double integrate_line(const std::function<double(double)> &f, double lo, double hi,
                      const MarginOptions &options) {
    const quadrature::GaussRule rule =
        quadrature::legendre_panels(lo, hi, options.panel_nodes, options.panel_width);
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double term = rule.weights[i] * f(rule.nodes[i]);
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

void check_range(Interval iv, const char *what) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.hi < iv.lo) {
        throw DomainError(std::string(what) + ": empty or invalid interval");
    }
}

} // namespace

double WavefunctionRep::l2_norm() const {
    if (const auto *v = std::get_if<povm::FockVector>(&basis)) {
        return v->norm();
    }
    const auto &g = std::get<GridWavefunction>(basis);
    double sum = 0.0;
    for (std::size_t j = 0; j < g.values.size(); ++j) {
        const double w = (j == 0 || j + 1 == g.values.size()) ? 0.5 : 1.0;
        sum += w * std::norm(g.values[j]);
    }
    return std::sqrt(sum * g.dx);
}

WavefunctionRep WavefunctionRep::normalized() const {
    const double n = l2_norm();
    if (!(n > 0.0)) {
        throw DomainError("wavefunction has zero norm");
    }
    if (const auto *v = std::get_if<povm::FockVector>(&basis)) {
        return fock(v->normalized());
    }
    GridWavefunction g = std::get<GridWavefunction>(basis);
    for (Complex &c : g.values) {
        c /= n;
    }
    return grid(std::move(g));
}

Complex WavefunctionRep::value(double x) const {
    if (const auto *v = std::get_if<povm::FockVector>(&basis)) {
        if (v->dim() == 0) {
            return {};
        }
        const std::vector<double> f = specfun::hermite_functions(static_cast<unsigned>(v->dim() - 1), x);
        Complex sum{};
        for (std::size_t n = 0; n < v->dim(); ++n) {
            sum += v->coeffs[n] * f[n];
        }
        return sum;
    }
    const auto &g = std::get<GridWavefunction>(basis);
    if (g.values.empty() || x < g.lo() || x > g.hi()) {
        return {};
    }
    const double t = (x - g.x0) / g.dx;
    const auto j = std::min(static_cast<std::size_t>(t), g.values.size() - 1);
    if (j + 1 >= g.values.size()) {
        return g.values.back();
    }
    const double frac = t - static_cast<double>(j);
    return (1.0 - frac) * g.values[j] + frac * g.values[j + 1];
}

WavefunctionRep make_bump(double a, double b, std::size_t points) {
    if (!(b > a) || points < 3) {
        throw DomainError("make_bump: need a < b and at least 3 points");
    }
    GridWavefunction g;
    g.x0 = a;
    g.dx = (b - a) / static_cast<double>(points - 1);
    g.values.resize(points);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t j = 0; j < points; ++j) {
        const double t = (a + g.dx * static_cast<double>(j) - mid) / half;
        g.values[j] = std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
    }
    return WavefunctionRep::grid(std::move(g)).normalized();
}

double unsharp_position_density(unsigned s, const WavefunctionRep &phi, double x) {
    if (const auto *v = std::get_if<povm::FockVector>(&phi.basis)) {
        // q = x/2 + t/sqrt(2) turns e^{-(x-q)^2 - q^2} into e^{-x^2/2 - t^2}.
        const int n = static_cast<int>(s + v->dim()) + 16;
        const quadrature::GaussRule rule = quadrature::gauss_hermite_unweighted(n);
        const double scale = std::numbers::sqrt2 / 2.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double q = 0.5 * x + scale * rule.nodes[i];
            sum += rule.weights[i] * hermite_sq(s, x - q) * std::norm(phi.value(q));
        }
        return scale * sum;
    }
    const auto &g = std::get<GridWavefunction>(phi.basis);
    double sum = 0.0;
    for (std::size_t j = 0; j < g.values.size(); ++j) {
        const double w = (j == 0 || j + 1 == g.values.size()) ? 0.5 : 1.0;
        const double q = g.x0 + g.dx * static_cast<double>(j);
        sum += w * hermite_sq(s, x - q) * std::norm(g.values[j]);
    }
    return sum * g.dx;
}

double unsharp_position_prob(unsigned s, const WavefunctionRep &phi, const IntervalSet &x_set,
                             const MarginOptions &options) {
    const Interval window = natural_window(s, phi, options);
    IntervalSet clamped;
    for (const Interval &iv : x_set) {
        check_range(iv, "unsharp_position_prob");
        clamped.push_back({std::max(iv.lo, window.lo), std::min(iv.hi, window.hi)});
    }
    double total = 0.0;
    for (const Interval &iv : merge(std::move(clamped))) {
        total += integrate_line([&](double x) { return unsharp_position_density(s, phi, x); }, iv.lo, iv.hi,
                                options);
    }
    return total;
}

double unsharp_position_moment(unsigned s, const WavefunctionRep &phi, unsigned j, const MarginOptions &options) {
    const Interval window = natural_window(s, phi, options);
    return integrate_line(
        [&](double x) { return std::pow(x, static_cast<double>(j)) * unsharp_position_density(s, phi, x); },
        window.lo, window.hi, options);
}

povm::FockVector fourier_rotate(const povm::FockVector &v) {
    static const Complex kPhase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    povm::FockVector out = v;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        out.coeffs[n] *= kPhase[n % 4];
    }
    return out;
}

double unsharp_momentum_density(unsigned s, const WavefunctionRep &phi, double p) {
    const auto *v = std::get_if<povm::FockVector>(&phi.basis);
    if (v == nullptr) {
        throw DomainError("fock-basis-required");
    }
    return unsharp_position_density(s, WavefunctionRep::fock(fourier_rotate(*v)), p);
}

double PositionEnvelope::operator()(double x) const {
    const double u = std::abs(x);
    double p = 0.0;
    for (std::size_t j = poly.size(); j-- > 0;) {
        p = p * u + poly[j];
    }
    const double n2 = specfun::hermite_norm(s) * specfun::hermite_norm(s);
    return bound_m * n2 * std::exp(-x * x + 2.0 * c * u) * p;
}

PositionEnvelope make_position_envelope(unsigned s, const WavefunctionRep &phi) {
    const auto *g = std::get_if<GridWavefunction>(&phi.basis);
    if (g == nullptr) {
        throw DomainError("envelope_bound needs a compactly supported wavefunction");
    }
    PositionEnvelope env;
    env.s = s;
    env.support_lo = g->lo();
    env.support_hi = g->hi();
    env.c = std::max(std::abs(env.support_lo), std::abs(env.support_hi));
    for (const Complex &v : g->values) {
        env.bound_m = std::max(env.bound_m, std::norm(v));
    }
    // sum_j |h_j| (u + C)^j expanded in powers of u.
    const std::vector<double> h = specfun::hermite_polynomial_coefficients(s);
    std::vector<double> q(s + 1, 0.0);
    for (unsigned j = 0; j <= s; ++j) {
        const double hj = std::abs(h[j]);
        if (hj == 0.0) {
            continue;
        }
        for (unsigned i = 0; i <= j; ++i) {
            q[i] += hj * specfun::binomial(j, i) * std::pow(env.c, static_cast<double>(j - i));
        }
    }
    env.poly.assign(2 * s + 1, 0.0);
    const double width = env.support_hi - env.support_lo;
    for (unsigned i = 0; i <= s; ++i) {
        for (unsigned j = 0; j <= s; ++j) {
            env.poly[i + j] += width * q[i] * q[j];
        }
    }
    return env;
}

double envelope_bound(unsigned s, const WavefunctionRep &phi, double x) {
    return make_position_envelope(s, phi)(x);
}

Complex radial_margin_element(unsigned s, unsigned k, unsigned l, Interval r_range, std::size_t d,
                              const quadrature::RegionRuleHint &hint) {
    check_range(r_range, "radial_margin_element");
    if (k >= d || l >= d) {
        throw DomainError("radial_margin_element: index outside truncation");
    }
    const quadrature::Region region =
        quadrature::AnnulusSector{std::max(r_range.lo, 0.0), r_range.hi, 0.0, kTwoPi};
    return quadrature::integrate_region([&](Complex z) { return povm::pair_density(s, k, l, z); }, region, hint);
}

Complex angular_margin_element(unsigned s, unsigned k, unsigned l, Interval theta_range, std::size_t d,
                               const quadrature::RegionRuleHint &hint) {
    check_range(theta_range, "angular_margin_element");
    if (k >= d || l >= d) {
        throw DomainError("angular_margin_element: index outside truncation");
    }
    const quadrature::Region region = quadrature::AnnulusSector{
        0.0, std::numeric_limits<double>::infinity(), theta_range.lo, theta_range.hi};
    return quadrature::integrate_region([&](Complex z) { return povm::pair_density(s, k, l, z); }, region, hint);
}

povm::TruncatedOperator radial_margin_operator(unsigned s, Interval r_range, std::size_t d,
                                               const quadrature::RegionRuleHint &hint) {
    check_range(r_range, "radial_margin_operator");
    return povm::povm_element(s, quadrature::AnnulusSector{std::max(r_range.lo, 0.0), r_range.hi, 0.0, kTwoPi}, d,
                              hint);
}

povm::TruncatedOperator angular_margin_operator(unsigned s, Interval theta_range, std::size_t d,
                                                const quadrature::RegionRuleHint &hint) {
    check_range(theta_range, "angular_margin_operator");
    return povm::povm_element(
        s,
        quadrature::AnnulusSector{0.0, std::numeric_limits<double>::infinity(), theta_range.lo, theta_range.hi},
        d, hint);
}

Complex polar_moment_element(unsigned s, unsigned n_r, unsigned m_theta, unsigned k, unsigned l,
                             const PolarMomentOptions &options) {
    // In u = r^2 the integrand is e^{-u} u^{(n_r + k + l)/2 + integer}.
    const double alpha = ((n_r + k + l) % 2 == 0) ? 0.0 : 0.5;
    const quadrature::GaussRule radial = quadrature::gauss_laguerre_unweighted(options.n_laguerre, alpha);
    const quadrature::GaussRule angular = quadrature::gauss_legendre(options.n_theta, 0.0, kTwoPi);
    Complex sum{};
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double u = radial.nodes[i];
        const double r = std::sqrt(u);
        const double radial_factor = 0.5 * radial.weights[i] * std::pow(r, static_cast<double>(n_r));
        Complex inner{};
        for (std::size_t j = 0; j < angular.nodes.size(); ++j) {
            const double theta = angular.nodes[j];
            inner += angular.weights[j] * std::pow(theta, static_cast<double>(m_theta)) *
                     povm::pair_density(s, k, l, std::polar(r, theta));
        }
        sum += radial_factor * inner;
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
        throw QuadratureError("polar_moment_element: non-finite result");
    }
    return sum;
}

} // namespace phasemoments::margins
