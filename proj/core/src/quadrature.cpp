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

#include "phasemoments/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "phasemoments/errors.hpp"

namespace phasemoments::quadrature {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Family { hermite, laguerre, legendre };

/// Three-term recurrence data of an orthonormal polynomial family:
///   b_{j+1} p_{j+1} = (x - a_j) p_j - b_j p_{j-1}.
struct Jacobi {
    std::vector<double> diag;    // a_0 .. a_{n-1}
    std::vector<double> offdiag; // b_1 .. b_{n-1}
    double mu0 = 1.0;            // integral of the weight
};

Jacobi jacobi_matrix(Family family, int n, double alpha) {
    Jacobi j;
    j.diag.assign(static_cast<std::size_t>(n), 0.0);
    j.offdiag.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0.0);
    for (int i = 0; i < n; ++i) {
        const double id = i;
        if (family == Family::laguerre) {
            j.diag[static_cast<std::size_t>(i)] = 2.0 * id + 1.0 + alpha;
        }
        if (i + 1 < n) {
            const double k = id + 1.0;
            double b = 0.0;
            switch (family) {
            case Family::hermite:
                b = std::sqrt(k / 2.0);
                break;
            case Family::laguerre:
                b = std::sqrt(k * (k + alpha));
                break;
            case Family::legendre:
                b = k / std::sqrt(4.0 * k * k - 1.0);
                break;
            }
            j.offdiag[static_cast<std::size_t>(i)] = b;
        }
    }
    switch (family) {
    case Family::hermite:
        j.mu0 = std::sqrt(std::numbers::pi);
        break;
    case Family::laguerre:
        j.mu0 = std::tgamma(alpha + 1.0);
        break;
    case Family::legendre:
        j.mu0 = 2.0;
        break;
    }
    return j;
}

/// Square root of the weight function, used to scale p_0 so that the
/// Christoffel sum yields weights already divided by the weight.
double sqrt_weight(Family family, double alpha, double x) {
    switch (family) {
    case Family::hermite:
        return std::exp(-0.5 * x * x);
    case Family::laguerre:
        return std::exp(-0.5 * x + 0.5 * alpha * std::log(x));
    case Family::legendre:
        return 1.0;
    }
    return 1.0;
}

struct RecurrenceValue {
    double q = 0;       // unnormalised p_n(x) times the scale
    double dq = 0;      // derivative of q
    double sum_sq = 0;  // sum_{j<n} p_j(x)^2 times scale^2
};

RecurrenceValue evaluate(const Jacobi &jac, double x, double scale) {
    const std::size_t n = jac.diag.size();
    double p_prev = 0.0;
    double dp_prev = 0.0;
    double p = scale / std::sqrt(jac.mu0);
    double dp = 0.0;
    double sum_sq = p * p;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double b_j = (j == 0) ? 0.0 : jac.offdiag[j - 1];
        const double b_next = jac.offdiag[j];
        const double p_next = ((x - jac.diag[j]) * p - b_j * p_prev) / b_next;
        const double dp_next = (p + (x - jac.diag[j]) * dp - b_j * dp_prev) / b_next;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
        sum_sq += p * p;
    }
    const double b_last = (n >= 2) ? jac.offdiag[n - 2] : 0.0;
    RecurrenceValue v;
    v.q = (x - jac.diag[n - 1]) * p - b_last * p_prev;
    v.dq = p + (x - jac.diag[n - 1]) * dp - b_last * dp_prev;
    v.sum_sq = sum_sq;
    return v;
}

struct CachedRule {
    GaussRule rule;
    std::vector<double> unweighted;
};

CachedRule build_rule(Family family, int n, double alpha) {
    if (n < 1) {
        throw DomainError("Gauss rule needs at least one node");
    }
    if (family == Family::laguerre && !(alpha > -1.0)) {
        throw DomainError("gauss_laguerre: alpha must exceed -1");
    }
    const Jacobi jac = jacobi_matrix(family, n, alpha);
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(jac.diag.data(), n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int i = 0; i + 1 < n; ++i) {
        sub(i) = jac.offdiag[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    CachedRule out;
    out.rule.nodes.resize(static_cast<std::size_t>(n));
    out.rule.weights.resize(static_cast<std::size_t>(n));
    out.unweighted.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()(i);
        // Newton polishing on the recurrence; keep a step only if it helps.
        for (int iter = 0; iter < 4; ++iter) {
            const double scale = sqrt_weight(family, alpha, x);
            const RecurrenceValue v = evaluate(jac, x, scale);
            if (v.dq == 0.0 || !std::isfinite(v.dq)) {
                break;
            }
            const double candidate = x - v.q / v.dq;
            if (family == Family::laguerre && candidate <= 0.0) {
                break;
            }
            const RecurrenceValue vc = evaluate(jac, candidate, sqrt_weight(family, alpha, candidate));
            if (std::abs(vc.q) >= std::abs(v.q)) {
                break;
            }
            x = candidate;
        }
        const auto idx = static_cast<std::size_t>(i);
        const double scale = sqrt_weight(family, alpha, x);
        const RecurrenceValue v = evaluate(jac, x, scale);
        out.rule.nodes[idx] = x;
        out.unweighted[idx] = 1.0 / v.sum_sq;
        out.rule.weights[idx] = out.unweighted[idx] * scale * scale;
    }
    return out;
}

const CachedRule &cached_rule(Family family, int n, double alpha) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, double>, CachedRule> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_tuple(static_cast<int>(family), n, alpha);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_rule(family, n, alpha)).first;
    }
    return it->second;
}

void neumaier_add(double &sum, double &comp, double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
        comp += (sum - t) + value;
    } else {
        comp += (value - t) + sum;
    }
    sum = t;
}

void append_polar(PlaneRule &rule, Complex center, const std::vector<double> &radii,
                  const std::vector<double> &radial_weights, const std::vector<double> &angles,
                  const std::vector<double> &angular_weights) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = 0; j < angles.size(); ++j) {
            rule.nodes.push_back(center + std::polar(radii[i], angles[j]));
            rule.weights.push_back(radial_weights[i] * angular_weights[j]);
        }
    }
}

void periodic_angles(int n_theta, double theta0, std::vector<double> &angles,
                     std::vector<double> &weights) {
    angles.resize(static_cast<std::size_t>(n_theta));
    weights.assign(static_cast<std::size_t>(n_theta), kTwoPi / n_theta);
    for (int j = 0; j < n_theta; ++j) {
        angles[static_cast<std::size_t>(j)] = theta0 + kTwoPi * j / n_theta;
    }
}

double clamp_to_cutoff(double v, double cutoff) { return std::clamp(v, -cutoff, cutoff); }

} // namespace

GaussRule gauss_hermite(int n) { return cached_rule(Family::hermite, n, 0.0).rule; }

GaussRule gauss_laguerre(int n, double alpha) { return cached_rule(Family::laguerre, n, alpha).rule; }

GaussRule gauss_hermite_unweighted(int n) {
    const CachedRule &c = cached_rule(Family::hermite, n, 0.0);
    return {c.rule.nodes, c.unweighted};
}

GaussRule gauss_laguerre_unweighted(int n, double alpha) {
    const CachedRule &c = cached_rule(Family::laguerre, n, alpha);
    return {c.rule.nodes, c.unweighted};
}

GaussRule gauss_legendre(int n) { return cached_rule(Family::legendre, n, 0.0).rule; }

GaussRule gauss_legendre(int n, double lo, double hi) {
    const GaussRule &base = cached_rule(Family::legendre, n, 0.0).rule;
    GaussRule r;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    r.nodes.reserve(base.nodes.size());
    r.weights.reserve(base.nodes.size());
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        r.nodes.push_back(mid + half * base.nodes[i]);
        r.weights.push_back(half * base.weights[i]);
    }
    return r;
}

GaussRule legendre_panels(double lo, double hi, int nodes_per_panel, double panel_width) {
    GaussRule r;
    if (!(hi > lo)) {
        return r;
    }
    if (!(panel_width > 0.0)) {
        throw DomainError("legendre_panels: panel width must be positive");
    }
    const auto panels = static_cast<int>(std::ceil((hi - lo) / panel_width - 1e-12));
    const double width = (hi - lo) / std::max(panels, 1);
    for (int p = 0; p < std::max(panels, 1); ++p) {
        const double a = lo + p * width;
        const double b = (p + 1 == std::max(panels, 1)) ? hi : a + width;
        const GaussRule piece = gauss_legendre(nodes_per_panel, a, b);
        r.nodes.insert(r.nodes.end(), piece.nodes.begin(), piece.nodes.end());
        r.weights.insert(r.weights.end(), piece.weights.begin(), piece.weights.end());
    }
    return r;
}

PlaneRule make_plane_rule(const QuadratureScheme &scheme) {
    PlaneRule rule;
    if (const auto *gh = std::get_if<GaussHermiteScheme>(&scheme)) {
        const CachedRule &base = cached_rule(Family::hermite, gh->n, 0.0);
        const std::size_t n = base.rule.nodes.size();
        rule.nodes.reserve(n * n);
        rule.weights.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rule.nodes.emplace_back(base.rule.nodes[i], base.rule.nodes[j]);
                rule.weights.push_back(base.unweighted[i] * base.unweighted[j]);
            }
        }
    } else if (std::holds_alternative<GaussLaguerreScheme>(scheme)) {
        throw DomainError("gauss_laguerre is a one-dimensional scheme; use radial_angular for the plane");
    } else if (const auto *ra = std::get_if<RadialAngularScheme>(&scheme)) {
        if (ra->n_r < 1 || ra->n_theta < 1) {
            throw DomainError("radial_angular scheme needs positive n_r and n_theta");
        }
        // int f dlambda = (1/2) int_0^inf du int_0^{2pi} dtheta f(sqrt(u) e^{i theta})
        const CachedRule &base = cached_rule(Family::laguerre, ra->n_r, 0.0);
        std::vector<double> radii(base.rule.nodes.size());
        std::vector<double> radial_weights(base.rule.nodes.size());
        for (std::size_t i = 0; i < radii.size(); ++i) {
            radii[i] = std::sqrt(base.rule.nodes[i]);
            radial_weights[i] = 0.5 * base.unweighted[i];
        }
        std::vector<double> angles;
        std::vector<double> angular_weights;
        periodic_angles(ra->n_theta, 0.0, angles, angular_weights);
        append_polar(rule, Complex{0.0, 0.0}, radii, radial_weights, angles, angular_weights);
    } else if (const auto *grid = std::get_if<Grid2dScheme>(&scheme)) {
        if (!(grid->spacing > 0.0) || !(grid->extent > 0.0)) {
            throw DomainError("grid_2d scheme needs positive spacing and extent");
        }
        const auto n = static_cast<int>(std::llround(2.0 * grid->extent / grid->spacing)) + 1;
        const double h = 2.0 * grid->extent / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double wx = (i == 0 || i == n - 1) ? 0.5 * h : h;
            for (int j = 0; j < n; ++j) {
                const double wy = (j == 0 || j == n - 1) ? 0.5 * h : h;
                rule.nodes.emplace_back(-grid->extent + i * h, -grid->extent + j * h);
                rule.weights.push_back(wx * wy);
            }
        }
    }
    return rule;
}

void validate(const Region &region) {
    std::visit(
        [](const auto &r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rectangle>) {
                if (!(r.x0 <= r.x1) || !(r.y0 <= r.y1)) {
                    throw DomainError("rectangle requires x0 <= x1 and y0 <= y1");
                }
            } else if constexpr (std::is_same_v<T, Disk>) {
                if (!(r.radius >= 0.0) || !std::isfinite(r.radius)) {
                    throw DomainError("disk radius must be finite and nonnegative");
                }
            } else if constexpr (std::is_same_v<T, AnnulusSector>) {
                if (!(r.r0 >= 0.0) || !(r.r0 <= r.r1) || !std::isfinite(r.r0)) {
                    throw DomainError("annulus sector requires 0 <= r0 <= r1");
                }
                if (!(r.theta0 >= 0.0) || !(r.theta0 <= r.theta1) || r.theta1 > kTwoPi + 1e-12) {
                    throw DomainError("annulus sector requires 0 <= theta0 <= theta1 <= 2 pi");
                }
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                if (!std::isfinite(r.normal_angle) || !std::isfinite(r.offset)) {
                    throw DomainError("half plane parameters must be finite");
                }
            }
        },
        region);
}

Region parse_region(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    std::vector<double> v;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string item(rest.substr(0, comma));
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(item, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (item.empty() || used != item.size()) {
                throw DomainError("region: cannot parse number '" + item + "'");
            }
            v.push_back(x);
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
    }
    const auto need = [&](std::size_t n) {
        if (v.size() != n) {
            throw DomainError("region '" + std::string(kind) + "' expects " + std::to_string(n) + " numbers");
        }
    };
    Region region;
    if (kind == "full") {
        need(0);
        region = FullPlane{};
    } else if (kind == "rect") {
        need(4);
        region = Rectangle{v[0], v[1], v[2], v[3]};
    } else if (kind == "disk") {
        need(3);
        region = Disk{{v[0], v[1]}, v[2]};
    } else if (kind == "sector") {
        need(4);
        region = AnnulusSector{v[0], v[1], v[2], v[3]};
    } else if (kind == "half") {
        need(2);
        region = HalfPlane{v[0], v[1]};
    } else {
        throw DomainError("unknown region kind '" + std::string(kind) + "'");
    }
    validate(region);
    return region;
}

std::string describe(const Region &region) {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto &r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, FullPlane>) {
                os << "full";
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                os << "rect:" << r.x0 << ',' << r.x1 << ',' << r.y0 << ',' << r.y1;
            } else if constexpr (std::is_same_v<T, Disk>) {
                os << "disk:" << r.center.real() << ',' << r.center.imag() << ',' << r.radius;
            } else if constexpr (std::is_same_v<T, AnnulusSector>) {
                os << "sector:" << r.r0 << ',' << r.r1 << ',' << r.theta0 << ',' << r.theta1;
            } else {
                os << "half:" << r.normal_angle << ',' << r.offset;
            }
        },
        region);
    return os.str();
}

PlaneRule make_region_rule(const Region &region, const RegionRuleHint &hint) {
    validate(region);
    PlaneRule rule;
    if (std::holds_alternative<FullPlane>(region)) {
        return make_plane_rule(hint.full_plane);
    }
    if (const auto *rect = std::get_if<Rectangle>(&region)) {
        const GaussRule xs = legendre_panels(clamp_to_cutoff(rect->x0, hint.cutoff),
                                             clamp_to_cutoff(rect->x1, hint.cutoff),
                                             hint.panel_nodes, hint.panel_width);
        const GaussRule ys = legendre_panels(clamp_to_cutoff(rect->y0, hint.cutoff),
                                             clamp_to_cutoff(rect->y1, hint.cutoff),
                                             hint.panel_nodes, hint.panel_width);
        for (std::size_t i = 0; i < xs.nodes.size(); ++i) {
            for (std::size_t j = 0; j < ys.nodes.size(); ++j) {
                rule.nodes.emplace_back(xs.nodes[i], ys.nodes[j]);
                rule.weights.push_back(xs.weights[i] * ys.weights[j]);
            }
        }
        return rule;
    }
    if (const auto *disk = std::get_if<Disk>(&region)) {
        if (disk->radius == 0.0) {
            return rule;
        }
        const GaussRule rs = gauss_legendre(hint.n_r, 0.0, disk->radius);
        std::vector<double> radial_weights(rs.nodes.size());
        for (std::size_t i = 0; i < rs.nodes.size(); ++i) {
            radial_weights[i] = rs.weights[i] * rs.nodes[i];
        }
        std::vector<double> angles;
        std::vector<double> angular_weights;
        periodic_angles(hint.n_theta, 0.0, angles, angular_weights);
        append_polar(rule, disk->center, rs.nodes, radial_weights, angles, angular_weights);
        return rule;
    }
    if (const auto *sector = std::get_if<AnnulusSector>(&region)) {
        if (sector->r0 == sector->r1 || sector->theta0 == sector->theta1) {
            return rule;
        }
        std::vector<double> radii;
        std::vector<double> radial_weights;
        // Off-diagonal densities carry odd powers of r, so an unbounded
        // annulus is cut at r0 + cutoff and panelled in r rather than
        // mapped to a Laguerre rule in r^2.
        const GaussRule rs = std::isinf(sector->r1)
                                 ? legendre_panels(sector->r0, sector->r0 + hint.cutoff, hint.panel_nodes,
                                                   hint.panel_width)
                                 : gauss_legendre(hint.n_r, sector->r0, sector->r1);
        for (std::size_t i = 0; i < rs.nodes.size(); ++i) {
            radii.push_back(rs.nodes[i]);
            radial_weights.push_back(rs.weights[i] * rs.nodes[i]);
        }
        std::vector<double> angles;
        std::vector<double> angular_weights;
        if (std::abs(sector->theta1 - sector->theta0 - kTwoPi) < 1e-12) {
            periodic_angles(hint.n_theta, sector->theta0, angles, angular_weights);
        } else {
            const GaussRule ts = gauss_legendre(hint.n_theta, sector->theta0, sector->theta1);
            angles = ts.nodes;
            angular_weights = ts.weights;
        }
        append_polar(rule, Complex{0.0, 0.0}, radii, radial_weights, angles, angular_weights);
        return rule;
    }
    const auto &half = std::get<HalfPlane>(region);
    const Complex normal = std::polar(1.0, half.normal_angle);
    const double t_hi = std::max(half.offset, 0.0) + hint.cutoff;
    const GaussRule ts = legendre_panels(half.offset, t_hi, hint.panel_nodes, hint.panel_width);
    const GaussRule vs = legendre_panels(-hint.cutoff, hint.cutoff, hint.panel_nodes, hint.panel_width);
    for (std::size_t i = 0; i < ts.nodes.size(); ++i) {
        for (std::size_t j = 0; j < vs.nodes.size(); ++j) {
            rule.nodes.push_back(normal * Complex{ts.nodes[i], vs.nodes[j]});
            rule.weights.push_back(ts.weights[i] * vs.weights[j]);
        }
    }
    return rule;
}

Complex integrate(const PlaneIntegrand &f, const PlaneRule &rule) {
    double re = 0.0;
    double re_c = 0.0;
    double im = 0.0;
    double im_c = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Complex v = f(rule.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream os;
            os << "integrand is not finite at node " << i << " (z = " << rule.nodes[i] << ")";
            throw QuadratureError(os.str());
        }
        neumaier_add(re, re_c, rule.weights[i] * v.real());
        neumaier_add(im, im_c, rule.weights[i] * v.imag());
    }
    return {re + re_c, im + im_c};
}

Complex integrate_plane(const PlaneIntegrand &f, const QuadratureScheme &scheme) {
    return integrate(f, make_plane_rule(scheme));
}

Complex integrate_region(const PlaneIntegrand &f, const Region &region, const RegionRuleHint &hint) {
    return integrate(f, make_region_rule(region, hint));
}

std::vector<Complex> integrate_many(const PlaneVectorIntegrand &f, std::size_t count,
                                    const PlaneRule &rule) {
    std::vector<double> re(count, 0.0), re_c(count, 0.0), im(count, 0.0), im_c(count, 0.0);
    std::vector<Complex> buffer(count);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        std::fill(buffer.begin(), buffer.end(), Complex{});
        f(rule.nodes[i], buffer);
        for (std::size_t c = 0; c < count; ++c) {
            const Complex v = buffer[c];
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                std::ostringstream os;
                os << "integrand component " << c << " is not finite at node " << i
                   << " (z = " << rule.nodes[i] << ")";
                throw QuadratureError(os.str());
            }
            neumaier_add(re[c], re_c[c], rule.weights[i] * v.real());
            neumaier_add(im[c], im_c[c], rule.weights[i] * v.imag());
        }
    }
    std::vector<Complex> out(count);
    for (std::size_t c = 0; c < count; ++c) {
        out[c] = {re[c] + re_c[c], im[c] + im_c[c]};
    }
    return out;
}

double shifted_radial_integral(double a, unsigned p) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("shifted_radial_integral: a must be finite and >= 0");
    }
    const double shift = 0.5 * a;
    const double peak = (-a + std::sqrt(a * a + 8.0 * p)) / 4.0;
    const double t_hi = std::max(peak, 0.0) + 12.0;
    constexpr int kNodes = 20;
    double sum = 0.0;
    double comp = 0.0;
    auto accumulate = [&](const GaussRule &rule) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = rule.nodes[i];
            const double r = t + shift;
            neumaier_add(sum, comp, rule.weights[i] * std::exp(-t * t) * std::pow(r, p));
        }
    };
    if (shift > 0.0) {
        accumulate(legendre_panels(-shift, 0.0, kNodes, 1.0));
    }
    accumulate(legendre_panels(0.0, t_hi, kNodes, 1.0));
    const double value = std::exp(shift * shift) * (sum + comp);
    if (!std::isfinite(value)) {
        throw OverflowError("shifted_radial_integral overflows");
    }
    return value;
}

} // namespace phasemoments::quadrature
