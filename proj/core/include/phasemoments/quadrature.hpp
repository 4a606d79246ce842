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

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/// Deterministic Gauss rules and plane/region integration.
///
/// Plane integrals are taken against Lebesgue measure d lambda(z) on the
/// complex plane. Every rule is a fixed list of nodes and strictly
/// positive weights; sums run in node order so results do not depend on
/// evaluation order.
namespace phasemoments::quadrature {

using Complex = std::complex<double>;

/// One-dimensional Gauss rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule for weight e^{-x^2} on the real line.
GaussRule gauss_hermite(int n);

/// n-point rule for weight x^alpha e^{-x} on [0, inf), alpha > -1.
GaussRule gauss_laguerre(int n, double alpha);

/// Same nodes as gauss_hermite with weights divided by e^{-x^2}, so that
/// sum w_i f(x_i) approximates int f(x) dx for f already carrying e^{-x^2}.
GaussRule gauss_hermite_unweighted(int n);

/// Same nodes as gauss_laguerre with weights divided by x^alpha e^{-x}.
GaussRule gauss_laguerre_unweighted(int n, double alpha);

/// n-point rule for weight 1 on [-1, 1].
GaussRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [lo, hi].
GaussRule gauss_legendre(int n, double lo, double hi);

/// Gauss-Legendre panels of width <= panel_width covering [lo, hi].
GaussRule legendre_panels(double lo, double hi, int nodes_per_panel, double panel_width);

struct GaussHermiteScheme {
    int n = 40;
};
struct GaussLaguerreScheme {
    int n = 40;
    double alpha = 0.0;
};
/// Gauss-Laguerre in u = |z|^2 times an n_theta-point periodic trapezoid
/// rule in the angle.
struct RadialAngularScheme {
    int n_r = 80;
    int n_theta = 128;
};
/// Uniform trapezoid grid on [-extent, extent]^2.
struct Grid2dScheme {
    double spacing = 0.05;
    double extent = 10.0;
};

using QuadratureScheme =
    std::variant<GaussHermiteScheme, GaussLaguerreScheme, RadialAngularScheme, Grid2dScheme>;

/// Nodes and weights for integrals over (a part of) the plane.
struct PlaneRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Rule for the whole plane. gauss_hermite is a tensor product in (x, y)
/// and gauss_laguerre is rejected (one-dimensional only).
PlaneRule make_plane_rule(const QuadratureScheme &scheme);

struct FullPlane {};
struct Rectangle {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};
struct Disk {
    Complex center{0.0, 0.0};
    double radius = 0;
};
/// {r e^{i theta} : r0 <= r <= r1, theta0 <= theta <= theta1}; r1 may be
/// +inf, 0 <= theta0 <= theta1 <= 2 pi.
struct AnnulusSector {
    double r0 = 0, r1 = 0, theta0 = 0, theta1 = 0;
};
/// {z : Re(z e^{-i normal_angle}) >= offset}.
struct HalfPlane {
    double normal_angle = 0;
    double offset = 0;
};

using Region = std::variant<FullPlane, Rectangle, Disk, AnnulusSector, HalfPlane>;

/// Throws DomainError when extents are negative or out of order.
void validate(const Region &region);

std::string describe(const Region &region);

/// Inverse of describe: "full", "rect:x0,x1,y0,y1", "disk:cx,cy,R",
/// "sector:r0,r1,theta0,theta1" (r1 may be "inf") or "half:angle,offset".
/// Throws DomainError on malformed text; the result is validated.
Region parse_region(std::string_view text);

/// Knobs for region rules. Unbounded directions are truncated at
/// |coordinate| <= cutoff, which is exact to double precision for
/// integrands dominated by e^{-|z|^2} times a polynomial.
struct RegionRuleHint {
    int n_r = 48;
    int n_theta = 64;
    int panel_nodes = 16;
    double panel_width = 1.0;
    double cutoff = 14.0;
    RadialAngularScheme full_plane{};
};

PlaneRule make_region_rule(const Region &region, const RegionRuleHint &hint = {});

using PlaneIntegrand = std::function<Complex(Complex)>;

/// sum_i w_i f(z_i). Throws QuadratureError naming the node when f is not
/// finite there.
Complex integrate(const PlaneIntegrand &f, const PlaneRule &rule);

Complex integrate_plane(const PlaneIntegrand &f, const QuadratureScheme &scheme);

Complex integrate_region(const PlaneIntegrand &f, const Region &region,
                         const RegionRuleHint &hint = {});

/// Vector-valued integrand: fills `out` (size `count`) at node z.
using PlaneVectorIntegrand = std::function<void(Complex z, std::span<Complex> out)>;

std::vector<Complex> integrate_many(const PlaneVectorIntegrand &f, std::size_t count,
                                    const PlaneRule &rule);

/// int_0^inf e^{a r - r^2} r^p dr, by completing the square
/// e^{a^2/4} int_{-a/2}^inf e^{-t^2} (t + a/2)^p dt on Gauss-Legendre panels
/// anchored at r = a/2. Requires a >= 0.
double shifted_radial_integral(double a, unsigned p);

} // namespace phasemoments::quadrature
