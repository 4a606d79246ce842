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
#include <limits>
#include <variant>
#include <vector>

#include "phasemoments/povm.hpp"
#include "phasemoments/quadrature.hpp"

/// Cartesian (unsharp position / momentum) and polar marginals of A^{|s>}.
///
/// Coordinates follow z = (q + i p) / sqrt(2): the position marginal is
/// the distribution of sqrt(2) Re z and the momentum marginal that of
/// sqrt(2) Im z. Polar angles are measured from the positive real axis in
/// [0, 2 pi).
namespace phasemoments::margins {

using Complex = std::complex<double>;

/// Position-space samples phi(x0 + j dx), j = 0..n-1, zero outside.
struct GridWavefunction {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<Complex> values;

    double lo() const { return x0; }
    double hi() const { return x0 + dx * static_cast<double>(values.size() - 1); }
};

/// A wavefunction either as Fock coefficients (phi(x) = sum c_n f_n(x)) or
/// as a compactly supported grid.
struct WavefunctionRep {
    std::variant<povm::FockVector, GridWavefunction> basis;

    static WavefunctionRep fock(povm::FockVector v) { return {std::move(v)}; }
    static WavefunctionRep grid(GridWavefunction g) { return {std::move(g)}; }

    bool is_fock() const { return std::holds_alternative<povm::FockVector>(basis); }
    /// L^2 norm (trapezoid rule for grids).
    double l2_norm() const;
    WavefunctionRep normalized() const;
    /// phi(x).
    Complex value(double x) const;
};

/// Normalised smooth bump exp(-1/(1-t^2)) on [a, b] sampled at `points`
/// grid points.
WavefunctionRep make_bump(double a, double b, std::size_t points);

/// Interval with possibly infinite ends.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

using IntervalSet = std::vector<Interval>;

struct MarginOptions {
    int panel_nodes = 20;
    double panel_width = 0.5;
    /// Half-width added beyond the natural decay scale of the density.
    double window = 12.0;
};

/// g(x) = int |f_s(x - q)|^2 |phi(q)|^2 dq. Fock states use Gauss-Hermite
/// in the completed-square variable; grid states use the trapezoid sum.
double unsharp_position_density(unsigned s, const WavefunctionRep &phi, double x);

/// int_X g(x) dx over a finite union of intervals (overlaps merged).
double unsharp_position_prob(unsigned s, const WavefunctionRep &phi, const IntervalSet &x_set,
                             const MarginOptions &options = {});

/// int x^j g(x) dx.
double unsharp_position_moment(unsigned s, const WavefunctionRep &phi, unsigned j,
                               const MarginOptions &options = {});

/// Fock coefficients of the Fourier transform: c_n -> (-i)^n c_n.
povm::FockVector fourier_rotate(const povm::FockVector &v);

/// Momentum density, which is the position density of fourier_rotate(phi).
/// Throws DomainError("fock-basis-required") for grid wavefunctions.
double unsharp_momentum_density(unsigned s, const WavefunctionRep &phi, double p);

/// Closed-form envelope M N_s^2 e^{-x^2} e^{2C|x|} p_{2s}(|x|) dominating
/// the position density of a compactly supported wavefunction, where
/// M = max |phi|^2, C = max(|a|, |b|) and
/// p_{2s}(u) = (b - a) (sum_j |h_j| (u + C)^j)^2 with H_s = sum_j h_j x^j.
struct PositionEnvelope {
    unsigned s = 0;
    double bound_m = 0.0;
    double support_lo = 0.0;
    double support_hi = 0.0;
    double c = 0.0;
    /// Coefficients of p_{2s} in powers of |x|.
    std::vector<double> poly;

    double operator()(double x) const;
};

/// Throws DomainError for Fock (non-compact) wavefunctions.
PositionEnvelope make_position_envelope(unsigned s, const WavefunctionRep &phi);

double envelope_bound(unsigned s, const WavefunctionRep &phi, double x);

/// <k|A^{|s>}(R x [0, 2pi))|l>.
Complex radial_margin_element(unsigned s, unsigned k, unsigned l, Interval r_range, std::size_t d,
                              const quadrature::RegionRuleHint &hint = {});

/// <k|A^{|s>}([0, inf) x X)|l>.
Complex angular_margin_element(unsigned s, unsigned k, unsigned l, Interval theta_range, std::size_t d,
                               const quadrature::RegionRuleHint &hint = {});

povm::TruncatedOperator radial_margin_operator(unsigned s, Interval r_range, std::size_t d,
                                               const quadrature::RegionRuleHint &hint = {});
povm::TruncatedOperator angular_margin_operator(unsigned s, Interval theta_range, std::size_t d,
                                                const quadrature::RegionRuleHint &hint = {});

struct PolarMomentOptions {
    int n_laguerre = 60;
    int n_theta = 64;
};

/// int_0^inf int_0^{2pi} r^{n_r} theta^{m_theta} d<k|A^{|s>}(r e^{i theta})|l>.
Complex polar_moment_element(unsigned s, unsigned n_r, unsigned m_theta, unsigned k, unsigned l,
                             const PolarMomentOptions &options = {});

} // namespace phasemoments::margins
