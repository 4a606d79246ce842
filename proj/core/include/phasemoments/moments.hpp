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

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

/// Multidimensional moment sequences of positive measures on R^n and
/// sufficient-condition determinacy diagnostics.
namespace phasemoments::moments {

/// k = (k_1, ..., k_n); the moment c_k is the integral of x_1^{k_1}..x_n^{k_n}.
using MultiIndex = std::vector<unsigned>;

unsigned order(const MultiIndex &k);

/// All multi-indices of dimension `dim` with total order <= max_order, in
/// graded lexicographic order.
std::vector<MultiIndex> multi_indices(std::size_t dim, unsigned max_order);

struct MomentSequence {
    std::size_t dim = 1;
    unsigned max_order = 0;
    std::map<MultiIndex, double> entries;

    /// Throws DomainError when k is absent.
    double at(const MultiIndex &k) const;
    double total_mass() const { return at(MultiIndex(dim, 0U)); }
};

/// Shape of one coordinate axis of the support set K = K_1 x ... x K_n.
enum class AxisKind {
    real_line,     // R
    lower_bounded, // [lo, inf)
    upper_bounded, // (-inf, hi]
    compact,       // [lo, hi]
};

struct AxisSupport {
    AxisKind kind = AxisKind::real_line;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static AxisSupport real_line() { return {}; }
    static AxisSupport half_line_from(double a) { return {AxisKind::lower_bounded, a, std::numeric_limits<double>::infinity()}; }
    static AxisSupport half_line_to(double b) { return {AxisKind::upper_bounded, -std::numeric_limits<double>::infinity(), b}; }
    static AxisSupport interval(double a, double b) { return {AxisKind::compact, a, b}; }
};

std::string to_string(AxisKind kind);

struct AtomicMeasure {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
};

/// Tail envelope declared for a grid density outside its grid.
enum class TailKind {
    undeclared,
    compact,     // zero outside the grid
    gaussian,    // ~ e^{-rate x^2}
    exponential, // ~ e^{-rate |x|}
    polynomial,  // ~ |x|^{-rate}
};

struct TailEnvelope {
    TailKind kind = TailKind::undeclared;
    double rate = 0.0;
};

std::string to_string(TailKind kind);

/// Samples of a density on a regular grid, row-major for dim 2 (the last
/// axis varies fastest). Integrated with the trapezoid rule.
struct GridDensity {
    std::vector<double> x0;
    std::vector<double> dx;
    std::vector<std::size_t> shape;
    std::vector<double> values;
    TailEnvelope tail;
};

/// Density of the probability measure Z -> <k|A^{|s>}(Z)|k> on R^2
/// (z = x + i y):  (1/pi) e^{-|z|^2} sum_j c_j |z|^{2j}.
struct PhaseSpaceDiagonal {
    unsigned s = 0;
    unsigned k = 0;
};

/// Normal density on R.
struct GaussianDensity {
    double mean = 0.0;
    double sigma = 1.0;
};

using ClosedForm = std::variant<PhaseSpaceDiagonal, GaussianDensity>;

struct MeasureRep {
    std::size_t dim = 1;
    std::variant<AtomicMeasure, GridDensity, ClosedForm> body;
    /// One entry per axis; empty means R^dim.
    std::vector<AxisSupport> support;

    AxisSupport axis_support(std::size_t axis) const;
};

MeasureRep make_atomic(std::vector<std::vector<double>> points, std::vector<double> weights);
MeasureRep make_phase_space_diagonal(unsigned s, unsigned k);
MeasureRep make_gaussian(double mean, double sigma);
MeasureRep make_grid_density(std::vector<double> x0, std::vector<double> dx,
                             std::vector<std::size_t> shape, std::vector<double> values,
                             TailEnvelope tail = {});

/// Throws DomainError on a violated invariant (dimension mismatch,
/// non-positive atom weight, negative grid value, zero mass, ...).
void validate(const MeasureRep &mu);

struct MomentOptions {
    unsigned max_order = 16;
};

/// c_k(mu). Exact sum for atoms, trapezoid sum for grids, Gamma-function
/// closed form for closed-form families. Throws DomainError when |k|
/// exceeds options.max_order or the dimension does not match.
double moment(const MeasureRep &mu, const MultiIndex &k, const MomentOptions &options = {});

double total_mass(const MeasureRep &mu);

/// Every moment of total order <= max_order.
MomentSequence moment_sequence(const MeasureRep &mu, unsigned max_order);

enum class Direction {
    forward, // moments of the measure shifted by +a
    inverse, // moments of the measure shifted by -a
};

/// c_k = sum_i C(k,i) a^{k-i} c~_i (forward) and
/// c~_k = sum_i C(k,i) (-a)^{k-i} c_i (inverse). One-dimensional only.
MomentSequence translate_moments(const MomentSequence &c, double a, Direction direction);

/// Moments of the image measure under x -> -x: (-1)^k c_k.
MomentSequence reflect_moments(const MomentSequence &c);

/// Moments of the image of a measure living on a half-line axis under the
/// affine map onto [0, inf): translation for [a, inf), reflection followed
/// by translation for (-inf, b]. Other axis kinds are rejected.
MomentSequence reduce_to_positive_half_line(const MomentSequence &c, const AxisSupport &support);

/// Moments of the projection mu o pi_axis^{-1}, read off the n-dim table.
MomentSequence marginal_moments(const MomentSequence &c, std::size_t axis);

/// Value of int e^{a ||x||} dmu, or std::nullopt when the integral
/// diverges.
struct ExpBound {
    std::optional<double> value;

    bool finite() const { return value.has_value(); }
};

/// int e^{a ||x||} dmu(x), a > 0. Grid densities need a declared tail;
/// an undeclared tail raises UndecidableTailError.
ExpBound exp_bound_integral(const MeasureRep &mu, double a);

/// int e^{a |x_axis|} dmu(x): the exponential integral of the axis
/// marginal. For two-dimensional closed forms the value is the
/// ||x||-integral, which bounds it from above.
ExpBound axis_exp_bound_integral(const MeasureRep &mu, std::size_t axis, double a);

struct AxisVerdict {
    std::size_t axis = 0;
    AxisSupport support;
    bool exp_bounded = false;
    std::optional<double> witness_a;
    /// "compact", "marginal" or "norm-bound".
    std::string basis;
};

struct DeterminacyReport {
    std::vector<AxisVerdict> per_axis;
    /// true iff every axis marginal is exponentially bounded (or lives on a
    /// compact axis). false means "not established", not "indeterminate".
    bool determinate_verdict = false;
};

struct DeterminacyOptions {
    double a_start = 1.0;
    double a_min = 1.0 / 1048576.0; // 2^-20
};

DeterminacyReport determinacy_report(const MeasureRep &mu, const DeterminacyOptions &options = {});

/// True iff all moments up to max_order agree within tol * max(1, |c_k(mu)|).
bool moment_match(const MeasureRep &mu, const MeasureRep &nu, unsigned max_order, double tol);

} // namespace phasemoments::moments
