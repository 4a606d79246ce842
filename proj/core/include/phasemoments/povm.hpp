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
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "phasemoments/moments.hpp"
#include "phasemoments/quadrature.hpp"

/// The phase-space observable generated by a number state |s>:
///
///   A^{|s>}(Z) = (1/pi) int_Z D_z |s><s| D_z^* dlambda(z),
///
/// its densities, operator values on regions, moment operators and the
/// exponential moments of its diagonal measures.
///
/// Matrix elements are computed on span{|0>, ..., |d-1>} only; the moment
/// operators are unbounded and nothing here speaks to their domains.
namespace phasemoments::povm {

using Complex = std::complex<double>;
using quadrature::Region;
using quadrature::RegionRuleHint;

/// Finite coefficient vector in the number basis.
struct FockVector {
    std::vector<Complex> coeffs;

    std::size_t dim() const { return coeffs.size(); }
    double norm() const;
    FockVector normalized() const;
    /// Coefficient of |n>, zero past the stored length.
    Complex operator[](std::size_t n) const { return n < coeffs.size() ? coeffs[n] : Complex{}; }

    static FockVector number_state(unsigned n, std::size_t dim);
};

/// a + c b, padded to the longer length.
FockVector combine(const FockVector &a, Complex c, const FockVector &b);

/// Expectation of the number operator, sum n |c_n|^2 / ||c||^2.
double mean_number(const FockVector &phi);

/// Complex d x d matrix in the number basis.
struct TruncatedOperator {
    Eigen::MatrixXcd entries;
    bool hermitian = false;

    std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

/// A truncated operator together with the entries known to be free of
/// truncation error.
struct MaskedOperator {
    TruncatedOperator op;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
};

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const TruncatedOperator &op);

/// (1/pi) <k|D_z|s> conj(<l|D_z|s>): the density of <k|A^{|s>}(.)|l>.
Complex pair_density(unsigned s, unsigned k, unsigned l, Complex z);

/// The same density from the double sum over a(s,k,r) a(s,l,r').
Complex pair_density_expansion(unsigned s, unsigned k, unsigned l, Complex z);

/// pair_density(s, k, k, z) as a real number.
double diagonal_density(unsigned s, unsigned k, Complex z);

/// (1/pi) <psi|D_z|s> <s|D_z^*|phi>, conjugate-linear in psi.
Complex state_pair_density(unsigned s, const FockVector &psi, const FockVector &phi, Complex z);

/// (1/pi) |<phi|D_z|s>|^2.
double state_density(unsigned s, const FockVector &phi, Complex z);

/// Matrix of <k|A^{|s>}(Z)|l>, k, l < d, by quadrature over the region.
TruncatedOperator povm_element(unsigned s, const Region &region, std::size_t d,
                               const RegionRuleHint &hint = {});

/// <k|A^{|s>}[m,n]|l> in closed form. Exactly 0 unless k + m == l + n.
/// Throws OverflowError when the value leaves double range.
double moment_matrix_element(unsigned s, unsigned m, unsigned n, unsigned k, unsigned l);

/// d x d matrix of moment_matrix_element; a single stripe l = k + m - n.
TruncatedOperator moment_operator(unsigned s, unsigned m, unsigned n, std::size_t d);

/// a^m (a^*)^n from truncated ladder matrices. Entry (k, l) is marked
/// valid when l + n <= d - 1, i.e. (a^*)^n does not leave the truncated
/// space. Requires d >= m + n.
MaskedOperator normal_ordered_operator(unsigned m, unsigned n, std::size_t d);

/// Polynomial with integer coefficients, coefficients[i] multiplies k^i.
struct IntegerPolynomial {
    std::vector<std::int64_t> coefficients;

    double operator()(double k) const;
};

/// Fits p with p(k) = <k|A^{|s>}[n,n]|k> through k = 0..n in exact
/// rational arithmetic, checks p(k) on (n, k_max] and that every
/// coefficient is an integer. Throws VerificationError otherwise.
IntegerPolynomial fit_diagonal_polynomial(unsigned s, unsigned n, unsigned k_max);

/// Integer array a[i][j] with <k|A^{|s>}[n,n]|k> = sum_{i,j} a[i][j] s^{n-j} k^i,
/// fitted from s = 0..n and checked for s up to s_max, k up to k_max.
struct DiagonalBipolynomial {
    unsigned n = 0;
    std::vector<std::vector<std::int64_t>> a;

    double operator()(double s, double k) const;
};

DiagonalBipolynomial fit_diagonal_bipolynomial(unsigned n, unsigned k_max, unsigned s_max);

/// int e^{a|z|} d<k|A^{|s>}(z)|k>, from the completed-square radial
/// integrals. Exactly 1 at a == 0.
double exp_bound_closed_form(unsigned s, unsigned k, double a);

/// A real set function on regions.
using RegionFunction = std::function<double(const Region &)>;
/// Maps a (not necessarily normalised) vector v to Z -> <v|E(Z) v>.
using DiagonalMap = std::function<RegionFunction(const FockVector &)>;

/// Z -> <v|A^{|s>}(Z) v> by region quadrature.
DiagonalMap phase_space_diagonal_map(unsigned s, RegionRuleHint hint = {});

/// Z -> (1/4) sum_{r=0}^{3} i^r diag(phi + i^r psi)(Z), which equals
/// <psi|E(Z) phi> for any positive operator measure E.
std::function<Complex(const Region &)> polarization_reconstruct(DiagonalMap diag, FockVector psi,
                                                                FockVector phi);

/// Complex moments int z^m conj(z)^n dmu keyed by (m, n), m + n <= max_order.
using ComplexMomentTable = std::map<std::pair<unsigned, unsigned>, Complex>;

/// Complex moments from the real moments c_{p,q} = int x^p y^q dmu, z = x + i y.
ComplexMomentTable complex_moments_from_real(const moments::MomentSequence &c);

/// Real moments from complex moments, x = (z + conj z)/2, y = (z - conj z)/(2i).
moments::MomentSequence real_moments_from_complex(const ComplexMomentTable &c, unsigned max_order);

} // namespace phasemoments::povm
