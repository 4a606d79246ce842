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
#include <vector>

#include <Eigen/Dense>

/// Special functions and exact combinatorics in the number basis.
namespace phasemoments::specfun {

using Complex = std::complex<double>;

/// Largest n for which n! is a finite double.
inline constexpr unsigned kMaxExactFactorial = 170;

/// n! as the correctly rounded double of the exact integer.
/// Throws OverflowError for n > kMaxExactFactorial.
double factorial(unsigned n);

/// log(n!). Exact table up to 170, compensated summation of log(i) above.
double log_factorial(unsigned n);

/// Binomial coefficient C(n, k) rounded from the exact integer; 0 if k > n.
double binomial(unsigned n, unsigned k);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
/// Throws OverflowError if the value is not finite.
double hermite_polynomial(unsigned n, double x);

/// Integer coefficients h_j of H_n(x) = sum_j h_j x^j (index j = power).
std::vector<double> hermite_polynomial_coefficients(unsigned n);

/// Normalisation N_n = (sqrt(pi) 2^n n!)^{-1/2} of the n-th Hermite function.
double hermite_norm(unsigned n);

/// Orthonormal Hermite function f_n(x) = N_n e^{-x^2/2} H_n(x), evaluated
/// by the recurrence on f_n itself so the Gaussian weight never overflows.
double hermite_function(unsigned n, double x);

/// All f_0(x) .. f_{n_max}(x).
std::vector<double> hermite_functions(unsigned n_max, double x);

/// Generalised Laguerre polynomial L_n^{(alpha)}(x) by its recurrence.
double laguerre(unsigned n, double alpha, double x);

/// a(s,k,r) = (-1)^{s-r} C(s,r) sqrt(k!) / (k-r)!, for 0 <= r <= min(k,s).
/// Throws DomainError for r outside that range and OverflowError for
/// k > kMaxExactFactorial.
double disp_coeff(unsigned s, unsigned k, int r);

/// Matrix element <k|D_z|s> of the displacement operator
/// D_z = exp(z a^* - conj(z) a), via the associated Laguerre closed form.
Complex displacement_element(unsigned k, unsigned s, Complex z);

/// <k|D_z|s> for k = 0 .. dim-1.
std::vector<Complex> displacement_column(unsigned s, Complex z, std::size_t dim);

/// Coefficients c_j, j = 0..s+k, of the radial polynomial in
///   |<k|D_z|s>|^2 / pi = (1/pi) e^{-|z|^2} sum_j c_j |z|^{2j}.
/// Computed in exact rational arithmetic and rounded once.
std::vector<double> diagonal_radial_coefficients(unsigned s, unsigned k);

/// Truncated lowering, raising and number operators on span{|0>,..,|d-1>}.
struct LadderTriple {
    Eigen::MatrixXcd a_mat;
    Eigen::MatrixXcd a_dag_mat;
    Eigen::MatrixXcd n_mat;
    std::size_t dim = 0;
};

/// Throws DomainError for d == 0.
LadderTriple ladder_matrices(std::size_t d);

} // namespace phasemoments::specfun
