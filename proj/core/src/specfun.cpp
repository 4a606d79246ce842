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

#include "phasemoments/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "exact.hpp"
#include "phasemoments/errors.hpp"

namespace phasemoments::specfun {

namespace {

const std::array<double, kMaxExactFactorial + 1> &factorial_doubles() {
    static const auto table = [] {
        std::array<double, kMaxExactFactorial + 1> t{};
        for (unsigned i = 0; i <= kMaxExactFactorial; ++i) {
            t[i] = detail::to_double(detail::exact_factorial(i));
        }
        return t;
    }();
    return table;
}

const std::array<double, kMaxExactFactorial + 1> &log_factorial_doubles() {
    static const auto table = [] {
        std::array<double, kMaxExactFactorial + 1> t{};
        for (unsigned i = 0; i <= kMaxExactFactorial; ++i) {
            t[i] = std::log(factorial_doubles()[i]);
        }
        return t;
    }();
    return table;
}

Complex ipow(Complex z, unsigned p) {
    Complex result{1.0, 0.0};
    while (p != 0) {
        if ((p & 1U) != 0) {
            result *= z;
        }
        z *= z;
        p >>= 1U;
    }
    return result;
}

// sqrt(small! / large!) for small <= large.
double sqrt_factorial_ratio(unsigned small, unsigned large) {
    if (large <= kMaxExactFactorial) {
        return std::sqrt(factorial_doubles()[small] / factorial_doubles()[large]);
    }
    return std::exp(0.5 * (log_factorial(small) - log_factorial(large)));
}

} // namespace

double factorial(unsigned n) {
    if (n > kMaxExactFactorial) {
        throw OverflowError("factorial(" + std::to_string(n) + ") exceeds double range");
    }
    return factorial_doubles()[n];
}

double log_factorial(unsigned n) {
    if (n <= kMaxExactFactorial) {
        return log_factorial_doubles()[n];
    }
    double sum = log_factorial_doubles()[kMaxExactFactorial];
    double carry = 0.0;
    for (unsigned i = kMaxExactFactorial + 1; i <= n; ++i) {
        const double y = std::log(static_cast<double>(i)) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double binomial(unsigned n, unsigned k) {
    return detail::to_double(detail::exact_binomial(n, k));
}

double hermite_polynomial(unsigned n, double x) {
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 2.0 * x;
    for (unsigned j = 1; j < n; ++j) {
        const double next = 2.0 * x * cur - 2.0 * static_cast<double>(j) * prev;
        prev = cur;
        cur = next;
        if (!std::isfinite(cur)) {
            break;
        }
    }
    if (!std::isfinite(cur)) {
        throw OverflowError("hermite_polynomial(" + std::to_string(n) + ", " +
                            std::to_string(x) + ") overflows");
    }
    return cur;
}

std::vector<double> hermite_polynomial_coefficients(unsigned n) {
    // H_{j+1} = 2x H_j - 2j H_{j-1}, carried on coefficient vectors.
    std::vector<double> prev{1.0};
    if (n == 0) {
        return prev;
    }
    std::vector<double> cur{0.0, 2.0};
    for (unsigned j = 1; j < n; ++j) {
        std::vector<double> next(j + 2, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += 2.0 * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= 2.0 * static_cast<double>(j) * prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double hermite_norm(unsigned n) {
    const double log_norm_sq = 0.5 * std::log(std::numbers::pi) +
                               static_cast<double>(n) * std::numbers::ln2 + log_factorial(n);
    return std::exp(-0.5 * log_norm_sq);
}

std::vector<double> hermite_functions(unsigned n_max, double x) {
    std::vector<double> f(n_max + 1, 0.0);
    // pi^{-1/4}
    const double f0 = std::exp(-0.25 * std::log(std::numbers::pi) - 0.5 * x * x);
    f[0] = f0;
    if (n_max == 0) {
        return f;
    }
    f[1] = std::numbers::sqrt2 * x * f0;
    for (unsigned j = 1; j < n_max; ++j) {
        const double jd = static_cast<double>(j);
        f[j + 1] = std::sqrt(2.0 / (jd + 1.0)) * x * f[j] - std::sqrt(jd / (jd + 1.0)) * f[j - 1];
    }
    return f;
}

double hermite_function(unsigned n, double x) { return hermite_functions(n, x)[n]; }

double laguerre(unsigned n, double alpha, double x) {
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + alpha - x;
    for (unsigned j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double next = ((2.0 * jd + 1.0 + alpha - x) * cur - (jd + alpha) * prev) / (jd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double disp_coeff(unsigned s, unsigned k, int r) {
    if (r < 0 || static_cast<unsigned>(r) > std::min(k, s)) {
        throw DomainError("disp_coeff: r = " + std::to_string(r) + " outside [0, min(k,s)] with k=" +
                          std::to_string(k) + ", s=" + std::to_string(s));
    }
    if (k > kMaxExactFactorial) {
        throw OverflowError("disp_coeff: k! overflows for k = " + std::to_string(k));
    }
    const auto ru = static_cast<unsigned>(r);
    const double sign = ((s - ru) % 2 == 0) ? 1.0 : -1.0;
    const double value = sign * binomial(s, ru) * std::sqrt(factorial(k)) / factorial(k - ru);
    if (!std::isfinite(value)) {
        throw OverflowError("disp_coeff: C(s,r) overflows for s = " + std::to_string(s));
    }
    return value;
}

Complex displacement_element(unsigned k, unsigned s, Complex z) {
    const double x = std::norm(z);
    const double gauss = std::exp(-0.5 * x);
    if (gauss == 0.0) {
        return {};
    }
    Complex value;
    if (k >= s) {
        const unsigned shift = k - s;
        value = sqrt_factorial_ratio(s, k) * ipow(z, shift) * gauss *
                laguerre(s, static_cast<double>(shift), x);
    } else {
        const unsigned shift = s - k;
        value = sqrt_factorial_ratio(k, s) * ipow(-std::conj(z), shift) * gauss *
                laguerre(k, static_cast<double>(shift), x);
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw OverflowError("displacement_element overflows at k=" + std::to_string(k) +
                            ", s=" + std::to_string(s));
    }
    return value;
}

std::vector<Complex> displacement_column(unsigned s, Complex z, std::size_t dim) {
    std::vector<Complex> column(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        column[k] = displacement_element(static_cast<unsigned>(k), s, z);
    }
    return column;
}

std::vector<double> diagonal_radial_coefficients(unsigned s, unsigned k) {
    using detail::BigInt;
    const unsigned r_max = std::min(k, s);
    std::vector<BigInt> numer(s + k + 1, BigInt(0));
    for (unsigned r = 0; r <= r_max; ++r) {
        const BigInt left = detail::exact_binomial(s, r) * detail::exact_falling(k, r);
        for (unsigned rp = 0; rp <= r_max; ++rp) {
            const BigInt term = left * detail::exact_binomial(s, rp) * detail::exact_falling(k, rp);
            const unsigned j = s + k - r - rp;
            if ((r + rp) % 2 == 1) {
                numer[j] -= term;
            } else {
                numer[j] += term;
            }
        }
    }
    const BigInt denom = detail::exact_factorial(s) * detail::exact_factorial(k);
    std::vector<double> coeffs(numer.size());
    for (std::size_t j = 0; j < numer.size(); ++j) {
        coeffs[j] = detail::to_double(detail::BigRational(numer[j], denom));
    }
    return coeffs;
}

LadderTriple ladder_matrices(std::size_t d) {
    if (d == 0) {
        throw DomainError("ladder_matrices: dimension must be positive");
    }
    LadderTriple t;
    t.dim = d;
    t.a_mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    t.n_mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index k = 0; k + 1 < static_cast<Eigen::Index>(d); ++k) {
        t.a_mat(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    }
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(d); ++k) {
        t.n_mat(k, k) = static_cast<double>(k);
    }
    t.a_dag_mat = t.a_mat.adjoint();
    return t;
}

} // namespace phasemoments::specfun
