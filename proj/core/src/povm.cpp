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

#include "phasemoments/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "exact.hpp"
#include "phasemoments/errors.hpp"
#include "phasemoments/specfun.hpp"

namespace phasemoments::povm {

namespace {

using detail::BigInt;
using detail::BigRational;

constexpr double kInvPi = 1.0 / std::numbers::pi;

Complex ipow(Complex z, unsigned p) {
    Complex result{1.0, 0.0};
    for (unsigned i = 0; i < p; ++i) {
        result *= z;
    }
    return result;
}

Complex i_power(unsigned r) {
    switch (r % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

/// <v|D_z|s> = sum_k conj(v_k) <k|D_z|s>.
Complex bra_displaced(unsigned s, const FockVector &v, Complex z) {
    Complex sum{};
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (v.coeffs[k] != Complex{}) {
            sum += std::conj(v.coeffs[k]) * specfun::displacement_element(static_cast<unsigned>(k), s, z);
        }
    }
    return sum;
}

/// Monomial coefficients of the interpolant through (t, y[t]), t = 0..n.
std::vector<BigRational> interpolate_equispaced(std::vector<BigRational> y) {
    const std::size_t n = y.size();
    // Forward differences in place: y[j] becomes Delta^j y_0.
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t t = n - 1; t >= j; --t) {
            y[t] = y[t] - y[t - 1];
        }
    }
    std::vector<BigRational> coeffs(n, BigRational(0));
    std::vector<BigRational> falling{BigRational(1)}; // k(k-1)...(k-j+1)
    BigInt j_factorial = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
            j_factorial *= static_cast<unsigned>(j);
            std::vector<BigRational> next(falling.size() + 1, BigRational(0));
            const BigRational shift(static_cast<long long>(j - 1));
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i];
                next[i] -= shift * falling[i];
            }
            falling = std::move(next);
        }
        const BigRational scale = y[j] / BigRational(j_factorial);
        for (std::size_t i = 0; i < falling.size(); ++i) {
            coeffs[i] += scale * falling[i];
        }
    }
    return coeffs;
}

BigRational evaluate(const std::vector<BigRational> &coeffs, long long x) {
    BigRational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * BigRational(x) + coeffs[i];
    }
    return acc;
}

std::int64_t to_int64_checked(const BigRational &v, const std::string &what) {
    if (boost::multiprecision::denominator(v) != 1) {
        throw VerificationError(what + " has a non-integer coefficient");
    }
    const BigInt num = boost::multiprecision::numerator(v);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError(what + " coefficient exceeds 64-bit range");
    }
    return num.convert_to<std::int64_t>();
}

std::vector<BigRational> diagonal_coefficients_exact(unsigned s, unsigned n) {
    std::vector<BigRational> y;
    for (unsigned k = 0; k <= n; ++k) {
        y.push_back(detail::diagonal_moment_exact(s, n, k));
    }
    return interpolate_equispaced(std::move(y));
}

} // namespace

double FockVector::norm() const {
    double sum = 0.0;
    for (const Complex &c : coeffs) {
        sum += std::norm(c);
    }
    return std::sqrt(sum);
}

FockVector FockVector::normalized() const {
    const double nrm = norm();
    if (!(nrm > 0.0)) {
        throw DomainError("cannot normalise the zero vector");
    }
    FockVector out = *this;
    for (Complex &c : out.coeffs) {
        c /= nrm;
    }
    return out;
}

FockVector FockVector::number_state(unsigned n, std::size_t dim) {
    if (n >= dim) {
        throw DomainError("number state index must be below the dimension");
    }
    FockVector v;
    v.coeffs.assign(dim, Complex{});
    v.coeffs[n] = 1.0;
    return v;
}

FockVector combine(const FockVector &a, Complex c, const FockVector &b) {
    FockVector out;
    out.coeffs.resize(std::max(a.dim(), b.dim()));
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] = a[i] + c * b[i];
    }
    return out;
}

double mean_number(const FockVector &phi) {
    double weight = 0.0;
    double total = 0.0;
    for (std::size_t n = 0; n < phi.dim(); ++n) {
        const double p = std::norm(phi.coeffs[n]);
        weight += static_cast<double>(n) * p;
        total += p;
    }
    if (!(total > 0.0)) {
        throw DomainError("mean_number of the zero vector");
    }
    return weight / total;
}

double min_eigenvalue(const TruncatedOperator &op) {
    const Eigen::MatrixXcd herm = 0.5 * (op.entries + op.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Complex pair_density(unsigned s, unsigned k, unsigned l, Complex z) {
    if (k == l) {
        return kInvPi * std::norm(specfun::displacement_element(k, s, z));
    }
    return kInvPi * specfun::displacement_element(k, s, z) * std::conj(specfun::displacement_element(l, s, z));
}

Complex pair_density_expansion(unsigned s, unsigned k, unsigned l, Complex z) {
    const double gauss = std::exp(-std::norm(z));
    const Complex zc = std::conj(z);
    Complex sum{};
    for (unsigned r = 0; r <= std::min(k, s); ++r) {
        const double ar = specfun::disp_coeff(s, k, static_cast<int>(r));
        for (unsigned rp = 0; rp <= std::min(l, s); ++rp) {
            const double arp = specfun::disp_coeff(s, l, static_cast<int>(rp));
            sum += ar * arp * ipow(z, s + k - r - rp) * ipow(zc, s + l - r - rp);
        }
    }
    return kInvPi / specfun::factorial(s) * gauss * sum;
}

double diagonal_density(unsigned s, unsigned k, Complex z) {
    return kInvPi * std::norm(specfun::displacement_element(k, s, z));
}

Complex state_pair_density(unsigned s, const FockVector &psi, const FockVector &phi, Complex z) {
    return kInvPi * bra_displaced(s, psi, z) * std::conj(bra_displaced(s, phi, z));
}

double state_density(unsigned s, const FockVector &phi, Complex z) {
    return kInvPi * std::norm(bra_displaced(s, phi, z));
}

TruncatedOperator povm_element(unsigned s, const Region &region, std::size_t d, const RegionRuleHint &hint) {
    if (d == 0) {
        throw DomainError("povm_element: dimension must be positive");
    }
    const quadrature::PlaneRule rule = quadrature::make_region_rule(region, hint);
    const auto dim = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXcd column(dim);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            column(k) = specfun::displacement_element(static_cast<unsigned>(k), s, rule.nodes[i]);
        }
        if (!column.allFinite()) {
            throw QuadratureError("povm_element: non-finite displacement column at node " + std::to_string(i));
        }
        acc.noalias() += (rule.weights[i] * kInvPi) * (column * column.adjoint());
    }
    return TruncatedOperator{acc, true};
}

double moment_matrix_element(unsigned s, unsigned m, unsigned n, unsigned k, unsigned l) {
    if (k + m != l + n) {
        return 0.0;
    }
    const BigInt numerator = detail::moment_stripe_numerator(s, m, k, l);
    double value = 0.0;
    if (k == l) {
        value = detail::to_double(BigRational(numerator, detail::exact_factorial(s) * detail::exact_factorial(k)));
    } else {
        using detail::BigFloat;
        const BigFloat denom = BigFloat(detail::exact_factorial(s)) *
                               sqrt(BigFloat(detail::exact_factorial(k) * detail::exact_factorial(l)));
        value = detail::to_double(BigFloat(BigFloat(numerator) / denom));
    }
    if (!std::isfinite(value)) {
        throw OverflowError("moment_matrix_element(s=" + std::to_string(s) + ", m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", l=" +
                            std::to_string(l) + ") exceeds double range");
    }
    return value;
}

TruncatedOperator moment_operator(unsigned s, unsigned m, unsigned n, std::size_t d) {
    if (d == 0) {
        throw DomainError("moment_operator: dimension must be positive");
    }
    const auto dim = static_cast<long long>(d);
    TruncatedOperator op;
    op.entries = Eigen::MatrixXcd::Zero(dim, dim);
    op.hermitian = (m == n);
    for (long long k = 0; k < dim; ++k) {
        const long long l = k + static_cast<long long>(m) - static_cast<long long>(n);
        if (l >= 0 && l < dim) {
            op.entries(k, l) = moment_matrix_element(s, m, n, static_cast<unsigned>(k), static_cast<unsigned>(l));
        }
    }
    return op;
}

MaskedOperator normal_ordered_operator(unsigned m, unsigned n, std::size_t d) {
    if (d < static_cast<std::size_t>(m) + n || d == 0) {
        throw DomainError("normal_ordered_operator requires d >= m + n and d >= 1");
    }
    const specfun::LadderTriple ladder = specfun::ladder_matrices(d);
    const auto dim = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(dim, dim);
    for (unsigned i = 0; i < m; ++i) {
        product = product * ladder.a_mat;
    }
    for (unsigned i = 0; i < n; ++i) {
        product = product * ladder.a_dag_mat;
    }
    MaskedOperator out;
    out.op = TruncatedOperator{product, m == n};
    out.valid.resize(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index l = 0; l < dim; ++l) {
            out.valid(k, l) = l + static_cast<Eigen::Index>(n) <= dim - 1;
        }
    }
    return out;
}

double IntegerPolynomial::operator()(double k) const {
    double acc = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        acc = acc * k + static_cast<double>(coefficients[i]);
    }
    return acc;
}

IntegerPolynomial fit_diagonal_polynomial(unsigned s, unsigned n, unsigned k_max) {
    if (k_max < n + 1) {
        throw DomainError("fit_diagonal_polynomial requires k_max >= n + 1");
    }
    const std::vector<BigRational> coeffs = diagonal_coefficients_exact(s, n);
    for (unsigned k = n + 1; k <= k_max; ++k) {
        if (evaluate(coeffs, k) != detail::diagonal_moment_exact(s, n, k)) {
            throw VerificationError("diagonal polynomial fit for s=" + std::to_string(s) + ", n=" +
                                    std::to_string(n) + " fails at k=" + std::to_string(k));
        }
    }
    IntegerPolynomial poly;
    for (const BigRational &c : coeffs) {
        poly.coefficients.push_back(to_int64_checked(c, "diagonal polynomial"));
    }
    return poly;
}

double DiagonalBipolynomial::operator()(double s, double k) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            acc += static_cast<double>(a[i][j]) * std::pow(s, static_cast<double>(n - j)) *
                   std::pow(k, static_cast<double>(i));
        }
    }
    return acc;
}

DiagonalBipolynomial fit_diagonal_bipolynomial(unsigned n, unsigned k_max, unsigned s_max) {
    if (k_max < n + 1) {
        throw DomainError("fit_diagonal_bipolynomial requires k_max >= n + 1");
    }
    // coefficient of k^i as a function of s, sampled at s = 0..n
    std::vector<std::vector<BigRational>> by_power(n + 1);
    for (unsigned s = 0; s <= n; ++s) {
        const std::vector<BigRational> c = diagonal_coefficients_exact(s, n);
        for (unsigned i = 0; i <= n; ++i) {
            by_power[i].push_back(c[i]);
        }
    }
    std::vector<std::vector<BigRational>> in_s(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        in_s[i] = interpolate_equispaced(by_power[i]);
    }
    DiagonalBipolynomial result;
    result.n = n;
    result.a.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            result.a[i][j] = to_int64_checked(in_s[i][n - j], "diagonal bipolynomial");
        }
    }
    for (unsigned s = 0; s <= s_max; ++s) {
        for (unsigned k = 0; k <= k_max; ++k) {
            // Horner in k with s-dependent coefficients.
            BigRational predicted(0);
            for (unsigned i = n + 1; i-- > 0;) {
                predicted = predicted * BigRational(static_cast<long long>(k)) + evaluate(in_s[i], s);
            }
            if (predicted != detail::diagonal_moment_exact(s, n, k)) {
                throw VerificationError("diagonal bipolynomial for n=" + std::to_string(n) + " fails at s=" +
                                        std::to_string(s) + ", k=" + std::to_string(k));
            }
        }
    }
    return result;
}

double exp_bound_closed_form(unsigned s, unsigned k, double a) {
    if (!(a >= 0.0)) {
        throw DomainError("exp_bound_closed_form requires a >= 0");
    }
    if (a == 0.0) {
        return moment_matrix_element(s, 0, 0, k, k);
    }
    const std::vector<double> c = specfun::diagonal_radial_coefficients(s, k);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        // (1/pi) int e^{a|z|} e^{-|z|^2} |z|^{2j} dlambda = int_0^inf e^{ar - r^2} r^{2j} 2r dr
        sum += c[j] * 2.0 * quadrature::shifted_radial_integral(a, static_cast<unsigned>(2 * j + 1));
    }
    return sum;
}

DiagonalMap phase_space_diagonal_map(unsigned s, RegionRuleHint hint) {
    return [s, hint](const FockVector &v) -> RegionFunction {
        return [s, hint, v](const Region &region) {
            return quadrature::integrate_region(
                       [&](Complex z) { return Complex{state_density(s, v, z), 0.0}; }, region, hint)
                .real();
        };
    };
}

std::function<Complex(const Region &)> polarization_reconstruct(DiagonalMap diag, FockVector psi,
                                                                FockVector phi) {
    std::vector<RegionFunction> parts;
    for (unsigned r = 0; r < 4; ++r) {
        parts.push_back(diag(combine(phi, i_power(r), psi)));
    }
    return [parts = std::move(parts)](const Region &region) {
        Complex sum{};
        for (unsigned r = 0; r < 4; ++r) {
            sum += i_power(r) * parts[r](region);
        }
        return 0.25 * sum;
    };
}

ComplexMomentTable complex_moments_from_real(const moments::MomentSequence &c) {
    if (c.dim != 2) {
        throw DomainError("complex moments need a two-dimensional real moment sequence");
    }
    ComplexMomentTable out;
    for (unsigned total = 0; total <= c.max_order; ++total) {
        for (unsigned m = 0; m <= total; ++m) {
            const unsigned n = total - m;
            // (x + iy)^m (x - iy)^n
            Complex sum{};
            for (unsigned a = 0; a <= m; ++a) {
                for (unsigned b = 0; b <= n; ++b) {
                    const Complex phase = i_power(m - a) * i_power(3 * (n - b));
                    sum += specfun::binomial(m, a) * specfun::binomial(n, b) * phase *
                           c.at({a + b, total - a - b});
                }
            }
            out[{m, n}] = sum;
        }
    }
    return out;
}

moments::MomentSequence real_moments_from_complex(const ComplexMomentTable &c, unsigned max_order) {
    moments::MomentSequence out;
    out.dim = 2;
    out.max_order = max_order;
    for (unsigned total = 0; total <= max_order; ++total) {
        for (unsigned p = total + 1; p-- > 0;) {
            const unsigned q = total - p;
            // ((z + zb)/2)^p ((z - zb)/(2i))^q
            Complex sum{};
            for (unsigned a = 0; a <= p; ++a) {
                for (unsigned b = 0; b <= q; ++b) {
                    const double sign = ((q - b) % 2 == 0) ? 1.0 : -1.0;
                    const auto it = c.find({a + b, total - a - b});
                    if (it == c.end()) {
                        throw DomainError("complex moment table is missing an entry");
                    }
                    sum += sign * specfun::binomial(p, a) * specfun::binomial(q, b) * it->second;
                }
            }
            sum /= std::ldexp(1.0, static_cast<int>(total)) * i_power(q);
            out.entries[{p, q}] = sum.real();
        }
    }
    return out;
}

} // namespace phasemoments::povm
