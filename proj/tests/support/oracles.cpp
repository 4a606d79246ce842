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

#include "oracles.hpp"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace phasemoments::oracle {

Eigen::VectorXcd displacement_column_expm(unsigned s, Complex z, int d) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k + 1 < d; ++k) {
        a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    }
    const Eigen::MatrixXcd generator = z * a.adjoint() - std::conj(z) * a;
    const Eigen::MatrixXcd d_z = generator.exp();
    return d_z.col(static_cast<Eigen::Index>(s));
}

double half_line(const std::function<double(double)> &f) {
    // Far-tail evaluations can produce inf * 0 in Gaussian-weighted
    // integrands; those points contribute nothing.
    const auto guarded = [&](double x) {
        const double v = f(x);
        return (!std::isfinite(v) && x > 64.0) ? 0.0 : v;
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(guarded, 1e-14);
}

double interval(const std::function<double(double)> &f, double a, double b) {
    const auto guarded = [&](double x) {
        const double v = f(x);
        return (!std::isfinite(v) && std::abs(x) > 64.0) ? 0.0 : v;
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(guarded, a, b, 12, 1e-13);
}

double diagonal_disk_mass(unsigned s, unsigned k, double radius) {
    const int d = static_cast<int>(std::max(s, k)) + 60;
    return interval(
        [&](double r) {
            const Eigen::VectorXcd col = displacement_column_expm(s, Complex(r, 0.0), d);
            return 2.0 * r * std::norm(col(static_cast<Eigen::Index>(k)));
        },
        0.0, radius);
}

double weighted_radial_density(unsigned s, unsigned k, double a, double r) {
    const unsigned lo = std::min(s, k);
    const unsigned hi = std::max(s, k);
    const double x = r * r;
    // Past r = 60 the Gaussian factor is below e^{-3000}.
    if (r > 60.0 || (x == 0.0 && hi != lo)) {
        return 0.0;
    }
    const double lag = boost::math::laguerre(lo, hi - lo, x);
    if (lag == 0.0) {
        return 0.0;
    }
    const double power = hi == lo ? 0.0 : (hi - lo) * std::log(x);
    const double log_value =
        std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0) + a * r - x + power + 2.0 * std::log(std::abs(lag));
    return std::isfinite(log_value) ? std::exp(log_value) : 0.0;
}

double hermite_explicit(unsigned n, double x) {
    // H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!)
    double sum = 0.0;
    for (unsigned m = 0; 2 * m <= n; ++m) {
        const double term = std::tgamma(n + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1.0)) *
                            std::pow(2.0 * x, static_cast<double>(n - 2 * m));
        sum += (m % 2 == 0) ? term : -term;
    }
    return sum;
}

} // namespace phasemoments::oracle
