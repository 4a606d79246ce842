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

#include "phasemoments/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "phasemoments/margins.hpp"
#include "phasemoments/povm.hpp"
#include "phasemoments/quadrature.hpp"
#include "phasemoments/sampler.hpp"
#include "phasemoments/specfun.hpp"

namespace phasemoments::verify {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string tuple_of(std::initializer_list<std::pair<const char *, long long>> items) {
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, value] : items) {
        os << (first ? "" : ",") << key << '=' << value;
        first = false;
    }
    return os.str();
}

class Collector {
public:
    Collector(Suite suite, const VerifyOptions &options) : suite_(to_string(suite)), options_(options) {}

    void add(std::string name, std::string tuple, double error, double tolerance) {
        const double tol = options_.tolerance.value_or(tolerance);
        report_.checks.push_back(
            {suite_, std::move(name), std::move(tuple), error, tol, std::isfinite(error) && error <= tol});
    }

    Report take() { return std::move(report_); }

private:
    std::string suite_;
    const VerifyOptions &options_;
    Report report_;
};

void run_normal_order(Collector &out, const VerifyOptions &options) {
    const std::size_t d = options.normal_order_dim;
    for (unsigned m = 0; m <= options.normal_order_max; ++m) {
        for (unsigned n = 0; n <= options.normal_order_max; ++n) {
            const povm::TruncatedOperator lhs = povm::moment_operator(0, m, n, d);
            const povm::MaskedOperator rhs = povm::normal_ordered_operator(m, n, d);
            double worst = 0.0;
            Eigen::Index wk = 0;
            Eigen::Index wl = 0;
            for (Eigen::Index k = 0; k < lhs.entries.rows(); ++k) {
                for (Eigen::Index l = 0; l < lhs.entries.cols(); ++l) {
                    if (!rhs.valid(k, l)) {
                        continue;
                    }
                    const Complex ref = rhs.op.entries(k, l);
                    const double err = std::abs(lhs.entries(k, l) - ref) / std::max(1.0, std::abs(ref));
                    if (err > worst || !std::isfinite(err)) {
                        worst = err;
                        wk = k;
                        wl = l;
                    }
                }
            }
            out.add("moment_operator(0,m,n) = a^m a*^n (relative)",
                    tuple_of({{"s", 0}, {"m", m}, {"n", n}, {"k", wk}, {"l", wl}}), worst, 1e-9);
        }
    }
}

void run_selection(Collector &out) {
    for (unsigned s = 0; s <= 6; ++s) {
        for (unsigned m = 0; m <= 6; ++m) {
            for (unsigned n = 0; n <= 6; ++n) {
                double worst = 0.0;
                unsigned wk = 0;
                unsigned wl = 0;
                for (unsigned k = 0; k <= 12; ++k) {
                    for (unsigned l = 0; l <= 12; ++l) {
                        if (k + m == l + n) {
                            continue;
                        }
                        const double v = std::abs(povm::moment_matrix_element(s, m, n, k, l));
                        if (v > worst) {
                            worst = v;
                            wk = k;
                            wl = l;
                        }
                    }
                }
                out.add("selection-rule zero", tuple_of({{"s", s}, {"m", m}, {"n", n}, {"k", wk}, {"l", wl}}),
                        worst, 0.0);
            }
        }
    }
}

void run_quadrature(Collector &out, const VerifyOptions &options) {
    constexpr unsigned kMaxIndex = 5;
    constexpr unsigned kMaxOrder = 6;
    const quadrature::PlaneRule rule =
        quadrature::make_plane_rule(quadrature::RadialAngularScheme{options.n_r, options.n_theta});
    std::vector<std::pair<unsigned, unsigned>> orders;
    for (unsigned m = 0; m <= kMaxOrder; ++m) {
        for (unsigned n = 0; m + n <= kMaxOrder; ++n) {
            orders.emplace_back(m, n);
        }
    }
    constexpr std::size_t kDim = kMaxIndex + 1;
    for (unsigned s = 0; s <= kMaxIndex; ++s) {
        const std::size_t count = orders.size() * kDim * kDim;
        const std::vector<Complex> values = quadrature::integrate_many(
            [&](Complex z, std::span<Complex> slot) {
                Complex column[kDim];
                for (std::size_t k = 0; k < kDim; ++k) {
                    column[k] = specfun::displacement_element(static_cast<unsigned>(k), s, z);
                }
                std::size_t idx = 0;
                for (const auto &[m, n] : orders) {
                    const Complex mono =
                        std::pow(z, static_cast<int>(m)) * std::pow(std::conj(z), static_cast<int>(n)) / kPi;
                    for (std::size_t k = 0; k < kDim; ++k) {
                        const Complex left = mono * column[k];
                        for (std::size_t l = 0; l < kDim; ++l) {
                            slot[idx++] = left * std::conj(column[l]);
                        }
                    }
                }
            },
            count, rule);
        std::size_t idx = 0;
        for (const auto &[m, n] : orders) {
            double worst = 0.0;
            std::size_t wk = 0;
            std::size_t wl = 0;
            for (std::size_t k = 0; k < kDim; ++k) {
                for (std::size_t l = 0; l < kDim; ++l) {
                    const double exact = povm::moment_matrix_element(s, m, n, static_cast<unsigned>(k),
                                                                     static_cast<unsigned>(l));
                    const double err = std::abs(values[idx++] - exact);
                    if (err >= worst) {
                        worst = err;
                        wk = k;
                        wl = l;
                    }
                }
            }
            out.add("plane quadrature vs closed form (absolute)",
                    tuple_of({{"s", s},
                              {"m", m},
                              {"n", n},
                              {"k", static_cast<long long>(wk)},
                              {"l", static_cast<long long>(wl)}}),
                    worst, 1e-7);
        }
    }
}

void run_margins(Collector &out, const VerifyOptions &options) {
    using margins::WavefunctionRep;
    // Ground state: Gaussian position density.
    {
        const WavefunctionRep f0 = WavefunctionRep::fock(povm::FockVector::number_state(0, 1));
        double worst = 0.0;
        for (int i = -80; i <= 80; ++i) {
            const double x = 0.1 * i;
            const double ref = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
            worst = std::max(worst, std::abs(margins::unsharp_position_density(0, f0, x) - ref));
        }
        out.add("position density of f_0 is N(0,1)", tuple_of({{"s", 0}}), worst, 1e-8);
    }
    // Cartesian moment consistency under z = (q + ip)/sqrt(2).
    {
        povm::FockVector phi;
        phi.coeffs = {Complex{0.6, 0.0}, Complex{0.0, 0.48}, Complex{0.64, 0.0}};
        phi = phi.normalized();
        const WavefunctionRep rep = WavefunctionRep::fock(phi);
        const quadrature::PlaneRule rule =
            quadrature::make_plane_rule(quadrature::RadialAngularScheme{options.n_r, options.n_theta});
        for (unsigned s = 0; s <= 3; ++s) {
            for (unsigned j = 0; j <= 4; ++j) {
                const double joint =
                    quadrature::integrate(
                        [&](Complex z) {
                            return Complex(std::pow(std::numbers::sqrt2 * z.real(), static_cast<double>(j)) *
                                           povm::state_density(s, phi, z));
                        },
                        rule)
                        .real();
                const double margin = margins::unsharp_position_moment(s, rep, j);
                out.add("position margin moment = joint moment", tuple_of({{"s", s}, {"j", j}}),
                        std::abs(joint - margin), 1e-6);
            }
        }
    }
    // Envelope domination for a bump on [-1, 1].
    {
        const WavefunctionRep bump = margins::make_bump(-1.0, 1.0, 401);
        for (unsigned s = 0; s <= 3; ++s) {
            const margins::PositionEnvelope env = margins::make_position_envelope(s, bump);
            double worst = 0.0;
            for (int i = -120; i <= 120; ++i) {
                const double x = 0.05 * i;
                const double g = margins::unsharp_position_density(s, bump, x);
                worst = std::max(worst, g - env(x));
            }
            out.add("envelope - density <= 0", tuple_of({{"s", s}}), std::max(worst, 0.0), 0.0);
        }
    }
    // Angular margin diagonal entries and polar partition of the plane.
    {
        const std::size_t d = 6;
        const margins::Interval half{0.5, 0.5 + kPi};
        for (unsigned s = 0; s <= 3; ++s) {
            const povm::TruncatedOperator ang = margins::angular_margin_operator(s, half, d);
            double worst = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const auto i = static_cast<Eigen::Index>(k);
                worst = std::max(worst, std::abs(ang.entries(i, i) - 0.5));
            }
            out.add("angular margin diagonal = |X|/2pi", tuple_of({{"s", s}}), worst, 1e-9);

            const double inf = std::numeric_limits<double>::infinity();
            const double radii[] = {0.0, 0.7, 1.5, inf};
            const double angles[] = {0.0, 1.0, 3.0, 2.0 * kPi};
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    sum += povm::povm_element(
                               s, quadrature::AnnulusSector{radii[a], radii[a + 1], angles[b], angles[b + 1]}, d)
                               .entries;
                }
            }
            const double err =
                (sum - Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)))
                    .cwiseAbs()
                    .maxCoeff();
            out.add("annulus-sector partition sums to identity", tuple_of({{"s", s}}), err, 1e-8);
        }
        for (unsigned m = 0; m <= 6; ++m) {
            double worst = 0.0;
            for (unsigned s = 0; s <= 3; ++s) {
                for (unsigned k = 0; k <= 3; ++k) {
                    const double v = std::abs(margins::polar_moment_element(s, 0, m, k, k));
                    const double bound = std::pow(2.0 * kPi, static_cast<double>(m));
                    worst = std::max(worst, (v - bound) / bound);
                }
            }
            out.add("(|angular moment| - (2pi)^m) / (2pi)^m <= 0", tuple_of({{"m", m}}), std::max(worst, 0.0),
                    1e-12);
        }
    }
}

void run_sampler(Collector &out, const VerifyOptions &options) {
    const std::pair<unsigned, double> cases[] = {{0, 1.0}, {1, 2.0}};
    for (const auto &[s, expected] : cases) {
        const povm::FockVector phi = povm::FockVector::number_state(0, 1);
        const std::vector<Complex> z = povm::sample_outcomes(s, phi, options.sampler_count, options.seed);
        double mean = 0.0;
        for (const Complex &v : z) {
            mean += std::norm(v);
        }
        mean /= static_cast<double>(z.size());
        double var = 0.0;
        for (const Complex &v : z) {
            const double d = std::norm(v) - mean;
            var += d * d;
        }
        var /= static_cast<double>(z.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(z.size()));
        out.add("sample mean |z|^2 within 5 standard errors (in units of SE)",
                tuple_of({{"s", s}, {"count", static_cast<long long>(z.size())}}), std::abs(mean - expected) / se,
                5.0);

        const std::size_t repeat = std::min<std::size_t>(options.sampler_count, 10000);
        const std::vector<Complex> a = povm::sample_outcomes(s, phi, repeat, options.seed);
        const std::vector<Complex> b = povm::sample_outcomes(s, phi, repeat, options.seed);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < repeat; ++i) {
            mismatches += (a[i] != b[i]) ? 1 : 0;
        }
        out.add("fixed seed reproduces samples (mismatch count)", tuple_of({{"s", s}}),
                static_cast<double>(mismatches), 0.0);
    }
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : all_suites()) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::string to_string(Suite suite) {
    switch (suite) {
    case Suite::normal_order:
        return "normal_order";
    case Suite::selection:
        return "selection";
    case Suite::quadrature:
        return "quadrature";
    case Suite::margins:
        return "margins";
    case Suite::sampler:
        return "sampler";
    }
    return "unknown";
}

std::vector<Suite> all_suites() {
    return {Suite::normal_order, Suite::selection, Suite::quadrature, Suite::margins, Suite::sampler};
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<const Check *> Report::failures() const {
    std::vector<const Check *> out;
    for (const Check &c : checks) {
        if (!c.pass) {
            out.push_back(&c);
        }
    }
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const Check &c : checks) {
        list.push_back({{"suite", c.suite},
                        {"name", c.name},
                        {"tuple", c.tuple},
                        {"error", c.error},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    return {{"passed", passed()}, {"checks", std::move(list)}};
}

Report run_suite(Suite suite, const VerifyOptions &options) {
    Collector out(suite, options);
    switch (suite) {
    case Suite::normal_order:
        run_normal_order(out, options);
        break;
    case Suite::selection:
        run_selection(out);
        break;
    case Suite::quadrature:
        run_quadrature(out, options);
        break;
    case Suite::margins:
        run_margins(out, options);
        break;
    case Suite::sampler:
        run_sampler(out, options);
        break;
    }
    return out.take();
}

Report run_suites(const std::vector<Suite> &suites, const VerifyOptions &options) {
    Report total;
    for (Suite s : suites) {
        Report r = run_suite(s, options);
        total.checks.insert(total.checks.end(), r.checks.begin(), r.checks.end());
    }
    return total;
}

} // namespace phasemoments::verify
