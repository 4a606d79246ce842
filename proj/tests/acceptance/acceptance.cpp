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

// Acceptance checks. Each criterion prints one PASS/FAIL line with the
// measured error, its tolerance and the wall time; the exit status is the
// number of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phasemoments/phasemoments.hpp"

namespace {

using Complex = std::complex<double>;
using phasemoments::povm::FockVector;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    double error = 0.0;
    double tolerance = 0.0;
    std::string detail;
    /// Set when a check other than error <= tolerance failed.
    bool forced_fail = false;
};

int g_failures = 0;

void criterion(int id, const char *name, double time_limit, const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    bool threw = false;
    try {
        o = body();
    } catch (const std::exception &e) {
        threw = true;
        o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = !threw && !o.forced_fail && std::isfinite(o.error) && o.error <= o.tolerance &&
                      seconds < time_limit;
    g_failures += pass ? 0 : 1;
    char limit[32] = "";
    if (std::isfinite(time_limit)) {
        std::snprintf(limit, sizeof limit, " (limit %.0fs)", time_limit);
    }
    std::printf("%s [%2d] %-38s error=%.3e tol=%.1e time=%.3fs%s%s%s\n", pass ? "PASS" : "FAIL", id, name, o.error,
                o.tolerance, seconds, limit, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

Eigen::MatrixXcd identity(std::size_t d) {
    return Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

// <k|a^m (a*)^n|l> from the action on number states.
double ladder_product(unsigned m, unsigned n, unsigned k, unsigned l) {
    if (k + m != l + n) {
        return 0.0;
    }
    double v = 1.0;
    for (unsigned j = l + 1; j <= l + n; ++j) {
        v *= std::sqrt(static_cast<double>(j));
    }
    for (unsigned j = l + n; j > l + n - m; --j) {
        v *= std::sqrt(static_cast<double>(j));
    }
    return v;
}

Outcome selection_rule() {
    double worst = 0.0;
    int count = 0;
    for (unsigned s = 0; s <= 6; ++s) {
        for (unsigned m = 0; m <= 6; ++m) {
            for (unsigned n = 0; n <= 6; ++n) {
                for (unsigned k = 0; k <= 12; ++k) {
                    for (unsigned l = 0; l <= 12; ++l) {
                        if (k + m != l + n) {
                            worst = std::max(worst, std::abs(phasemoments::povm::moment_matrix_element(s, m, n, k, l)));
                            ++count;
                        }
                    }
                }
            }
        }
    }
    return {worst, 0.0, std::to_string(count) + " off-stripe tuples"};
}

Outcome normal_order() {
    constexpr std::size_t d = 24;
    double worst = 0.0;
    double oracle_worst = 0.0;
    for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned n = 0; n <= 4; ++n) {
            const auto lhs = phasemoments::povm::moment_operator(0, m, n, d);
            const auto rhs = phasemoments::povm::normal_ordered_operator(m, n, d);
            for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(d); ++k) {
                for (Eigen::Index l = 0; l < static_cast<Eigen::Index>(d); ++l) {
                    if (!rhs.valid(k, l)) {
                        continue;
                    }
                    const Complex ref = rhs.op.entries(k, l);
                    const double scale = std::max(std::abs(ref), std::numeric_limits<double>::min());
                    worst = std::max(worst, std::abs(lhs.entries(k, l) - ref) / (ref == 0.0 ? 1.0 : scale));
                    const double exact =
                        ladder_product(m, n, static_cast<unsigned>(k), static_cast<unsigned>(l));
                    oracle_worst = std::max(oracle_worst, std::abs(ref - exact) / std::max(1.0, exact));
                }
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "mask vs number-state action %.1e", oracle_worst);
    Outcome o{worst, 1e-9, buf};
    o.forced_fail = oracle_worst > 1e-12;
    return o;
}

Outcome quadrature_vs_closed_form() {
    namespace q = phasemoments::quadrature;
    const q::PlaneRule rule = q::make_plane_rule(q::RadialAngularScheme{80, 128});
    std::vector<std::pair<unsigned, unsigned>> orders;
    for (unsigned m = 0; m <= 6; ++m) {
        for (unsigned n = 0; m + n <= 6; ++n) {
            orders.emplace_back(m, n);
        }
    }
    constexpr unsigned kDim = 6;
    double worst = 0.0;
    std::string where;
    for (unsigned s = 0; s < kDim; ++s) {
        const std::size_t count = orders.size() * kDim * kDim;
        const std::vector<Complex> values = q::integrate_many(
            [&](Complex z, std::span<Complex> slot) {
                Complex density[kDim][kDim];
                for (unsigned k = 0; k < kDim; ++k) {
                    for (unsigned l = 0; l < kDim; ++l) {
                        density[k][l] = phasemoments::povm::pair_density(s, k, l, z);
                    }
                }
                std::size_t idx = 0;
                for (const auto &[m, n] : orders) {
                    const Complex mono = std::pow(z, static_cast<int>(m)) * std::pow(std::conj(z), static_cast<int>(n));
                    for (unsigned k = 0; k < kDim; ++k) {
                        for (unsigned l = 0; l < kDim; ++l) {
                            slot[idx++] = mono * density[k][l];
                        }
                    }
                }
            },
            count, rule);
        std::size_t idx = 0;
        for (const auto &[m, n] : orders) {
            for (unsigned k = 0; k < kDim; ++k) {
                for (unsigned l = 0; l < kDim; ++l) {
                    const double err =
                        std::abs(values[idx++] - phasemoments::povm::moment_matrix_element(s, m, n, k, l));
                    if (err > worst) {
                        worst = err;
                        where = "worst s=" + std::to_string(s) + " m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                    }
                }
            }
        }
    }
    return {worst, 1e-7, where};
}

Outcome normalization_positivity() {
    namespace q = phasemoments::quadrature;
    double id_err = 0.0;
    double min_eig = kInf;
    double disk_err = 0.0;
    for (unsigned s = 0; s <= 4; ++s) {
        const auto full = phasemoments::povm::povm_element(s, q::FullPlane{}, 16);
        id_err = std::max(id_err, (full.entries - identity(16)).cwiseAbs().maxCoeff());
        const auto disk = phasemoments::povm::povm_element(s, q::Disk{{0.0, 0.0}, 1.0}, 16);
        min_eig = std::min(min_eig, phasemoments::povm::min_eigenvalue(disk));
        for (unsigned k = 0; k < 16; ++k) {
            const auto i = static_cast<Eigen::Index>(k);
            disk_err = std::max(disk_err,
                                std::abs(disk.entries(i, i).real() - phasemoments::oracle::diagonal_disk_mass(s, k, 1.0)));
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "min eig %.3e (>= -1e-10), disk diagonal vs oracle %.1e", min_eig, disk_err);
    Outcome o{id_err, 1e-9, buf};
    o.forced_fail = min_eig < -1e-10 || disk_err > 1e-9;
    return o;
}

Outcome diagonal_polynomial() {
    double worst = 0.0;
    bool fits_ok = true;
    std::string detail;
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned s = 0; s <= 6; ++s) {
            std::vector<double> f;
            for (unsigned k = 0; k <= 20; ++k) {
                f.push_back(phasemoments::povm::moment_matrix_element(s, n, n, k, k));
            }
            // (n+1)-th forward difference over every window inside k <= 20.
            for (unsigned k0 = 0; k0 + n + 1 <= 20; ++k0) {
                double diff = 0.0;
                double scale = 0.0;
                for (unsigned i = 0; i <= n + 1; ++i) {
                    const double c = phasemoments::specfun::binomial(n + 1, i) * (((n + 1 - i) % 2) ? -1.0 : 1.0);
                    diff += c * f[k0 + i];
                    scale = std::max(scale, std::abs(c * f[k0 + i]));
                }
                worst = std::max(worst, std::abs(diff) / scale);
            }
            const auto p = phasemoments::povm::fit_diagonal_polynomial(s, n, 20);
            for (unsigned k = 0; k <= 20; ++k) {
                if (p(k) != f[k]) {
                    fits_ok = false;
                    detail = "fit mismatch s=" + std::to_string(s) + " n=" + std::to_string(n);
                }
            }
            if (n == 1) {
                const std::vector<std::int64_t> expected = {static_cast<std::int64_t>(s) + 1, 1};
                if (p.coefficients != expected) {
                    fits_ok = false;
                    detail = "n=1 fit is not k+s+1 for s=" + std::to_string(s);
                }
            }
        }
    }
    Outcome o{worst, 1e-6, fits_ok ? "integer fits reproduce k <= 20; n=1 gives k+s+1" : detail};
    o.forced_fail = !fits_ok;
    return o;
}

Outcome exponential_boundedness() {
    double worst = 0.0;
    std::string where;
    for (unsigned s = 0; s <= 6; ++s) {
        for (unsigned k = 0; k <= 6; ++k) {
            for (double a : {0.5, 1.0, 2.0}) {
                const double value = phasemoments::povm::exp_bound_closed_form(s, k, a);
                // int e^{a|z|} (1/pi)|<k|D_z|s>|^2 d^2z in polar form.
                const double ref = phasemoments::oracle::half_line(
                    [&](double r) { return 2.0 * r * phasemoments::oracle::weighted_radial_density(s, k, a, r); });
                const double err = std::isfinite(value) ? std::abs(value - ref) / ref : kInf;
                if (err > worst) {
                    worst = err;
                    where = "worst s=" + std::to_string(s) + " k=" + std::to_string(k) + " a=" + std::to_string(a);
                }
            }
        }
    }
    int undetermined = 0;
    for (unsigned s = 0; s <= 8; ++s) {
        for (unsigned k = 0; k <= 8; ++k) {
            const auto report =
                phasemoments::moments::determinacy_report(phasemoments::moments::make_phase_space_diagonal(s, k));
            undetermined += report.determinate_verdict ? 0 : 1;
        }
    }
    Outcome o{worst, 1e-6, where + "; families s,k <= 8 not established: " + std::to_string(undetermined)};
    o.forced_fail = undetermined != 0;
    return o;
}

Outcome translation_identity() {
    namespace mo = phasemoments::moments;
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> weight(1, 5);
    std::uniform_int_distribution<int> atoms(1, 4);
    int mismatches = 0;
    int cases = 0;
    for (int c = 0; c < 200; ++c) {
        std::vector<std::vector<double>> points;
        std::vector<double> weights;
        const int count = atoms(rng);
        for (int i = 0; i < count; ++i) {
            points.push_back({static_cast<double>(coord(rng))});
            weights.push_back(static_cast<double>(weight(rng)));
        }
        const double a = coord(rng);
        const mo::MomentSequence seq = mo::moment_sequence(mo::make_atomic(points, weights), 12);
        const mo::MomentSequence back =
            mo::translate_moments(mo::translate_moments(seq, a, mo::Direction::inverse), a, mo::Direction::forward);
        mismatches += back.entries == seq.entries ? 0 : 1;
        ++cases;
    }
    for (int t = -3; t <= 3; ++t) {
        for (int a = -3; a <= 3; ++a) {
            const auto shifted = mo::translate_moments(
                mo::moment_sequence(mo::make_atomic({{static_cast<double>(t)}}, {1.0}), 12), a, mo::Direction::forward);
            const auto direct = mo::moment_sequence(mo::make_atomic({{static_cast<double>(t + a)}}, {1.0}), 12);
            mismatches += shifted.entries == direct.entries ? 0 : 1;
            ++cases;
        }
    }
    return {static_cast<double>(mismatches), 0.0, std::to_string(cases) + " exact comparisons (error = mismatches)"};
}

// int (sqrt2 Re z)^j <phi|A^{|s>}(d^2z)|phi> from the closed-form moment
// operator matrix elements.
double joint_position_moment(unsigned s, const FockVector &phi, unsigned j) {
    Complex total = 0.0;
    for (unsigned m = 0; m <= j; ++m) {
        const unsigned n = j - m;
        const double c = phasemoments::specfun::binomial(j, m);
        for (unsigned k = 0; k < phi.dim(); ++k) {
            for (unsigned l = 0; l < phi.dim(); ++l) {
                const double v = phasemoments::povm::moment_matrix_element(s, m, n, k, l);
                if (v != 0.0) {
                    total += c * std::conj(phi[k]) * v * phi[l];
                }
            }
        }
    }
    return total.real() * std::pow(std::numbers::sqrt2, static_cast<double>(j)) / std::pow(2.0, static_cast<double>(j));
}

Outcome cartesian_margins() {
    namespace mg = phasemoments::margins;
    const mg::WavefunctionRep f0 = mg::WavefunctionRep::fock(FockVector::number_state(0, 1));
    double gauss_err = 0.0;
    for (int i = -100; i <= 100; ++i) {
        const double x = 0.08 * i;
        gauss_err = std::max(gauss_err, std::abs(mg::unsharp_position_density(0, f0, x) -
                                                 std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi)));
    }

    std::vector<FockVector> states;
    states.push_back(FockVector::number_state(0, 1));
    states.push_back(FockVector{{Complex{0.6, 0.0}, Complex{0.0, 0.48}, Complex{0.64, 0.0}}}.normalized());
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal;
    for (int i = 0; i < 3; ++i) {
        FockVector v;
        for (int n = 0; n < 5; ++n) {
            v.coeffs.emplace_back(normal(rng), normal(rng));
        }
        states.push_back(v.normalized());
    }
    double moment_err = 0.0;
    for (const FockVector &phi : states) {
        const mg::WavefunctionRep rep = mg::WavefunctionRep::fock(phi);
        for (unsigned s = 0; s <= 3; ++s) {
            for (unsigned j = 0; j <= 4; ++j) {
                moment_err = std::max(moment_err, std::abs(mg::unsharp_position_moment(s, rep, j) -
                                                           joint_position_moment(s, phi, j)));
            }
        }
    }

    double dominance = -kInf;
    for (const auto &[lo, hi] : {std::pair{-1.0, 1.0}, std::pair{-0.5, 1.5}}) {
        const mg::WavefunctionRep bump = mg::make_bump(lo, hi, 401);
        for (unsigned s = 0; s <= 3; ++s) {
            for (int i = -200; i <= 200; ++i) {
                const double x = 0.05 * i;
                dominance = std::max(dominance, mg::unsharp_position_density(s, bump, x) - mg::envelope_bound(s, bump, x));
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "gaussian %.1e (<=1e-8), max(density - envelope) %.2e (<=0)", gauss_err, dominance);
    Outcome o{moment_err, 1e-6, buf};
    o.forced_fail = gauss_err > 1e-8 || dominance > 0.0;
    return o;
}

Outcome polar_margins() {
    namespace mg = phasemoments::margins;
    constexpr std::size_t d = 6;
    double diag_err = 0.0;
    const mg::Interval arcs[] = {{0.0, 2.0 * kPi}, {0.5, 0.5 + kPi}, {1.0, 1.3}, {4.0, 2.0 * kPi}};
    for (unsigned s = 0; s <= 3; ++s) {
        for (const mg::Interval &arc : arcs) {
            const auto op = mg::angular_margin_operator(s, arc, d);
            for (std::size_t k = 0; k < d; ++k) {
                const auto i = static_cast<Eigen::Index>(k);
                diag_err = std::max(diag_err, std::abs(op.entries(i, i) - (arc.hi - arc.lo) / (2.0 * kPi)));
            }
        }
    }

    double partition_err = 0.0;
    const double radii[] = {0.0, 0.7, 1.5, 3.0, kInf};
    const double angles[] = {0.0, 1.0, 3.0, 2.0 * kPi};
    for (unsigned s = 0; s <= 3; ++s) {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 3; ++b) {
                sum += phasemoments::povm::povm_element(
                           s, phasemoments::quadrature::AnnulusSector{radii[a], radii[a + 1], angles[b], angles[b + 1]},
                           d)
                           .entries;
            }
        }
        partition_err = std::max(partition_err, (sum - identity(d)).cwiseAbs().maxCoeff());
    }

    double excess = 0.0;
    for (unsigned m = 0; m <= 6; ++m) {
        const double bound = std::pow(2.0 * kPi, static_cast<double>(m));
        for (unsigned s = 0; s <= 3; ++s) {
            for (unsigned k = 0; k <= 3; ++k) {
                for (unsigned l = 0; l <= 3; ++l) {
                    const double v = std::abs(mg::polar_moment_element(s, 0, m, k, l));
                    excess = std::max(excess, (v - bound) / bound);
                }
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "partition %.1e (<=1e-8), moment excess over (2pi)^m %.1e (<=1e-12 relative)",
                  partition_err, excess);
    Outcome o{diag_err, 1e-9, buf};
    o.forced_fail = partition_err > 1e-8 || excess > 1e-12;
    return o;
}

Outcome sampler() {
    constexpr std::size_t kCount = 1000000;
    constexpr std::uint64_t kSeed = 2026;
    double worst = 0.0;
    bool identical = true;
    const FockVector vacuum = FockVector::number_state(0, 1);
    for (const auto &[s, expected] : {std::pair{0U, 1.0}, std::pair{1U, 2.0}}) {
        const auto z = phasemoments::povm::sample_outcomes(s, vacuum, kCount, kSeed);
        double mean = 0.0;
        for (const Complex &v : z) {
            mean += std::norm(v);
        }
        mean /= static_cast<double>(z.size());
        double var = 0.0;
        for (const Complex &v : z) {
            var += (std::norm(v) - mean) * (std::norm(v) - mean);
        }
        var /= static_cast<double>(z.size() - 1);
        worst = std::max(worst, std::abs(mean - expected) / std::sqrt(var / static_cast<double>(z.size())));
        const auto again = phasemoments::povm::sample_outcomes(s, vacuum, kCount, kSeed);
        identical = identical && std::memcmp(z.data(), again.data(), z.size() * sizeof(Complex)) == 0;
    }
    Outcome o{worst, 5.0, identical ? "error in standard errors; reruns byte-identical" : "reruns differ"};
    o.forced_fail = !identical;
    return o;
}

} // namespace

int main() {
    criterion(1, "selection rule", 1.0, selection_rule);
    criterion(2, "normal-order identity (relative)", 1.0, normal_order);
    criterion(3, "plane quadrature vs closed form", 30.0, quadrature_vs_closed_form);
    criterion(4, "normalization and positivity", kInf, normalization_positivity);
    criterion(5, "diagonal polynomial structure", kInf, diagonal_polynomial);
    criterion(6, "exponential boundedness (relative)", kInf, exponential_boundedness);
    criterion(7, "translation identity", kInf, translation_identity);
    criterion(8, "cartesian margins", kInf, cartesian_margins);
    criterion(9, "polar margins", kInf, polar_margins);
    criterion(10, "sampler mean and determinism", 60.0, sampler);
    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
