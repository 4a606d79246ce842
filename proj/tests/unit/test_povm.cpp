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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phasemoments/errors.hpp"
#include "phasemoments/povm.hpp"
#include "property.hpp"

namespace pv = phasemoments::povm;
namespace q = phasemoments::quadrature;
using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(FockVector, Basics) {
    const pv::FockVector e2 = pv::FockVector::number_state(2, 4);
    EXPECT_EQ(e2.dim(), 4U);
    EXPECT_EQ(e2[2], Complex(1.0, 0.0));
    EXPECT_EQ(e2[9], Complex{});
    pv::FockVector v;
    v.coeffs = {Complex(3, 0), Complex(0, 4)};
    EXPECT_NEAR(v.norm(), 5.0, 1e-15);
    EXPECT_NEAR(v.normalized().norm(), 1.0, 1e-15);
    EXPECT_NEAR(pv::mean_number(v.normalized()), 16.0 / 25.0, 1e-15);
    const pv::FockVector sum = pv::combine(pv::FockVector::number_state(0, 1), Complex(0, 1), e2);
    EXPECT_EQ(sum.dim(), 4U);
    EXPECT_EQ(sum[2], Complex(0, 1));
}

TEST(PairDensity, Examples) {
    EXPECT_NEAR(std::abs(pv::pair_density(0, 0, 0, 0.0) - 1.0 / kPi), 0.0, 1e-16);
    for (unsigned s = 0; s < 4; ++s) {
        for (unsigned k = 0; k < 4; ++k) {
            for (unsigned l = 0; l < 4; ++l) {
                const double expected = (k == s && l == s) ? 1.0 / kPi : 0.0;
                EXPECT_NEAR(std::abs(pv::pair_density(s, k, l, 0.0) - expected), 0.0, 1e-16);
            }
        }
    }
    EXPECT_NEAR(pv::pair_density(1, 0, 0, std::polar(1.0, 0.4)).real(), std::exp(-1.0) / kPi, 1e-15);
    EXPECT_NEAR(std::exp(-1.0) / kPi, 0.117099, 1e-6);
}

TEST(PairDensity, MatchesDoubleSumExpansion) {
    phasemoments::testing::for_all(51, 300, [](phasemoments::testing::Gen &g) {
        const unsigned s = g.index(0, 6);
        const unsigned k = g.index(0, 6);
        const unsigned l = g.index(0, 6);
        const Complex z = g.point_in_disk(3.0);
        EXPECT_NEAR(std::abs(pv::pair_density(s, k, l, z) - pv::pair_density_expansion(s, k, l, z)), 0.0, 1e-10)
            << s << k << l << " z=" << z;
    });
}

TEST(DiagonalDensity, RealRotationInvariant) {
    phasemoments::testing::for_all(52, 200, [](phasemoments::testing::Gen &g) {
        const unsigned s = g.index(0, 6);
        const unsigned k = g.index(0, 6);
        const Complex z = g.point_in_disk(3.0);
        const double d = pv::diagonal_density(s, k, z);
        EXPECT_GE(d, 0.0);
        const Complex p = pv::pair_density(s, k, k, z);
        EXPECT_NEAR(p.real(), d, 1e-12);
        EXPECT_EQ(p.imag(), 0.0);
        EXPECT_NEAR(pv::diagonal_density(s, k, std::polar(std::abs(z), g.real(0, 2 * kPi))), d, 1e-12);
    });
    for (double r : {0.0, 0.5, 2.0}) {
        EXPECT_NEAR(pv::diagonal_density(0, 0, r), std::exp(-r * r) / kPi, 1e-16);
    }
    EXPECT_NEAR(q::integrate_plane([](Complex z) { return Complex(pv::diagonal_density(3, 5, z), 0.0); },
                                   q::RadialAngularScheme{})
                    .real(),
                1.0, 1e-12);
}

TEST(PovmElement, DiskExamples) {
    const pv::TruncatedOperator e = pv::povm_element(0, q::Disk{{0, 0}, 1.0}, 4);
    EXPECT_NEAR(e.entries(0, 0).real(), 1.0 - std::exp(-1.0), 1e-8);
    EXPECT_NEAR(std::abs(e.entries(0, 1)), 0.0, 1e-10);
    EXPECT_TRUE(e.hermitian);
    for (unsigned s = 0; s <= 3; ++s) {
        const pv::TruncatedOperator es = pv::povm_element(s, q::Disk{{0, 0}, 1.5}, 4);
        for (unsigned k = 0; k < 4; ++k) {
            EXPECT_NEAR(es.entries(k, k).real(), phasemoments::oracle::diagonal_disk_mass(s, k, 1.5), 1e-10)
                << s << "," << k;
        }
    }
}

TEST(PovmElement, NormalisedHermitianPositive) {
    for (unsigned s = 0; s <= 4; ++s) {
        const pv::TruncatedOperator full = pv::povm_element(s, q::FullPlane{}, 16);
        EXPECT_LT((full.entries - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-9);
        for (const q::Region &r : {q::Region{q::Disk{{0.3, -0.2}, 1.0}}, q::Region{q::HalfPlane{1.0, 0.2}},
                                   q::Region{q::Rectangle{-1, 2, 0, 1}}, q::Region{q::AnnulusSector{0.5, 2, 1, 4}}}) {
            const pv::TruncatedOperator e = pv::povm_element(s, r, 8);
            EXPECT_LT((e.entries - e.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_GE(pv::min_eigenvalue(e), -1e-10) << q::describe(r);
            EXPECT_LE(pv::min_eigenvalue(e), 1.0);
        }
    }
    EXPECT_THROW(pv::povm_element(0, q::FullPlane{}, 0), phasemoments::DomainError);
}

TEST(MomentMatrixElement, Examples) {
    EXPECT_EQ(pv::moment_matrix_element(0, 1, 1, 0, 0), 1.0);
    EXPECT_EQ(pv::moment_matrix_element(1, 1, 1, 1, 1), 3.0);
    for (unsigned s = 0; s <= 6; ++s) {
        EXPECT_EQ(pv::moment_matrix_element(s, 1, 0, 0, 2), 0.0);
    }
}

TEST(MomentMatrixElement, SelectionRuleIsExact) {
    for (unsigned s = 0; s <= 10; ++s) {
        for (unsigned m = 0; m <= 10; ++m) {
            for (unsigned n = 0; n <= 10; ++n) {
                for (unsigned k = 0; k <= 10; ++k) {
                    for (unsigned l = 0; l <= 10; ++l) {
                        if (k + m != l + n) {
                            ASSERT_EQ(pv::moment_matrix_element(s, m, n, k, l), 0.0) << s << m << n << k << l;
                        }
                    }
                }
            }
        }
    }
}

TEST(MomentMatrixElement, SmallCasesAgainstLadderAlgebra) {
    // A^{|s>}[1,1] = N + s + 1, A^{|s>}[1,0] = a, A^{|s>}[0,1] = a*.
    for (unsigned s = 0; s <= 8; ++s) {
        for (unsigned k = 0; k <= 20; ++k) {
            EXPECT_EQ(pv::moment_matrix_element(s, 1, 1, k, k), static_cast<double>(k + s + 1));
            EXPECT_NEAR(pv::moment_matrix_element(s, 1, 0, k, k + 1), std::sqrt(k + 1.0), 1e-14);
            EXPECT_NEAR(pv::moment_matrix_element(s, 0, 1, k + 1, k), std::sqrt(k + 1.0), 1e-14);
        }
    }
}

TEST(MomentOperator, IdentityAdjointAndStripe) {
    for (unsigned s = 0; s <= 4; ++s) {
        EXPECT_EQ(pv::moment_operator(s, 0, 0, 10).entries, Eigen::MatrixXcd::Identity(10, 10));
        for (unsigned m = 0; m <= 4; ++m) {
            for (unsigned n = 0; n <= 4; ++n) {
                const pv::TruncatedOperator a = pv::moment_operator(s, m, n, 12);
                const pv::TruncatedOperator b = pv::moment_operator(s, n, m, 12);
                EXPECT_EQ(a.entries, b.entries.adjoint());
                for (Eigen::Index k = 0; k < 12; ++k) {
                    for (Eigen::Index l = 0; l < 12; ++l) {
                        if (l != k + static_cast<Eigen::Index>(m) - static_cast<Eigen::Index>(n)) {
                            EXPECT_EQ(a.entries(k, l), Complex{});
                        }
                    }
                }
            }
        }
    }
}

TEST(NormalOrdered, Examples) {
    const pv::MaskedOperator aad = pv::normal_ordered_operator(1, 1, 6);
    for (Eigen::Index k = 0; k < 6; ++k) {
        if (aad.valid(k, k)) {
            EXPECT_NEAR(aad.op.entries(k, k).real(), k + 1.0, 1e-14);
        }
    }
    EXPECT_FALSE(aad.valid(5, 5));
    EXPECT_EQ(pv::normal_ordered_operator(0, 0, 5).op.entries, Eigen::MatrixXcd::Identity(5, 5));
    const pv::MaskedOperator a2 = pv::normal_ordered_operator(2, 0, 7);
    for (Eigen::Index k = 0; k + 2 < 7; ++k) {
        EXPECT_NEAR(a2.op.entries(k, k + 2).real(), std::sqrt((k + 1.0) * (k + 2.0)), 1e-14);
    }
    EXPECT_THROW(pv::normal_ordered_operator(3, 2, 4), phasemoments::DomainError);
}

TEST(NormalOrdered, MaskExcludesTruncatedColumns) {
    // For a^2 a* at d = 4 the entry (2, 3) needs |4>, which is truncated away.
    const pv::MaskedOperator op = pv::normal_ordered_operator(2, 1, 4);
    EXPECT_FALSE(op.valid(2, 3));
    EXPECT_TRUE(op.valid(1, 2));
    EXPECT_NEAR(op.op.entries(1, 2).real(), pv::moment_matrix_element(0, 2, 1, 1, 2), 1e-12);
}

TEST(NormalOrdered, GroundStateMomentsAreNormalOrderedProducts) {
    const std::size_t d = 24;
    for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned n = 0; n <= 4; ++n) {
            const pv::TruncatedOperator lhs = pv::moment_operator(0, m, n, d);
            const pv::MaskedOperator rhs = pv::normal_ordered_operator(m, n, d);
            for (Eigen::Index k = 0; k < 24; ++k) {
                for (Eigen::Index l = 0; l < 24; ++l) {
                    if (rhs.valid(k, l)) {
                        const Complex ref = rhs.op.entries(k, l);
                        EXPECT_LE(std::abs(lhs.entries(k, l) - ref), 1e-9 * std::max(1.0, std::abs(ref)))
                            << m << n << k << l;
                    }
                }
            }
        }
    }
}

TEST(FitDiagonalPolynomial, Examples) {
    const pv::IntegerPolynomial p01 = pv::fit_diagonal_polynomial(0, 1, 10);
    EXPECT_EQ(p01.coefficients, (std::vector<std::int64_t>{1, 1}));
    const pv::IntegerPolynomial p11 = pv::fit_diagonal_polynomial(1, 1, 10);
    EXPECT_EQ(p11.coefficients, (std::vector<std::int64_t>{2, 1}));
    for (unsigned s = 0; s <= 5; ++s) {
        EXPECT_EQ(pv::fit_diagonal_polynomial(s, 0, 5).coefficients, (std::vector<std::int64_t>{1}));
    }
    EXPECT_THROW(pv::fit_diagonal_polynomial(0, 3, 3), phasemoments::DomainError);
}

TEST(FitDiagonalPolynomial, FiniteDifferencesVanish) {
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned s = 0; s <= 6; ++s) {
            std::vector<double> y;
            for (unsigned k = 0; k <= 20; ++k) {
                y.push_back(pv::moment_matrix_element(s, n, n, k, k));
            }
            double scale = 0.0;
            for (double v : y) {
                scale = std::max(scale, std::abs(v));
            }
            for (unsigned order = 0; order <= n; ++order) {
                for (std::size_t i = 0; i + 1 < y.size() - order; ++i) {
                    y[i] = y[i + 1] - y[i];
                }
            }
            for (std::size_t i = 0; i + n + 1 < 21; ++i) {
                EXPECT_LE(std::abs(y[i]), 1e-6 * scale) << "n=" << n << " s=" << s << " k=" << i;
            }
            const pv::IntegerPolynomial p = pv::fit_diagonal_polynomial(s, n, 20);
            for (unsigned k = 0; k <= 20; ++k) {
                EXPECT_EQ(p(k), pv::moment_matrix_element(s, n, n, k, k));
            }
        }
    }
}

TEST(FitDiagonalBipolynomial, ReproducesDiagonal) {
    for (unsigned n = 0; n <= 4; ++n) {
        const pv::DiagonalBipolynomial b = pv::fit_diagonal_bipolynomial(n, 12, 8);
        for (unsigned s = 0; s <= 8; ++s) {
            for (unsigned k = 0; k <= 12; ++k) {
                EXPECT_EQ(b(s, k), pv::moment_matrix_element(s, n, n, k, k)) << n << s << k;
            }
        }
    }
    // n = 1: N + s + 1.
    const pv::DiagonalBipolynomial b1 = pv::fit_diagonal_bipolynomial(1, 4, 4);
    EXPECT_EQ(b1.a[1][1], 1);
    EXPECT_EQ(b1.a[0][0], 1);
    EXPECT_EQ(b1.a[0][1], 1);
}

TEST(ExpBoundClosedForm, Examples) {
    for (unsigned s = 0; s <= 4; ++s) {
        for (unsigned k = 0; k <= 4; ++k) {
            EXPECT_EQ(pv::exp_bound_closed_form(s, k, 0.0), 1.0);
        }
    }
    const double oracle = phasemoments::oracle::half_line([](double r) { return std::exp(r - r * r) * 2.0 * r; });
    EXPECT_NEAR(pv::exp_bound_closed_form(0, 0, 1.0), oracle, 1e-8);
    EXPECT_GT(pv::exp_bound_closed_form(1, 1, 2.0), pv::exp_bound_closed_form(1, 1, 1.0));
    EXPECT_THROW(pv::exp_bound_closed_form(0, 0, -1.0), phasemoments::DomainError);
}

TEST(ExpBoundClosedForm, MatchesRadialOracle) {
    for (unsigned s = 0; s <= 6; ++s) {
        for (unsigned k = 0; k <= 6; ++k) {
            for (double a : {0.5, 1.0, 2.0}) {
                const double oracle = phasemoments::oracle::half_line(
                    [&](double r) { return 2.0 * kPi * r * std::exp(a * r) * pv::diagonal_density(s, k, r); });
                const double v = pv::exp_bound_closed_form(s, k, a);
                EXPECT_TRUE(std::isfinite(v));
                EXPECT_LE(std::abs(v - oracle), 1e-6 * oracle) << s << "," << k << "," << a;
            }
        }
    }
}

TEST(Polarization, Examples) {
    const pv::DiagonalMap diag = pv::phase_space_diagonal_map(0);
    const q::Region disk = q::Disk{{0, 0}, 2.0};

    const pv::FockVector e0 = pv::FockVector::number_state(0, 2);
    const pv::FockVector e1 = pv::FockVector::number_state(1, 2);
    const Complex reconstructed = pv::polarization_reconstruct(diag, e0, e1)(disk);
    const Complex direct = q::integrate_region([](Complex z) { return pv::pair_density(0, 0, 1, z); }, disk);
    EXPECT_NEAR(std::abs(reconstructed - direct), 0.0, 1e-8);

    phasemoments::testing::Gen g(61);
    const pv::FockVector phi = g.fock_vector(3);
    EXPECT_NEAR(std::abs(pv::polarization_reconstruct(diag, phi, phi)(disk) - diag(phi)(disk)), 0.0, 1e-12);

    const pv::DiagonalMap zero = [](const pv::FockVector &) { return [](const q::Region &) { return 0.0; }; };
    EXPECT_EQ(pv::polarization_reconstruct(zero, e0, e1)(disk), Complex{});
}

TEST(Polarization, MatchesStatePairDensity) {
    phasemoments::testing::for_all(62, 6, [](phasemoments::testing::Gen &g) {
        const unsigned s = g.index(0, 3);
        const pv::FockVector psi = g.fock_vector(g.index(1, 4));
        const pv::FockVector phi = g.fock_vector(g.index(1, 4));
        const q::Region region = q::HalfPlane{g.real(0, 6), g.real(-1, 1)};
        const Complex reconstructed = pv::polarization_reconstruct(pv::phase_space_diagonal_map(s), psi, phi)(region);
        const Complex direct =
            q::integrate_region([&](Complex z) { return pv::state_pair_density(s, psi, phi, z); }, region);
        EXPECT_NEAR(std::abs(reconstructed - direct), 0.0, 1e-10);
    });
}

TEST(MomentBridge, RoundTripAndClosedForm) {
    namespace mo = phasemoments::moments;
    const mo::MomentSequence real = mo::moment_sequence(mo::make_phase_space_diagonal(1, 2), 6);
    const pv::ComplexMomentTable complex = pv::complex_moments_from_real(real);
    // <|z|^2> of A^{|1>} in |2>: N + s + 1 = 4.
    EXPECT_NEAR(std::abs(complex.at({1, 1}) - 4.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(complex.at({2, 0})), 0.0, 1e-12);
    const mo::MomentSequence back = pv::real_moments_from_complex(complex, 6);
    for (const auto &[k, v] : real.entries) {
        EXPECT_NEAR(back.at(k), v, 1e-10 * std::max(1.0, std::abs(v)));
    }
    const mo::MomentSequence atoms = mo::moment_sequence(mo::make_atomic({{1.0, 2.0}}, {1.0}), 4);
    const pv::ComplexMomentTable c = pv::complex_moments_from_real(atoms);
    const Complex z(1.0, 2.0);
    EXPECT_NEAR(std::abs(c.at({3, 1}) - z * z * z * std::conj(z)), 0.0, 1e-12);
}
