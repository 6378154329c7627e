#include "lehmer/lattice.hpp"

#include "lehmer/errors.hpp"
#include "test_support.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lehmer;

namespace {

std::vector<std::complex<double>> eigen_roots(const IntPoly& p) {
    const int n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

double largest_modulus(const IntPoly& p) {
    double best = 0;
    for (auto z : eigen_roots(p)) best = std::max(best, std::abs(z));
    return best;
}

// Integer-only oracle for dirichlet_c with targets a_i / q.
unsigned long long brute_force_c(const std::vector<long>& a, long q, long m) {
    unsigned long long limit = 1;
    for (std::size_t i = 0; i < a.size(); ++i) limit *= static_cast<unsigned long long>(m);
    for (unsigned long long c = 1; c <= limit; ++c) {
        bool ok = true;
        for (long ai : a) {
            const long rem = static_cast<long>((static_cast<unsigned long long>(ai) * c) % static_cast<unsigned long long>(q));
            if (m * std::min(rem, q - rem) > q) ok = false;
        }
        if (ok) return c;
    }
    return 0;
}

IntPoly complex_salem_octic() { return compose_neg_x_squared(testing_support::salem_quartic()); }

} // namespace

TEST(Gamma, LehmerBlocks) {
    const IntPoly p = testing_support::lehmer();
    const GammaElement g = build_gamma(field_summary(p), 2);
    const double lambda = largest_modulus(p);
    ASSERT_EQ(g.blocks.size(), 5u);
    EXPECT_TRUE(g.h_unitary);
    EXPECT_TRUE(g.integral);
    EXPECT_TRUE(g.cocompact);
    EXPECT_TRUE(g.blocks[0].noncompact);
    EXPECT_EQ(g.blocks[0].kind, EmbeddingClass::RealSplit);
    EXPECT_NEAR(static_cast<double>(g.blocks[0].diagonal[0].real()), lambda, 1e-9);
    EXPECT_NEAR(static_cast<double>(g.blocks[0].diagonal[1].real()), 1 / lambda, 1e-9);
    for (std::size_t i = 1; i < 5; ++i) {
        EXPECT_EQ(g.blocks[i].kind, EmbeddingClass::CircleCompact);
        EXPECT_FALSE(g.blocks[i].noncompact);
        EXPECT_LT(g.blocks[i].unitarity_error, 1e-9);
    }
    for (const auto& b : g.blocks) EXPECT_LT(b.determinant_error, 1e-9);
}

TEST(Gamma, QuadraticHasNoCompactPlace) {
    const IntPoly p{1, -3, 1};
    const GammaElement g = build_gamma(field_summary(p), 2);
    ASSERT_EQ(g.blocks.size(), 1u);
    EXPECT_FALSE(g.cocompact);
    const double phi2 = (3 + std::sqrt(5.0)) / 2;
    EXPECT_NEAR(static_cast<double>(g.blocks[0].diagonal[0].real()), phi2, 1e-12);
    EXPECT_NEAR(static_cast<double>(g.blocks[0].diagonal[1].real()), 1 / phi2, 1e-12);
}

TEST(Gamma, PaddingWithOnes) {
    const GammaElement g = build_gamma(field_summary(testing_support::lehmer()), 3);
    ASSERT_EQ(g.diagonal.size(), 3u);
    EXPECT_TRUE(g.diagonal[2].is_one());
    for (const auto& b : g.blocks) EXPECT_EQ(b.diagonal[2], std::complex<long double>(1));
}

TEST(Gamma, SymbolicInverse) {
    const GammaElement g = build_gamma(field_summary(testing_support::salem_quartic()), 2);
    EXPECT_TRUE((g.diagonal[0] * g.diagonal[1]).is_one());
    EXPECT_THROW(build_gamma(field_summary(testing_support::salem_quartic()), 1), std::invalid_argument);
}

TEST(Gamma, ComplexPlacesAndDuplicates) {
    const GammaElement g = build_gamma(field_summary(complex_salem_octic()), 2);
    const auto& f = g.summary;
    ASSERT_EQ(f.s, 2);
    ASSERT_EQ(f.r, 0);
    EXPECT_TRUE(g.blocks[0].noncompact);
    EXPECT_EQ(g.blocks[0].kind, EmbeddingClass::ComplexSplit);
    EXPECT_TRUE(g.blocks[1].conjugate_duplicate);
    EXPECT_FALSE(g.blocks[1].noncompact);
}

TEST(Eta, Values) {
    EXPECT_EQ(eta(1, 0), Rational(1, 2));
    EXPECT_EQ(eta(2, 1), Rational(1, 8));
    EXPECT_EQ(eta(3, 2), Rational(1, 54));
    EXPECT_THROW(eta(0, 1), std::invalid_argument);
}

TEST(Dirichlet, Examples) {
    EXPECT_EQ(dirichlet_c(std::vector<Rational>{Rational(1, 3)}, 4).c, 3u);
    EXPECT_EQ(dirichlet_c(std::vector<Rational>{Rational(1, 3)}, 4).residues[0], 0);
    EXPECT_EQ(dirichlet_c(std::vector<Rational>{}, 7).c, 1u);
    const auto w = dirichlet_c(std::vector<Rational>{Rational(1, 2), Rational(1, 4)}, 2);
    EXPECT_EQ(w.c, 1u);
    EXPECT_EQ(abs(w.residues[0]), Rational(1, 2));
    EXPECT_EQ(w.residues[1], Rational(1, 4));
    EXPECT_THROW(dirichlet_c(std::vector<Rational>{}, 0), std::invalid_argument);
}

TEST(Dirichlet, AgreesWithIntegerBruteForce) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int t = static_cast<int>(rng() % 4);
        const long m = 1 + static_cast<long>(rng() % 6);
        const long q = 1 + static_cast<long>(rng() % 97);
        std::vector<long> a;
        std::vector<Rational> targets;
        for (int i = 0; i < t; ++i) {
            a.push_back(static_cast<long>(rng() % static_cast<unsigned long>(q)));
            targets.emplace_back(a.back(), q);
            targets.back().canonicalize();
        }
        const auto w = dirichlet_c(targets, m);
        ASSERT_EQ(w.c, brute_force_c(a, q, m)) << "trial " << trial;
        for (const auto& res : w.residues) EXPECT_LE(abs(res), Rational(1, m));
        if (t == 0) EXPECT_EQ(w.c, 1u);
    }
}

TEST(Dirichlet, DoubleTargetsConvertExactly) {
    const auto w = dirichlet_c(std::vector<double>{0.25}, 4);
    EXPECT_EQ(w.c, 1u);
    EXPECT_EQ(w.targets[0], Rational(1, 4));
}

TEST(PowerReport, LehmerModulusFlagMatchesOracle) {
    const IntPoly p = testing_support::lehmer();
    const GammaElement g = build_gamma(field_summary(p), 2);
    const double lambda = largest_modulus(p);
    for (long m = 1; m <= 8; ++m) {
        const auto rep = gamma_power_report(g, m);
        EXPECT_EQ(rep.witness.c, 1u);
        EXPECT_EQ(rep.power, 2u);
        EXPECT_TRUE(rep.all_arguments_in_window);
        EXPECT_EQ(rep.all_moduli_in_window, 2 * std::log(lambda) <= 1.0 / m) << "m = " << m;
        EXPECT_TRUE(rep.infinite_order);
        EXPECT_NEAR(static_cast<double>(rep.eigenvalues[0].value.real()), lambda * lambda, 1e-9);
        EXPECT_NEAR(static_cast<double>(rep.eigenvalues[1].value.real()), 1 / (lambda * lambda), 1e-9);
        EXPECT_NEAR(rep.distance_to_identity, lambda * lambda - 1, 1e-9);
    }
}

TEST(PowerReport, ComplexArgumentsInWindow) {
    const IntPoly p = complex_salem_octic();
    const GammaElement g = build_gamma(field_summary(p), 2);
    std::complex<double> outside;
    for (auto z : eigen_roots(p))
        if (std::abs(z) > 1 + 1e-6 && z.imag() > 0) outside = z;
    for (long m = 1; m <= 8; ++m) {
        const auto rep = gamma_power_report(g, m);
        EXPECT_TRUE(rep.all_arguments_in_window);
        EXPECT_LE(rep.witness.c, static_cast<unsigned long long>(m));
        // Oracle: argument of outside^(2c) from the eigenvalue, reduced to (-pi, pi].
        const double angle = std::arg(std::pow(outside, static_cast<double>(rep.power)));
        EXPECT_LE(std::abs(angle), 2 * std::numbers::pi / m + 1e-9);
        EXPECT_NEAR(std::abs(angle), std::abs(rep.eigenvalues[0].argument), 1e-6);
    }
}

TEST(PowerReport, HypothesisAndChain) {
    const GammaElement g = build_gamma(field_summary(testing_support::lehmer()), 2);
    const auto one = gamma_power_report(g, 1);
    EXPECT_TRUE(one.mahler_hypothesis_met);
    ASSERT_TRUE(one.chain_holds.has_value());
    EXPECT_TRUE(*one.chain_holds);
    EXPECT_TRUE(one.all_moduli_in_window);
    const auto ten = gamma_power_report(g, 10);
    EXPECT_FALSE(ten.mahler_hypothesis_met);
    EXPECT_FALSE(ten.chain_holds.has_value());
}

TEST(Scan, LehmerExamples) {
    const IntPoly p = testing_support::lehmer();
    const double lambda = largest_modulus(p);
    const auto rep = counterexample_scan({p}, 2, {1, 10});
    ASSERT_EQ(rep.entries.size(), 2u);
    EXPECT_EQ(rep.s, 1);
    EXPECT_EQ(rep.r, 1);
    EXPECT_TRUE(rep.entries[0].hypothesis_met);
    EXPECT_TRUE(rep.entries[0].report.has_value());
    EXPECT_FALSE(rep.entries[1].hypothesis_met);
    EXPECT_FALSE(rep.entries[1].report.has_value());
    EXPECT_NEAR(rep.entries[1].gap, lambda / std::exp(0.05), 1e-9);
    EXPECT_TRUE(counterexample_scan({}, 2, {1}).entries.empty());
}

TEST(Scan, RejectsMixedAndNonMembers) {
    EXPECT_THROW(counterexample_scan({testing_support::lehmer(), complex_salem_octic()}, 2, {1}), std::invalid_argument);
    EXPECT_THROW(counterexample_scan({IntPoly{1, -3, 1}}, 2, {1}), std::invalid_argument);
    EXPECT_THROW(counterexample_scan({IntPoly{1, 1, 1, 1}}, 2, {1}), std::invalid_argument);
}

TEST(PowerReportProperty, PalindromicMembersDegreeEight) {
    // Every member of degree <= 8, height <= 1 with a circle root: argument
    // windows hold, and the modulus window holds whenever the hypothesis does.
    int members = 0;
    for (int d = 2; d <= 4; ++d) {
        testing_support::for_each_palindromic(d, 1, [&](const IntPoly& p) {
            const auto cls = classify_Psr(p);
            if (!cls.member || !cls.satisfies_L || cls.s == 0) return;
            ++members;
            const GammaElement g = build_gamma(field_summary(p), 2);
            for (long m = 1; m <= 6; ++m) {
                const auto rep = gamma_power_report(g, m);
                EXPECT_TRUE(rep.all_arguments_in_window) << p.pretty();
                EXPECT_TRUE(rep.infinite_order);
                if (rep.mahler_hypothesis_met) EXPECT_TRUE(rep.all_moduli_in_window) << p.pretty();
            }
        });
    }
    EXPECT_GT(members, 0);
}
