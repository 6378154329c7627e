#include "lehmer/roots.hpp"

#include "test_support.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace lehmer;

namespace {

// Largest real root in (lo, hi) by exact rational bisection; f(lo), f(hi) must differ in sign.
double bisect(const IntPoly& f, Rational lo, Rational hi, int steps = 80) {
    int slo = sgn(f.evaluate(lo));
    for (int i = 0; i < steps; ++i) {
        Rational mid = (lo + hi) / 2;
        if (sgn(f.evaluate(mid)) == slo) lo = mid;
        else hi = mid;
    }
    return Rational((lo + hi) / 2).get_d();
}

// Companion-matrix eigenvalues, independent of the Aberth route.
std::vector<std::complex<double>> eigen_roots(const IntPoly& p) {
    const int n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i].get_d() / p.leading().get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

} // namespace

TEST(Counts, InsideUnitDisk) {
    EXPECT_EQ(count_inside_unit_disk(IntPoly{-1, -1, 1}), 1);
    EXPECT_EQ(count_inside_unit_disk(IntPoly{1, -1, 1}), 0);
    EXPECT_EQ(count_inside_unit_disk(testing_support::lehmer()), 1);
    // x^2 + x - 1 makes the first Schur-Cohn step singular (|a0| = |a2|).
    EXPECT_EQ(count_inside_unit_disk(IntPoly{-1, 1, 1}), 1);
    EXPECT_EQ(count_inside_unit_disk(IntPoly{0, 0, 1}), 2);
    EXPECT_EQ(count_inside_unit_disk(IntPoly{1, 0, 0, 0, 2}), 4);
}

TEST(Counts, OnUnitCircle) {
    EXPECT_EQ(count_on_unit_circle(IntPoly{1, -1, 1}), 2);
    EXPECT_EQ(count_on_unit_circle(IntPoly{1, -3, 1}), 0);
    EXPECT_EQ(count_on_unit_circle(testing_support::lehmer()), 8);
    EXPECT_EQ(count_on_unit_circle(IntPoly{1, 1}), 1);
    EXPECT_EQ(count_on_unit_circle(IntPoly{-1, 1}), 1);
    EXPECT_EQ(count_on_unit_circle(pow(IntPoly{1, 1, 1}, 3) * IntPoly{-1, 1}), 7);
}

TEST(Counts, RealOutside) {
    EXPECT_EQ(count_real_outside(IntPoly{1, -3, 1}), 1);
    EXPECT_EQ(count_real_outside(IntPoly{1, 0, 1}), 0);
    EXPECT_EQ(count_real_outside(testing_support::lehmer()), 1);
    EXPECT_EQ(count_real_outside(IntPoly{-1, 0, 1}), 0);  // +-1 are on the circle
    EXPECT_EQ(count_real_outside(pow(IntPoly{2, 1}, 2)), 2);
}

TEST(Counts, Multiplicities) {
    IntPoly p = pow(IntPoly{-2, 1}, 2) * IntPoly{1, 1, 1};
    RootProfile rp = root_counts(p);
    EXPECT_EQ(rp.s, 2);
    EXPECT_EQ(rp.r, 2);
    EXPECT_EQ(rp.on_circle, 2);
    EXPECT_EQ(rp.inside, 0);
    EXPECT_FALSE(rp.squarefree);
}

TEST(Counts, SturmBasics) {
    EXPECT_EQ(count_real_roots(IntPoly{-2, 0, 1}), 2);
    EXPECT_EQ(count_real_roots(IntPoly{2, 0, 1}), 0);
    EXPECT_EQ(count_real_roots(pow(IntPoly{-1, 1}, 3)), 1);
    EXPECT_EQ(count_real_roots_between(IntPoly{-2, 0, 1}, Rational(0), Rational(2)), 1);
    // (a, b] convention: the root at b is counted, the root at a is not.
    EXPECT_EQ(count_real_roots_between(IntPoly{-1, 0, 1}, Rational(-1), Rational(1)), 1);
}

TEST(Counts, SturmInvariantUnderPositiveScaling) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly p = testing_support::random_monic(rng, 1 + static_cast<int>(rng() % 9), 3);
        IntPoly q = p * Integer(1 + static_cast<long>(rng() % 7));
        EXPECT_EQ(count_real_roots(p), count_real_roots(q));
        EXPECT_EQ(count_real_outside(p), count_real_outside(q));
        EXPECT_EQ(count_inside_unit_disk(p), count_inside_unit_disk(q));
    }
}

TEST(Counts, SchurCohnAgreesWithArgumentPrinciple) {
    std::mt19937_64 rng(17);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        IntPoly p = testing_support::random_monic(rng, 1 + static_cast<int>(rng() % 10), 3);
        if (count_on_unit_circle(p) != 0 || !is_squarefree(p)) continue;
        EXPECT_EQ(count_inside_unit_disk(p), count_inside_by_argument(p)) << p.to_string();
        ++compared;
    }
    EXPECT_GT(compared, 200);
}

TEST(Counts, AgreeWithEigenvalueOracle) {
    // Random squarefree polynomials of degree <= 10, height <= 2.
    std::mt19937_64 rng(23);
    int compared = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        auto c = testing_support::random_coeffs(rng, n, 2);
        if (c.back() == 0) c.back() = 1;
        IntPoly p(std::vector<Integer>(c.begin(), c.end()));
        if (!is_squarefree(p)) continue;
        int out = 0, in = 0, on = 0, real_out = 0;
        bool ambiguous = false;
        for (auto z : eigen_roots(p)) {
            double m = std::abs(z);
            if (std::abs(m - 1) < 1e-9) ++on;
            else if (std::abs(m - 1) < 1e-5) ambiguous = true;
            else if (m > 1) {
                ++out;
                if (std::abs(z.imag()) < 1e-9) ++real_out;
            } else ++in;
        }
        if (ambiguous) continue;
        RootProfile rp = refine_roots(p);
        EXPECT_EQ(rp.s, out) << p.to_string();
        EXPECT_EQ(rp.inside, in) << p.to_string();
        EXPECT_EQ(rp.on_circle, on) << p.to_string();
        EXPECT_EQ(rp.r, real_out) << p.to_string();
        EXPECT_EQ(rp.s + rp.inside + rp.on_circle, p.degree());
        ++compared;
    }
    EXPECT_GT(compared, 1000);
}

TEST(Refine, QuadraticRoots) {
    RootProfile rp = refine_roots(IntPoly{1, -3, 1}, 1e-12);
    ASSERT_EQ(rp.roots.size(), 2u);
    EXPECT_NEAR(rp.roots[0].approx.real(), 2.6180339887498949, 1e-12);
    EXPECT_NEAR(rp.roots[1].approx.real(), 0.3819660112501051, 1e-12);
    EXPECT_LT(rp.max_radius(), 1e-12);
    EXPECT_EQ(rp.roots[0].location, Location::OutsideDisk);
    EXPECT_EQ(rp.roots[1].location, Location::InsideDisk);
}

TEST(Refine, SalemQuarticLargestRoot) {
    const IntPoly q = testing_support::salem_quartic();
    const double oracle = bisect(q, Rational(1), Rational(2));
    EXPECT_NEAR(oracle, 1.7220838, 1e-7);
    RootProfile rp = refine_roots(q);
    EXPECT_NEAR(rp.roots[0].approx.real(), oracle, 1e-12);
    EXPECT_EQ(rp.s, 1);
    EXPECT_EQ(rp.on_circle, 2);
}

TEST(Refine, LehmerLargestRoot) {
    RootProfile rp = refine_roots(testing_support::lehmer());
    const double oracle = bisect(testing_support::lehmer(), Rational(1), Rational(2));
    EXPECT_NEAR(rp.roots[0].approx.real(), 1.17628082, 1e-8);
    EXPECT_NEAR(rp.roots[0].approx.real(), oracle, 1e-12);
    EXPECT_EQ(rp.roots[0].location, Location::OutsideDisk);
    EXPECT_EQ(rp.roots[0].realness, Realness::Real);
    EXPECT_EQ(rp.s, 1);
    EXPECT_EQ(rp.r, 1);
    EXPECT_EQ(rp.on_circle, 8);
    EXPECT_EQ(rp.inside, 1);
}

TEST(Refine, OrderingConvention) {
    // (x^2 - 3x + 1) * (x^2 + x + 3): one real root outside, a conjugate pair outside, one inside.
    IntPoly p = IntPoly{1, -3, 1} * IntPoly{3, 1, 1};
    RootProfile rp = refine_roots(p);
    ASSERT_EQ(rp.s, 3);
    ASSERT_EQ(rp.r, 1);
    EXPECT_EQ(rp.roots[0].realness, Realness::Real);
    EXPECT_EQ(rp.roots[1].realness, Realness::NonRealUpper);
    EXPECT_EQ(rp.roots[2].realness, Realness::NonRealLower);
    EXPECT_EQ(rp.roots[2].approx, std::conj(rp.roots[1].approx));
    EXPECT_EQ(rp.roots[3].location, Location::InsideDisk);
}

TEST(Refine, PalindromicMirrorAndConjugation) {
    for (int d = 1; d <= 4; ++d)
        testing_support::for_each_palindromic(d, 2, [](const IntPoly& p) {
            RootProfile rp = refine_roots(p);
            ASSERT_EQ(rp.s, rp.inside) << p.to_string();
            std::vector<CertifiedRoot> outside, inside;
            for (const auto& z : rp.roots) {
                if (z.location == Location::OutsideDisk) outside.push_back(z);
                if (z.location == Location::InsideDisk) inside.push_back(z);
                if (z.realness == Realness::NonRealUpper) {
                    auto it = std::find_if(rp.roots.begin(), rp.roots.end(),
                                           [&](const CertifiedRoot& w) { return w.approx == std::conj(z.approx); });
                    ASSERT_NE(it, rp.roots.end());
                    EXPECT_EQ(it->radius, z.radius);
                }
            }
            for (const auto& z : outside) {
                const std::complex<double> inv = 1.0 / z.approx;
                const double m = std::abs(z.approx);
                const double rinv = z.radius / (m * (m - z.radius));
                bool found = std::any_of(inside.begin(), inside.end(), [&](const CertifiedRoot& w) {
                    return std::abs(w.approx - inv) <= w.radius + rinv + 1e-14 && w.multiplicity == z.multiplicity;
                });
                EXPECT_TRUE(found) << p.to_string();
            }
        });
}

TEST(Refine, ReportsUnreachablePrecision) {
    try {
        refine_roots(testing_support::lehmer(), 1e-40);
        FAIL() << "expected CertificationError";
    } catch (const CertificationError& e) {
        EXPECT_EQ(e.achieved_radii().size(), 10u);
    }
}

TEST(Refine, RepeatedRoots) {
    IntPoly p = pow(IntPoly{-1, -1, 1}, 2) * IntPoly{0, 1};
    RootProfile rp = refine_roots(p);
    EXPECT_FALSE(rp.squarefree);
    EXPECT_EQ(rp.s, 2);
    EXPECT_EQ(rp.inside, 3);
    EXPECT_EQ(rp.roots.size(), 3u);
    EXPECT_EQ(rp.roots[0].multiplicity, 2);
}
