#include "lehmer/irreducibility.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace lehmer;


TEST(Cyclotomic, SmallCases) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(105).degree(), 48);
    EXPECT_EQ(cyclotomic_polynomial(105)[7], -2);
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(105), 48);
}

TEST(ModularDegrees, Examples) {
    EXPECT_EQ(modular_factor_degrees(IntPoly{1, 0, 1}, 3), (std::vector<int>{2}));
    EXPECT_EQ(modular_factor_degrees(IntPoly{1, 0, 1}, 5), (std::vector<int>{1, 1}));
    EXPECT_EQ(modular_factor_degrees(IntPoly{1, 0, 0, 0, 1}, 3), (std::vector<int>{2, 2}));
    EXPECT_EQ(modular_factor_degrees(IntPoly{-1, -1, 0, 1}, 2), (std::vector<int>{3}));
    EXPECT_THROW(modular_factor_degrees(IntPoly{1, 0, 1}, 2), std::invalid_argument);
}

TEST(Irreducibility, Examples) {
    EXPECT_EQ(irreducibility_report(IntPoly{1, 1, 1}).verdict, Irreducibility::Irreducible);
    auto r = irreducibility_report(IntPoly{1, 0, 1, 0, 1});
    ASSERT_EQ(r.verdict, Irreducibility::Reducible);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(r.witness == (IntPoly{1, 1, 1}) || r.witness == (IntPoly{1, -1, 1}));
    EXPECT_EQ(irreducibility_report(testing_support::lehmer()).verdict, Irreducibility::Irreducible);
    EXPECT_EQ(irreducibility_report(testing_support::smyth()).verdict, Irreducibility::Irreducible);
    EXPECT_EQ(irreducibility_report(testing_support::salem_quartic()).verdict, Irreducibility::Irreducible);
}

TEST(Irreducibility, Layers) {
    EXPECT_EQ(irreducibility_report(IntPoly{0, 1, 1}).method, "rational root");
    EXPECT_EQ(irreducibility_report(pow(IntPoly{1, 1, 1}, 2)).method, "repeated factor");
    EXPECT_EQ(irreducibility_report(IntPoly{1, 0, -1, 0, 1}).method, "cyclotomic");
    // x^4 - 10x^2 + 1 splits modulo every prime, so only the root search can settle it.
    auto r = irreducibility_report(IntPoly{1, 0, -10, 0, 1});
    EXPECT_EQ(r.verdict, Irreducibility::Irreducible);
    EXPECT_EQ(r.method, "reconstruction");
    // x^4 - 3x^2 + 1 = (x^2 - x - 1)(x^2 + x - 1) has no rational roots.
    auto s = irreducibility_report(IntPoly{1, 0, -3, 0, 1});
    ASSERT_EQ(s.verdict, Irreducibility::Reducible);
    EXPECT_TRUE(divide_exact(IntPoly{1, 0, -3, 0, 1}, *s.witness).has_value());
    EXPECT_EQ(s.method, "reconstruction");
}

TEST(Irreducibility, CapGivesUnknown) {
    IrreducibilityOptions opts;
    opts.exhaustive_cap = 2;
    opts.prime_count = 0;
    EXPECT_EQ(irreducibility_report(IntPoly{1, 0, -10, 0, 1}, opts).verdict, Irreducibility::Unknown);
}

TEST(Irreducibility, RejectsBadInput) {
    EXPECT_THROW(irreducibility_report(IntPoly{1, 2}), std::invalid_argument);
    EXPECT_THROW(irreducibility_report(IntPoly{3}), std::invalid_argument);
}

TEST(Irreducibility, AgreesWithBruteForceFactorSearch) {
    for (int n = 1; n <= 6; ++n)
        testing_support::for_each_monic(n, 1, [](const IntPoly& p) {
            auto rep = irreducibility_report(p);
            ASSERT_NE(rep.verdict, Irreducibility::Unknown) << p.to_string();
            const bool reducible = testing_support::has_factor_brute_force(p);
            EXPECT_EQ(rep.verdict == Irreducibility::Reducible, reducible) << p.to_string();
            if (rep.witness) {
                EXPECT_TRUE(rep.witness->is_monic());
                EXPECT_GT(rep.witness->degree(), 0);
                EXPECT_LT(rep.witness->degree(), p.degree());
                EXPECT_TRUE(divide_exact(p, *rep.witness).has_value());
            }
        });
}

TEST(Irreducibility, ProductsAreReducible) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly a = testing_support::random_monic(rng, 1 + static_cast<int>(rng() % 6), 3);
        IntPoly b = testing_support::random_monic(rng, 1 + static_cast<int>(rng() % 6), 3);
        auto rep = irreducibility_report(a * b);
        EXPECT_EQ(rep.verdict, Irreducibility::Reducible) << (a * b).to_string();
    }
}
