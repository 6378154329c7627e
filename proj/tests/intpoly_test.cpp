#include "lehmer/intpoly.hpp"
#include "lehmer/ring.hpp"
#include "lehmer/roots.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lehmer;

namespace {

// Schoolbook product, written independently of IntPoly::operator*=.
std::vector<long> naive_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IntPoly from_longs(const std::vector<long>& v) {
    std::vector<Integer> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

} // namespace

TEST(IntPoly, NormalizesTrailingZeros) {
    IntPoly p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(IntPoly{}.is_zero());
    EXPECT_EQ(IntPoly({0, 0}).degree(), -1);
}

TEST(IntPoly, ParseAndPrint) {
    IntPoly p = IntPoly::parse("1 -3 1");
    EXPECT_EQ(p, (IntPoly{1, -3, 1}));
    EXPECT_EQ(p.to_string(), "1 -3 1");
    EXPECT_EQ(p.pretty(), "x^2 - 3*x + 1");
    EXPECT_EQ(IntPoly::parse("1 1 # comment").degree(), 1);
    EXPECT_THROW(IntPoly::parse("1 a"), std::invalid_argument);
    EXPECT_THROW(IntPoly::parse("   "), std::invalid_argument);
}

TEST(IntPoly, RingArithmeticExamples) {
    EXPECT_EQ((IntPoly{-1, 1}) * (IntPoly{1, 1}), (IntPoly{-1, 0, 1}));
    EXPECT_EQ(pow(IntPoly{1, 1}, 0), IntPoly{1});
    const std::vector<long> a{1, 1, 1}, b{1, -1, 1};
    EXPECT_EQ(from_longs(a) * from_longs(b), from_longs(naive_mul(a, b)));
    EXPECT_EQ(from_longs(naive_mul(a, b)), (IntPoly{1, 0, 1, 0, 1}));
    EXPECT_EQ(pow(IntPoly{1, 1}, 4), (IntPoly{1, 4, 6, 4, 1}));
}

TEST(IntPoly, MultiplicationProperties) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = testing_support::random_coeffs(rng, 6, 4);
        auto b = testing_support::random_coeffs(rng, 6, 4);
        auto c = testing_support::random_coeffs(rng, 6, 4);
        IntPoly pa = from_longs(a), pb = from_longs(b), pc = from_longs(c);
        EXPECT_EQ(pa * pb, pb * pa);
        EXPECT_EQ((pa * pb) * pc, pa * (pb * pc));
        EXPECT_EQ(pa * pb, from_longs(naive_mul(a, b)));
        if (!pa.is_zero() && !pb.is_zero()) EXPECT_EQ((pa * pb).degree(), pa.degree() + pb.degree());
    }
}

TEST(IntPoly, Palindromic) {
    EXPECT_TRUE(is_palindromic(testing_support::lehmer()));
    EXPECT_FALSE(is_palindromic(testing_support::smyth()));
    EXPECT_TRUE(is_palindromic(IntPoly{1}));
    EXPECT_THROW(is_palindromic(IntPoly{}), std::invalid_argument);
}

TEST(IntPoly, GcdAndDivision) {
    IntPoly a = IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{2, 0, 1};
    IntPoly b = IntPoly{-1, 1} * IntPoly{3, 1};
    EXPECT_EQ(gcd(a, b), (IntPoly{-1, 1}));
    EXPECT_EQ(gcd(IntPoly{0, 2}, IntPoly{4}), IntPoly{2});
    EXPECT_EQ(*divide_exact(a, IntPoly{1, 1}), (IntPoly{-1, 1} * IntPoly{2, 0, 1}));
    EXPECT_FALSE(divide_exact(a, IntPoly{3, 1}).has_value());
    EXPECT_FALSE(divide_exact(IntPoly{1, 1}, IntPoly{0, 2}).has_value());
}

TEST(IntPoly, SquarefreeDecomposition) {
    IntPoly p = pow(IntPoly{-1, 1}, 3) * pow(IntPoly{1, 1, 1}, 2) * IntPoly{0, 1};
    auto parts = squarefree_decomposition(p);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0].factor, IntPoly::x());
    EXPECT_EQ(parts[0].multiplicity, 1);
    EXPECT_EQ(parts[1].factor, (IntPoly{1, 1, 1}));
    EXPECT_EQ(parts[1].multiplicity, 2);
    EXPECT_EQ(parts[2].factor, (IntPoly{-1, 1}));
    EXPECT_EQ(parts[2].multiplicity, 3);
    EXPECT_FALSE(is_squarefree(p));
    EXPECT_TRUE(is_squarefree(testing_support::lehmer()));
}

TEST(TracePolynomial, Examples) {
    EXPECT_EQ(trace_polynomial(IntPoly{1, -3, 1}), (IntPoly{-3, 1}));
    EXPECT_EQ(trace_polynomial(IntPoly{1, -1, -1, -1, 1}), (IntPoly{-3, -1, 1}));
    const IntPoly q = trace_polynomial(testing_support::lehmer());
    EXPECT_EQ(q.degree(), 5);
    EXPECT_TRUE(q.is_monic());
    EXPECT_EQ(expand_trace(q), testing_support::lehmer());
}

TEST(TracePolynomial, RejectsBadInput) {
    EXPECT_THROW(trace_polynomial(IntPoly{1, 1, 1, 1}), std::invalid_argument);  // odd degree
    EXPECT_THROW(trace_polynomial(IntPoly{1, 2, 3, 1}), std::invalid_argument);
    EXPECT_THROW(trace_polynomial(IntPoly{1, 0, 1, 0, 1, 5}), std::invalid_argument);
    EXPECT_THROW(trace_polynomial(IntPoly{1, 1, 2, 1, 2}), std::invalid_argument);  // not palindromic
}

TEST(TracePolynomial, ReexpansionIsExactOnTheWholeBox) {
    // Every monic palindromic polynomial of even degree <= 16 with height <= 2.
    long checked = 0;
    for (int d = 1; d <= 8; ++d) {
        testing_support::for_each_palindromic(d, 2, [&](const IntPoly& p) {
            ASSERT_EQ(expand_trace(trace_polynomial(p)), p) << p.to_string();
            ++checked;
        });
    }
    EXPECT_EQ(checked, 5 + 25 + 125 + 625 + 3125 + 15625 + 78125 + 390625);
}

TEST(Graeffe, Examples) {
    EXPECT_EQ(graeffe(IntPoly{-1, 1}), (IntPoly{-1, 1}));
    EXPECT_EQ(graeffe(IntPoly{-1, -1, 1}), (IntPoly{1, -3, 1}));
    EXPECT_EQ(graeffe(IntPoly{1, 0, 1}), (IntPoly{1, 2, 1}));
    EXPECT_TRUE(graeffe(testing_support::lehmer()).is_monic());
}

TEST(Graeffe, RootsAreSquares) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly p = testing_support::random_monic(rng, 1 + static_cast<int>(rng() % 8), 3);
        RootProfile rp = refine_roots(p);
        RootProfile rq = refine_roots(graeffe(p));
        std::vector<std::pair<std::complex<double>, double>> squares;
        for (const auto& z : rp.roots) {
            const double m = std::abs(z.approx);
            for (int k = 0; k < z.multiplicity; ++k)
                squares.push_back({z.approx * z.approx, 2 * m * z.radius + z.radius * z.radius});
        }
        std::vector<std::pair<std::complex<double>, double>> targets;
        for (const auto& z : rq.roots)
            for (int k = 0; k < z.multiplicity; ++k) targets.push_back({z.approx, z.radius});
        ASSERT_EQ(squares.size(), targets.size());
        std::vector<bool> used(targets.size(), false);
        for (const auto& [w, rw] : squares) {
            bool found = false;
            for (std::size_t j = 0; j < targets.size() && !found; ++j) {
                if (used[j]) continue;
                const double tol = rw + targets[j].second + 1e-12 * (1 + std::abs(w));
                if (std::abs(w - targets[j].first) <= tol) used[j] = found = true;
            }
            EXPECT_TRUE(found) << p.to_string();
        }
    }
}

TEST(ComposeNegXSquared, Examples) {
    EXPECT_EQ(compose_neg_x_squared(IntPoly{-1, 1}), (IntPoly{-1, 0, -1}));
    EXPECT_EQ(compose_neg_x_squared(IntPoly{1, -3, 1}), (IntPoly{1, 0, 3, 0, 1}));
    IntPoly c = compose_neg_x_squared(testing_support::lehmer());
    EXPECT_EQ(c.degree(), 20);
    EXPECT_TRUE(is_palindromic(c));
}

TEST(ComposeNegXSquared, PreservesPalindromy) {
    for (int d = 1; d <= 4; ++d)
        testing_support::for_each_palindromic(d, 2, [](const IntPoly& p) {
            ASSERT_TRUE(is_palindromic(compose_neg_x_squared(p)));
        });
}

TEST(RingElement, InverseExamples) {
    const IntPoly m{1, -3, 1};
    RingElement inv = invert_in_ring(RingElement::generator(m));
    EXPECT_EQ(inv, RingElement(m, IntPoly{3, -1}));
    EXPECT_TRUE(invert_in_ring(RingElement::one(testing_support::lehmer())).is_one());

    RingElement li = invert_in_ring(RingElement::generator(testing_support::lehmer()));
    std::vector<Integer> expected{-1, 0, 1, 1, 1, 1, 1, 0, -1, -1};
    EXPECT_EQ(li.integer_coords(), expected);
    EXPECT_TRUE((li * RingElement::generator(testing_support::lehmer())).is_one());
}

TEST(RingElement, NonInvertibleReportsGcd) {
    const IntPoly m = IntPoly{-1, 1} * IntPoly{1, 1};
    try {
        invert_in_ring(RingElement(m, IntPoly{1, 1}));
        FAIL() << "expected NotInvertibleError";
    } catch (const NotInvertibleError& e) {
        EXPECT_EQ(e.common_factor(), (IntPoly{1, 1}));
    }
    EXPECT_THROW(invert_in_ring(RingElement(m, IntPoly{})), NotInvertibleError);
}

TEST(RingElement, InverseProperties) {
    std::mt19937_64 rng(3);
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly m = testing_support::random_monic(rng, 2 + static_cast<int>(rng() % 6), 2);
        auto coeffs = testing_support::random_coeffs(rng, m.degree() - 1, 5);
        RingElement e(m, from_longs(coeffs));
        try {
            RingElement f = invert_in_ring(e);
            EXPECT_TRUE((e * f).is_one());
            ++tested;
        } catch (const NotInvertibleError& err) {
            EXPECT_GT(err.common_factor().degree(), 0);
            EXPECT_TRUE(divide_exact(m, err.common_factor()).has_value());
        }
    }
    EXPECT_GT(tested, 100);
    for (int d = 1; d <= 4; ++d)
        testing_support::for_each_palindromic(d, 2, [](const IntPoly& p) {
            if (sgn(p.constant_term()) == 0) return;
            RingElement inv = invert_in_ring(RingElement::generator(p));
            ASSERT_TRUE(inv.is_integral()) << p.to_string();
        });
}

TEST(RingElement, InvolutionInvertsGenerator) {
    const IntPoly l = testing_support::lehmer();
    RingElement a = RingElement::generator(l);
    RingElement ta = involution(a);
    EXPECT_EQ(ta, invert_in_ring(a));
    EXPECT_TRUE((a * ta).is_one());
    EXPECT_EQ(involution(ta), a);
}
