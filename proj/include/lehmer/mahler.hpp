#pragma once

// Mahler measure with a rigorous enclosure, the exact Kronecker decision and
// the classical lower bounds.

#include "lehmer/intpoly.hpp"
#include "lehmer/roots.hpp"

namespace lehmer {

struct MahlerCertificate {
    IntPoly poly;
    /// Best estimate; exactly 1 when is_one_exact.
    double value = 1;
    /// |M - value| <= error_radius.
    double error_radius = 0;
    /// Certified enclosure lower <= M <= upper.
    double lower = 1;
    double upper = 1;
    bool is_one_exact = false;
    RootProfile roots;
};

/**
 * |lc(p)| times the product of max(1, |z|) over the certified roots. The
 * enclosure uses max(1, |z| - r) and |z| + r with outward rounding; when
 * kronecker_test holds the value is exactly 1. Rejects the zero polynomial.
 */
MahlerCertificate mahler_measure(const IntPoly& p, double precision = kDefaultPrecision);

/**
 * True iff the monic p has Mahler measure exactly 1, i.e. every root is 0 or
 * a root of unity. Iterates graeffe() on p with its factors of x removed:
 * the coefficients of a measure-1 polynomial of degree d are bounded by
 * binom(d, j), so the sequence either repeats (measure 1) or leaves the box.
 */
bool kronecker_test(const IntPoly& p);

/// 1 + (1/4) (log log d / log d)^3; below 1 for d = 2. Requires d >= 2.
double voutier_bound(int d);
/// Same shape with the constant 1/1200.
double dobrowolski_bound(int d);
/// ((1 + sqrt 5)/2)^(d/2), valid for totally real algebraic integers other than 0, +-1.
double schinzel_bound(int d);
/// M(x^3 - x - 1).
double smyth_threshold();

/// Hypothesis of schinzel_bound for a monic p: all roots real, and p is none of x, x - 1, x + 1.
bool schinzel_applies(const IntPoly& p);

} // namespace lehmer
