#pragma once

/**
 * @file intpoly.hpp
 * @brief Exact univariate polynomials over the integers.
 *
 * Coefficients are stored constant term first, so coeffs()[k] is the
 * coefficient of x^k. The zero polynomial is the empty sequence and has
 * degree -1; every predicate that needs a nonzero input rejects it.
 */

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lehmer {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int k);
    static IntPoly x() { return monomial(1, 1); }

    /// Parses whitespace-separated integer coefficients, constant term first.
    static IntPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero beyond the degree.
    Integer operator[](int k) const;
    const Integer& leading() const;
    const Integer& constant_term() const;

    bool is_monic() const;
    Integer height() const;
    Integer content() const;

    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const;
    IntPoly derivative() const;

    /// x^deg * p(1/x).
    IntPoly reversed() const;
    /// x^n * p(1/x) for a prescribed n >= deg.
    IntPoly reversed(int n) const;
    /// p(-x).
    IntPoly negated_argument() const;
    /// Multiplies by -1 if needed so that the leading coefficient is positive.
    IntPoly with_positive_leading() const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;
    std::complex<long double> evaluate(std::complex<long double> z) const;

    /// Space-separated coefficients, constant first (the corpus text format).
    std::string to_string() const;
    /// Human-readable form, highest degree first, e.g. "x^2 - 3*x + 1".
    std::string pretty(char var = 'x') const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Lexicographic comparison of the coefficient vectors (constant first),
    /// shorter vectors first on a common prefix.
    friend bool lex_less(const IntPoly& a, const IntPoly& b);

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned k);

/// Exact quotient a / b over Z[x]; nullopt when b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Remainder of a modulo b scaled by a positive integer, i.e. the result r
/// satisfies c*a = q*b + r with c > 0 and deg r < deg b. Sign information is
/// preserved, which is what Sturm and Cauchy-index sequences need.
IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[x], normalized with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
    IntPoly factor;
    int multiplicity;
};

/// Yun decomposition p = c * prod f_k^k with each f_k squarefree, primitive and
/// pairwise coprime. Constant factors are dropped.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);
bool is_squarefree(const IntPoly& p);

/// True iff the coefficient sequence is symmetric. Rejects the zero polynomial.
bool is_palindromic(const IntPoly& p);

/// For monic palindromic p of degree 2d returns the monic Q of degree d with
/// p(y) = y^d Q(y + 1/y).
IntPoly trace_polynomial(const IntPoly& p);

/// Re-expands y^d Q(y + 1/y) = sum q_k y^(d-k) (y^2 + 1)^k. Used as the
/// independent check of trace_polynomial.
IntPoly expand_trace(const IntPoly& q);

/// q with q(x^2) = +-p(x)p(-x), normalized so that q is monic when p is.
IntPoly graeffe(const IntPoly& p);

/// p(-x^2).
IntPoly compose_neg_x_squared(const IntPoly& p);

} // namespace lehmer
