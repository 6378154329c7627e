#pragma once

// Salem and complex Salem certification, bounded searches for small Mahler
// measure, and height-bounded certificates for beta_n.

#include "lehmer/intpoly.hpp"
#include "lehmer/irreducibility.hpp"
#include "lehmer/mahler.hpp"
#include "lehmer/roots.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lehmer {

enum class SalemKind { Salem, ComplexSalem, Neither };

const char* to_string(SalemKind k);

struct SalemCertificate {
    IntPoly poly;
    SalemKind kind = SalemKind::Neither;
    /// Modulus of the root outside the unit circle; 0 unless kind != Neither.
    double salem_value = 0;
    std::complex<double> salem_root;
    bool palindromic = false;
    /// The root pattern matches but irreducibility could not be decided.
    bool irreducibility_unknown = false;
    IrreducibilityReport irreducibility;
    RootProfile roots;
};

/**
 * Salem: irreducible, palindromic, exactly one root outside the circle and
 * it is real, at least one root on the circle. ComplexSalem: irreducible,
 * exactly one conjugate pair outside and no real root outside, at least one
 * root on the circle. Requires monic p of degree >= 1.
 */
SalemCertificate certify(const IntPoly& p);

struct ComplexSalemResult {
    IntPoly poly;  ///< p(-x^2)
    SalemCertificate certificate;
    MahlerCertificate measure;
    MahlerCertificate source_measure;
};

/// p(-x^2) for a Salem polynomial p, certified; rejects non-Salem input.
/// Equality of the two Mahler measures within their enclosures is asserted.
ComplexSalemResult complex_salem_from_salem(const IntPoly& p);

struct SearchOptions {
    int degree_min = 1;
    int degree_max = 1;
    long height_max = 1;
    /// Keep only members of P_{s,r} (monic, irreducible, palindromic, exact s and r).
    std::optional<std::pair<int, int>> filter;
    /// Keep only polynomials with a root on the unit circle.
    bool require_circle_root = false;
    /// Enumerate palindromic polynomials only (even degrees, constant term 1).
    bool palindromic_only = false;
    /// Maximum number of enumerated coefficient vectors; 0 means unlimited.
    unsigned long long budget = 0;
    int jobs = 1;
    /// Number of minima kept.
    std::size_t keep = 20;
};

struct SearchEntry {
    IntPoly poly;
    MahlerCertificate measure;
    int s = 0;
    int r = 0;
};

struct SearchResult {
    SearchOptions options;
    /// Ascending by certified value, ties broken by coefficients.
    std::vector<SearchEntry> minima;
    /// Smallest measure > 1 found at each degree (for plotting).
    std::vector<std::pair<int, double>> per_degree_minimum;
    unsigned long long enumerated = 0;
    unsigned long long canonical = 0;
    unsigned long long measure_one = 0;
    bool complete = true;
    double elapsed_seconds = 0;
};

/// Canonical representative of p under x -> 1/x and x -> -x: the lex-least
/// (constant term first) of the monic-normalized variants.
IntPoly canonical_form(const IntPoly& p);

/**
 * Enumerates monic polynomials of degree in [degree_min, degree_max] with
 * coefficients in [-H, H] and nonzero constant term (x * q has the measure of
 * q), one per orbit of canonical_form. Measure-1 polynomials are discarded by
 * kronecker_test. The result does not depend on the number of jobs.
 */
SearchResult search_box(const SearchOptions& options);

struct BetaCertificate {
    int n = 0;
    long height = 0;
    IntPoly poly;
    double salem_value = 0;
    /// log(salem_value) with a certified enclosure.
    double log_value = 0;
    double log_lower = 0;
    double log_upper = 0;
    std::string label;
};

/// Smallest log(Salem number) over Salem polynomials of degree <= n and height
/// <= H. This is an upper bound for beta_n, minimal only within the box.
BetaCertificate beta_n(int n, long height);

} // namespace lehmer
