#pragma once

/**
 * @file fields.hpp
 * @brief The fields L = Q(a) and K = Q(a + 1/a) attached to a palindromic P.
 *
 * For P of degree 2d with s roots outside the unit circle (r of them real),
 * the embeddings sigma_1..sigma_d of K are indexed by the roots a_i: first
 * the s roots outside the circle in RootProfile order, then one root from
 * each conjugate pair on the circle (the one with positive imaginary part).
 */

#include "lehmer/intpoly.hpp"
#include "lehmer/irreducibility.hpp"
#include "lehmer/matrix.hpp"
#include "lehmer/roots.hpp"

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace lehmer {

struct PsrClassification {
    bool member = false;
    /// Empty for members, otherwise the first failed condition.
    std::string reason;
    int s = 0;
    int r = 0;
    /// At least one root on the unit circle (equivalently deg P > 2s for members).
    bool satisfies_L = false;
    bool palindromic = false;
    IrreducibilityReport irreducibility;
    RootProfile counts;
};

/// Membership of p in P_{s,r}: monic, irreducible, palindromic; with exact (s, r).
PsrClassification classify_Psr(const IntPoly& p);

enum class EmbeddingClass { RealSplit, ComplexSplit, CircleCompact };

const char* to_string(EmbeddingClass c);

struct Embedding {
    int index = 0;  ///< i in 1..d
    EmbeddingClass kind = EmbeddingClass::RealSplit;
    CertifiedRoot alpha;             ///< sigma_i(a)
    std::complex<double> trace;      ///< sigma_i(a + 1/a), from the matched root of the trace polynomial
    double trace_radius = 0;
    int trace_root = 0;              ///< index into FieldSummary::trace_roots.roots
};

struct FieldSummary {
    IntPoly p;
    IntPoly trace_poly;
    int d = 0;
    int s = 0;
    int r = 0;
    int t() const { return (s - r) / 2; }
    std::vector<Embedding> embeddings;
    /// (real places, complex pairs) of K from a Sturm count on the trace polynomial.
    std::pair<int, int> signature_K;
    /// (r - s + d, (s - r)/2).
    std::pair<int, int> signature_formula;
    /// p(y) == y^d trace_poly(y + 1/y) exactly.
    bool trace_identity = false;
    Irreducibility irreducibility = Irreducibility::Unknown;
    Irreducibility trace_irreducibility = Irreducibility::Unknown;
    bool satisfies_L = false;
    RootProfile roots;
    RootProfile trace_roots;
};

/**
 * Builds the summary for a monic palindromic p of even degree 2d >= 2 that is
 * not known to be reducible (Unknown irreducibility is carried as a flag).
 * A signature mismatch or a failed quadratic identity is an InternalError.
 */
FieldSummary field_summary(const IntPoly& p);

struct MultiplicationMatrix {
    /// Multiplication by a on Q[x]/(p) in the basis 1, a, ..., a^(n-1).
    IntMatrix companion;
    Integer determinant;
    IntPoly charpoly;
    /// [[0, -1], [1, w]] over K = Q(w), w = a + 1/a, in the basis {1, a};
    /// entries are polynomials in w. Present for palindromic p of even degree.
    bool has_trace_block = false;
    std::array<std::array<IntPoly, 2>, 2> trace_block;
};

MultiplicationMatrix multiplication_matrix(const IntPoly& p);

} // namespace lehmer
