#include "lehmer/fields.hpp"

#include "lehmer/errors.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace lehmer {

const char* to_string(EmbeddingClass c) {
    switch (c) {
    case EmbeddingClass::RealSplit: return "real-split";
    case EmbeddingClass::ComplexSplit: return "complex-split";
    case EmbeddingClass::CircleCompact: return "circle-compact";
    }
    return "?";
}

PsrClassification classify_Psr(const IntPoly& p) {
    PsrClassification c;
    if (p.is_zero()) {
        c.reason = "zero polynomial";
        return c;
    }
    c.counts = root_counts(p);
    c.s = c.counts.s;
    c.r = c.counts.r;
    c.satisfies_L = c.counts.on_circle > 0;
    c.palindromic = is_palindromic(p);
    if (p.degree() < 1) {
        c.reason = "constant";
        return c;
    }
    if (!p.is_monic()) {
        c.reason = "not monic";
        return c;
    }
    if (!c.palindromic) {
        c.reason = "not palindromic";
        return c;
    }
    c.irreducibility = irreducibility_report(p);
    if (c.irreducibility.verdict == Irreducibility::Reducible) {
        c.reason = "reducible";
        return c;
    }
    if (c.irreducibility.verdict == Irreducibility::Unknown) {
        c.reason = "irreducibility undecided";
        return c;
    }
    c.member = true;
    return c;
}

namespace {

// Radius of sigma(a + 1/a) given a disk of radius rho around z, |z| > rho.
double trace_radius(const std::complex<double>& z, double rho) {
    const double m = std::abs(z);
    if (!(m > rho)) throw CertificationError("root disk contains 0", {rho});
    return (rho + rho / (m * (m - rho))) * (1 + 8 * DBL_EPSILON);
}

} // namespace

FieldSummary field_summary(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("field_summary: polynomial must be monic");
    if (p.degree() < 2 || p.degree() % 2 != 0) throw std::invalid_argument("field_summary: degree must be even and positive");
    if (!is_palindromic(p)) throw std::invalid_argument("field_summary: polynomial must be palindromic");

    FieldSummary f;
    f.p = p;
    f.d = p.degree() / 2;
    const auto irr = irreducibility_report(p);
    if (irr.verdict == Irreducibility::Reducible)
        throw std::invalid_argument("field_summary: polynomial is reducible (factor " + irr.witness->pretty() + ")");
    f.irreducibility = irr.verdict;

    f.trace_poly = trace_polynomial(p);
    f.trace_identity = expand_trace(f.trace_poly) == p;
    if (!f.trace_identity) throw InternalError("field_summary: trace identity fails for " + p.pretty());
    f.trace_irreducibility = irreducibility_report(f.trace_poly).verdict;
    if (f.irreducibility == Irreducibility::Irreducible && f.trace_irreducibility == Irreducibility::Reducible)
        throw InternalError("field_summary: trace polynomial reducible although p is irreducible");

    f.roots = refine_roots(p);
    f.trace_roots = refine_roots(f.trace_poly);
    f.s = f.roots.s;
    f.r = f.roots.r;
    f.satisfies_L = f.roots.on_circle > 0;
    if (f.roots.inside != f.s) throw InternalError("field_summary: palindromic polynomial with unbalanced roots");

    // sigma_1..sigma_s from the outside roots, then the upper circle roots.
    const int t = f.t();
    for (const auto& z : f.roots.roots) {
        Embedding e;
        e.alpha = z;
        if (z.location == Location::OutsideDisk) {
            e.kind = z.realness == Realness::Real ? EmbeddingClass::RealSplit : EmbeddingClass::ComplexSplit;
        } else if (z.location == Location::OnCircle && z.realness == Realness::NonRealUpper) {
            e.kind = EmbeddingClass::CircleCompact;
        } else if (z.location == Location::OnCircle && z.realness == Realness::Real) {
            throw InternalError("field_summary: +-1 is a root of " + p.pretty());
        } else {
            continue;
        }
        for (int k = 0; k < z.multiplicity; ++k) {
            e.index = static_cast<int>(f.embeddings.size()) + 1;
            f.embeddings.push_back(e);
        }
    }
    if (static_cast<int>(f.embeddings.size()) != f.d) throw InternalError("field_summary: wrong number of embeddings");

    // Pair each sigma_i(a) with the root of the trace polynomial it maps to.
    std::vector<int> used(f.trace_roots.roots.size(), 0);
    for (auto& e : f.embeddings) {
        const std::complex<double> z = e.alpha.approx;
        const std::complex<double> beta = z + 1.0 / z;
        const double rb = trace_radius(z, e.alpha.radius);
        int match = -1;
        for (std::size_t j = 0; j < f.trace_roots.roots.size(); ++j) {
            const auto& w = f.trace_roots.roots[j];
            const double slack = 8 * DBL_EPSILON * (std::abs(w.approx) + std::abs(beta));
            if (std::abs(w.approx - beta) <= rb + w.radius + slack) {
                if (match >= 0) throw CertificationError("field_summary: ambiguous embedding pairing", {rb, w.radius});
                match = static_cast<int>(j);
            }
        }
        if (match < 0) throw CertificationError("field_summary: no trace root matches an embedding", {rb});
        const auto& w = f.trace_roots.roots[static_cast<std::size_t>(match)];
        if (++used[static_cast<std::size_t>(match)] > w.multiplicity)
            throw InternalError("field_summary: trace root matched too often");
        const bool real_place = e.kind != EmbeddingClass::ComplexSplit;
        if (real_place != w.is_real()) throw InternalError("field_summary: embedding class disagrees with trace root");
        e.trace = w.approx;
        e.trace_radius = w.radius;
        e.trace_root = match;
    }

    int real_places = 0;
    for (const auto& [g, k] : squarefree_decomposition(f.trace_poly)) real_places += k * count_real_roots(g);
    if ((f.d - real_places) % 2 != 0) throw InternalError("field_summary: odd number of complex trace roots");
    f.signature_K = {real_places, (f.d - real_places) / 2};
    f.signature_formula = {f.r - f.s + f.d, t};
    if (f.signature_K != f.signature_formula)
        throw InternalError("field_summary: signature of K disagrees with (r - s + d, (s - r)/2) for " + p.pretty());
    return f;
}

MultiplicationMatrix multiplication_matrix(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic()) throw std::invalid_argument("multiplication_matrix: polynomial must be monic of degree >= 1");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    MultiplicationMatrix m;
    m.companion.assign(n, std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j + 1 < n; ++j) m.companion[j + 1][j] = 1;
    for (std::size_t k = 0; k < n; ++k) m.companion[k][n - 1] = -p[static_cast<int>(k)];
    m.determinant = determinant(m.companion);
    m.charpoly = characteristic_polynomial(m.companion);
    if (m.charpoly != p) throw InternalError("multiplication_matrix: characteristic polynomial differs from p");
    if (n % 2 == 0 && is_palindromic(p)) {
        m.has_trace_block = true;
        m.trace_block = {{{IntPoly{}, IntPoly{-1}}, {IntPoly{1}, IntPoly::x()}}};
    }
    return m;
}

} // namespace lehmer
