#include "lehmer/adjoint.hpp"

#include "lehmer/errors.hpp"
#include "lehmer/numeric.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace lehmer {

namespace {

using Cx = std::complex<long double>;

constexpr double kIntegralityTolerance = 1e-6;

std::size_t check_square(const ComplexMatrix& g, const char* who) {
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument(std::string(who) + ": empty matrix");
    for (const auto& row : g)
        if (row.size() != n) throw std::invalid_argument(std::string(who) + ": matrix is not square");
    return n;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.size();
    ComplexMatrix c(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == Cx{}) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

long double max_abs(const ComplexMatrix& a) {
    long double m = 0;
    for (const auto& row : a)
        for (const auto& v : row) m = std::max(m, std::abs(v));
    return m;
}

// Coordinates of a trace-zero matrix: off-diagonal entries row-major, then h_k.
std::vector<Cx> coordinates(const ComplexMatrix& x) {
    const std::size_t n = x.size();
    std::vector<Cx> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.push_back(x[i][j]);
    Cx h = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h += x[k][k];
        out.push_back(h);
    }
    return out;
}

std::vector<ComplexMatrix> trace_zero_basis(std::size_t n) {
    std::vector<ComplexMatrix> basis;
    const ComplexMatrix zero(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            basis.push_back(zero);
            basis.back()[i][j] = 1;
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        basis.push_back(zero);
        basis.back()[k][k] = 1;
        basis.back()[k + 1][k + 1] = -1;
    }
    return basis;
}

std::vector<Cx> multiply_polys(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    std::vector<Cx> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

bool is_diagonal(const ComplexMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && g[i][j] != Cx{}) return false;
    return true;
}

// Characteristic polynomial from the closed-form spectrum of a diagonal block.
std::vector<Cx> ratio_charpoly(const ComplexMatrix& g) {
    const std::size_t n = g.size();
    std::vector<Cx> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) roots.push_back(g[i][i] / g[j][j]);
    for (std::size_t k = 0; k + 1 < n; ++k) roots.push_back(1);
    return poly_from_roots(roots);
}

// Product of max(1, |l_i / l_j|) over i != j for a diagonal block.
double ratio_measure(const ComplexMatrix& g) {
    long double m = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j) m *= std::max(1.0L, std::abs(g[i][i] / g[j][j]));
    return static_cast<double>(m);
}

Integer round_to_integer(long double v) {
    const long double r = std::round(v);
    if (std::fabs(r) < 9e18L) return Integer(static_cast<long>(r));
    Integer out;
    mpz_set_d(out.get_mpz_t(), static_cast<double>(r));
    return out;
}

// Reduces to upper Hessenberg form by stabilized elimination, then expands
// det(xI - H) with the recurrence on leading principal minors.
std::vector<Cx> hessenberg_charpoly(ComplexMatrix h) {
    const std::size_t n = h.size();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(h[i][k - 1]) > std::abs(h[pivot][k - 1])) pivot = i;
        if (h[pivot][k - 1] == Cx{}) continue;
        if (pivot != k) {
            std::swap(h[pivot], h[k]);
            for (auto& row : h) std::swap(row[pivot], row[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Cx f = h[i][k - 1] / h[k][k - 1];
            if (f == Cx{}) continue;
            for (std::size_t j = 0; j < n; ++j) h[i][j] -= f * h[k][j];
            for (std::size_t j = 0; j < n; ++j) h[j][k] += f * h[j][i];
        }
    }
    // minors[k] = det(xI - H[0..k, 0..k]), constant term first.
    std::vector<std::vector<Cx>> minors{{1}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Cx> next(k + 2);
        for (std::size_t j = 0; j <= k; ++j) {
            next[j + 1] += minors[k][j];
            next[j] -= h[k][k] * minors[k][j];
        }
        Cx sub = 1;
        for (std::size_t i = k; i-- > 0;) {
            sub *= h[i + 1][i];
            const Cx f = h[i][k] * sub;
            for (std::size_t j = 0; j < minors[i].size(); ++j) next[j] -= f * minors[i][j];
        }
        minors.push_back(std::move(next));
    }
    return minors[n];
}

} // namespace

ComplexMatrix inverse(const ComplexMatrix& g) {
    const std::size_t n = check_square(g, "inverse");
    ComplexMatrix a = g;
    ComplexMatrix inv(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    const long double scale = max_abs(g);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
        if (!(std::abs(a[pivot][col]) > scale * n * LDBL_EPSILON)) throw std::invalid_argument("inverse: matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Cx p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Cx{}) continue;
            const Cx f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

ComplexPoly adjoint_charpoly(const ComplexMatrix& g) {
    const std::size_t n = check_square(g, "adjoint_charpoly");
    if (n < 2) throw std::invalid_argument("adjoint_charpoly: need n >= 2");
    const ComplexMatrix ginv = inverse(g);
    const auto basis = trace_zero_basis(n);
    const std::size_t dim = basis.size();

    // Column k holds the coordinates of g B_k g^-1.
    ComplexMatrix ad(dim, std::vector<Cx>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto c = coordinates(multiply(multiply(g, basis[k]), ginv));
        for (std::size_t i = 0; i < dim; ++i) ad[i][k] = c[i];
    }

    const long double norm = max_abs(ad) * static_cast<long double>(dim);
    ComplexPoly out;
    out.coeffs = hessenberg_charpoly(std::move(ad));
    out.error_radius = static_cast<double>(static_cast<long double>(dim * dim) * LDBL_EPSILON * std::pow(1 + norm, static_cast<long double>(dim)));
    return out;
}

double numeric_measure(const ComplexPoly& p) {
    return static_cast<double>(numeric_mahler(p.coeffs));
}

AdjointReport adjoint_product(const std::vector<ComplexMatrix>& blocks, const std::vector<bool>& noncompact, int s_bound) {
    if (blocks.empty() || blocks.size() != noncompact.size()) throw std::invalid_argument("adjoint_product: need one flag per block");
    AdjointReport rep;
    rep.n = static_cast<int>(check_square(blocks[0], "adjoint_product"));
    rep.s_bound = s_bound;
    rep.note = "integrality of the global adjoint polynomial is an empirical check; the invariant lattice is not constructed";

    std::vector<Cx> product{1};
    std::vector<Cx> ratio_product{1};
    bool all_diagonal = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (check_square(blocks[i], "adjoint_product") != static_cast<std::size_t>(rep.n))
            throw std::invalid_argument("adjoint_product: blocks have different sizes");
        PlaceAdjoint pa;
        pa.place = static_cast<int>(i) + 1;
        pa.noncompact = noncompact[i];
        pa.charpoly = adjoint_charpoly(blocks[i]);
        // Repeated adjoint roots limit the root finder to about sqrt(eps); use the closed form when available.
        pa.f_value = is_diagonal(blocks[i]) ? ratio_measure(blocks[i]) : numeric_measure(pa.charpoly);
        product = multiply_polys(product, pa.charpoly.coeffs);
        all_diagonal = all_diagonal && is_diagonal(blocks[i]);
        if (all_diagonal) ratio_product = multiply_polys(ratio_product, ratio_charpoly(blocks[i]));
        if (pa.noncompact) rep.f_total *= pa.f_value;
        rep.places.push_back(std::move(pa));
    }

    rep.tolerance = kIntegralityTolerance * std::max<std::size_t>(1, product.size() - 1);
    auto round_all = [&](const std::vector<Cx>& coeffs) {
        std::vector<Integer> ints;
        double err = 0;
        for (const Cx& c : coeffs) {
            ints.push_back(round_to_integer(c.real()));
            err = std::max({err, static_cast<double>(std::fabs(c.real() - std::round(c.real()))), static_cast<double>(std::fabs(c.imag()))});
        }
        return std::make_pair(IntPoly(std::move(ints)), err);
    };
    auto [poly, err] = round_all(product);
    if (err > rep.tolerance && all_diagonal) {
        std::tie(poly, err) = round_all(ratio_product);
        rep.escalated = true;
    }
    rep.global_poly = std::move(poly);
    rep.max_rounding_error = err;
    if (err > rep.tolerance)
        throw InternalError("adjoint_product: global adjoint polynomial is not integral (error " + std::to_string(err) + ")");

    rep.global_measure = mahler_measure(rep.global_poly);
    rep.global_s = rep.global_measure.roots.s;
    rep.s_bound_ok = rep.global_s <= rep.s_bound;
    rep.torsion_flag = torsion_test(rep.global_poly);
    return rep;
}

AdjointReport global_integrality(const GammaElement& element) {
    std::vector<ComplexMatrix> blocks;
    std::vector<bool> noncompact;
    const std::size_t n = static_cast<std::size_t>(element.n);
    for (const PlaceBlock& b : element.blocks) {
        ComplexMatrix g(n, std::vector<Cx>(n));
        for (std::size_t i = 0; i < n; ++i) g[i][i] = b.diagonal[i];
        blocks.push_back(std::move(g));
        // Conjugate duplicates are noncompact places too; they enter f through the measure.
        noncompact.push_back(b.noncompact || b.conjugate_duplicate);
    }
    const auto& f = element.summary;
    AdjointReport rep = adjoint_product(blocks, noncompact, (element.n * element.n - 1) * (f.r + 2 * f.t()));
    for (const PlaceAdjoint& pa : rep.places)
        if (!pa.noncompact && std::abs(pa.f_value - 1) > 1e-9)
            throw InternalError("global_integrality: compact place with adjoint root off the unit circle");
    const double rel = std::abs(rep.f_total - rep.global_measure.value) / rep.global_measure.value;
    if (rel > 1e-9) throw InternalError("global_integrality: f over noncompact places differs from M of the global polynomial");
    return rep;
}

AdjointReport global_integrality(const FieldSummary& summary, int n) {
    return global_integrality(build_gamma(summary, n));
}

bool torsion_test(const IntPoly& global_poly) {
    return kronecker_test(global_poly);
}

} // namespace lehmer
