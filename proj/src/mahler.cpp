#include "lehmer/mahler.hpp"

#include "lehmer/numeric.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace lehmer {

namespace {

Integer binomial(int n, int k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

double log_ratio_cubed(int d, const char* name) {
    if (d < 2) throw std::invalid_argument(std::string(name) + ": degree must be at least 2");
    const double l = std::log(static_cast<double>(d));
    const double r = std::log(l) / l;
    return r * r * r;
}

} // namespace

bool kronecker_test(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("kronecker_test: zero polynomial");
    if (!p.is_monic()) throw std::invalid_argument("kronecker_test: polynomial must be monic");
    std::size_t k = 0;
    while (sgn(p.coeffs()[k]) == 0) ++k;
    IntPoly q(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
    const int d = q.degree();
    if (d == 0) return true;
    if (abs(q.constant_term()) != 1) return false;
    std::vector<Integer> bound(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) bound[static_cast<std::size_t>(j)] = binomial(d, j);
    std::set<std::vector<Integer>> seen;
    while (true) {
        for (int j = 0; j <= d; ++j)
            if (abs(q[j]) > bound[static_cast<std::size_t>(j)]) return false;
        if (!seen.insert(q.coeffs()).second) return true;
        q = graeffe(q);
    }
}

MahlerCertificate mahler_measure(const IntPoly& p, double precision) {
    if (p.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
    MahlerCertificate cert;
    cert.poly = p;
    cert.roots = refine_roots(p, precision);
    const Integer lc = abs(p.leading());
    if (lc == 1 && kronecker_test(p.with_positive_leading())) {
        cert.is_one_exact = true;
        return cert;
    }
    Rational lo(lc), hi(lc);
    long double mid = lc.get_d();
    for (const auto& z : cert.roots.roots) {
        if (z.location != Location::OutsideDisk) continue;
        const Rational re = exact(z.approx.real()), im = exact(z.approx.imag());
        const Rational norm2 = re * re + im * im;
        const Rational r = exact(z.radius);
        // The exact location says |root| > 1, so max(1, .) only matters for the lower end.
        Rational down = exact(sqrt_down(norm2)) - r;
        if (down < 1) down = 1;
        const Rational up = exact(sqrt_up(norm2)) + r;
        for (int k = 0; k < z.multiplicity; ++k) {
            lo *= down;
            hi *= up;
            mid *= std::abs(std::complex<long double>(z.approx));
        }
    }
    cert.lower = round_down(lo);
    cert.upper = round_up(hi);
    cert.value = static_cast<double>(mid);
    if (cert.value < cert.lower) cert.value = cert.lower;
    if (cert.value > cert.upper) cert.value = cert.upper;
    const Rational v = exact(cert.value);
    cert.error_radius = std::max(round_up(exact(cert.upper) - v), round_up(v - exact(cert.lower)));
    return cert;
}

double voutier_bound(int d) { return 1.0 + 0.25 * log_ratio_cubed(d, "voutier_bound"); }

double dobrowolski_bound(int d) { return 1.0 + log_ratio_cubed(d, "dobrowolski_bound") / 1200.0; }

double schinzel_bound(int d) {
    if (d < 1) throw std::invalid_argument("schinzel_bound: degree must be positive");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::pow(phi, d / 2.0);
}

double smyth_threshold() {
    static const double value = mahler_measure(IntPoly{-1, -1, 0, 1}).value;
    return value;
}

bool schinzel_applies(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic()) return false;
    if (p == IntPoly::x() || p == IntPoly{-1, 1} || p == IntPoly{1, 1}) return false;
    int real = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) real += k * count_real_roots(f);
    return real == p.degree();
}

} // namespace lehmer
