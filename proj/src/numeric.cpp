#include "lehmer/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lehmer {
namespace {

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t prec = 128) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

void horner(std::span<const ComplexLD> c, ComplexLD z, ComplexLD& p, ComplexLD& dp) {
    p = 0;
    dp = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

} // namespace

std::vector<ComplexLD> aberth_roots(std::span<const ComplexLD> coeffs, int max_iterations) {
    std::size_t size = coeffs.size();
    while (size > 0 && coeffs[size - 1] == ComplexLD(0)) --size;
    if (size == 0) throw std::invalid_argument("aberth_roots: zero polynomial");
    const std::span<const ComplexLD> c = coeffs.first(size);
    const std::size_t n = size - 1;
    std::vector<ComplexLD> z(n);
    if (n == 0) return z;

    // Initial points on a circle whose radius is the geometric mean of the root
    // moduli, rotated off the real axis so real polynomials don't start symmetric.
    long double radius = std::pow(std::abs(c[0] / c[n]), 1.0L / static_cast<long double>(n));
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
    for (std::size_t k = 0; k < n; ++k) {
        long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
        z[k] = std::polar(radius, theta);
    }

    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            ComplexLD p, dp;
            horner(c, z[i], p, dp);
            if (p == ComplexLD(0)) {
                done[i] = true;
                continue;
            }
            ComplexLD sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            ComplexLD ratio = p / dp;
            ComplexLD w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[i] -= w;
            if (std::abs(w) <= 4 * eps * std::max(std::abs(z[i]), 1e-30L)) done[i] = true;
            else all_done = false;
        }
        if (all_done) break;
    }
    for (int polish = 0; polish < 2; ++polish) {
        for (auto& zi : z) {
            ComplexLD p, dp;
            horner(c, zi, p, dp);
            if (dp != ComplexLD(0)) {
                ComplexLD next = zi - p / dp;
                if (std::isfinite(next.real()) && std::isfinite(next.imag())) zi = next;
            }
        }
    }
    return z;
}

std::vector<ComplexLD> aberth_roots(const IntPoly& p, int max_iterations) {
    std::vector<ComplexLD> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(static_cast<long double>(a.get_d()));
    return aberth_roots(c, max_iterations);
}

std::vector<ComplexLD> poly_from_roots(std::span<const ComplexLD> roots) {
    std::vector<ComplexLD> c{1};
    for (const auto& z : roots) {
        c.push_back(0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - z * c[k];
        c[0] = -z * c[0];
    }
    return c;
}

long double numeric_mahler(std::span<const ComplexLD> coeffs) {
    std::size_t size = coeffs.size();
    while (size > 0 && coeffs[size - 1] == ComplexLD(0)) --size;
    if (size == 0) throw std::invalid_argument("numeric_mahler: zero polynomial");
    long double m = std::abs(coeffs[size - 1]);
    for (const auto& z : aberth_roots(coeffs.first(size))) m *= std::max(1.0L, std::abs(z));
    return m;
}

double round_up(const Rational& q) {
    Mpfr x(53);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDU);
    return mpfr_get_d(x.v, MPFR_RNDU);
}

double round_down(const Rational& q) {
    Mpfr x(53);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDD);
    return mpfr_get_d(x.v, MPFR_RNDD);
}

double sqrt_up(const Rational& q) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_up of a negative rational");
    Mpfr x(256);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(x.v, x.v, MPFR_RNDU);
    return mpfr_get_d(x.v, MPFR_RNDU);
}

double sqrt_down(const Rational& q) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_down of a negative rational");
    Mpfr x(256);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(x.v, x.v, MPFR_RNDD);
    return mpfr_get_d(x.v, MPFR_RNDD);
}

double log_up(double x) {
    if (!(x > 0)) throw std::domain_error("log_up of a non-positive number");
    Mpfr v(53);
    mpfr_set_d(v.v, x, MPFR_RNDN);
    mpfr_log(v.v, v.v, MPFR_RNDU);
    return mpfr_get_d(v.v, MPFR_RNDU);
}

double log_down(double x) {
    if (!(x > 0)) throw std::domain_error("log_down of a non-positive number");
    Mpfr v(53);
    mpfr_set_d(v.v, x, MPFR_RNDN);
    mpfr_log(v.v, v.v, MPFR_RNDD);
    return mpfr_get_d(v.v, MPFR_RNDD);
}

double exp_up(const Rational& q) {
    Mpfr v(256);
    mpfr_set_q(v.v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(v.v, v.v, MPFR_RNDU);
    return mpfr_get_d(v.v, MPFR_RNDU);
}

double exp_down(const Rational& q) {
    Mpfr v(256);
    mpfr_set_q(v.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(v.v, v.v, MPFR_RNDD);
    return mpfr_get_d(v.v, MPFR_RNDD);
}

Rational exact(double x) {
    if (!std::isfinite(x)) throw std::domain_error("exact: non-finite double");
    return Rational(x);
}

} // namespace lehmer
