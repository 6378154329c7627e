#include "lehmer/roots.hpp"

#include "lehmer/errors.hpp"
#include "lehmer/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lehmer {

const char* to_string(Location l) {
    switch (l) {
    case Location::InsideDisk: return "inside";
    case Location::OnCircle: return "on_circle";
    case Location::OutsideDisk: return "outside";
    }
    return "?";
}

const char* to_string(Realness r) {
    switch (r) {
    case Realness::Real: return "real";
    case Realness::NonRealUpper: return "upper";
    case Realness::NonRealLower: return "lower";
    }
    return "?";
}

double RootProfile::max_radius() const {
    double m = 0;
    for (const auto& z : roots) m = std::max(m, z.radius);
    return m;
}

namespace {

// Divides by the (positive) content, keeping signs.
IntPoly scale_down(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = p.content();
    if (g == 1) return p;
    std::vector<Integer> v = p.coeffs();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

std::vector<IntPoly> signed_remainder_sequence(const IntPoly& a, const IntPoly& b) {
    std::vector<IntPoly> seq{scale_down(a)};
    if (b.is_zero()) return seq;
    seq.push_back(scale_down(b));
    while (true) {
        IntPoly r = positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(scale_down(-r));
    }
    return seq;
}

int sign_at(const IntPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

int sign_at_infinity(const IntPoly& p, bool positive) {
    int s = sgn(p.leading());
    return (positive || p.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<IntPoly>& seq, const Rational& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(sign_at(p, x));
    return variations(s);
}

int variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(sign_at_infinity(p, positive));
    return variations(s);
}

// Gaussian-integer polynomial in t as (real part, imaginary part).
using GaussPoly = std::pair<IntPoly, IntPoly>;

GaussPoly gmul(const GaussPoly& a, const GaussPoly& b) {
    return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
}

int circle_count_squarefree(const IntPoly& f) {
    if (f.degree() < 1) return 0;
    int count = sgn(f.evaluate(Integer(-1))) == 0 ? 1 : 0;
    auto [re, im] = cayley_transform(f);
    IntPoly h = gcd(re, im);
    if (h.degree() >= 1) count += count_real_roots(h);
    return count;
}

int schur_cohn(IntPoly p) {
    int offset = 0, sign = 1;
    while (p.degree() > 0) {
        const int n = p.degree();
        const Integer a0 = p[0];
        const Integer an = p.leading();
        const Integer delta = a0 * a0 - an * an;
        if (sgn(delta) == 0) return offset + sign * count_inside_by_argument(p);
        IntPoly tp = scale_down(p * a0 - p.reversed(n) * an);
        if (sgn(delta) < 0) {
            offset += sign * n;
            sign = -sign;
        }
        p = std::move(tp);
    }
    return offset;
}

IntPoly strip_x(const IntPoly& f, int& zeros) {
    zeros = 0;
    std::size_t k = 0;
    while (k < f.coeffs().size() && sgn(f.coeffs()[k]) == 0) ++k;
    zeros = static_cast<int>(k);
    return IntPoly(std::vector<Integer>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
}

int inside_count_squarefree(const IntPoly& f) {
    int zeros = 0;
    IntPoly g = strip_x(f, zeros);
    if (g.degree() < 1) return zeros;
    IntPoly c = gcd(g, g.reversed()).primitive_part();
    IntPoly q = *divide_exact(g, c);
    int inside_c = 0;
    if (c.degree() > 0) {
        const int on = circle_count_squarefree(c);
        if ((c.degree() - on) % 2 != 0) throw InternalError("reciprocal part has unpaired roots");
        inside_c = (c.degree() - on) / 2;
    }
    return zeros + inside_c + schur_cohn(q);
}

int real_outside_squarefree(const IntPoly& f) {
    auto seq = sturm_sequence(f);
    const Rational one(1), minus_one(-1);
    int right = variations_at(seq, one) - variations_at_infinity(seq, true);
    int left = variations_at_infinity(seq, false) - variations_at(seq, minus_one);
    if (sgn(f.evaluate(Integer(-1))) == 0) --left;
    return left + right;
}

struct FactorCounts {
    int inside = 0, on = 0, outside = 0, real = 0, real_outside = 0;
};

FactorCounts exact_counts(const IntPoly& f) {
    FactorCounts c;
    c.on = circle_count_squarefree(f);
    c.inside = inside_count_squarefree(f);
    c.outside = f.degree() - c.on - c.inside;
    c.real = count_real_roots(f);
    c.real_outside = real_outside_squarefree(f);
    if (c.outside < 0) throw InternalError("exact root counts exceed the degree of " + f.pretty());
    return c;
}

struct GaussRational {
    Rational re, im;
};

GaussRational evaluate_exact(const IntPoly& f, const Rational& zr, const Rational& zi) {
    Rational ar = 0, ai = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        Rational nr = ar * zr - ai * zi + Rational(*it);
        Rational ni = ar * zi + ai * zr;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

// Inclusion radii for the given approximations of the roots of squarefree f.
std::vector<double> inclusion_radii(const IntPoly& f, const std::vector<std::complex<double>>& z) {
    const std::size_t n = z.size();
    std::vector<Rational> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = exact(z[i].real());
        im[i] = exact(z[i].imag());
    }
    const Rational lc2 = Rational(f.leading() * f.leading());
    std::vector<double> radii(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = evaluate_exact(f, re[i], im[i]);
        Rational num = (v.re * v.re + v.im * v.im) * Rational(static_cast<long>(n * n));
        if (sgn(num) == 0) {
            radii[i] = 0;
            continue;
        }
        Rational den = lc2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational dr = re[i] - re[j], di = im[i] - im[j];
            den *= dr * dr + di * di;
        }
        radii[i] = sgn(den) == 0 ? std::numeric_limits<double>::infinity() : sqrt_up(num / den);
    }
    return radii;
}

bool disks_disjoint(const std::complex<double>& a, double ra, const std::complex<double>& b, double rb) {
    if (!std::isfinite(ra) || !std::isfinite(rb)) return false;
    Rational dr = exact(a.real()) - exact(b.real());
    Rational di = exact(a.imag()) - exact(b.imag());
    Rational sum = exact(ra) + exact(rb);
    return dr * dr + di * di > sum * sum;
}

std::vector<CertifiedRoot> certify_factor(const IntPoly& f, int multiplicity, const FactorCounts& counts,
                                          double precision) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (const auto& w : aberth_roots(f))
        z.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    std::vector<double> radii = inclusion_radii(f, z);

    for (std::size_t i = 0; i < n; ++i) {
        if (!(radii[i] <= precision))
            throw CertificationError("root radius " + std::to_string(radii[i]) + " exceeds the requested precision for " +
                                         f.pretty(),
                                     radii);
        for (std::size_t j = i + 1; j < n; ++j)
            if (!disks_disjoint(z[i], radii[i], z[j], radii[j]))
                throw CertificationError("inclusion disks overlap for " + f.pretty(), radii);
    }

    std::vector<CertifiedRoot> out(n);
    int n_out = 0, n_in = 0, n_amb = 0, n_real = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational r = exact(radii[i]);
        const Rational m2 = exact(z[i].real()) * exact(z[i].real()) + exact(z[i].imag()) * exact(z[i].imag());
        const Rational hi = 1 + r, lo = 1 - r;
        CertifiedRoot& c = out[i];
        c.approx = z[i];
        c.radius = radii[i];
        c.multiplicity = multiplicity;
        if (m2 > hi * hi) {
            c.location = Location::OutsideDisk;
            ++n_out;
        } else if (sgn(lo) > 0 && m2 < lo * lo) {
            c.location = Location::InsideDisk;
            ++n_in;
        } else {
            c.location = Location::OnCircle;
            ++n_amb;
        }
        if (std::abs(z[i].imag()) <= radii[i]) {
            c.realness = Realness::Real;
            ++n_real;
        } else {
            c.realness = z[i].imag() > 0 ? Realness::NonRealUpper : Realness::NonRealLower;
        }
    }
    if (n_out != counts.outside || n_in != counts.inside || n_amb != counts.on)
        throw CertificationError("numeric root locations disagree with exact counts for " + f.pretty(), radii);
    if (n_real != counts.real)
        throw CertificationError("numeric real roots disagree with the Sturm count for " + f.pretty(), radii);

    for (auto& c : out)
        if (c.realness == Realness::Real) c.approx = {c.approx.real(), 0.0};

    // Pair each upper root with the nearest lower root; make them exact mirror images.
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (out[i].realness != Realness::NonRealUpper) continue;
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || out[j].realness != Realness::NonRealLower) continue;
            double d = std::abs(std::conj(out[i].approx) - out[j].approx);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == n || out[best].location != out[i].location)
            throw CertificationError("could not pair conjugate roots of " + f.pretty(), radii);
        used[best] = true;
        const double rad = std::max(out[i].radius, out[best].radius);
        out[i].radius = rad;
        out[best].radius = rad;
        out[best].approx = std::conj(out[i].approx);
    }
    return out;
}

void order_roots(std::vector<CertifiedRoot>& roots) {
    auto group = [](Location loc, Realness re, const std::vector<CertifiedRoot>& all) {
        std::vector<CertifiedRoot> g;
        for (const auto& c : all)
            if (c.location == loc && c.realness == re) g.push_back(c);
        return g;
    };
    auto by_modulus_desc = [](const CertifiedRoot& a, const CertifiedRoot& b) {
        double ma = std::abs(a.approx), mb = std::abs(b.approx);
        if (ma != mb) return ma > mb;
        return std::arg(a.approx) < std::arg(b.approx);
    };
    auto by_arg = [](const CertifiedRoot& a, const CertifiedRoot& b) {
        return std::arg(a.approx) < std::arg(b.approx);
    };
    auto by_value_desc = [](const CertifiedRoot& a, const CertifiedRoot& b) { return a.approx.real() > b.approx.real(); };

    std::vector<CertifiedRoot> result;
    result.reserve(roots.size());
    auto append_pairs = [&](Location loc, auto cmp) {
        auto upper = group(loc, Realness::NonRealUpper, roots);
        auto lower = group(loc, Realness::NonRealLower, roots);
        std::sort(upper.begin(), upper.end(), cmp);
        result.insert(result.end(), upper.begin(), upper.end());
        for (const auto& u : upper) {
            auto it = std::find_if(lower.begin(), lower.end(), [&](const CertifiedRoot& l) {
                return l.approx == std::conj(u.approx) && l.multiplicity == u.multiplicity;
            });
            if (it == lower.end()) throw InternalError("conjugate root missing");
            result.push_back(*it);
            lower.erase(it);
        }
        if (!lower.empty()) throw InternalError("unpaired lower root");
    };

    auto real_out = group(Location::OutsideDisk, Realness::Real, roots);
    std::sort(real_out.begin(), real_out.end(), by_modulus_desc);
    result.insert(result.end(), real_out.begin(), real_out.end());
    append_pairs(Location::OutsideDisk, by_modulus_desc);

    append_pairs(Location::OnCircle, by_arg);
    auto real_on = group(Location::OnCircle, Realness::Real, roots);
    std::sort(real_on.begin(), real_on.end(), by_value_desc);
    result.insert(result.end(), real_on.begin(), real_on.end());

    auto real_in = group(Location::InsideDisk, Realness::Real, roots);
    std::sort(real_in.begin(), real_in.end(), by_modulus_desc);
    result.insert(result.end(), real_in.begin(), real_in.end());
    append_pairs(Location::InsideDisk, by_modulus_desc);

    roots = std::move(result);
}

} // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
    return signed_remainder_sequence(p, p.derivative());
}

int count_real_roots_between(const IntPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("count_real_roots_between: need a < b");
    auto seq = sturm_sequence(p);
    return variations_at(seq, a) - variations_at(seq, b);
}

int count_real_roots(const IntPoly& p) {
    if (p.degree() < 1) return 0;
    auto seq = sturm_sequence(p);
    return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int cauchy_index(const IntPoly& q, const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_index: zero denominator");
    if (q.is_zero()) return 0;
    auto seq = signed_remainder_sequence(p, q);
    return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::pair<IntPoly, IntPoly> cayley_transform(const IntPoly& p) {
    if (p.is_zero()) return {};
    const int n = p.degree();
    const GaussPoly plus{IntPoly{1}, IntPoly{0, 1}};
    const GaussPoly minus{IntPoly{1}, IntPoly{0, -1}};
    std::vector<GaussPoly> pp(static_cast<std::size_t>(n) + 1), mp(static_cast<std::size_t>(n) + 1);
    pp[0] = mp[0] = {IntPoly{1}, IntPoly{}};
    for (int k = 1; k <= n; ++k) {
        pp[static_cast<std::size_t>(k)] = gmul(pp[static_cast<std::size_t>(k - 1)], plus);
        mp[static_cast<std::size_t>(k)] = gmul(mp[static_cast<std::size_t>(k - 1)], minus);
    }
    IntPoly re, im;
    for (int k = 0; k <= n; ++k) {
        if (sgn(p[k]) == 0) continue;
        GaussPoly term = gmul(pp[static_cast<std::size_t>(k)], mp[static_cast<std::size_t>(n - k)]);
        re += term.first * p[k];
        im += term.second * p[k];
    }
    return {re, im};
}

int count_inside_by_argument(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("count_inside_by_argument: zero polynomial");
    const int n = p.degree();
    if (n < 1) return 0;
    if (sgn(p.evaluate(Integer(-1))) == 0) throw std::invalid_argument("count_inside_by_argument: root at -1");
    auto [re, im] = cayley_transform(p);
    // Common factors of re and im without real roots come from pairs z, 1/conj(z) and do not disturb the index.
    if (count_real_roots(gcd(re, im)) > 0) throw std::invalid_argument("count_inside_by_argument: root on the unit circle");
    // The leading coefficient of re + i*im is (-i)^n p(-1); rotate by i^n so the real part has full degree.
    const int index = n % 2 == 0 ? cauchy_index(im, re) : -cauchy_index(re, im);
    if ((n - index) % 2 != 0) throw InternalError("Cauchy index parity mismatch");
    return (n - index) / 2;
}

int count_inside_unit_disk(const IntPoly& p) {
    int total = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) total += k * inside_count_squarefree(f);
    return total;
}

int count_on_unit_circle(const IntPoly& p) {
    int total = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) total += k * circle_count_squarefree(f);
    return total;
}

int count_real_outside(const IntPoly& p) {
    int total = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) total += k * real_outside_squarefree(f);
    return total;
}

RootProfile root_counts(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root_counts: zero polynomial");
    RootProfile prof;
    prof.poly = p;
    prof.degree = p.degree();
    for (const auto& [f, k] : squarefree_decomposition(p)) {
        if (k > 1) prof.squarefree = false;
        FactorCounts c = exact_counts(f);
        prof.inside += k * c.inside;
        prof.on_circle += k * c.on;
        prof.s += k * c.outside;
        prof.r += k * c.real_outside;
    }
    return prof;
}

RootProfile refine_roots(const IntPoly& p, double precision) {
    if (p.is_zero()) throw std::invalid_argument("refine_roots: zero polynomial");
    if (!(precision > 0)) throw std::invalid_argument("refine_roots: precision must be positive");
    RootProfile prof;
    prof.poly = p;
    prof.degree = p.degree();
    for (const auto& [factor, k] : squarefree_decomposition(p)) {
        if (k > 1) prof.squarefree = false;
        int zeros = 0;
        IntPoly f = strip_x(factor, zeros);
        if (zeros) {
            prof.roots.push_back({{0.0, 0.0}, 0.0, k, Location::InsideDisk, Realness::Real});
            prof.inside += k;
        }
        if (f.degree() < 1) continue;
        FactorCounts c = exact_counts(f);
        prof.inside += k * c.inside;
        prof.on_circle += k * c.on;
        prof.s += k * c.outside;
        prof.r += k * c.real_outside;
        auto roots = certify_factor(f, k, c, precision);
        int real_out = 0;
        for (const auto& z : roots)
            if (z.is_outside() && z.is_real()) ++real_out;
        if (real_out != c.real_outside)
            throw CertificationError("real roots outside disagree with the Sturm count for " + f.pretty(), {});
        prof.roots.insert(prof.roots.end(), roots.begin(), roots.end());
    }
    if (prof.s + prof.on_circle + prof.inside != prof.degree) throw InternalError("root counts do not sum to the degree");
    order_roots(prof.roots);
    return prof;
}

} // namespace lehmer
