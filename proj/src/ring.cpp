#include "lehmer/ring.hpp"

#include <algorithm>

namespace lehmer {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    RatPoly q(a.size() - b.size() + 1);
    const Rational& lb = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / lb;
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

} // namespace

std::vector<Rational> RingElement::reduce(const IntPoly& modulus, std::vector<Rational> poly) {
    const std::size_t n = static_cast<std::size_t>(modulus.degree());
    const auto& m = modulus.coeffs();
    // x^n = -sum m_k x^k, m monic.
    for (std::size_t k = poly.size(); k-- > n;) {
        if (sgn(poly[k]) == 0) continue;
        const Rational c = poly[k];
        for (std::size_t j = 0; j < n; ++j) poly[k - n + j] -= c * Rational(m[j]);
        poly[k] = 0;
    }
    poly.resize(n);
    return poly;
}

RingElement::RingElement(const IntPoly& modulus, const IntPoly& value)
    : RingElement(modulus, to_rat(value)) {}

RingElement::RingElement(const IntPoly& modulus, std::vector<Rational> coords) : modulus_(modulus) {
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw std::invalid_argument("ring modulus must be monic of degree >= 1");
    coords_ = reduce(modulus_, std::move(coords));
}

void RingElement::check_same_ring(const RingElement& o) const {
    if (!(modulus_ == o.modulus_)) throw std::invalid_argument("ring elements with different moduli");
}

bool RingElement::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool RingElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool RingElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::vector<Integer> RingElement::integer_coords() const {
    std::vector<Integer> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        if (c.get_den() != 1) throw std::domain_error("ring element has non-integral coordinates");
        out.push_back(c.get_num());
    }
    return out;
}

std::complex<long double> RingElement::evaluate(std::complex<long double> root) const {
    std::complex<long double> acc = 0;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = acc * root + static_cast<long double>(it->get_d());
    return acc;
}

RingElement RingElement::pow(unsigned long k) const {
    RingElement result = one(modulus_);
    RingElement base = *this;
    while (k) {
        if (k & 1ul) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RatPoly c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return {a.modulus_, std::move(c)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RatPoly c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return {a.modulus_, std::move(c)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RatPoly ta = a.coords_, tb = b.coords_;
    trim(ta);
    trim(tb);
    return {a.modulus_, mul(ta, tb)};
}

RingElement invert_in_ring(const RingElement& e) {
    const IntPoly& m = e.modulus();
    RatPoly r0 = to_rat(m);
    RatPoly r1 = e.coords();
    trim(r1);
    if (r1.empty()) throw NotInvertibleError("zero is not invertible", m);
    // Invariant: r_i = s_i * e (mod m).
    RatPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty()) {
            // r0 is the gcd; clear denominators to report it over Z.
            Integer den = 1;
            for (const auto& c : r0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            std::vector<Integer> g;
            for (const auto& c : r0) g.push_back(Integer(c * den));
            throw NotInvertibleError("element shares a nontrivial factor with the modulus",
                                     IntPoly(std::move(g)).primitive_part());
        }
    }
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return {m, std::move(s1)};
}

RingElement involution(const RingElement& e) {
    const IntPoly& m = e.modulus();
    if (!is_palindromic(m)) throw std::invalid_argument("involution requires a palindromic modulus");
    const RingElement inv = invert_in_ring(RingElement::generator(m));
    RingElement acc(m, IntPoly{});
    const auto& c = e.coords();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * inv + RingElement(m, std::vector<Rational>{c[k]});
    return acc;
}

} // namespace lehmer
