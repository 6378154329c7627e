#include "lehmer/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lehmer {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view text) {
    std::vector<Integer> v;
    std::string token;
    std::istringstream in{std::string(text)};
    while (in >> token) {
        if (token.front() == '#') break;
        Integer c;
        if (token.front() == '+') token.erase(0, 1);
        if (token.empty() || c.set_str(token, 10) != 0)
            throw std::invalid_argument("not an integer coefficient: '" + token + "'");
        v.push_back(c);
    }
    if (v.empty()) throw std::invalid_argument("empty polynomial text");
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Integer& IntPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Integer& IntPoly::constant_term() const {
    if (is_zero()) throw std::invalid_argument("constant term of the zero polynomial");
    return coeffs_.front();
}

bool IntPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Integer IntPoly::height() const {
    Integer h = 0;
    for (const auto& c : coeffs_) {
        Integer a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(coeffs_.back()) < 0) g = -g;
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const { return reversed(degree()); }

IntPoly IntPoly::reversed(int n) const {
    if (is_zero()) return {};
    if (n < degree()) throw std::invalid_argument("reversed: n below degree");
    std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(n - k)] = coeffs_[static_cast<std::size_t>(k)];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_argument() const {
    std::vector<Integer> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::with_positive_leading() const {
    if (is_zero() || sgn(coeffs_.back()) > 0) return *this;
    return -*this;
}

Integer IntPoly::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

std::complex<long double> IntPoly::evaluate(std::complex<long double> z) const {
    std::complex<long double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + static_cast<long double>(it->get_d());
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ' ';
        out += coeffs_[k].get_str();
    }
    return out;
}

std::string IntPoly::pretty(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Integer a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = a == 1;
        if (!unit || k == 0) out += a.get_str();
        if (k > 0) {
            if (!unit) out += '*';
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
    coeffs_ = std::move(v);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

bool lex_less(const IntPoly& a, const IntPoly& b) {
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                                        [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

IntPoly pow(const IntPoly& p, unsigned k) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto& bc = b.coeffs();
    const Integer& lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Integer& top = r[static_cast<std::size_t>(k + b.degree())];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_submul(r[static_cast<std::size_t>(k) + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (const auto& c : r)
        if (sgn(c) != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("remainder modulo the zero polynomial");
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const Integer lb = abs(b.leading());
    const int sb = sgn(b.leading());
    int dr = a.degree();
    while (dr >= db && dr >= 0) {
        Integer c = r[static_cast<std::size_t>(dr)];
        if (sgn(c) != 0) {
            if (sb < 0) c = -c;
            for (auto& x : r) x *= lb;
            const std::size_t shift = static_cast<std::size_t>(dr - db);
            for (std::size_t j = 0; j < bc.size(); ++j)
                mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
        }
        r.pop_back();
        --dr;
        // Keep the intermediate coefficients small.
        Integer g = 0;
        for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.with_positive_leading();
    if (b.is_zero()) return a.with_positive_leading();
    Integer c;
    const Integer ca = a.content(), cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = positive_pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part() * c;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    IntPoly a = p.primitive_part();
    if (a.degree() < 1) return out;
    IntPoly b = a.derivative();
    IntPoly c = gcd(a, b).primitive_part();
    IntPoly w = *divide_exact(a, c);
    IntPoly y = *divide_exact(b, c);
    IntPoly z = y - w.derivative();
    for (int i = 1; w.degree() > 0; ++i) {
        IntPoly g = gcd(w, z).primitive_part();
        if (g.degree() > 0) out.push_back({g, i});
        w = *divide_exact(w, g);
        y = *divide_exact(z, g);
        z = y - w.derivative();
    }
    return out;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    return gcd(p, p.derivative()).degree() <= 0;
}

bool is_palindromic(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

IntPoly trace_polynomial(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("trace_polynomial: input must be monic");
    if (p.degree() % 2 != 0) throw std::invalid_argument("trace_polynomial: odd degree");
    if (!is_palindromic(p)) throw std::invalid_argument("trace_polynomial: input is not palindromic");
    const int d = p.degree() / 2;
    // y^-d p(y) = a_d + sum_k a_{d+k} (y^k + y^-k), and y^k + y^-k = V_k(w) with
    // V_0 = 2, V_1 = w, V_{k+1} = w V_k - V_{k-1}.
    IntPoly q = IntPoly::constant(p[d]);
    IntPoly prev = IntPoly::constant(2);
    IntPoly cur = IntPoly::x();
    for (int k = 1; k <= d; ++k) {
        q += cur * p[d + k];
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return q;
}

IntPoly expand_trace(const IntPoly& q) {
    if (q.is_zero()) return {};
    const int d = q.degree();
    const IntPoly y2p1{1, 0, 1};
    IntPoly result;
    IntPoly power = IntPoly::constant(1);
    for (int k = 0; k <= d; ++k) {
        result += IntPoly::monomial(q[k], d - k) * power;
        power *= y2p1;
    }
    return result;
}

IntPoly graeffe(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("graeffe: zero polynomial");
    IntPoly prod = p * p.negated_argument();
    if (p.degree() % 2 != 0) prod = -prod;
    std::vector<Integer> v(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(k)] = prod[2 * k];
    return IntPoly(std::move(v));
}

IntPoly compose_neg_x_squared(const IntPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Integer> v(2 * p.coeffs().size() - 1);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(2 * k)] = (k % 2 ? -p[k] : p[k]);
    return IntPoly(std::move(v));
}

} // namespace lehmer
