#include "lehmer/irreducibility.hpp"

#include "lehmer/errors.hpp"
#include "lehmer/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lehmer {

const char* to_string(Irreducibility v) {
    switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
    }
    return "?";
}

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IntPoly num = IntPoly::monomial(1, n) - IntPoly::constant(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = divide_exact(num, cyclotomic_polynomial(d));
        if (!q) throw InternalError("cyclotomic_polynomial: inexact division");
        num = std::move(*q);
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, num);
    return num;
}

namespace {

// Polynomials over F_q, constant term first, no trailing zeros.
using ModPoly = std::vector<long>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod(long a, long q) {
    a %= q;
    return a < 0 ? a + q : a;
}

long inverse_mod(long a, long q) {
    long t = 0, new_t = 1, r = q, new_r = mod(a, q);
    while (new_r != 0) {
        long k = r / new_r;
        t = std::exchange(new_t, t - k * new_t);
        r = std::exchange(new_r, r - k * new_r);
    }
    if (r != 1) throw InternalError("inverse_mod: not invertible");
    return mod(t, q);
}

ModPoly reduce_mod(const IntPoly& f, long q) {
    ModPoly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q))));
    trim(out);
    return out;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, long q) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
    trim(out);
    return out;
}

ModPoly sub_mod(ModPoly a, const ModPoly& b, long q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], q);
    trim(a);
    return a;
}

// a = quot * b + rem; b nonzero.
void divmod_mod(ModPoly a, const ModPoly& b, long q, ModPoly* quot, ModPoly& rem) {
    const long inv = inverse_mod(b.back(), q);
    const std::size_t db = b.size() - 1;
    ModPoly qt(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
        const long c = a.back() * inv % q;
        const std::size_t shift = a.size() - b.size();
        qt[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], q);
        trim(a);
    }
    rem = std::move(a);
    if (quot) {
        trim(qt);
        *quot = std::move(qt);
    }
}

ModPoly rem_mod(const ModPoly& a, const ModPoly& b, long q) {
    ModPoly r;
    divmod_mod(a, b, q, nullptr, r);
    return r;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, long q) {
    while (!b.empty()) {
        ModPoly r = rem_mod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const long inv = inverse_mod(a.back(), q);
        for (auto& c : a) c = c * inv % q;
    }
    return a;
}

ModPoly derivative_mod(const ModPoly& a, long q) {
    ModPoly out;
    for (std::size_t k = 1; k < a.size(); ++k) out.push_back(static_cast<long>(k) % q * a[k] % q);
    trim(out);
    return out;
}

ModPoly pow_mod(ModPoly base, unsigned long e, const ModPoly& f, long q) {
    ModPoly result{1};
    base = rem_mod(base, f, q);
    while (e > 0) {
        if (e & 1) result = rem_mod(mul_mod(result, base, q), f, q);
        base = rem_mod(mul_mod(base, base, q), f, q);
        e >>= 1;
    }
    return result;
}

bool squarefree_mod(const ModPoly& f, long q) {
    return gcd_mod(f, derivative_mod(f, q), q).size() == 1;
}

std::vector<int> divisors(long a) {
    std::vector<int> out;
    for (long d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(static_cast<int>(d));
        if (d * d != a) out.push_back(static_cast<int>(a / d));
    }
    return out;
}

IrreducibilityReport reducible(IntPoly witness, std::string method) {
    return {Irreducibility::Reducible, std::move(witness), std::move(method)};
}

IrreducibilityReport decided(Irreducibility v, std::string method) {
    return {v, std::nullopt, std::move(method)};
}

// Subset sums of the factor degrees strictly between 0 and the total.
std::vector<char> achievable_degrees(const std::vector<int>& degs, int total) {
    std::vector<char> can(static_cast<std::size_t>(total) + 1, 0);
    can[0] = 1;
    for (int d : degs)
        for (int k = total; k >= d; --k)
            if (can[static_cast<std::size_t>(k - d)]) can[static_cast<std::size_t>(k)] = 1;
    can[0] = 0;
    can[static_cast<std::size_t>(total)] = 0;
    return can;
}

struct RootClass {
    std::vector<std::complex<long double>> members;
    long double radius;
};

// Depth-first search over conjugation-closed root subsets. Running products are
// kept for the candidate factor, for prod (x + |z|) and for prod (x + |z| + r);
// the difference of the last two bounds the coefficient error.
class FactorSearch {
public:
    FactorSearch(const IntPoly& p, std::vector<RootClass> classes, std::vector<char> allowed)
        : p_(p), classes_(std::move(classes)), allowed_(std::move(allowed)) {}

    std::optional<IntPoly> run() {
        std::vector<std::complex<long double>> prod{1};
        std::vector<long double> lo{1}, hi{1};
        dfs(0, prod, lo, hi);
        return found_;
    }

    bool inconclusive() const { return inconclusive_; }

private:
    void dfs(std::size_t next, const std::vector<std::complex<long double>>& prod, const std::vector<long double>& lo,
             const std::vector<long double>& hi) {
        const int size = static_cast<int>(prod.size()) - 1;
        if (size > 0 && allowed_[static_cast<std::size_t>(size)]) test(prod, lo, hi);
        if (found_) return;
        for (std::size_t i = next; i < classes_.size() && !found_; ++i) {
            const auto& cls = classes_[i];
            if (size + static_cast<int>(cls.members.size()) > p_.degree() / 2) continue;
            auto p2 = prod;
            auto lo2 = lo, hi2 = hi;
            for (const auto& z : cls.members) {
                p2 = times_linear(p2, z);
                lo2 = times_linear(lo2, std::abs(z));
                hi2 = times_linear(hi2, std::abs(z) + cls.radius);
            }
            dfs(i + 1, p2, lo2, hi2);
        }
    }

    // Multiplies by (x - z); for the real bound polynomials by (x + z).
    static std::vector<std::complex<long double>> times_linear(const std::vector<std::complex<long double>>& a,
                                                               std::complex<long double> z) {
        std::vector<std::complex<long double>> out(a.size() + 1);
        for (std::size_t k = 0; k < a.size(); ++k) {
            out[k + 1] += a[k];
            out[k] -= z * a[k];
        }
        return out;
    }
    static std::vector<long double> times_linear(const std::vector<long double>& a, long double m) {
        std::vector<long double> out(a.size() + 1, 0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            out[k + 1] += a[k];
            out[k] += m * a[k];
        }
        return out;
    }

    void test(const std::vector<std::complex<long double>>& prod, const std::vector<long double>& lo,
              const std::vector<long double>& hi) {
        const std::size_t k = prod.size() - 1;
        std::vector<Integer> coeffs(prod.size());
        for (std::size_t j = 0; j <= k; ++j) {
            const long double tol = (hi[j] - lo[j]) + 64.0L * static_cast<long double>(k + 1) * LDBL_EPSILON * hi[j];
            if (tol >= 0.5L || hi[j] > 1e15L) {
                inconclusive_ = true;
                return;
            }
            const long double nearest = std::round(prod[j].real());
            if (std::abs(prod[j].real() - nearest) > tol || std::abs(prod[j].imag()) > tol) return;
            coeffs[j] = Integer(static_cast<long>(nearest));
        }
        IntPoly g(std::move(coeffs));
        if (divide_exact(p_, g)) found_ = std::move(g);
    }

    const IntPoly& p_;
    std::vector<RootClass> classes_;
    std::vector<char> allowed_;
    std::optional<IntPoly> found_;
    bool inconclusive_ = false;
};

} // namespace

std::vector<int> modular_factor_degrees(const IntPoly& p, long q) {
    ModPoly f = reduce_mod(p, q);
    if (static_cast<int>(f.size()) - 1 != p.degree()) throw std::invalid_argument("modular_factor_degrees: degree drops mod q");
    if (!squarefree_mod(f, q)) throw std::invalid_argument("modular_factor_degrees: not squarefree mod q");
    {
        const long inv = inverse_mod(f.back(), q);
        for (auto& c : f) c = c * inv % q;
    }
    std::vector<int> degs;
    ModPoly h{0, 1};  // x^(q^i) mod f
    const ModPoly x{0, 1};
    for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
        h = pow_mod(h, static_cast<unsigned long>(q), f, q);
        ModPoly g = gcd_mod(f, sub_mod(h, x, q), q);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int k = 0; k < dg / i; ++k) degs.push_back(i);
            ModPoly quot, rem;
            divmod_mod(f, g, q, &quot, rem);
            f = std::move(quot);
            h = rem_mod(h, f, q);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    std::sort(degs.begin(), degs.end());
    return degs;
}

IrreducibilityReport irreducibility_report(const IntPoly& p, const IrreducibilityOptions& options) {
    if (p.degree() < 1) throw std::invalid_argument("irreducibility_report: degree must be at least 1");
    if (!p.is_monic()) throw std::invalid_argument("irreducibility_report: polynomial must be monic");
    const int n = p.degree();
    if (n == 1) return decided(Irreducibility::Irreducible, "degree");

    if (IntPoly g = gcd(p, p.derivative()); g.degree() > 0) return reducible(g, "repeated factor");

    // Integer roots divide the constant term.
    const Integer& a0 = p.constant_term();
    if (sgn(a0) == 0) return reducible(IntPoly::x(), "rational root");
    auto try_root = [&](long r) -> std::optional<IrreducibilityReport> {
        if (sgn(p.evaluate(Integer(r))) == 0) return reducible(IntPoly{-r, 1}, "rational root");
        return std::nullopt;
    };
    const Integer abs_a0 = abs(a0);
    if (abs_a0.fits_slong_p() && abs_a0.get_si() <= 1'000'000) {
        for (int d : divisors(abs_a0.get_si()))
            for (long r : {static_cast<long>(d), -static_cast<long>(d)})
                if (auto rep = try_root(r)) return *rep;
    } else {
        for (long r : {1L, -1L})
            if (auto rep = try_root(r)) return *rep;
    }

    // Cyclotomic factors; phi(m) <= n forces m <= 2 n^2.
    if (abs_a0 == 1) {
        for (int m = 3; m <= 2 * n * n + 2; ++m) {
            const int phi = euler_phi(m);
            if (phi > n) continue;
            IntPoly c = cyclotomic_polynomial(m);
            if (phi == n) {
                if (c == p) return decided(Irreducibility::Irreducible, "cyclotomic");
            } else if (divide_exact(p, c)) {
                return reducible(c, "cyclotomic");
            }
        }
    }

    // Degree patterns modulo primes where p stays squarefree.
    std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
    allowed[0] = allowed[static_cast<std::size_t>(n)] = 0;
    int used = 0;
    for (long q = 2; used < options.prime_count && q < 2000; ++q) {
        bool prime = true;
        for (long k = 2; k * k <= q; ++k)
            if (q % k == 0) prime = false;
        if (!prime) continue;
        ModPoly f = reduce_mod(p, q);
        if (!squarefree_mod(f, q)) continue;
        ++used;
        auto can = achievable_degrees(modular_factor_degrees(p, q), n);
        bool any = false;
        for (int k = 1; k < n; ++k) {
            allowed[static_cast<std::size_t>(k)] = allowed[static_cast<std::size_t>(k)] && can[static_cast<std::size_t>(k)];
            any = any || allowed[static_cast<std::size_t>(k)];
        }
        if (!any) return decided(Irreducibility::Irreducible, "modular degrees");
    }

    if (n > options.exhaustive_cap) return decided(Irreducibility::Unknown, "undecided");

    RootProfile rp;
    try {
        rp = refine_roots(p);
    } catch (const CertificationError&) {
        return decided(Irreducibility::Unknown, "undecided");
    }
    std::vector<RootClass> classes;
    for (const auto& z : rp.roots) {
        if (z.realness == Realness::NonRealLower) continue;
        RootClass cls{{std::complex<long double>(z.approx)}, static_cast<long double>(z.radius)};
        if (z.realness == Realness::NonRealUpper) cls.members.push_back(std::conj(cls.members[0]));
        classes.push_back(std::move(cls));
    }
    FactorSearch search(p, std::move(classes), std::move(allowed));
    if (auto g = search.run()) return reducible(*g, "reconstruction");
    if (search.inconclusive()) return decided(Irreducibility::Unknown, "undecided");
    return decided(Irreducibility::Irreducible, "reconstruction");
}

} // namespace lehmer
