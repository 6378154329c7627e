#include "lehmer/matrix.hpp"

#include "lehmer/errors.hpp"

#include <stdexcept>

namespace lehmer {

namespace {

std::size_t check_square(const IntMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
    return a.size();
}

} // namespace

Integer determinant(const IntMatrix& a) {
    const std::size_t n = check_square(a);
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(m[piv][k]) == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
    const std::size_t n = check_square(a);
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * next[l][i];
        Rational ck = -tr / static_cast<long>(k);
        if (ck.get_den() != 1) throw InternalError("characteristic_polynomial: non-integral coefficient");
        c[n - k] = ck.get_num();
        m = std::move(next);
    }
    return IntPoly(std::move(c));
}

} // namespace lehmer
