#pragma once

// Elements of Q[x]/(P) for monic P, in the power basis {1, a, ..., a^(n-1)}.

#include "lehmer/intpoly.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace lehmer {

class NotInvertibleError : public std::invalid_argument {
public:
    NotInvertibleError(const std::string& what, IntPoly common_factor)
        : std::invalid_argument(what), common_factor_(std::move(common_factor)) {}
    const IntPoly& common_factor() const { return common_factor_; }

private:
    IntPoly common_factor_;
};

class RingElement {
public:
    /// Reduces an integer polynomial modulo `modulus`, which must be monic of degree >= 1.
    RingElement(const IntPoly& modulus, const IntPoly& value);
    RingElement(const IntPoly& modulus, std::vector<Rational> coords);

    static RingElement one(const IntPoly& modulus) { return {modulus, IntPoly::constant(1)}; }
    static RingElement generator(const IntPoly& modulus) { return {modulus, IntPoly::x()}; }

    const IntPoly& modulus() const { return modulus_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_integral() const;
    bool is_one() const;
    bool is_zero() const;

    /// Integer coordinates; throws if some coordinate is not an integer.
    std::vector<Integer> integer_coords() const;

    /// Value under the embedding a -> root.
    std::complex<long double> evaluate(std::complex<long double> root) const;

    RingElement pow(unsigned long k) const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.modulus_ == b.modulus_ && a.coords_ == b.coords_;
    }

private:
    static std::vector<Rational> reduce(const IntPoly& modulus, std::vector<Rational> poly);
    void check_same_ring(const RingElement& o) const;

    IntPoly modulus_;
    std::vector<Rational> coords_;
};

/// Inverse in Q[x]/(P) by the extended Euclidean algorithm over Q.
/// Throws NotInvertibleError carrying the nontrivial gcd.
RingElement invert_in_ring(const RingElement& e);

/// The automorphism a -> 1/a of Q[x]/(P) for palindromic P.
RingElement involution(const RingElement& e);

} // namespace lehmer
