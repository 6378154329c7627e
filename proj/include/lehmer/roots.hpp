#pragma once

/**
 * @file roots.hpp
 * @brief Exact root-location counts and certified numeric roots.
 *
 * The counts (inside / on / outside the unit circle, real roots outside) are
 * decided in exact integer arithmetic. refine_roots() attaches numeric
 * approximations whose inclusion disks are certified and whose locations are
 * forced to agree with the exact counts.
 */

#include "lehmer/intpoly.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace lehmer {

enum class Location { InsideDisk, OnCircle, OutsideDisk };
enum class Realness { Real, NonRealUpper, NonRealLower };

const char* to_string(Location l);
const char* to_string(Realness r);

struct CertifiedRoot {
    std::complex<double> approx;
    /// The true root lies in the closed disk of this radius around approx.
    double radius = 0;
    int multiplicity = 1;
    Location location = Location::InsideDisk;
    Realness realness = Realness::Real;

    bool is_outside() const { return location == Location::OutsideDisk; }
    bool is_real() const { return realness == Realness::Real; }
};

/**
 * Roots of an integer polynomial with exact location counts.
 *
 * Distinct roots appear once, carrying their multiplicity. Order:
 * real roots outside the circle (descending modulus), non-real roots outside
 * with positive imaginary part, then their conjugates in the same order (so
 * conj(roots[r + i]) == roots[r + t + i]), then roots on the circle (upper
 * half, conjugates, then +-1), then roots inside (real, upper, conjugates).
 */
struct RootProfile {
    IntPoly poly;
    std::vector<CertifiedRoot> roots;
    int degree = 0;
    int s = 0;          ///< roots with |z| > 1, with multiplicity
    int r = 0;          ///< real roots with |z| > 1, with multiplicity
    int on_circle = 0;  ///< roots with |z| = 1, with multiplicity
    int inside = 0;     ///< roots with |z| < 1, with multiplicity
    bool squarefree = true;

    int t() const { return (s - r) / 2; }
    double max_radius() const;
};

class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, std::vector<double> radii)
        : std::runtime_error(what), radii_(std::move(radii)) {}
    const std::vector<double>& achieved_radii() const { return radii_; }

private:
    std::vector<double> radii_;
};

/// Signed remainder (Sturm) sequence of p and p'.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

/// Number of distinct real roots of p in (a, b], a < b, by Sturm sequences.
int count_real_roots_between(const IntPoly& p, const Rational& a, const Rational& b);
/// Number of distinct real roots of p.
int count_real_roots(const IntPoly& p);

/// Cauchy index of q/p over the whole real line.
int cauchy_index(const IntPoly& q, const IntPoly& p);

/// Roots with |z| < 1, with multiplicity. Schur-Cohn transform sequence after
/// the circle part is split off; singular steps use count_inside_by_argument.
int count_inside_unit_disk(const IntPoly& p);

/// The argument-principle route for a polynomial with no roots on the unit
/// circle: Cauchy index of the Cayley-transformed polynomial.
int count_inside_by_argument(const IntPoly& p);

/// Roots with |z| = 1, with multiplicity, via the Cayley substitution
/// x = (1 + it)/(1 - it) and Sturm counting; x = -1 is checked directly.
int count_on_unit_circle(const IntPoly& p);

/// Real roots in (-inf, -1) U (1, inf), with multiplicity.
int count_real_outside(const IntPoly& p);

/// Real and imaginary parts of (1 - it)^n p((1 + it)/(1 - it)), n = deg p.
std::pair<IntPoly, IntPoly> cayley_transform(const IntPoly& p);

constexpr double kDefaultPrecision = 1e-12;

/**
 * Certified roots of p.
 *
 * Each squarefree factor is solved by Aberth-Ehrlich iteration in long
 * double; the approximations are rounded to double and certified with the
 * inclusion radius
 *
 *     rho_i = n |f(z_i)| / (|lc(f)| prod_{j != i} |z_i - z_j|),
 *
 * evaluated exactly over Q and rounded up. The union of these disks contains
 * all roots and each connected component of k disks contains exactly k roots
 * (Braess-Hadeler), so pairwise disjoint disks isolate one root each.
 * Throws CertificationError if isolation fails or some radius exceeds
 * `precision`.
 */
RootProfile refine_roots(const IntPoly& p, double precision = kDefaultPrecision);

/// Exact counts only (no numeric roots).
RootProfile root_counts(const IntPoly& p);

} // namespace lehmer
