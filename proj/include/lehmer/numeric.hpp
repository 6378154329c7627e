#pragma once

// Floating-point helpers: simultaneous root iteration and directed rounding of
// exact rationals.

#include "lehmer/intpoly.hpp"

#include <complex>
#include <span>
#include <vector>

namespace lehmer {

using ComplexLD = std::complex<long double>;

/// Aberth-Ehrlich iteration on a polynomial with complex coefficients
/// (constant term first, nonzero leading coefficient), followed by two Newton
/// polishing steps. Returns deg approximations; no certification.
std::vector<ComplexLD> aberth_roots(std::span<const ComplexLD> coeffs, int max_iterations = 1000);
std::vector<ComplexLD> aberth_roots(const IntPoly& p, int max_iterations = 1000);

/// Product of (x - z) over the given points, coefficients constant first.
std::vector<ComplexLD> poly_from_roots(std::span<const ComplexLD> roots);

/// Mahler measure of a complex polynomial from numerically computed roots.
long double numeric_mahler(std::span<const ComplexLD> coeffs);

/// Nearest double that is >= / <= the rational.
double round_up(const Rational& q);
double round_down(const Rational& q);
/// Double bounds for sqrt of a nonnegative rational.
double sqrt_up(const Rational& q);
double sqrt_down(const Rational& q);

/// Outward-rounded log of a positive double and exp of a rational.
double log_up(double x);
double log_down(double x);
double exp_up(const Rational& q);
double exp_down(const Rational& q);

/// Exact rational value of a double.
Rational exact(double x);

} // namespace lehmer
