#pragma once

// Exact square integer matrices: determinant and characteristic polynomial.

#include "lehmer/intpoly.hpp"

#include <vector>

namespace lehmer {

/// Row-major square matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// det(x I - A), by the Faddeev-LeVerrier recurrence over Q.
IntPoly characteristic_polynomial(const IntMatrix& a);

} // namespace lehmer
