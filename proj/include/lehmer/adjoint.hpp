#pragma once

// Adjoint characteristic polynomials of the blocks of g, their product over
// all places, and the function f(g) = M(P_g).

#include "lehmer/lattice.hpp"
#include "lehmer/mahler.hpp"

#include <complex>
#include <string>
#include <vector>

namespace lehmer {

using ComplexMatrix = std::vector<std::vector<std::complex<long double>>>;

struct ComplexPoly {
    /// Constant term first.
    std::vector<std::complex<long double>> coeffs;
    /// Estimated coefficientwise error bound (not certified).
    double error_radius = 0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Gauss-Jordan inverse with partial pivoting; throws std::invalid_argument if singular.
ComplexMatrix inverse(const ComplexMatrix& g);

/**
 * Characteristic polynomial of X -> g X g^-1 on trace-zero n x n matrices,
 * in the basis E_ij (i != j), H_k = E_kk - E_{k+1,k+1}. Computed by
 * Hessenberg reduction in long double. Throws std::invalid_argument for a
 * singular or non-square g.
 */
ComplexPoly adjoint_charpoly(const ComplexMatrix& g);

/// Product of max(1, |z|) over numerically computed roots.
double numeric_measure(const ComplexPoly& p);

struct PlaceAdjoint {
    int place = 0;
    bool noncompact = false;
    ComplexPoly charpoly;
    double f_value = 1;
};

struct AdjointReport {
    int n = 2;
    std::vector<PlaceAdjoint> places;
    /// Product over all places with coefficients rounded to integers.
    IntPoly global_poly;
    double max_rounding_error = 0;
    double tolerance = 0;
    /// The ratio spectrum was used after the Hessenberg product missed the tolerance.
    bool escalated = false;
    /// Product of f over the noncompact places.
    double f_total = 1;
    MahlerCertificate global_measure;
    int global_s = 0;
    int s_bound = 0;
    bool s_bound_ok = false;
    bool torsion_flag = false;
    std::string note;
};

/// Integrality check for an arbitrary family of per-place blocks; noncompact
/// flags select the places entering f_total.
AdjointReport adjoint_product(const std::vector<ComplexMatrix>& blocks, const std::vector<bool>& noncompact, int s_bound);

/// Adjoint product over all d places of g = diag(a, 1/a, 1, ..., 1).
/// Coefficients off by more than the tolerance are an InternalError.
AdjointReport global_integrality(const FieldSummary& summary, int n = 2);
AdjointReport global_integrality(const GammaElement& element);

/// True iff the polynomial is x^k times a product of cyclotomic polynomials.
bool torsion_test(const IntPoly& global_poly);

} // namespace lehmer
