#pragma once

// Layered irreducibility test for monic integer polynomials.

#include "lehmer/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lehmer {

enum class Irreducibility { Irreducible, Reducible, Unknown };

const char* to_string(Irreducibility v);

struct IrreducibilityReport {
    Irreducibility verdict = Irreducibility::Unknown;
    /// A proper monic factor when verdict == Reducible.
    std::optional<IntPoly> witness;
    /// Which layer decided: "degree", "repeated factor", "rational root",
    /// "cyclotomic", "modular degrees", "reconstruction" or "undecided".
    std::string method;

    bool irreducible() const { return verdict == Irreducibility::Irreducible; }
};

struct IrreducibilityOptions {
    /// Largest degree for which factors are reconstructed from certified roots.
    int exhaustive_cap = 24;
    /// Number of primes (with squarefree reduction) used for degree patterns.
    int prime_count = 10;
};

/// n-th cyclotomic polynomial (cached).
IntPoly cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/**
 * Decides irreducibility over Q of a monic p of degree >= 1.
 *
 * Layers, in order: repeated factors (gcd with p'), integer roots,
 * cyclotomic factors Phi_n with phi(n) < deg p, degree patterns of the
 * factorizations modulo small primes, and for deg p <= exhaustive_cap a
 * search over conjugation-closed subsets of certified roots whose candidate
 * factors are confirmed by exact division. Unknown only when every layer is
 * inconclusive.
 */
IrreducibilityReport irreducibility_report(const IntPoly& p, const IrreducibilityOptions& options = {});

/// Degrees of the irreducible factors of p modulo prime q (p monic and
/// squarefree mod q), by distinct-degree factorization. Sorted ascending.
std::vector<int> modular_factor_degrees(const IntPoly& p, long q);

} // namespace lehmer
