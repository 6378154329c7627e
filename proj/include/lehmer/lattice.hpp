#pragma once

/**
 * @file lattice.hpp
 * @brief The element g = diag(a, 1/a, 1, ..., 1) of SU_h and its powers.
 *
 * Places follow the embedding order of FieldSummary: sigma_1..sigma_r real,
 * sigma_{r+1}..sigma_{r+t} complex (one from each conjugate pair; the places
 * sigma_{r+t+1}..sigma_s are their conjugates), sigma_{s+1}..sigma_d compact.
 * The noncompact factor is the product over sigma_1..sigma_{r+t}.
 */

#include "lehmer/fields.hpp"
#include "lehmer/mahler.hpp"
#include "lehmer/ring.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace lehmer {

struct PlaceBlock {
    int place = 0;  ///< embedding index i (1-based)
    EmbeddingClass kind = EmbeddingClass::RealSplit;
    bool noncompact = false;
    /// A complex place sigma_i with r + t < i <= s; same place as sigma_{i-t}.
    bool conjugate_duplicate = false;
    /// Diagonal of the n x n block.
    std::vector<std::complex<long double>> diagonal;
    double determinant_error = 0;
    /// max | |z| - 1 | over the diagonal (compact places).
    double unitarity_error = 0;
};

struct GammaElement {
    FieldSummary summary;
    int n = 2;
    /// Exact diagonal entries a, 1/a, 1, ..., 1 in Z[a].
    std::vector<RingElement> diagonal;
    /// a * tau(a) == 1 in Z[a] (tau: a -> 1/a).
    bool h_unitary = false;
    /// All diagonal entries have integer coordinates.
    bool integral = false;
    /// Some root lies on the unit circle (s < d).
    bool cocompact = false;
    std::vector<PlaceBlock> blocks;
};

/// Builds g for n >= 2; throws InternalError if a numeric determinant is off by more than 1e-9.
GammaElement build_gamma(const FieldSummary& summary, int n = 2);

struct DirichletWitness {
    long m = 1;
    int t = 0;
    unsigned long long c = 1;
    std::vector<Rational> targets;
    /// c * target reduced into [-1/2, 1/2].
    std::vector<Rational> residues;
};

/// Smallest 0 < c <= m^t with every c * x_i within 1/m of an integer
/// (closed window); c = 1 when t = 0. Exhausting the range is an InternalError.
DirichletWitness dirichlet_c(const std::vector<Rational>& targets, long m);
/// Same, with each double converted exactly.
DirichletWitness dirichlet_c(const std::vector<double>& targets, long m);

/// 1 / (2 m^(t+1)).
Rational eta(long m, int t);

struct EigenvalueReport {
    int place = 0;
    int position = 0;  ///< diagonal position in the block
    std::complex<long double> value;
    /// Certified enclosure of log|value|.
    double log_modulus_lower = 0;
    double log_modulus_upper = 0;
    /// Argument in radians, from the exact Dirichlet residue.
    double argument = 0;
    bool modulus_in_window = false;
    bool argument_in_window = false;
};

struct GammaPowerReport {
    GammaElement element;
    long m = 1;
    int t = 0;
    DirichletWitness witness;
    Rational eta;
    unsigned long long power = 2;  ///< 2c
    /// Exact diagonal of g^(2c).
    std::vector<RingElement> symbolic_power;
    std::vector<PlaceBlock> powered_blocks;  ///< noncompact places only
    std::vector<EigenvalueReport> eigenvalues;
    bool all_arguments_in_window = false;
    bool all_moduli_in_window = false;
    bool all_in_U_m = false;
    /// Entrywise max |entry - identity| over the noncompact blocks.
    double distance_to_identity = 0;
    MahlerCertificate measure;
    /// Certified 1 < M(p) < exp(eta).
    bool mahler_hypothesis_met = false;
    /// M(p) / exp(eta).
    double hypothesis_gap = 0;
    /// 1 < |a_i^(2c)| <= |a_i|^(2 m^t) < exp(1/m) for every noncompact place;
    /// only evaluated when the hypothesis holds.
    std::optional<bool> chain_holds;
    /// Some noncompact eigenvalue has modulus > 1.
    bool infinite_order = false;
};

GammaPowerReport gamma_power_report(const GammaElement& element, long m);

struct ScanEntry {
    IntPoly poly;
    long m = 1;
    Rational eta;
    MahlerCertificate measure;
    bool hypothesis_met = false;
    double gap = 0;
    /// Present when the hypothesis holds.
    std::optional<GammaPowerReport> report;
};

struct ScanReport {
    int s = 0;
    int r = 0;
    int n = 2;
    std::vector<ScanEntry> entries;
};

/// For every polynomial (all in one P_{s,r} and with a root on the circle)
/// and every m, checks 1 < M(P) < exp(eta_{m,t}); when it holds the full report
/// is attached. Entries are in input order, polynomials outermost.
ScanReport counterexample_scan(const std::vector<IntPoly>& polys, int n, const std::vector<long>& ms);

} // namespace lehmer
