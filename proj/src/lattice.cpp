#include "lehmer/lattice.hpp"

#include "lehmer/errors.hpp"
#include "lehmer/numeric.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lehmer {

namespace {

constexpr double kBlockTolerance = 1e-9;

double abs_error(std::complex<long double> z, long double target) {
    return static_cast<double>(std::abs(z - target));
}

// x - round(x), in [-1/2, 1/2].
Rational centered_residue(const Rational& x) {
    Integer k;
    const Rational shifted = x + Rational(1, 2);
    mpz_fdiv_q(k.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return Rational(x - k);
}

unsigned long long checked_power(long m, int t) {
    unsigned long long v = 1;
    for (int i = 0; i < t; ++i) {
        if (v > (1ULL << 40) / static_cast<unsigned long long>(m)) throw std::invalid_argument("dirichlet_c: m^t too large to scan");
        v *= static_cast<unsigned long long>(m);
    }
    return v;
}

// Outward-rounded product k * x for a double x.
double scale_up(double x, unsigned long long k) {
    return std::nextafter(x * static_cast<double>(k), HUGE_VAL);
}
double scale_down(double x, unsigned long long k) {
    return std::nextafter(x * static_cast<double>(k), -HUGE_VAL);
}

// Certified enclosure of log|root| from a root disk.
std::pair<double, double> log_modulus(const CertifiedRoot& z) {
    const double m = std::abs(z.approx);
    const double lo = std::nextafter(m - z.radius, 0.0) * (1 - 4 * DBL_EPSILON);
    const double hi = std::nextafter(m + z.radius, HUGE_VAL) * (1 + 4 * DBL_EPSILON);
    if (!(lo > 0)) throw CertificationError("log_modulus: root disk contains 0", {z.radius});
    return {log_down(lo), log_up(hi)};
}

} // namespace

GammaElement build_gamma(const FieldSummary& summary, int n) {
    if (n < 2) throw std::invalid_argument("build_gamma: n must be at least 2");
    if (summary.embeddings.size() != static_cast<std::size_t>(summary.d) || summary.d < 1)
        throw std::invalid_argument("build_gamma: summary has no embeddings");
    const IntPoly& p = summary.p;
    GammaElement g;
    g.summary = summary;
    g.n = n;
    g.cocompact = summary.s < summary.d;

    const RingElement alpha = RingElement::generator(p);
    const RingElement inverse = invert_in_ring(alpha);
    g.h_unitary = (alpha * involution(alpha)).is_one() && involution(alpha) == inverse;
    if (!g.h_unitary) throw InternalError("build_gamma: a * tau(a) != 1 for " + p.pretty());
    g.diagonal = {alpha, inverse};
    for (int k = 2; k < n; ++k) g.diagonal.push_back(RingElement::one(p));
    g.integral = std::all_of(g.diagonal.begin(), g.diagonal.end(), [](const RingElement& e) { return e.is_integral(); });

    const int r = summary.r;
    const int t = summary.t();
    for (const Embedding& e : summary.embeddings) {
        PlaceBlock b;
        b.place = e.index;
        b.kind = e.kind;
        b.noncompact = e.index <= r + t;
        b.conjugate_duplicate = e.index > r + t && e.index <= summary.s;
        const std::complex<long double> z(e.alpha.approx.real(), e.alpha.approx.imag());
        b.diagonal.assign(static_cast<std::size_t>(n), 1.0L);
        b.diagonal[0] = z;
        b.diagonal[1] = inverse.evaluate(z);
        std::complex<long double> det = 1;
        for (const auto& v : b.diagonal) det *= v;
        b.determinant_error = abs_error(det, 1);
        if (b.determinant_error > kBlockTolerance)
            throw InternalError("build_gamma: block determinant differs from 1 at place " + std::to_string(b.place));
        if (e.kind == EmbeddingClass::CircleCompact) {
            for (const auto& v : b.diagonal) b.unitarity_error = std::max(b.unitarity_error, static_cast<double>(std::abs(std::abs(v) - 1.0L)));
            if (b.unitarity_error > kBlockTolerance)
                throw InternalError("build_gamma: compact block is not unitary at place " + std::to_string(b.place));
        }
        g.blocks.push_back(std::move(b));
    }
    return g;
}

Rational eta(long m, int t) {
    if (m < 1) throw std::invalid_argument("eta: m must be positive");
    if (t < 0) throw std::invalid_argument("eta: t must be nonnegative");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(t) + 1);
    return Rational(Integer(1), 2 * den);
}

DirichletWitness dirichlet_c(const std::vector<Rational>& targets, long m) {
    if (m < 1) throw std::invalid_argument("dirichlet_c: m must be positive");
    DirichletWitness w;
    w.m = m;
    w.t = static_cast<int>(targets.size());
    w.targets = targets;
    const Rational window(1, m);
    const unsigned long long limit = checked_power(m, w.t);
    for (unsigned long long c = 1; c <= limit; ++c) {
        std::vector<Rational> residues;
        residues.reserve(targets.size());
        bool ok = true;
        for (const Rational& x : targets) {
            Rational res = centered_residue(Rational(x * Integer(static_cast<unsigned long>(c))));
            if (abs(res) > window) {
                ok = false;
                break;
            }
            residues.push_back(std::move(res));
        }
        if (ok) {
            w.c = c;
            w.residues = std::move(residues);
            return w;
        }
    }
    throw InternalError("dirichlet_c: no c <= m^t satisfies the window; pigeonhole violated");
}

DirichletWitness dirichlet_c(const std::vector<double>& targets, long m) {
    std::vector<Rational> exact_targets;
    for (double x : targets) {
        if (!std::isfinite(x)) throw std::invalid_argument("dirichlet_c: targets must be finite");
        exact_targets.push_back(exact(x));
    }
    return dirichlet_c(exact_targets, m);
}

GammaPowerReport gamma_power_report(const GammaElement& element, long m) {
    if (m < 1) throw std::invalid_argument("gamma_power_report: m must be positive");
    const FieldSummary& f = element.summary;
    GammaPowerReport rep;
    rep.element = element;
    rep.m = m;
    rep.t = f.t();
    const int r = f.r;

    std::vector<double> targets;
    for (int i = 1; i <= rep.t; ++i) {
        const auto z = f.embeddings[static_cast<std::size_t>(r + i - 1)].alpha.approx;
        double x = std::arg(z * z) / (2 * std::numbers::pi);
        if (x < 0) x += 1;
        if (x >= 1) x = 0;
        targets.push_back(x);
    }
    rep.witness = dirichlet_c(targets, m);
    rep.eta = eta(m, rep.t);
    rep.power = 2 * rep.witness.c;

    for (const RingElement& e : element.diagonal) rep.symbolic_power.push_back(e.pow(rep.power));
    if (!(rep.symbolic_power[0] * rep.symbolic_power[1]).is_one())
        throw InternalError("gamma_power_report: symbolic determinant of the power is not 1");

    const Rational window(1, m);
    const double log_window = round_down(window);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    rep.all_arguments_in_window = true;
    rep.all_moduli_in_window = true;
    for (const PlaceBlock& b : element.blocks) {
        if (!b.noncompact) continue;
        const Embedding& e = f.embeddings[static_cast<std::size_t>(b.place - 1)];
        PlaceBlock pb = b;
        const std::complex<long double> z = b.diagonal[0];
        const long double k = static_cast<long double>(rep.power);
        const std::complex<long double> zp = std::polar(std::pow(std::abs(z), k), k * std::arg(z));
        pb.diagonal[0] = zp;
        pb.diagonal[1] = 1.0L / zp;
        pb.determinant_error = abs_error(pb.diagonal[0] * pb.diagonal[1], 1);
        rep.powered_blocks.push_back(pb);

        // Residue of c * arg(a^2) / 2pi; the power's argument is 2pi times it.
        Rational residue = 0;
        if (b.kind == EmbeddingClass::ComplexSplit) residue = rep.witness.residues[static_cast<std::size_t>(b.place - r - 1)];
        const bool arg_ok = abs(residue) <= window;
        const auto [llo, lhi] = log_modulus(e.alpha);
        const double lo = scale_down(llo, rep.power), hi = scale_up(lhi, rep.power);
        for (int pos = 0; pos < element.n; ++pos) {
            EigenvalueReport ev;
            ev.place = b.place;
            ev.position = pos;
            ev.value = pb.diagonal[static_cast<std::size_t>(pos)];
            const double sign = pos == 0 ? 1 : pos == 1 ? -1 : 0;
            if (pos < 2) {
                ev.log_modulus_lower = sign > 0 ? lo : -hi;
                ev.log_modulus_upper = sign > 0 ? hi : -lo;
                ev.argument = static_cast<double>(sign * two_pi * residue.get_d());
                ev.argument_in_window = arg_ok;
            } else {
                ev.argument_in_window = true;
            }
            ev.modulus_in_window = ev.log_modulus_lower >= -log_window && ev.log_modulus_upper <= log_window;
            rep.all_arguments_in_window = rep.all_arguments_in_window && ev.argument_in_window;
            rep.all_moduli_in_window = rep.all_moduli_in_window && ev.modulus_in_window;
            if (ev.log_modulus_lower > 0) rep.infinite_order = true;
            rep.distance_to_identity = std::max(rep.distance_to_identity, abs_error(ev.value, 1));
            rep.eigenvalues.push_back(ev);
        }
    }
    rep.all_in_U_m = rep.all_arguments_in_window && rep.all_moduli_in_window;
    if (f.s >= 1 && !rep.infinite_order) throw InternalError("gamma_power_report: no eigenvalue of modulus > 1 although s >= 1");

    rep.measure = mahler_measure(f.p);
    rep.mahler_hypothesis_met = !rep.measure.is_one_exact && rep.measure.upper < exp_down(rep.eta);
    rep.hypothesis_gap = rep.measure.value / std::exp(rep.eta.get_d());
    if (rep.mahler_hypothesis_met) {
        // |a_i| <= M(p) < exp(eta), so |a_i|^(2 m^t) < exp(2 m^t eta) = exp(1/m).
        const unsigned long long bound_power = 2 * checked_power(m, rep.t);
        bool chain = true;
        for (const EigenvalueReport& ev : rep.eigenvalues) {
            if (ev.position != 0) continue;
            const auto [llo, lhi] = log_modulus(f.embeddings[static_cast<std::size_t>(ev.place - 1)].alpha);
            chain = chain && scale_down(llo, rep.power) > 0 && rep.power <= bound_power &&
                    scale_up(lhi, bound_power) < log_window;
        }
        rep.chain_holds = chain;
        if (!chain) throw InternalError("gamma_power_report: modulus chain fails although M(p) < exp(eta)");
        if (!rep.all_moduli_in_window) throw InternalError("gamma_power_report: modulus outside U_m although M(p) < exp(eta)");
    }
    return rep;
}

ScanReport counterexample_scan(const std::vector<IntPoly>& polys, int n, const std::vector<long>& ms) {
    if (n < 2) throw std::invalid_argument("counterexample_scan: n must be at least 2");
    for (long m : ms)
        if (m < 1) throw std::invalid_argument("counterexample_scan: m must be positive");
    ScanReport out;
    out.n = n;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const IntPoly& p = polys[i];
        const PsrClassification cls = classify_Psr(p);
        if (!cls.member) throw std::invalid_argument("counterexample_scan: " + p.pretty() + " is not in P_{s,r} (" + cls.reason + ")");
        if (!cls.satisfies_L) throw std::invalid_argument("counterexample_scan: " + p.pretty() + " has no root on the unit circle");
        if (i == 0) {
            out.s = cls.s;
            out.r = cls.r;
        } else if (cls.s != out.s || cls.r != out.r) {
            throw std::invalid_argument("counterexample_scan: mixed (s, r) classes");
        }
    }
    for (const IntPoly& p : polys) {
        const GammaElement g = build_gamma(field_summary(p), n);
        const MahlerCertificate measure = mahler_measure(p);
        for (long m : ms) {
            ScanEntry e;
            e.poly = p;
            e.m = m;
            e.eta = eta(m, g.summary.t());
            e.measure = measure;
            e.hypothesis_met = !measure.is_one_exact && measure.upper < exp_down(e.eta);
            e.gap = measure.value / std::exp(e.eta.get_d());
            if (e.hypothesis_met) e.report = gamma_power_report(g, m);
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace lehmer
