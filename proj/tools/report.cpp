#include "report.hpp"

#include "lehmer/irreducibility.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lehmer::report {

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json rational(const Rational& q) {
    return Json{{"exact", q.get_str()}, {"value", number(q.get_d())}};
}

Json poly(const IntPoly& p) {
    return Json{{"coeffs", p.to_string()}, {"pretty", p.pretty()}, {"degree", p.degree()}};
}

namespace {

Json complex_value(std::complex<long double> z) {
    return Json{{"re", number(static_cast<double>(z.real()))}, {"im", number(static_cast<double>(z.imag()))}};
}

Json complex_value(std::complex<double> z) {
    return Json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

Json optional_bool(const std::optional<bool>& b) {
    return b ? Json(*b) : Json(nullptr);
}

} // namespace

Json to_json(const CertifiedRoot& z) {
    return Json{{"value", complex_value(z.approx)},
                {"radius", number(z.radius)},
                {"multiplicity", z.multiplicity},
                {"location", to_string(z.location)},
                {"realness", to_string(z.realness)}};
}

Json to_json(const RootProfile& p, bool with_roots) {
    Json j{{"degree", p.degree}, {"s", p.s}, {"r", p.r}, {"t", p.t()},
           {"on_circle", p.on_circle}, {"inside", p.inside}, {"squarefree", p.squarefree}};
    if (with_roots) {
        Json roots = Json::array();
        for (const auto& z : p.roots) roots.push_back(to_json(z));
        j["roots"] = std::move(roots);
    }
    return j;
}

Json to_json(const IrreducibilityReport& r) {
    return Json{{"verdict", to_string(r.verdict)},
                {"method", r.method},
                {"witness", r.witness ? poly(*r.witness) : Json(nullptr)}};
}

Json to_json(const MahlerCertificate& m, bool with_roots) {
    Json j{{"poly", poly(m.poly)},
           {"value", number(m.value)},
           {"error_radius", number(m.error_radius)},
           {"lower", number(m.lower)},
           {"upper", number(m.upper)},
           {"is_one_exact", m.is_one_exact}};
    j["roots"] = to_json(m.roots, with_roots);
    return j;
}

Json to_json(const PsrClassification& c) {
    return Json{{"member", c.member}, {"reason", c.reason}, {"s", c.s}, {"r", c.r},
                {"satisfies_L", c.satisfies_L}, {"palindromic", c.palindromic},
                {"irreducibility", to_json(c.irreducibility)}};
}

Json to_json(const SalemCertificate& c) {
    return Json{{"kind", to_string(c.kind)},
                {"salem_value", number(c.salem_value)},
                {"salem_root", complex_value(c.salem_root)},
                {"palindromic", c.palindromic},
                {"irreducibility_unknown", c.irreducibility_unknown},
                {"irreducibility", to_json(c.irreducibility)}};
}

Json to_json(const FieldSummary& f) {
    Json emb = Json::array();
    for (const auto& e : f.embeddings) {
        emb.push_back(Json{{"index", e.index},
                           {"kind", to_string(e.kind)},
                           {"alpha", to_json(e.alpha)},
                           {"trace", complex_value(e.trace)},
                           {"trace_radius", number(e.trace_radius)}});
    }
    return Json{{"poly", poly(f.p)},
                {"trace_poly", poly(f.trace_poly)},
                {"d", f.d}, {"s", f.s}, {"r", f.r}, {"t", f.t()},
                {"signature_K", Json::array({f.signature_K.first, f.signature_K.second})},
                {"signature_formula", Json::array({f.signature_formula.first, f.signature_formula.second})},
                {"trace_identity", f.trace_identity},
                {"irreducibility", to_string(f.irreducibility)},
                {"trace_irreducibility", to_string(f.trace_irreducibility)},
                {"satisfies_L", f.satisfies_L},
                {"embeddings", std::move(emb)}};
}

Json to_json(const SearchResult& r) {
    const auto& o = r.options;
    Json options{{"degree_min", o.degree_min}, {"degree_max", o.degree_max}, {"height_max", o.height_max},
                 {"filter", o.filter ? Json::array({o.filter->first, o.filter->second}) : Json(nullptr)},
                 {"require_circle_root", o.require_circle_root}, {"palindromic_only", o.palindromic_only},
                 {"budget", o.budget}, {"keep", o.keep}};
    Json minima = Json::array();
    for (const auto& e : r.minima) {
        minima.push_back(Json{{"poly", poly(e.poly)}, {"measure", number(e.measure.value)},
                              {"error_radius", number(e.measure.error_radius)}, {"s", e.s}, {"r", e.r}});
    }
    Json per_degree = Json::array();
    for (const auto& [deg, v] : r.per_degree_minimum) per_degree.push_back(Json{{"degree", deg}, {"measure", number(v)}});
    // Elapsed time is left out so that identical searches serialize identically.
    return Json{{"options", std::move(options)}, {"minima", std::move(minima)},
                {"per_degree_minimum", std::move(per_degree)}, {"enumerated", r.enumerated},
                {"canonical", r.canonical}, {"measure_one", r.measure_one}, {"complete", r.complete}};
}

Json to_json(const BetaCertificate& b) {
    return Json{{"n", b.n}, {"height", b.height}, {"poly", poly(b.poly)},
                {"salem_value", number(b.salem_value)}, {"log_value", number(b.log_value)},
                {"log_lower", number(b.log_lower)}, {"log_upper", number(b.log_upper)}, {"label", b.label}};
}

Json to_json(const ComplexSalemResult& r) {
    return Json{{"poly", poly(r.poly)}, {"certificate", to_json(r.certificate)},
                {"measure", to_json(r.measure)}, {"source_measure", to_json(r.source_measure)}};
}

namespace {

Json block_json(const PlaceBlock& b) {
    Json diag = Json::array();
    for (const auto& z : b.diagonal) diag.push_back(complex_value(z));
    return Json{{"place", b.place}, {"kind", to_string(b.kind)}, {"noncompact", b.noncompact},
                {"conjugate_duplicate", b.conjugate_duplicate}, {"diagonal", std::move(diag)},
                {"determinant_error", number(b.determinant_error)}, {"unitarity_error", number(b.unitarity_error)}};
}

Json ring_json(const RingElement& e) {
    Json coords = Json::array();
    for (const auto& c : e.coords()) coords.push_back(c.get_str());
    return coords;
}

} // namespace

Json to_json(const GammaElement& g) {
    Json diag = Json::array();
    for (const auto& e : g.diagonal) diag.push_back(ring_json(e));
    Json blocks = Json::array();
    for (const auto& b : g.blocks) blocks.push_back(block_json(b));
    return Json{{"poly", poly(g.summary.p)}, {"n", g.n}, {"d", g.summary.d}, {"s", g.summary.s},
                {"r", g.summary.r}, {"t", g.summary.t()}, {"diagonal", std::move(diag)},
                {"h_unitary", g.h_unitary}, {"integral", g.integral}, {"cocompact", g.cocompact},
                {"blocks", std::move(blocks)}};
}

Json to_json(const DirichletWitness& w) {
    Json targets = Json::array(), residues = Json::array();
    for (const auto& x : w.targets) targets.push_back(rational(x));
    for (const auto& x : w.residues) residues.push_back(rational(x));
    return Json{{"m", w.m}, {"t", w.t}, {"c", w.c}, {"targets", std::move(targets)}, {"residues", std::move(residues)}};
}

Json to_json(const GammaPowerReport& r) {
    Json power = Json::array();
    for (const auto& e : r.symbolic_power) power.push_back(ring_json(e));
    Json blocks = Json::array();
    for (const auto& b : r.powered_blocks) blocks.push_back(block_json(b));
    Json eig = Json::array();
    for (const auto& ev : r.eigenvalues) {
        eig.push_back(Json{{"place", ev.place}, {"position", ev.position}, {"value", complex_value(ev.value)},
                           {"log_modulus_lower", number(ev.log_modulus_lower)},
                           {"log_modulus_upper", number(ev.log_modulus_upper)},
                           {"argument", number(ev.argument)},
                           {"modulus_in_window", ev.modulus_in_window},
                           {"argument_in_window", ev.argument_in_window}});
    }
    return Json{{"element", to_json(r.element)}, {"m", r.m}, {"t", r.t}, {"witness", to_json(r.witness)},
                {"eta", rational(r.eta)}, {"power", r.power}, {"symbolic_power", std::move(power)},
                {"powered_blocks", std::move(blocks)}, {"eigenvalues", std::move(eig)},
                {"all_arguments_in_window", r.all_arguments_in_window},
                {"all_moduli_in_window", r.all_moduli_in_window}, {"all_in_U_m", r.all_in_U_m},
                {"distance_to_identity", number(r.distance_to_identity)},
                {"measure", to_json(r.measure)}, {"mahler_hypothesis_met", r.mahler_hypothesis_met},
                {"hypothesis_gap", number(r.hypothesis_gap)}, {"chain_holds", optional_bool(r.chain_holds)},
                {"infinite_order", r.infinite_order}};
}

Json to_json(const ScanReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"poly", poly(e.poly)}, {"m", e.m}, {"eta", rational(e.eta)},
                               {"measure", number(e.measure.value)}, {"measure_upper", number(e.measure.upper)},
                               {"hypothesis_met", e.hypothesis_met}, {"gap", number(e.gap)},
                               {"report", e.report ? to_json(*e.report) : Json(nullptr)}});
    }
    return Json{{"s", r.s}, {"r", r.r}, {"n", r.n}, {"entries", std::move(entries)}};
}

Json to_json(const AdjointReport& r) {
    Json places = Json::array();
    for (const auto& pa : r.places) {
        Json coeffs = Json::array();
        for (const auto& c : pa.charpoly.coeffs) coeffs.push_back(complex_value(c));
        places.push_back(Json{{"place", pa.place}, {"noncompact", pa.noncompact}, {"f_value", number(pa.f_value)},
                              {"charpoly", std::move(coeffs)}, {"error_radius", number(pa.charpoly.error_radius)}});
    }
    return Json{{"n", r.n}, {"places", std::move(places)}, {"global_poly", poly(r.global_poly)},
                {"max_rounding_error", number(r.max_rounding_error)}, {"tolerance", number(r.tolerance)},
                {"escalated", r.escalated}, {"f_total", number(r.f_total)},
                {"global_measure", to_json(r.global_measure)}, {"global_s", r.global_s},
                {"s_bound", r.s_bound}, {"s_bound_ok", r.s_bound_ok}, {"torsion_flag", r.torsion_flag},
                {"note", r.note}};
}

Json bounds_report(const IntPoly& p) {
    const MahlerCertificate m = mahler_measure(p);
    Json j{{"poly", poly(p)}, {"measure", number(m.value)}, {"lower", number(m.lower)}, {"upper", number(m.upper)}};
    const int d = p.degree();
    const bool monic = d >= 1 && p.is_monic();
    const IrreducibilityReport irr = monic ? irreducibility_report(p) : IrreducibilityReport{};
    const bool irreducible = irr.irreducible();
    const bool cyclotomic = irreducible && kronecker_test(p);
    j["irreducibility"] = monic ? to_json(irr) : Json(nullptr);
    j["cyclotomic"] = cyclotomic;

    auto height_bound = [&](const char* name, double (*bound)(int)) {
        const bool applies = irreducible && !cyclotomic && d >= 2;
        Json b{{"applies", applies}, {"bound", d >= 2 ? number(bound(d)) : Json(nullptr)}};
        b["holds"] = applies ? Json(m.lower > bound(d)) : Json(nullptr);
        j[name] = std::move(b);
    };
    height_bound("voutier", voutier_bound);
    height_bound("dobrowolski", dobrowolski_bound);

    const bool schinzel = monic && irreducible && schinzel_applies(p);
    j["schinzel"] = Json{{"applies", schinzel},
                         {"bound", d >= 1 ? number(schinzel_bound(d)) : Json(nullptr)},
                         {"holds", schinzel ? Json(m.upper >= schinzel_bound(d)) : Json(nullptr)}};

    const double threshold = smyth_threshold();
    const bool below = irreducible && !m.is_one_exact && m.upper < threshold;
    j["smyth"] = Json{{"threshold", number(threshold)},
                      {"below_threshold", below},
                      {"palindromic", is_palindromic(p)},
                      {"holds", below ? Json(is_palindromic(p)) : Json(nullptr)}};
    return j;
}

Json envelope(const std::string& command, Json payload) {
    return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"result", std::move(payload)}};
}

std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file " + path.string());
    std::vector<CorpusEntry> out;
    std::string line;
    int number_of_line = 0;
    while (std::getline(in, line)) {
        ++number_of_line;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        CorpusEntry e;
        e.line = number_of_line;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const auto label_start = line.find_first_not_of(" \t", hash + 1);
            if (label_start != std::string::npos) e.label = line.substr(label_start);
            while (!e.label.empty() && (e.label.back() == '\r' || e.label.back() == ' ')) e.label.pop_back();
        }
        try {
            e.poly = IntPoly::parse(line.substr(0, hash));
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(number_of_line) + ": " + err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_environment() {
    const char* dir = std::getenv("LEHMER_CACHE_DIR");
    return Cache(dir && *dir ? std::filesystem::path(dir) : std::filesystem::path{});
}

std::filesystem::path Cache::file_for(const std::string& op, const IntPoly& p) const {
    std::ostringstream name;
    name << op << '-' << std::hex << std::hash<std::string>{}(p.to_string()) << ".json";
    return dir_ / name.str();
}

std::optional<Json> Cache::get(const std::string& op, const IntPoly& p) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_for(op, p));
    if (!in) return std::nullopt;
    const Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("version", "") != kCodeVersion || entry.value("op", "") != op || entry.value("poly", "") != p.to_string())
        return std::nullopt;
    return entry.at("result");
}

void Cache::put(const std::string& op, const IntPoly& p, const Json& result) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    const auto target = file_for(op, p);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << Json{{"version", kCodeVersion}, {"op", op}, {"poly", p.to_string()}, {"result", result}}.dump();
    }
    std::filesystem::rename(tmp, target);
}

void write_plot(const std::filesystem::path& path, const std::string& x_name, const std::string& y_name,
                const std::vector<std::pair<double, double>>& points) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write plot file " + path.string());
    out << x_name << '\t' << y_name << '\n';
    char buf[64];
    for (const auto& [x, y] : points) {
        std::snprintf(buf, sizeof buf, "%.12g\t%.12g\n", x, y);
        out << buf;
    }
}

} // namespace lehmer::report
