#include "report.hpp"

#include "lehmer/errors.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <iostream>
#include <map>

using namespace lehmer;
using report::Json;

namespace {

using Points = std::vector<std::pair<double, double>>;

struct Command {
    std::string name;
    std::function<Json(Points&)> run;
};

// Indented key: value listing for the human-readable mode.
void print_text(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::size_t index = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++index) {
        const Json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
        const bool scalar_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
        if (v.is_primitive() || scalar_array) {
            out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        } else if (v.empty()) {
            out << pad << key << ": " << v.dump() << '\n';
        } else {
            out << pad << key << ":\n";
            print_text(out, v, indent + 2);
        }
    }
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto parse = [&](std::string_view s) {
        long v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad range '" + text + "', expected A..B");
        return v;
    };
    if (dots == std::string::npos) {
        const long v = parse(text);
        return {v, v};
    }
    const long a = parse(std::string_view(text).substr(0, dots));
    const long b = parse(std::string_view(text).substr(dots + 2));
    if (a < 1 || b < a) throw std::invalid_argument("bad range '" + text + "', need 1 <= A <= B");
    return {a, b};
}

// Runs compute() unless the cache already holds the result.
Json cached(const report::Cache& cache, const std::string& op, const IntPoly& p, const std::function<Json()>& compute) {
    if (auto hit = cache.get(op, p)) return *hit;
    Json result = compute();
    cache.put(op, p, result);
    return result;
}

Json scan_corpus(const std::string& path, long m_lo, long m_hi, int n, Points& plot) {
    const auto corpus = report::read_corpus(path);
    std::vector<long> ms;
    for (long m = m_lo; m <= m_hi; ++m) ms.push_back(m);
    // counterexample_scan takes one (s, r) class at a time; group the members.
    std::vector<std::pair<std::pair<int, int>, std::vector<IntPoly>>> groups;
    Json skipped = Json::array();
    for (const auto& e : corpus) {
        const PsrClassification c = classify_Psr(e.poly);
        std::string reason = c.reason;
        if (c.member && !c.satisfies_L) reason = "no root on the unit circle";
        if (!reason.empty()) {
            skipped.push_back(Json{{"poly", report::poly(e.poly)}, {"label", e.label}, {"reason", reason}});
            continue;
        }
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == std::make_pair(c.s, c.r); });
        if (it == groups.end()) {
            groups.push_back({{c.s, c.r}, {}});
            it = std::prev(groups.end());
        }
        it->second.push_back(e.poly);
    }
    Json classes = Json::array();
    for (const auto& [sr, polys] : groups) {
        const ScanReport rep = counterexample_scan(polys, n, ms);
        for (const auto& e : rep.entries) plot.emplace_back(static_cast<double>(e.m), e.gap);
        classes.push_back(report::to_json(rep));
    }
    return Json{{"corpus", path}, {"m_range", Json::array({m_lo, m_hi})}, {"n", n},
                {"classes", std::move(classes)}, {"skipped", std::move(skipped)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified Mahler measures, Salem numbers and near-identity lattice elements"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::string plot_path;
    app.add_flag("--json", json, "Emit JSON instead of text");
    app.add_option("--emit-plot", plot_path, "Write plot-ready TSV data (search, scan)");

    const report::Cache cache = report::Cache::from_environment();
    std::string poly_text;
    Command command;
    auto poly_arg = [&](CLI::App* sub) {
        sub->add_option("poly", poly_text, "Coefficients, constant term first, e.g. \"1 -3 1\"")->required();
    };
    auto read_poly = [&]() { return IntPoly::parse(poly_text); };

    auto* mahler = app.add_subcommand("mahler", "Mahler measure with a certified enclosure");
    poly_arg(mahler);
    mahler->callback([&] {
        command = {"mahler", [&](Points&) {
                       const IntPoly p = read_poly();
                       return cached(cache, "mahler", p, [&] {
                           Json j = report::to_json(mahler_measure(p), true);
                           j["kronecker"] = kronecker_test(p);
                           return j;
                       });
                   }};
    });

    auto* classify = app.add_subcommand("classify", "Root profile, P_{s,r} membership and Salem certificate");
    poly_arg(classify);
    classify->callback([&] {
        command = {"classify", [&](Points&) {
                       const IntPoly p = read_poly();
                       return cached(cache, "classify", p, [&] {
                           Json j{{"poly", report::poly(p)}, {"roots", report::to_json(refine_roots(p))},
                                  {"psr", report::to_json(classify_Psr(p))}};
                           j["salem"] = p.degree() >= 1 && p.is_monic() ? report::to_json(certify(p)) : Json(nullptr);
                           return j;
                       });
                   }};
    });

    auto* trace = app.add_subcommand("trace-poly", "Trace polynomial and field summary of a palindromic polynomial");
    poly_arg(trace);
    trace->callback([&] {
        command = {"trace-poly", [&](Points&) {
                       const IntPoly p = read_poly();
                       return cached(cache, "trace-poly", p, [&] { return report::to_json(field_summary(p)); });
                   }};
    });

    int deg = 0;
    long height = 1;
    std::optional<int> s_filter, r_filter;
    bool palindromic = false;
    int jobs = 1;
    unsigned long long budget = 0;
    std::size_t keep = 20;
    auto* search = app.add_subcommand("search", "Bounded search for small Mahler measure");
    search->add_option("--deg", deg, "Maximum degree")->required()->check(CLI::Range(1, 40));
    search->add_option("--height", height, "Maximum coefficient height")->required()->check(CLI::Range(1L, 100L));
    auto* s_opt = search->add_option("--s", s_filter, "Keep only members of P_{s,r} with this s");
    auto* r_opt = search->add_option("--r", r_filter, "Keep only members of P_{s,r} with this r");
    s_opt->needs(r_opt);
    r_opt->needs(s_opt);
    search->add_flag("--palindromic", palindromic, "Enumerate palindromic polynomials only");
    search->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    search->add_option("--budget", budget, "Maximum number of enumerated coefficient vectors (0: unlimited)");
    search->add_option("--keep", keep, "Number of minima reported")->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    search->callback([&] {
        command = {"search", [&](Points& plot) {
                       SearchOptions o;
                       o.degree_max = deg;
                       o.height_max = height;
                       if (s_filter) o.filter = std::make_pair(*s_filter, *r_filter);
                       o.palindromic_only = palindromic;
                       o.jobs = jobs;
                       o.budget = budget;
                       o.keep = keep;
                       const SearchResult r = search_box(o);
                       for (const auto& [d, v] : r.per_degree_minimum) plot.emplace_back(d, v);
                       std::cerr << "search: " << r.enumerated << " vectors in " << r.elapsed_seconds << " s\n";
                       return report::to_json(r);
                   }};
    });

    int beta_degree = 4;
    long beta_height = 1;
    auto* beta = app.add_subcommand("beta-n", "Height-bounded certificate for beta_n");
    beta->add_option("--n", beta_degree, "Even degree bound n >= 4")->required();
    beta->add_option("--height", beta_height, "Maximum coefficient height")->required();
    beta->callback([&] {
        command = {"beta-n", [&](Points&) { return report::to_json(beta_n(beta_degree, beta_height)); }};
    });

    long m_value = 1;
    int matrix_n = 2;
    auto* construct = app.add_subcommand("construct", "Power of g = diag(a, 1/a, 1, ...) selected for U_m");
    poly_arg(construct);
    construct->add_option("--m", m_value, "Window parameter m >= 1")->required()->check(CLI::Range(1L, 64L));
    construct->add_option("--n", matrix_n, "Matrix size n >= 2")->check(CLI::Range(2, 16));
    construct->callback([&] {
        command = {"construct", [&](Points&) {
                       const GammaElement g = build_gamma(field_summary(read_poly()), matrix_n);
                       return report::to_json(gamma_power_report(g, m_value));
                   }};
    });

    std::string corpus_path, m_range = "1..8";
    auto* scan = app.add_subcommand("scan", "Check M(P) < exp(eta_{m,t}) for every corpus member and m");
    scan->add_option("corpus", corpus_path, "Corpus file, one polynomial per line")->required();
    scan->add_option("--m-range", m_range, "Range A..B of m values");
    scan->add_option("--n", matrix_n, "Matrix size n >= 2")->check(CLI::Range(2, 16));
    scan->callback([&] {
        command = {"scan", [&](Points& plot) {
                       const auto [lo, hi] = parse_range(m_range);
                       return scan_corpus(corpus_path, lo, hi, matrix_n, plot);
                   }};
    });

    auto* bounds = app.add_subcommand("bounds", "Compare M(P) with the Voutier, Dobrowolski, Schinzel and Smyth bounds");
    poly_arg(bounds);
    bounds->callback([&] {
        command = {"bounds", [&](Points&) {
                       const IntPoly p = read_poly();
                       return cached(cache, "bounds", p, [&] { return report::bounds_report(p); });
                   }};
    });

    auto* adjoint = app.add_subcommand("adjoint", "Adjoint characteristic polynomials and global integrality");
    poly_arg(adjoint);
    adjoint->add_option("--n", matrix_n, "Matrix size n >= 2")->check(CLI::Range(2, 8));
    adjoint->callback([&] {
        command = {"adjoint", [&](Points&) {
                       const IntPoly p = read_poly();
                       return cached(cache, "adjoint-n" + std::to_string(matrix_n), p,
                                     [&] { return report::to_json(global_integrality(field_summary(p), matrix_n)); });
                   }};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        Points plot;
        const Json result = report::envelope(command.name, command.run(plot));
        if (json) {
            std::cout << result.dump(2) << '\n';
        } else {
            print_text(std::cout, result.at("result"), 0);
        }
        if (!plot_path.empty()) {
            if (command.name == "search") report::write_plot(plot_path, "degree", "min_mahler", plot);
            else if (command.name == "scan") report::write_plot(plot_path, "m", "gap", plot);
            else throw std::invalid_argument("--emit-plot is supported for search and scan only");
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "certification failed: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
