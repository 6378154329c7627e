#pragma once

// JSON serialization of the library reports, corpus files and the on-disk
// result cache used by the lehmer command-line tool.

#include "lehmer/adjoint.hpp"
#include "lehmer/fields.hpp"
#include "lehmer/lattice.hpp"
#include "lehmer/mahler.hpp"
#include "lehmer/salem.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lehmer::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
/// Stamped into cache entries; entries from another version are recomputed.
inline constexpr const char* kCodeVersion = "1.0.0";

/// A double rounded to 12 significant digits; null when not finite.
Json number(double x);
Json rational(const Rational& q);
Json poly(const IntPoly& p);

Json to_json(const CertifiedRoot& z);
Json to_json(const RootProfile& p, bool with_roots = true);
Json to_json(const IrreducibilityReport& r);
Json to_json(const MahlerCertificate& m, bool with_roots = false);
Json to_json(const PsrClassification& c);
Json to_json(const SalemCertificate& c);
Json to_json(const FieldSummary& f);
Json to_json(const SearchResult& r);
Json to_json(const BetaCertificate& b);
Json to_json(const ComplexSalemResult& r);
Json to_json(const GammaElement& g);
Json to_json(const DirichletWitness& w);
Json to_json(const GammaPowerReport& r);
Json to_json(const ScanReport& r);
Json to_json(const AdjointReport& r);

/// Measure against the Voutier, Dobrowolski, Schinzel and Smyth bounds.
Json bounds_report(const IntPoly& p);

/// Wraps a payload with the schema version and the command name.
Json envelope(const std::string& command, Json payload);

struct CorpusEntry {
    IntPoly poly;
    std::string label;  ///< trailing "# ..." comment, may be empty
    int line = 0;
};

/// One polynomial per line; blank lines and lines starting with '#' are skipped.
/// Throws std::invalid_argument with the line number on a malformed line.
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path);

/// File-backed cache of JSON results keyed by operation and polynomial.
class Cache {
public:
    /// Disabled when dir is empty.
    explicit Cache(std::filesystem::path dir);
    /// Directory from LEHMER_CACHE_DIR, or a disabled cache.
    static Cache from_environment();

    bool enabled() const { return !dir_.empty(); }
    std::optional<Json> get(const std::string& op, const IntPoly& p) const;
    void put(const std::string& op, const IntPoly& p, const Json& result) const;

private:
    std::filesystem::path file_for(const std::string& op, const IntPoly& p) const;
    std::filesystem::path dir_;
};

/// Two-column TSV with a header line.
void write_plot(const std::filesystem::path& path, const std::string& x_name, const std::string& y_name,
                const std::vector<std::pair<double, double>>& points);

} // namespace lehmer::report
