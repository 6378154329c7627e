#include "lehmer/salem.hpp"

#include "lehmer/errors.hpp"
#include "lehmer/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lehmer {

const char* to_string(SalemKind k) {
    switch (k) {
    case SalemKind::Salem: return "salem";
    case SalemKind::ComplexSalem: return "complex-salem";
    case SalemKind::Neither: return "neither";
    }
    return "?";
}

SalemCertificate certify(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic()) throw std::invalid_argument("certify: polynomial must be monic of degree >= 1");
    SalemCertificate c;
    c.poly = p;
    c.roots = refine_roots(p);
    c.palindromic = is_palindromic(p);
    c.irreducibility = irreducibility_report(p);
    const auto& rp = c.roots;
    const bool salem_shape = rp.s == 1 && rp.r == 1 && rp.on_circle >= 1 && c.palindromic;
    const bool complex_shape = rp.s == 2 && rp.r == 0 && rp.on_circle >= 1;
    if (!salem_shape && !complex_shape) return c;
    switch (c.irreducibility.verdict) {
    case Irreducibility::Irreducible:
        c.kind = salem_shape ? SalemKind::Salem : SalemKind::ComplexSalem;
        c.salem_root = rp.roots[0].approx;
        c.salem_value = std::abs(c.salem_root);
        break;
    case Irreducibility::Unknown: c.irreducibility_unknown = true; break;
    case Irreducibility::Reducible: break;
    }
    return c;
}

ComplexSalemResult complex_salem_from_salem(const IntPoly& p) {
    const SalemCertificate source = certify(p);
    if (source.kind != SalemKind::Salem)
        throw std::invalid_argument("complex_salem_from_salem: " + p.pretty() + " is not a Salem polynomial");
    ComplexSalemResult out;
    out.poly = compose_neg_x_squared(p);
    out.certificate = certify(out.poly);
    out.source_measure = mahler_measure(p);
    out.measure = mahler_measure(out.poly);
    if (out.certificate.kind != SalemKind::ComplexSalem && !out.certificate.irreducibility_unknown)
        throw InternalError("complex_salem_from_salem: p(-x^2) is not complex Salem for " + p.pretty());
    if (out.measure.upper < out.source_measure.lower || out.source_measure.upper < out.measure.lower)
        throw InternalError("complex_salem_from_salem: Mahler measures differ for " + p.pretty());
    return out;
}

IntPoly canonical_form(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("canonical_form: zero polynomial");
    const IntPoly neg = p.negated_argument();
    IntPoly best = p.with_positive_leading();
    for (const IntPoly& v : {p.reversed(), neg, neg.reversed()}) {
        if (v.degree() != p.degree() || abs(v.leading()) != abs(p.leading())) continue;
        IntPoly w = v.with_positive_leading();
        if (lex_less(w, best)) best = std::move(w);
    }
    return best;
}

namespace {

bool entry_less(const SearchEntry& a, const SearchEntry& b) {
    if (a.measure.value != b.measure.value) return a.measure.value < b.measure.value;
    return lex_less(a.poly, b.poly);
}

// One run of coefficient vectors sharing a degree.
struct Segment {
    int degree;
    unsigned long long offset;
    unsigned long long count;
};

struct Partial {
    std::vector<SearchEntry> minima;
    std::map<int, double> per_degree;
    unsigned long long canonical = 0;
    unsigned long long measure_one = 0;
};

class BoxSearch {
public:
    explicit BoxSearch(const SearchOptions& o) : opt_(o) {
        if (o.degree_min < 1 || o.degree_max < o.degree_min) throw std::invalid_argument("search: need 1 <= degree_min <= degree_max");
        if (o.height_max < 1) throw std::invalid_argument("search: height must be at least 1");
        if (o.jobs < 1) throw std::invalid_argument("search: jobs must be at least 1");
        base_ = 2 * static_cast<unsigned long long>(o.height_max) + 1;
        long double total = 0;
        for (int n = o.degree_min; n <= o.degree_max; ++n) {
            if (o.palindromic_only && n % 2 != 0) continue;
            const int free = o.palindromic_only ? n / 2 : n;
            const long double count = std::pow(static_cast<long double>(base_), free);
            if (total + count > 1e18L) throw std::invalid_argument("search: box too large");
            segments_.push_back({n, static_cast<unsigned long long>(total), static_cast<unsigned long long>(count)});
            total += count;
        }
        total_ = static_cast<unsigned long long>(total);
    }

    unsigned long long total() const { return total_; }

    void process(unsigned long long index, Partial& out) const {
        auto seg = std::upper_bound(segments_.begin(), segments_.end(), index,
                                    [](unsigned long long i, const Segment& s) { return i < s.offset; });
        --seg;
        unsigned long long local = index - seg->offset;
        const int n = seg->degree;
        std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
        c[static_cast<std::size_t>(n)] = 1;
        const long h = opt_.height_max;
        if (opt_.palindromic_only) {
            c[0] = 1;
            for (int k = 1; k <= n / 2; ++k) {
                const long v = static_cast<long>(local % base_) - h;
                local /= base_;
                c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(n - k)] = v;
            }
        } else {
            for (int k = 0; k < n; ++k) {
                c[static_cast<std::size_t>(k)] = static_cast<long>(local % base_) - h;
                local /= base_;
            }
            if (sgn(c[0]) == 0) return;
        }
        IntPoly p(std::move(c));
        if (!(canonical_form(p) == p)) return;
        ++out.canonical;
        if (kronecker_test(p)) {
            ++out.measure_one;
            return;
        }
        int s = -1, r = -1;
        if (opt_.filter || opt_.require_circle_root) {
            RootProfile counts = root_counts(p);
            s = counts.s;
            r = counts.r;
            if (opt_.require_circle_root && counts.on_circle == 0) return;
            if (opt_.filter) {
                if (s != opt_.filter->first || r != opt_.filter->second) return;
                if (!is_palindromic(p)) return;
                if (!irreducibility_report(p).irreducible()) return;
            }
        }
        SearchEntry e;
        e.measure = mahler_measure(p);
        e.s = e.measure.roots.s;
        e.r = e.measure.roots.r;
        e.poly = std::move(p);
        auto [it, inserted] = out.per_degree.emplace(n, e.measure.value);
        if (!inserted) it->second = std::min(it->second, e.measure.value);
        insert(out.minima, std::move(e));
    }

    void insert(std::vector<SearchEntry>& minima, SearchEntry e) const {
        if (minima.size() >= opt_.keep && !entry_less(e, minima.back())) return;
        minima.insert(std::upper_bound(minima.begin(), minima.end(), e, entry_less), std::move(e));
        if (minima.size() > opt_.keep) minima.pop_back();
    }

private:
    SearchOptions opt_;
    unsigned long long base_ = 3;
    unsigned long long total_ = 0;
    std::vector<Segment> segments_;
};

} // namespace

SearchResult search_box(const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    BoxSearch box(options);
    SearchResult result;
    result.options = options;
    const unsigned long long limit = options.budget == 0 ? box.total() : std::min(box.total(), options.budget);
    result.complete = limit == box.total();
    result.enumerated = limit;

    constexpr unsigned long long chunk = 256;
    std::atomic<unsigned long long> next{0};
    std::vector<Partial> partials(static_cast<std::size_t>(options.jobs));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](Partial& out) {
        try {
            while (true) {
                const unsigned long long begin = next.fetch_add(chunk);
                if (begin >= limit) return;
                const unsigned long long end = std::min(limit, begin + chunk);
                for (unsigned long long i = begin; i < end; ++i) box.process(i, out);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(limit);
        }
    };
    if (options.jobs == 1) {
        worker(partials[0]);
    } else {
        std::vector<std::thread> threads;
        for (auto& part : partials) threads.emplace_back(worker, std::ref(part));
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::map<int, double> per_degree;
    for (auto& part : partials) {
        result.canonical += part.canonical;
        result.measure_one += part.measure_one;
        for (auto& e : part.minima) box.insert(result.minima, std::move(e));
        for (auto [deg, v] : part.per_degree) {
            auto [it, inserted] = per_degree.emplace(deg, v);
            if (!inserted) it->second = std::min(it->second, v);
        }
    }
    result.per_degree_minimum.assign(per_degree.begin(), per_degree.end());
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

BetaCertificate beta_n(int n, long height) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("beta_n: n must be an even integer >= 4");
    if (height < 1) throw std::invalid_argument("beta_n: height must be at least 1");
    SearchOptions o;
    o.degree_min = 2;
    o.degree_max = n;
    o.height_max = height;
    o.palindromic_only = true;
    o.filter = std::make_pair(1, 1);
    o.require_circle_root = true;
    o.keep = 1;
    SearchResult res = search_box(o);
    if (res.minima.empty())
        throw std::invalid_argument("beta_n: no Salem polynomial of degree <= " + std::to_string(n) + " and height <= " +
                                    std::to_string(height));
    const SearchEntry& best = res.minima.front();
    const SalemCertificate cert = certify(best.poly);
    if (cert.kind != SalemKind::Salem) throw InternalError("beta_n: search returned a non-Salem polynomial " + best.poly.pretty());
    BetaCertificate b;
    b.n = n;
    b.height = height;
    b.poly = best.poly;
    b.salem_value = best.measure.value;
    b.log_value = std::log(best.measure.value);
    b.log_lower = log_down(best.measure.lower);
    b.log_upper = log_up(best.measure.upper);
    b.label = "upper bound for beta_" + std::to_string(n) + ", certified minimal within height <= " + std::to_string(height);
    return b;
}

} // namespace lehmer
