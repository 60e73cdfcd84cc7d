#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mostar/canonical.hpp"
#include "mostar/constraints.hpp"
#include "mostar/enumerate.hpp"
#include "mostar/families.hpp"
#include "mostar/index.hpp"
#include "mostar/stats.hpp"

namespace mostar {

/// One free tree with everything the theorem checks look at.
struct CatalogEntry {
    Tree tree;
    TreeStats stats;
    std::uint64_t mo = 0;
    std::string canonical;
};

/// All free trees of order n (n >= 2) with their statistics.
inline std::vector<CatalogEntry> build_catalog(std::size_t n, std::size_t cap = default_enumeration_cap) {
    std::vector<CatalogEntry> out;
    for_each_free_tree(
        n,
        [&](const Tree& t, std::size_t) {
            out.push_back({t, stats(t), mostar_index(t), canonical_form(t)});
        },
        0, static_cast<std::size_t>(-1), cap);
    return out;
}

/// Optimum of Mo over a class with every tree attaining it.
struct ExtremalResult {
    std::optional<std::uint64_t> value; // empty when the class is empty
    std::vector<std::string> argopt;    // canonical forms, sorted
    std::size_t class_size = 0;

    bool empty() const { return !value.has_value(); }
};

namespace detail {

inline void absorb(ExtremalResult& acc, std::uint64_t mo, const std::string& canon, Direction dir) {
    ++acc.class_size;
    const bool better = !acc.value || (dir == Direction::max ? mo > *acc.value : mo < *acc.value);
    if (better) {
        acc.value = mo;
        acc.argopt.clear();
    }
    if (*acc.value == mo)
        acc.argopt.push_back(canon);
}

/// Monoidal merge of two shard results.
inline ExtremalResult combine(ExtremalResult a, const ExtremalResult& b, Direction dir) {
    a.class_size += b.class_size;
    if (!b.value)
        return a;
    if (!a.value || (dir == Direction::max ? *b.value > *a.value : *b.value < *a.value)) {
        a.value = b.value;
        a.argopt = b.argopt;
    } else if (*a.value == *b.value) {
        a.argopt.insert(a.argopt.end(), b.argopt.begin(), b.argopt.end());
    }
    return a;
}

inline void finish(ExtremalResult& r) { std::sort(r.argopt.begin(), r.argopt.end()); }

} // namespace detail

/// Exact optimum over a prepared catalog.
inline ExtremalResult extremal_search(const std::vector<CatalogEntry>& catalog, const ConstraintSpec& c,
                                      Direction dir) {
    ExtremalResult r;
    for (const auto& e : catalog)
        if (satisfies(e.stats, c))
            detail::absorb(r, e.mo, e.canonical, dir);
    detail::finish(r);
    return r;
}

/// Exact optimum over all free trees of order n in the class.
///
/// The enumeration stream is split into `shards` interleaved index classes
/// that run on separate threads; results merge in shard order.
inline ExtremalResult extremal_search(std::size_t n, const ConstraintSpec& c, Direction dir,
                                      unsigned shards = 1, std::size_t cap = default_enumeration_cap) {
    validate(n, c);
    if (n > cap)
        throw ResourceError("order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
    if (n < 2)
        throw ResourceError("extremal search needs n >= 2");
    shards = std::max(1u, shards);
    std::vector<ExtremalResult> parts(shards);
    auto work = [&](unsigned shard) {
        FreeTreeGenerator gen(n, cap);
        std::size_t index = 0;
        while (auto t = gen.next()) {
            if (index++ % shards != shard)
                continue;
            const auto s = stats(*t);
            if (satisfies(s, c))
                detail::absorb(parts[shard], mostar_index(*t), canonical_form(*t), dir);
        }
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < shards; ++s)
            pool.emplace_back(work, s);
        for (auto& th : pool)
            th.join();
    }
    ExtremalResult total;
    for (const auto& p : parts)
        total = detail::combine(std::move(total), p, dir);
    detail::finish(total);
    return total;
}

// ---------------------------------------------------------------------------
// Theorem registry

enum class ClaimKind {
    extremal,        ///< claimed family attains the optimum of its class
    spider_monotone, ///< Mo(S_{n,r}) < Mo(S_{n,r+1})
    degree_sequence, ///< minimizers for a degree sequence include a valley caterpillar
};

using ParamList = std::vector<std::pair<std::string, int>>;

struct ClaimInstance {
    int n = 0;
    ParamList params;
    ConstraintSpec constraint;
    Direction direction = Direction::max;
};

struct TheoremClaim {
    std::string id;
    std::string statement;
    ClaimKind kind = ClaimKind::extremal;
    int min_order = 2;
    /// Parameter grid at order n; empty for non-extremal kinds.
    std::function<std::vector<ClaimInstance>(int n, PathReading reading)> instances;
};

struct VerificationReport {
    std::string claim;
    int n = 0;
    ParamList params;
    Direction direction = Direction::max;
    std::string constraint;
    std::string claimed_family;
    bool valid_instance = true;
    std::string invalid_reason;
    bool empty_class = false;
    std::size_t class_size = 0;
    std::optional<std::uint64_t> brute_value;
    std::optional<std::uint64_t> claimed_value;
    bool value_match = false;
    bool claimed_is_argopt = false;
    bool argopt_unique = false;
    std::size_t argopt_count = 0;
    std::vector<std::string> argopt_canonical_forms;
    double millis = 0.0;

    /// A valid instance whose claim does not hold.
    bool failed() const { return valid_instance && !claimed_is_argopt; }
};

namespace detail {

inline std::vector<ClaimInstance> both_directions(int n, ParamList params, ConstraintSpec c) {
    return {{n, params, c, Direction::max}, {n, std::move(params), std::move(c), Direction::min}};
}

inline std::vector<TheoremClaim> make_registry() {
    using V = std::vector<ClaimInstance>;
    std::vector<TheoremClaim> reg;

    reg.push_back({"T2.1", "star maximizes and path minimizes Mo over all trees", ClaimKind::extremal, 2,
                   [](int n, PathReading) { return both_directions(n, {}, Unconstrained{}); }});

    reg.push_back({"T2.6", "S_{n,r} maximizes Mo over trees with r pendent vertices, 3 <= r <= n-2",
                   ClaimKind::extremal, 5, [](int n, PathReading) {
                       V out;
                       for (int r = 3; r <= n - 2; ++r)
                           out.push_back({n, {{"r", r}}, LeafCount{r}, Direction::max});
                       return out;
                   }});

    reg.push_back({"C2.7", "Mo(S_{n,r}) < Mo(S_{n,r+1}) for 2 <= r <= n-2", ClaimKind::spider_monotone, 4,
                   nullptr});

    reg.push_back({"LDL-min-degseq",
                   "Mo-minimizers with a fixed degree sequence include a caterpillar whose spine "
                   "degrees decrease then increase",
                   ClaimKind::degree_sequence, 3, nullptr});

    reg.push_back({"T3.1", "S_{n,2k} maximizes Mo over trees with 2k odd vertices", ClaimKind::extremal, 2,
                   [](int n, PathReading) {
                       V out;
                       for (int k = 1; k <= n / 2; ++k)
                           out.push_back({n, {{"k", k}}, OddCount{k}, Direction::max});
                       return out;
                   }});

    reg.push_back({"T3.2", "C_{n,ceil((k-1)/2),floor((k-1)/2)} minimizes Mo over trees with 2k odd vertices",
                   ClaimKind::extremal, 2, [](int n, PathReading) {
                       V out;
                       for (int k = 1; k <= n / 2; ++k)
                           out.push_back({n, {{"k", k}}, OddCount{k}, Direction::min});
                       return out;
                   }});

    reg.push_back({"C3.3", "C_{n,ceil(k/2),floor(k/2)} minimizes Mo over trees with k branch vertices",
                   ClaimKind::extremal, 2, [](int n, PathReading) {
                       V out;
                       for (int k = 0; 2 * k + 2 <= n; ++k)
                           out.push_back({n, {{"k", k}}, BranchCount{k}, Direction::min});
                       return out;
                   }});

    reg.push_back({"T3.4", "all-odd trees: star maximizes, C_{n,0,n/2-1} minimizes", ClaimKind::extremal, 2,
                   [](int n, PathReading) {
                       if (n % 2 != 0)
                           return V{};
                       return both_directions(n, {}, AllOdd{});
                   }});

    reg.push_back({"T4.1", "S_{n,n-t-1} maximizes Mo over trees with t degree-2 vertices, t <= n-4",
                   ClaimKind::extremal, 4, [](int n, PathReading) {
                       V out;
                       for (int t = 0; t <= n - 4; ++t)
                           out.push_back({n, {{"t", t}}, Deg2Count{t}, Direction::max});
                       return out;
                   }});

    reg.push_back({"T4.3", "F/C families minimize Mo over trees with t degree-2 vertices, t <= n-4",
                   ClaimKind::extremal, 4, [](int n, PathReading) {
                       V out;
                       for (int t = 0; t <= n - 4; ++t)
                           out.push_back({n, {{"t", t}}, Deg2Count{t}, Direction::min});
                       return out;
                   }});

    reg.push_back({"C4.4", "F/C families minimize Mo over series-reduced trees, n >= 5", ClaimKind::extremal, 5,
                   [](int n, PathReading) { return V{{n, {}, SeriesReduced{}, Direction::min}}; }});

    reg.push_back({"T5.1", "S^r_{n,k} maximizes Mo over trees with k pendent paths of length r",
                   ClaimKind::extremal, 4, [](int n, PathReading reading) {
                       V out;
                       for (int r = 2; r <= n - 3; ++r)
                           out.push_back({n, {{"k", 1}, {"r", r}}, PendentPathCount{1, r, reading}, Direction::max});
                       for (int k = 2; 2 * k <= n - 2; ++k)
                           for (int r = 2; k * r <= n - 2; ++r)
                               out.push_back(
                                   {n, {{"k", k}, {"r", r}}, PendentPathCount{k, r, reading}, Direction::max});
                       return out;
                   }});

    reg.push_back({"T5.3", "A^r / path families minimize Mo over trees with k pendent paths of length r",
                   ClaimKind::extremal, 4, [](int n, PathReading reading) {
                       V out;
                       for (int r = 2; r <= n - 3; ++r)
                           out.push_back({n, {{"k", 1}, {"r", r}}, PendentPathCount{1, r, reading}, Direction::min});
                       for (int r = 1; r <= n - 2; ++r)
                           out.push_back({n, {{"k", 2}, {"r", r}}, PendentPathCount{2, r, reading}, Direction::min});
                       for (int k = 3; k <= n - 2; ++k)
                           for (int r = 1; k * r <= n - 2; ++r)
                               out.push_back(
                                   {n, {{"k", k}, {"r", r}}, PendentPathCount{k, r, reading}, Direction::min});
                       return out;
                   }});
    return reg;
}

} // namespace detail

inline const std::vector<TheoremClaim>& theorem_registry() {
    static const std::vector<TheoremClaim> reg = detail::make_registry();
    return reg;
}

inline const TheoremClaim* find_claim(std::string_view id) {
    for (const auto& c : theorem_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

namespace detail {

/// Spine degrees in path order, or nullopt if t is not a caterpillar.
inline std::optional<std::vector<std::size_t>> spine_degrees(const Tree& t) {
    std::vector<Vertex> internal;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 2)
            internal.push_back(v);
    if (internal.empty())
        return std::vector<std::size_t>{};
    auto internal_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : t.neighbors(v))
            if (t.degree(w) >= 2)
                out.push_back(w);
        return out;
    };
    Vertex start = internal.front();
    for (Vertex v : internal) {
        const auto nb = internal_neighbors(v);
        if (nb.size() > 2)
            return std::nullopt;
        if (nb.size() <= 1)
            start = v;
    }
    std::vector<std::size_t> degrees;
    Vertex prev = start;
    Vertex cur = start;
    while (true) {
        degrees.push_back(t.degree(cur));
        Vertex next = cur;
        for (Vertex w : internal_neighbors(cur))
            if (w != prev)
                next = w;
        if (next == cur)
            break;
        prev = cur;
        cur = next;
    }
    return degrees;
}

} // namespace detail

/// Non-increasing run followed by a non-decreasing run (split anywhere).
inline bool is_valley(const std::vector<std::size_t>& d) {
    const std::size_t z = d.size();
    if (z <= 2)
        return true;
    std::size_t prefix = 1;
    while (prefix < z && d[prefix] <= d[prefix - 1])
        ++prefix;
    std::size_t suffix = 1;
    while (suffix < z && d[z - 1 - suffix] <= d[z - suffix])
        ++suffix;
    return prefix + suffix >= z;
}

/// Caterpillar whose spine degrees form a valley.
inline bool is_valley_caterpillar(const Tree& t) {
    const auto d = detail::spine_degrees(t);
    return d && is_valley(*d);
}

struct DegreeSequenceFinding {
    std::vector<std::size_t> degrees;
    std::uint64_t min_value = 0;
    std::size_t minimizers = 0;
    bool has_valley_caterpillar = false;
};

struct DegreeSequenceReport {
    int n = 0;
    std::vector<DegreeSequenceFinding> findings; // sorted by degree sequence
    double millis = 0.0;

    std::size_t violations() const {
        return std::size_t(std::count_if(findings.begin(), findings.end(),
                                         [](const auto& f) { return !f.has_valley_caterpillar; }));
    }
};

inline DegreeSequenceReport check_degree_sequence_structure(const std::vector<CatalogEntry>& catalog, int n) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Group {
        std::uint64_t best = 0;
        std::vector<const CatalogEntry*> minimizers;
    };
    std::map<std::vector<std::size_t>, Group> groups;
    for (const auto& e : catalog) {
        auto [it, fresh] = groups.try_emplace(e.stats.degree_sequence);
        auto& g = it->second;
        if (fresh || e.mo < g.best) {
            g.best = e.mo;
            g.minimizers.clear();
        }
        if (e.mo == g.best)
            g.minimizers.push_back(&e);
    }
    DegreeSequenceReport rep;
    rep.n = n;
    for (const auto& [seq, g] : groups) {
        DegreeSequenceFinding f{seq, g.best, g.minimizers.size(), false};
        for (const auto* e : g.minimizers)
            if (is_valley_caterpillar(e->tree)) {
                f.has_valley_caterpillar = true;
                break;
            }
        rep.findings.push_back(std::move(f));
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline DegreeSequenceReport check_degree_sequence_structure(int n, std::size_t cap = default_enumeration_cap) {
    return check_degree_sequence_structure(build_catalog(std::size_t(n), cap), n);
}

struct CheckOptions {
    PathReading reading = PathReading::census;
    unsigned threads = 1;
    std::size_t cap = default_enumeration_cap;
};

namespace detail {

inline VerificationReport evaluate_instance(const std::string& claim_id, const ClaimInstance& inst,
                                            const std::vector<CatalogEntry>& catalog) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.claim = claim_id;
    rep.n = inst.n;
    rep.params = inst.params;
    rep.direction = inst.direction;
    rep.constraint = to_string(inst.constraint);

    const auto spec = claimed_extremal(inst.n, inst.constraint, inst.direction);
    const auto brute = extremal_search(catalog, inst.constraint, inst.direction);
    rep.class_size = brute.class_size;
    rep.empty_class = brute.empty();
    rep.brute_value = brute.value;
    rep.argopt_count = brute.argopt.size();
    rep.argopt_unique = brute.argopt.size() == 1;
    rep.argopt_canonical_forms = brute.argopt;

    if (!spec) {
        rep.valid_instance = false;
        rep.invalid_reason = "no claimed family for this instance";
    } else {
        rep.claimed_family = to_string(*spec);
        try {
            const Tree claimed = build(*spec);
            const auto s = stats(claimed);
            rep.claimed_value = mostar_index(claimed);
            const bool in_class = satisfies(s, inst.constraint);
            const auto canon = canonical_form(claimed);
            rep.claimed_is_argopt =
                in_class && std::binary_search(brute.argopt.begin(), brute.argopt.end(), canon);
            rep.value_match = in_class && brute.value && *brute.value == *rep.claimed_value;
        } catch (const ParameterError& ex) {
            rep.valid_instance = false;
            rep.invalid_reason = ex.what();
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline VerificationReport monotone_instance(const std::string& claim_id, int n, int r) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.claim = claim_id;
    rep.n = n;
    rep.params = {{"r", r}};
    rep.direction = Direction::max;
    rep.constraint = "leaves=" + std::to_string(r);
    rep.claimed_family = to_string(FamilySpec{SpiderSpec{n, r}});
    // claimed = Mo(S_{n,r}); brute = Mo(S_{n,r+1}); the claim holds when claimed < brute.
    rep.claimed_value = mostar_index(build(SpiderSpec{n, r}));
    rep.brute_value = mostar_index(build(SpiderSpec{n, r + 1}));
    rep.claimed_is_argopt = *rep.claimed_value < *rep.brute_value;
    rep.value_match = rep.claimed_is_argopt;
    rep.argopt_unique = true;
    rep.argopt_count = 1;
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::vector<VerificationReport> degree_sequence_instances(const std::string& claim_id, int n,
                                                                 const std::vector<CatalogEntry>& catalog) {
    const auto rep = check_degree_sequence_structure(catalog, n);
    std::vector<VerificationReport> out;
    for (const auto& f : rep.findings) {
        VerificationReport v;
        v.claim = claim_id;
        v.n = n;
        v.direction = Direction::min;
        DegreeSequence ds{f.degrees};
        v.constraint = to_string(ConstraintSpec{ds});
        v.claimed_family = "valley caterpillar";
        v.brute_value = f.min_value;
        v.claimed_value = f.has_valley_caterpillar ? std::optional<std::uint64_t>(f.min_value) : std::nullopt;
        v.claimed_is_argopt = f.has_valley_caterpillar;
        v.value_match = f.has_valley_caterpillar;
        v.argopt_count = f.minimizers;
        v.argopt_unique = f.minimizers == 1;
        v.millis = rep.millis / double(rep.findings.size());
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Runs one claim over every instance with n_min <= n <= n_max.
/// Instances are evaluated in parallel; output is sorted by (n, params, direction).
inline std::vector<VerificationReport> check_claim(const TheoremClaim& claim, int n_min, int n_max,
                                                   const CheckOptions& opt = {}) {
    n_min = std::max(n_min, claim.min_order);
    std::vector<VerificationReport> out;
    if (n_max < n_min)
        return out;
    if (claim.kind != ClaimKind::spider_monotone && std::size_t(n_max) > opt.cap)
        throw ResourceError("order " + std::to_string(n_max) + " exceeds enumeration cap " +
                            std::to_string(opt.cap));

    if (claim.kind == ClaimKind::spider_monotone) {
        for (int n = n_min; n <= n_max; ++n)
            for (int r = 2; r <= n - 2; ++r)
                out.push_back(detail::monotone_instance(claim.id, n, r));
        return out;
    }

    std::map<int, std::vector<CatalogEntry>> catalogs;
    for (int n = n_min; n <= n_max; ++n)
        catalogs.emplace(n, build_catalog(std::size_t(n), opt.cap));

    if (claim.kind == ClaimKind::degree_sequence) {
        for (int n = n_min; n <= n_max; ++n) {
            auto part = detail::degree_sequence_instances(claim.id, n, catalogs.at(n));
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    std::vector<ClaimInstance> instances;
    for (int n = n_min; n <= n_max; ++n) {
        auto part = claim.instances(n, opt.reading);
        instances.insert(instances.end(), part.begin(), part.end());
    }
    out.resize(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++)
            out[i] = detail::evaluate_instance(claim.id, instances[i], catalogs.at(instances[i].n));
    };
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.params, a.direction) < std::tie(b.n, b.params, b.direction);
    });
    return out;
}

inline bool all_hold(const std::vector<VerificationReport>& reports) {
    return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
}

} // namespace mostar
