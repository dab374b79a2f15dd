#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpt/graph.hpp"

namespace lpt {

// Hard limits for the exact routines. The oracle never approximates: when a
// graph exceeds a limit it fails loudly, naming the limit.
struct OracleLimits {
    int dp_limit = 20;          // longest_path_length
    int enum_limit = 16;        // enumerate_longest_paths
    long long path_cap = 1'000'000; // canonical paths kept before overflow
};

struct LongestPathReport {
    int length = 0;
    std::vector<Path> paths;            // canonical, lexicographically sorted
    std::vector<std::uint32_t> masks;   // vertex set per path, same order

    bool intersects_all(const VertexSet& s) const {
        std::uint32_t sm = std::uint32_t(s.word());
        for (auto m : masks)
            if (!(m & sm)) return false;
        return true;
    }
};

enum class Method { exact, refine, pt_free, bull_chair, chordal, hgraph };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::refine: return "refine";
        case Method::pt_free: return "pt_free";
        case Method::bull_chair: return "bull_chair";
        case Method::chordal: return "chordal";
        case Method::hgraph: return "hgraph";
    }
    return "?";
}

// A vertex set plus the evidence that it hits every longest path.
struct TransversalCertificate {
    VertexSet transversal;
    std::optional<int> bound_claimed;
    Method method = Method::exact;
    bool verified = false;
    // Set when the transversal hypothesis of an input M was taken on trust
    // because the oracle was infeasible at this size.
    bool assumed_input = false;
};

namespace detail {

// dp[mask] = bitmask of endpoints v such that some path visits exactly `mask`
// and ends at v.
inline std::vector<std::uint32_t> subset_endpoint_table(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(size_t(n), 0u);
    for (int v = 0; v < n; v++) adj[size_t(v)] = std::uint32_t(g.neighbors(v).word());
    std::vector<std::uint32_t> dp(size_t(1) << n, 0);
    for (int v = 0; v < n; v++) dp[size_t(1) << v] = 1u << v;
    const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= all; mask++) {
        std::uint32_t ends = dp[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[size_t(v)] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return dp;
}

// Longest path starting at v inside avail (v in avail), memoized. Used as an
// exact admissible bound while enumerating.
class LongestFrom {
public:
    LongestFrom(const Graph& g) : n_(g.vertex_count()) {
        adj_.resize(size_t(n_));
        for (int v = 0; v < n_; v++) adj_[size_t(v)] = std::uint32_t(g.neighbors(v).word());
        memo_.assign((size_t(1) << n_) * size_t(n_), -1);
    }

    int operator()(int v, std::uint32_t avail) {
        auto& slot = memo_[size_t(avail) * size_t(n_) + size_t(v)];
        if (slot >= 0) return slot;
        int best = 0;
        std::uint32_t ext = adj_[size_t(v)] & avail & ~(1u << v);
        std::uint32_t rest = avail & ~(1u << v);
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            best = std::max(best, 1 + (*this)(u, rest));
        }
        slot = std::int8_t(best);
        return best;
    }

private:
    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::int8_t> memo_;
};

} // namespace detail

// Exact maximum path length (edge count) via DP over (subset, endpoint).
inline int longest_path_length(const Graph& g, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidArgument("longest_path_length: empty graph");
    if (n > limits.dp_limit)
        throw SizeLimitError("longest_path_length: n=" + std::to_string(n) +
                             " exceeds dp limit " + std::to_string(limits.dp_limit));
    auto dp = detail::subset_endpoint_table(g);
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); mask++)
        if (dp[mask]) best = std::max(best, std::popcount(mask) - 1);
    return best;
}

// Number of canonical longest paths, via a saturating counting DP over
// (subset, endpoint). Cheap compared to enumeration; used to pre-screen
// instances against the path cap.
inline long long count_longest_paths(const Graph& g, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidArgument("count_longest_paths: empty graph");
    if (n > limits.enum_limit)
        throw SizeLimitError("count_longest_paths: n=" + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limits.enum_limit));
    constexpr std::uint64_t kSat = std::uint64_t(1) << 62;
    auto sat_add = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= kSat ? kSat : s;
    };
    std::vector<std::uint32_t> adj(size_t(n), 0u);
    for (int v = 0; v < n; v++) adj[size_t(v)] = std::uint32_t(g.neighbors(v).word());
    // counts[mask * n + v] = number of directed paths visiting exactly mask,
    // ending at v
    std::vector<std::uint64_t> counts((size_t(1) << n) * size_t(n), 0);
    for (int v = 0; v < n; v++) counts[(size_t(1) << v) * size_t(n) + size_t(v)] = 1;
    OracleLimits dc = limits;
    dc.dp_limit = std::max(dc.dp_limit, n);
    const int target = longest_path_length(g, dc);
    std::uint64_t total = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); mask++) {
        int len = std::popcount(mask) - 1;
        for (int v = 0; v < n; v++) {
            std::uint64_t c = counts[size_t(mask) * size_t(n) + size_t(v)];
            if (!c) continue;
            if (len == target) {
                total = sat_add(total, c);
                continue;
            }
            std::uint32_t ext = adj[size_t(v)] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                auto& slot = counts[size_t(mask | (1u << u)) * size_t(n) + size_t(u)];
                slot = sat_add(slot, c);
            }
        }
    }
    // a path and its reverse are one object; single-vertex paths are their own
    // reverse
    std::uint64_t canonical = target == 0 ? total : total / 2;
    return canonical >= kSat / 2 ? (long long)(kSat / 2) : (long long)canonical;
}

// All longest paths, reversal-canonicalized and sorted. DFS pruned with the
// exact longest-extension bound.
inline LongestPathReport enumerate_longest_paths(const Graph& g, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InvalidArgument("enumerate_longest_paths: empty graph");
    if (n > limits.enum_limit)
        throw SizeLimitError("enumerate_longest_paths: n=" + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limits.enum_limit));
    OracleLimits dc = limits;
    dc.dp_limit = std::max(dc.dp_limit, n);
    const int target = longest_path_length(g, dc);

    detail::LongestFrom bound(g);
    std::vector<std::uint32_t> adj(size_t(n), 0u);
    for (int v = 0; v < n; v++) adj[size_t(v)] = std::uint32_t(g.neighbors(v).word());
    const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;

    LongestPathReport report;
    report.length = target;
    std::vector<VertexId> cur;

    auto emit = [&]() {
        Path p{std::vector<VertexId>(cur)};
        Path canon = p.canonical();
        if (canon.vertices != cur) return; // the reverse orientation emits it
        if ((long long)report.paths.size() >= limits.path_cap)
            throw EnumerationOverflow("enumerate_longest_paths: more than " +
                                      std::to_string(limits.path_cap) + " longest paths");
        report.paths.push_back(std::move(canon));
    };

    auto dfs = [&](auto&& self, int v, std::uint32_t used) -> void {
        if (int(cur.size()) - 1 == target) {
            emit();
            return;
        }
        std::uint32_t avail = all & ~used;
        if (int(cur.size()) - 1 + bound(v, avail | (1u << v)) < target) return;
        std::uint32_t ext = adj[size_t(v)] & avail;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            cur.push_back(u);
            self(self, u, used | (1u << u));
            cur.pop_back();
        }
    };

    for (int s = 0; s < n; s++) {
        cur.assign(1, s);
        dfs(dfs, s, 1u << s);
    }
    std::sort(report.paths.begin(), report.paths.end());
    report.masks.reserve(report.paths.size());
    for (const auto& p : report.paths) {
        std::uint32_t m = 0;
        for (VertexId v : p.vertices) m |= 1u << v;
        report.masks.push_back(m);
    }
    return report;
}

// True iff every longest path of g meets s.
inline bool is_transversal(const Graph& g, const VertexSet& s, const OracleLimits& limits = {}) {
    return enumerate_longest_paths(g, limits).intersects_all(s);
}

inline bool is_transversal(const Graph& g, const LongestPathReport& report, const VertexSet& s) {
    (void)g;
    return report.intersects_all(s);
}

// Exact minimum longest-path transversal: iterative deepening over k with a
// branch-and-bound hitting-set search restricted to vertices on at least one
// longest path, tried in descending membership count (ties by id).
inline std::pair<int, VertexSet> exact_lpt(const Graph& g, const OracleLimits& limits = {}) {
    const int n = g.vertex_count();
    auto report = enumerate_longest_paths(g, limits);

    // distinct vertex sets hit identically
    std::vector<std::uint32_t> sets = report.masks;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<int> count(size_t(n), 0);
    for (auto m : sets) {
        std::uint32_t w = m;
        while (w) {
            count[size_t(std::countr_zero(w))]++;
            w &= w - 1;
        }
    }
    std::vector<int> order;
    for (int v = 0; v < n; v++)
        if (count[size_t(v)] > 0) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (count[size_t(a)] != count[size_t(b)]) return count[size_t(a)] > count[size_t(b)];
        return a < b;
    });
    std::vector<int> rank(size_t(n), 1 << 20);
    for (size_t i = 0; i < order.size(); i++) rank[size_t(order[i])] = int(i);

    std::vector<int> chosen;
    auto search = [&](auto&& self, size_t next_set, std::uint32_t hit, int k) -> bool {
        // first set not yet hit
        size_t i = next_set;
        while (i < sets.size() && (sets[i] & hit)) i++;
        if (i == sets.size()) return true;
        if (int(chosen.size()) == k) return false;
        std::vector<int> cands;
        std::uint32_t w = sets[i];
        while (w) {
            cands.push_back(std::countr_zero(w));
            w &= w - 1;
        }
        std::sort(cands.begin(), cands.end(), [&](int a, int b) { return rank[size_t(a)] < rank[size_t(b)]; });
        for (int v : cands) {
            chosen.push_back(v);
            if (self(self, 0, hit | (1u << v), k)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= std::max<int>(1, int(order.size())); k++) {
        chosen.clear();
        if (search(search, 0, 0, k)) {
            VertexSet witness(n);
            for (int v : chosen) witness.add(v);
            return {k, witness};
        }
    }
    throw InternalContradictionError("exact_lpt: no hitting set found"); // unreachable: V hits all
}

// Max length over paths of g[region] with at least one endpoint in anchors.
// Returns nullopt when anchors is empty (the paper's "no anchored path").
inline std::optional<int> longest_anchored_path_length(const Graph& g, const VertexSet& region,
                                                       const VertexSet& anchors,
                                                       const OracleLimits& limits = {}) {
    if (region.empty()) throw InvalidArgument("longest_anchored_path_length: empty region");
    if (!anchors.is_subset_of(region))
        throw InvalidArgument("longest_anchored_path_length: anchors not within region");
    if (anchors.empty()) return std::nullopt;
    if (region.size() > limits.dp_limit)
        throw SizeLimitError("longest_anchored_path_length: region size " +
                             std::to_string(region.size()) + " exceeds dp limit " +
                             std::to_string(limits.dp_limit));

    InducedSubgraph sub = induced(g, region);
    const int n = sub.graph.vertex_count();
    std::vector<std::uint32_t> adj(size_t(n), 0u);
    for (int v = 0; v < n; v++) adj[size_t(v)] = std::uint32_t(sub.graph.neighbors(v).word());

    // seed only at anchors: every reachable (mask, endpoint) is a path whose
    // start lies in anchors
    std::vector<std::uint32_t> dp(size_t(1) << n, 0);
    anchors.for_each([&](VertexId a) {
        VertexId local = sub.local_of(a);
        dp[size_t(1) << local] |= 1u << local;
    });
    int best = 0;
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= all; mask++) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        best = std::max(best, std::popcount(mask) - 1);
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[size_t(v)] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return best;
}

// Oracle-verify a certificate in place when enumeration is feasible. Returns
// false (and leaves verified unset) when the graph is too large.
inline bool try_verify(const Graph& g, TransversalCertificate& cert, const OracleLimits& limits = {}) {
    if (g.vertex_count() > limits.enum_limit) return false;
    cert.verified = is_transversal(g, cert.transversal, limits);
    return true;
}

} // namespace lpt
