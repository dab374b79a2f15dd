#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lpt/graph.hpp"
#include "lpt/patterns.hpp"

namespace lpt {

// Injective map pattern-vertex -> host-vertex preserving adjacency and
// non-adjacency.
using Embedding = std::vector<VertexId>;

inline std::string embedding_to_string(const Embedding& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.size(); i++) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "]";
}

namespace detail {

// Backtracking search, pattern vertices mapped in id order, candidates tried
// ascending, so the first complete embedding is the lexicographic minimum.
inline bool find_induced(const Graph& g, const Graph& pattern, size_t at, Embedding& map,
                         VertexSet& used) {
    const int p = pattern.vertex_count();
    if (int(at) == p) return true;
    for (VertexId cand = 0; cand < g.vertex_count(); cand++) {
        if (used.contains(cand)) continue;
        if (g.degree(cand) < pattern.degree(int(at))) continue;
        bool ok = true;
        for (size_t prev = 0; prev < at && ok; prev++)
            if (pattern.adjacent(int(prev), int(at)) != g.adjacent(map[prev], cand)) ok = false;
        if (!ok) continue;
        map[at] = cand;
        used.add(cand);
        if (find_induced(g, pattern, at + 1, map, used)) return true;
        used.remove(cand);
    }
    return false;
}

inline std::optional<Embedding> find_induced_embedding(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    Embedding map(size_t(pattern.vertex_count()), -1);
    VertexSet used(g.vertex_count());
    if (find_induced(g, pattern, 0, map, used)) return map;
    return std::nullopt;
}

} // namespace detail

// First induced copy of `pattern` in g, in lexicographic branch order.
inline std::optional<Embedding> contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > 12)
        throw InvalidArgument("contains_induced: pattern larger than 12 vertices");
    return detail::find_induced_embedding(g, pattern);
}

// Perfect elimination ordering: for each position i, the neighbors of order[i]
// that come later form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order) {
    const int n = g.vertex_count();
    if (int(order.size()) != n) return false;
    std::vector<int> pos(size_t(n), -1);
    for (int i = 0; i < n; i++) pos[size_t(order[size_t(i)])] = i;
    for (int i = 0; i < n; i++) {
        VertexId v = order[size_t(i)];
        // later neighbors of v; the one with the smallest position must see
        // all the others
        std::vector<VertexId> later;
        g.neighbors(v).for_each([&](VertexId u) {
            if (pos[size_t(u)] > i) later.push_back(u);
        });
        if (later.size() <= 1) continue;
        VertexId pivot = later[0];
        for (VertexId u : later)
            if (pos[size_t(u)] < pos[size_t(pivot)]) pivot = u;
        for (VertexId u : later)
            if (u != pivot && !g.adjacent(pivot, u)) return false;
    }
    return true;
}

// Lexicographic BFS + elimination check. Returns a PEO iff g is chordal.
inline std::optional<std::vector<VertexId>> is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::vector<VertexId>{};
    // simple label-based lex-BFS: labels are lists of visit stamps, largest
    // label first, ties by lowest id
    std::vector<std::vector<int>> label(size_t(n), std::vector<int>{});
    std::vector<bool> visited(size_t(n), false);
    std::vector<VertexId> sigma;
    sigma.reserve(size_t(n));
    for (int step = 0; step < n; step++) {
        int best = -1;
        for (int v = 0; v < n; v++) {
            if (visited[size_t(v)]) continue;
            if (best < 0 || label[size_t(v)] > label[size_t(best)]) best = v;
        }
        visited[size_t(best)] = true;
        sigma.push_back(best);
        g.neighbors(best).for_each([&](VertexId u) {
            if (!visited[size_t(u)]) label[size_t(u)].push_back(n - step);
        });
    }
    std::vector<VertexId> peo(sigma.rbegin(), sigma.rend());
    if (is_perfect_elimination_ordering(g, peo)) return peo;
    return std::nullopt;
}

// Maximal cliques of a chordal graph from a PEO (Fulkerson–Gross): candidates
// are each vertex with its later neighbors; keep the inclusion-maximal ones,
// in PEO position order.
inline std::vector<VertexSet> chordal_maximal_cliques(const Graph& g,
                                                      const std::vector<VertexId>& peo) {
    const int n = g.vertex_count();
    std::vector<int> pos(size_t(n), -1);
    for (int i = 0; i < n; i++) pos[size_t(peo[size_t(i)])] = i;
    std::vector<VertexSet> cands;
    for (int i = 0; i < n; i++) {
        VertexId v = peo[size_t(i)];
        VertexSet c(n);
        c.add(v);
        g.neighbors(v).for_each([&](VertexId u) {
            if (pos[size_t(u)] > i) c.add(u);
        });
        cands.push_back(c);
    }
    std::vector<VertexSet> out;
    for (size_t i = 0; i < cands.size(); i++) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; j++) {
            if (i == j) continue;
            if (cands[i].is_subset_of(cands[j]) &&
                !(cands[j].is_subset_of(cands[i]) && i < j))
                maximal = false;
        }
        if (maximal) out.push_back(cands[i]);
    }
    return out;
}

// Smallest t such that g has no induced K_t joined-by-matching to its
// complement-of-size-t. Monotone, so an ascending scan is exact.
inline int matched_clique_index(const Graph& g) {
    const int n = g.vertex_count();
    for (int t = 1;; t++) {
        if (2 * t > n) return t; // pattern larger than the graph
        if (!detail::find_induced_embedding(g, patterns::matched_clique(t)))
            return t;
    }
}

// Grow `seed` into a maximal induced path: repeatedly append the lowest-id
// valid vertex at the back, then at the front.
inline Path maximal_induced_path(const Graph& g, const Path& seed) {
    if (!is_induced_path(g, seed))
        throw InvalidArgument("maximal_induced_path: seed is not an induced path");
    std::vector<VertexId> q = seed.vertices;
    VertexSet on(g.vertex_count());
    for (VertexId v : q) on.add(v);

    auto candidate = [&](VertexId end, VertexId other_interior_end) -> VertexId {
        VertexId pick = -1;
        g.neighbors(end).for_each([&](VertexId u) {
            if (pick >= 0 || on.contains(u)) return;
            // u may touch the path only at `end`
            bool clean = true;
            for (VertexId w : q)
                if (w != end && g.adjacent(u, w)) { clean = false; break; }
            (void)other_interior_end;
            if (clean) pick = u;
        });
        return pick;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        VertexId b = candidate(q.back(), q.front());
        if (b >= 0) {
            q.push_back(b);
            on.add(b);
            grew = true;
            continue;
        }
        VertexId f = candidate(q.front(), q.back());
        if (f >= 0) {
            q.insert(q.begin(), f);
            on.add(f);
            grew = true;
        }
    }
    return Path{q};
}

// A monitor: every component of g - m has some vertex of m complete to it.
inline bool is_monitor(const Graph& g, const VertexSet& m) {
    VertexSet rest = g.vertex_set() - m;
    for (const VertexSet& comp : components(g, rest)) {
        bool watched = false;
        m.for_each([&](VertexId w) {
            if (!watched && comp.is_subset_of(g.neighbors(w))) watched = true;
        });
        if (!watched) return false;
    }
    return true;
}

// The vertex of m complete to comp with the lowest id, or -1.
inline VertexId monitor_watcher(const Graph& g, const VertexSet& m, const VertexSet& comp) {
    VertexId pick = -1;
    m.for_each([&](VertexId w) {
        if (pick < 0 && comp.is_subset_of(g.neighbors(w))) pick = w;
    });
    return pick;
}

// An induced path X with |X| <= t-3 whose closed neighborhood is a monitor.
// Exhaustive search over induced-path sequences in ascending lexicographic
// order; existence is guaranteed for connected P_t-free graphs.
inline Path find_monitor_path(const Graph& g, int t) {
    if (t < 4 || t > 6) throw InvalidArgument("find_monitor_path: t must be 4, 5 or 6");
    if (!is_connected(g)) throw InvalidArgument("find_monitor_path: graph not connected");
    if (auto w = contains_induced(g, patterns::path(t)))
        throw ClassMembershipError("find_monitor_path: graph contains an induced P" +
                                       std::to_string(t),
                                   embedding_to_string(*w));
    const int maxlen = t - 3;
    std::vector<VertexId> seq;
    VertexSet on(g.vertex_count());

    auto monitor_here = [&]() {
        return is_monitor(g, closed_neighborhood(g, on));
    };

    // DFS in sequence-lex order; prefixes are tested before extensions.
    auto dfs = [&](auto&& self) -> bool {
        if (monitor_here()) return true;
        if (int(seq.size()) == maxlen) return false;
        VertexId end = seq.back();
        for (VertexId u : g.neighbors(end).members()) {
            if (on.contains(u)) continue;
            bool induced_ok = true;
            for (VertexId w : seq)
                if (w != end && g.adjacent(u, w)) { induced_ok = false; break; }
            if (!induced_ok) continue;
            seq.push_back(u);
            on.add(u);
            if (self(self)) return true;
            on.remove(u);
            seq.pop_back();
        }
        return false;
    };

    for (VertexId s = 0; s < g.vertex_count(); s++) {
        seq.assign(1, s);
        on = VertexSet(g.vertex_count());
        on.add(s);
        if (dfs(dfs)) return Path{seq};
    }
    throw InternalContradictionError(
        "find_monitor_path: exhausted search on a P" + std::to_string(t) +
        "-free graph; this contradicts the monitor guarantee");
}

} // namespace lpt
