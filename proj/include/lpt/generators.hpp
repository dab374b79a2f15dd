#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lpt/graph.hpp"
#include "lpt/hgraph.hpp"
#include "lpt/recognizers.hpp"

namespace lpt {

// SplitMix64 (Steele, Lea & Flood 2014): a published 64-bit mixing recurrence,
// so the test corpora are reproducible across platforms and languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), rejection-sampled
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InvalidArgument("SplitMix64::below(0)");
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int range(int lo, int hi) { return lo + int(below(std::uint64_t(hi - lo + 1))); }

    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return double(next()) < p * 18446744073709551616.0; // p * 2^64
    }

private:
    std::uint64_t state_;
};

// --- per-class generators ---------------------------------------------------

struct ChordalInstance {
    Graph graph;
    HRepresentation rep;           // tree host, unsubdivided
    std::vector<VertexSet> subtrees; // the model: one subtree of the host per vertex
};

namespace detail {

// Extend model sets over the skeleton until the wrapped representation is
// nice: cover every vertex, then jointly cover every edge. Extensions only
// grow sets, so connectivity of each set is preserved.
inline void stretch_nice(const Graph& skeleton, std::vector<VertexSet>& sets) {
    const int m = skeleton.vertex_count();
    auto covered = [&](VertexId x) {
        for (const auto& s : sets)
            if (s.contains(x)) return true;
        return false;
    };
    auto lowest_owner = [&](VertexId x) {
        for (size_t v = 0; v < sets.size(); v++)
            if (sets[v].contains(x)) return int(v);
        return -1;
    };
    for (;;) {
        int x = -1, y = -1;
        for (int cand = 0; cand < m && x < 0; cand++) {
            if (covered(cand)) continue;
            skeleton.neighbors(cand).for_each([&](VertexId nb) {
                if (y < 0 && covered(nb)) { x = cand; y = nb; }
            });
        }
        if (x < 0) break;
        sets[size_t(lowest_owner(y))].add(x);
    }
    for (auto [x, y] : skeleton.edges()) {
        bool joint = false;
        for (const auto& s : sets)
            if (s.contains(x) && s.contains(y)) { joint = true; break; }
        if (!joint) sets[size_t(lowest_owner(x))].add(y);
    }
}

inline Graph intersection_graph(const std::vector<VertexSet>& sets) {
    const int n = int(sets.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (sets[size_t(u)].intersects(sets[size_t(v)])) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph random_tree(SplitMix64& rng, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < m; i++) edges.emplace_back(int(rng.below(std::uint64_t(i))), i);
    return Graph::from_edge_list(m, edges);
}

inline VertexSet random_connected_subset(SplitMix64& rng, const Graph& g, double growth) {
    VertexSet s(g.vertex_count());
    s.add(int(rng.below(std::uint64_t(g.vertex_count()))));
    for (int guard = 0; guard < g.vertex_count(); guard++) {
        if (!rng.chance(growth)) break;
        VertexSet frontier = closed_neighborhood(g, s) - s;
        if (frontier.empty()) break;
        auto cands = frontier.members();
        s.add(cands[size_t(rng.below(cands.size()))]);
    }
    return s;
}

} // namespace detail

// Random tree plus n random connected subtrees; the intersection graph is
// chordal and the representation doubles as hgraph input.
inline ChordalInstance gen_chordal(std::uint64_t seed, int n, double density = 0.5) {
    if (n < 1) throw InvalidArgument("gen_chordal: n must be >= 1");
    SplitMix64 rng(seed);
    int m = 2 + int(rng.below(6)); // host tree on 2..7 vertices
    Graph tree = detail::random_tree(rng, m);

    ChordalInstance inst;
    for (int v = 0; v < n; v++)
        inst.subtrees.push_back(detail::random_connected_subset(rng, tree, density));
    detail::stretch_nice(tree, inst.subtrees);
    inst.graph = detail::intersection_graph(inst.subtrees);

    inst.rep = make_skeleton(tree, {});
    inst.rep.phi = inst.subtrees; // host ids are h_phi ids when unsubdivided
    return inst;
}

// Alternative chordal generation by clique-attachment insertion (the reversed
// insertion order is a perfect elimination ordering). Graph only, no model.
inline Graph gen_chordal_peo(std::uint64_t seed, int n, double density = 0.5) {
    if (n < 1) throw InvalidArgument("gen_chordal_peo: n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<VertexSet> bag; // per vertex, the clique it was attached to plus itself
    bag.push_back(VertexSet(n, {0}));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; i++) {
        int u = int(rng.below(std::uint64_t(i)));
        VertexSet s(n);
        s.add(u);
        bag[size_t(u)].for_each([&](VertexId w) {
            if (w != u && rng.chance(density)) s.add(w);
        });
        s.for_each([&](VertexId w) { edges.emplace_back(w, i); });
        s.add(i);
        bag.push_back(s);
    }
    return Graph::from_edge_list(n, edges);
}

struct IntervalInstance {
    Graph graph;
    HRepresentation rep;                      // host K2
    std::vector<std::pair<int, int>> intervals; // inclusive endpoints on 0..positions-1
    int positions = 0;
};

// Random interval model, rank-compressed, stretched until every cut between
// consecutive positions is spanned (this both connects the graph and makes
// the wrapped representation nice).
inline IntervalInstance gen_interval(std::uint64_t seed, int n) {
    if (n < 1) throw InvalidArgument("gen_interval: n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> raw;
    for (int v = 0; v < n; v++) {
        int a = int(rng.below(std::uint64_t(2 * n)));
        int b = int(rng.below(std::uint64_t(2 * n)));
        raw.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<int> coords;
    for (auto [l, r] : raw) { coords.push_back(l); coords.push_back(r); }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    auto rank = [&](int c) {
        return int(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
    };

    IntervalInstance inst;
    inst.positions = int(coords.size());
    for (auto [l, r] : raw) inst.intervals.emplace_back(rank(l), rank(r));

    // span every cut k|k+1; the lowest interval ending at k gets stretched
    for (int k = 0; k + 1 < inst.positions; k++) {
        bool spanned = false;
        for (auto [l, r] : inst.intervals)
            if (l <= k && r >= k + 1) { spanned = true; break; }
        if (spanned) continue;
        for (auto& [l, r] : inst.intervals)
            if (r == k) { r = k + 1; break; }
    }

    const int m = inst.positions;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) {
            auto [lu, ru] = inst.intervals[size_t(u)];
            auto [lv, rv] = inst.intervals[size_t(v)];
            if (lu <= rv && lv <= ru) edges.emplace_back(u, v);
        }
    inst.graph = Graph::from_edge_list(n, edges);

    inst.rep = make_skeleton(Graph::from_edge_list(2, {{0, 1}}), {{{0, 1}, m + 1}});
    // h_phi: host 0, host 1, then internals 2..m+1 for positions 0..m-1
    inst.rep.phi.assign(size_t(n), VertexSet(inst.rep.h_phi.vertex_count()));
    for (int v = 0; v < n; v++) {
        auto [l, r] = inst.intervals[size_t(v)];
        for (int k = l; k <= r; k++) inst.rep.phi[size_t(v)].add(2 + k);
        if (l == 0) inst.rep.phi[size_t(v)].add(0);
        if (r == m - 1) inst.rep.phi[size_t(v)].add(1);
    }
    return inst;
}

struct ArcInstance {
    Graph graph;
    HRepresentation rep;           // host K3
    std::vector<VertexSet> arcs;   // position sets on the circle
    int positions = 0;
};

inline ArcInstance gen_circular_arc(std::uint64_t seed, int n) {
    if (n < 1) throw InvalidArgument("gen_circular_arc: n must be >= 1");
    SplitMix64 rng(seed);
    int m = 3 + int(rng.below(std::uint64_t(std::max(1, 2 * n))));

    ArcInstance inst;
    inst.positions = m;
    std::vector<std::pair<int, int>> runs; // (start, len)
    for (int v = 0; v < n; v++)
        runs.emplace_back(int(rng.below(std::uint64_t(m))), 1 + int(rng.below(std::uint64_t(m))));

    auto run_covers = [&](const std::pair<int, int>& run, int k) {
        auto [s, len] = run;
        if (len >= m) return true;
        int off = ((k - s) % m + m) % m;
        return off < len;
    };

    // cover every position: extend the lowest arc whose end is just before it
    for (bool progress = true; progress;) {
        progress = false;
        for (int k = 0; k < m; k++) {
            bool cov = false;
            for (auto& run : runs)
                if (run_covers(run, k)) { cov = true; break; }
            if (cov) continue;
            int prev = (k - 1 + m) % m;
            for (auto& run : runs)
                if (run.second < m && run_covers(run, prev) && !run_covers(run, k)) {
                    int end = (run.first + run.second - 1) % m;
                    if (end == prev) { run.second++; progress = true; break; }
                }
        }
        bool all = true;
        for (int k = 0; k < m && all; k++) {
            bool cov = false;
            for (auto& run : runs)
                if (run_covers(run, k)) cov = true;
            all = cov;
        }
        if (all) break;
        if (!progress)
            throw InternalContradictionError("gen_circular_arc: coverage stretch stalled");
    }
    // span every circular cut k|k+1
    for (int k = 0; k < m; k++) {
        int nxt = (k + 1) % m;
        bool spanned = false;
        for (auto& run : runs)
            if (run_covers(run, k) && run_covers(run, nxt)) { spanned = true; break; }
        if (spanned) continue;
        for (auto& run : runs)
            if (run.second < m && run_covers(run, k) && !run_covers(run, nxt)) {
                int end = (run.first + run.second - 1) % m;
                if (end == k) { run.second++; break; }
            }
    }

    for (auto& run : runs) {
        VertexSet set(m);
        for (int i = 0; i < std::min(run.second, m); i++) set.add((run.first + i) % m);
        inst.arcs.push_back(set);
    }
    inst.graph = detail::intersection_graph(inst.arcs);

    // host triangle with images at positions 0, q1, q2
    int q1 = m / 3, q2 = 2 * m / 3;
    Graph host = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    std::map<std::pair<int, int>, int> lengths{
        {{0, 1}, q1}, {{1, 2}, q2 - q1}, {{0, 2}, m - q2}};
    inst.rep = make_skeleton(host, lengths);
    // position -> h_phi id
    std::vector<int> pos_id(size_t(m), 0);
    pos_id[0] = 0;
    pos_id[size_t(q1)] = 1;
    pos_id[size_t(q2)] = 2;
    {
        const auto& p01 = inst.rep.edge_paths.at({0, 1});
        for (int k = 1; k < q1; k++) pos_id[size_t(k)] = p01[size_t(k)];
        const auto& p12 = inst.rep.edge_paths.at({1, 2});
        for (int k = q1 + 1; k < q2; k++) pos_id[size_t(k)] = p12[size_t(k - q1)];
        const auto& p02 = inst.rep.edge_paths.at({0, 2});
        // path 0..2 runs positions 0, m-1, ..., q2+1, q2
        for (int k = q2 + 1; k < m; k++) pos_id[size_t(k)] = p02[size_t(m - k)];
    }
    inst.rep.phi.assign(size_t(n), VertexSet(inst.rep.h_phi.vertex_count()));
    for (int v = 0; v < n; v++)
        inst.arcs[size_t(v)].for_each([&](VertexId k) {
            inst.rep.phi[size_t(v)].add(pos_id[size_t(k)]);
        });
    return inst;
}

// Connected Erdős–Rényi-style sample avoiding the forbidden induced patterns,
// or nullopt when the attempt budget runs out (callers must treat that as an
// explicit skip signal, never a pass).
inline std::optional<Graph> gen_class_filtered(std::uint64_t seed, int n, double p,
                                               const std::vector<Graph>& forbidden,
                                               int budget = 2000) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < budget; attempt++) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng.chance(p)) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (!is_connected(g)) continue;
        bool clean = true;
        for (const Graph& f : forbidden)
            if (contains_induced(g, f)) { clean = false; break; }
        if (clean) return g;
    }
    return std::nullopt;
}

// Random nice H-representation over an arbitrary connected host: random
// subdivision, random connected segments, stretched until nice.
inline HRepresentation gen_hrep(std::uint64_t seed, const Graph& host, int n,
                                int max_subdivision = 3, double growth = 0.6) {
    if (n < 1) throw InvalidArgument("gen_hrep: n must be >= 1");
    SplitMix64 rng(seed);
    std::map<std::pair<int, int>, int> lengths;
    for (auto e : host.edges()) lengths[e] = 1 + int(rng.below(std::uint64_t(max_subdivision)));
    HRepresentation rep = make_skeleton(host, lengths);

    std::vector<VertexSet> segments;
    for (int v = 0; v < n; v++)
        segments.push_back(detail::random_connected_subset(rng, rep.h_phi, growth));
    detail::stretch_nice(rep.h_phi, segments);
    rep.phi = std::move(segments);
    return rep;
}

// The 12-vertex planar graph in which every vertex is missed by some longest
// path: a hexagon whose three antipodal pairs are joined through degree-3
// hubs, each hub carrying a pendant vertex. Its properties are re-certified
// by the oracle in the test suite, never assumed.
inline Graph fixture_walther_zamfirescu() {
    return Graph::from_edge_list(12, {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},   // hexagon
        {0, 6}, {3, 6}, {1, 7}, {4, 7}, {2, 8}, {5, 8},   // hubs
        {6, 9}, {7, 10}, {8, 11},                         // pendants
    });
}

} // namespace lpt
