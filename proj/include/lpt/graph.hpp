#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpt/bitset.hpp"
#include "lpt/errors.hpp"

namespace lpt {

// Immutable simple undirected graph with dense 0-based vertex ids.
// Adjacency is stored as one word-packed row per vertex so neighborhood
// intersection tests cost O(n/64).
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 0) throw InvalidArgument("negative vertex count");
        Graph g;
        g.n_ = n;
        g.rows_.assign(size_t(n), VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") out of range for n=" + std::to_string(n));
            if (u == v)
                throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            g.rows_[size_t(u)].add(v);
            g.rows_[size_t(v)].add(u);
        }
        g.collect_edges();
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    bool adjacent(VertexId u, VertexId v) const { return rows_[check(u)].contains(check_id(v)); }
    const VertexSet& neighbors(VertexId v) const { return rows_[check(v)]; }
    int degree(VertexId v) const { return rows_[check(v)].size(); }

    // Edges as (u,v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    size_t check(VertexId v) const {
        if (v < 0 || v >= n_)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        return size_t(v);
    }
    VertexId check_id(VertexId v) const { check(v); return v; }

    void collect_edges() {
        edges_.clear();
        for (int u = 0; u < n_; u++)
            rows_[size_t(u)].for_each([&](VertexId v) {
                if (u < v) edges_.emplace_back(u, v);
            });
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::pair<int, int>> edges_;
};

// A path is an ordered sequence of distinct, consecutively adjacent vertices.
// Length is the edge count.
struct Path {
    std::vector<VertexId> vertices;

    Path() = default;
    Path(std::initializer_list<VertexId> vs) : vertices(vs) {}
    explicit Path(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

    int length() const { return int(vertices.size()) - 1; }
    bool empty() const { return vertices.empty(); }

    bool operator==(const Path& o) const { return vertices == o.vertices; }
    bool operator<(const Path& o) const { return vertices < o.vertices; }

    VertexSet as_set(int universe) const {
        VertexSet s(universe);
        for (VertexId v : vertices) s.add(v);
        return s;
    }

    // Of the two orientations, the lexicographically smaller sequence.
    Path canonical() const {
        Path rev = *this;
        std::reverse(rev.vertices.begin(), rev.vertices.end());
        return vertices <= rev.vertices ? *this : rev;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < vertices.size(); i++) {
            if (i) s += "-";
            s += std::to_string(vertices[i]);
        }
        return s;
    }
};

inline bool is_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    VertexSet seen(g.vertex_count());
    for (size_t i = 0; i < p.vertices.size(); i++) {
        VertexId v = p.vertices[i];
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.add(v);
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    return true;
}

inline bool is_induced_path(const Graph& g, const Path& p) {
    if (!is_path(g, p)) return false;
    for (size_t i = 0; i + 2 < p.vertices.size() + 1; i++)
        for (size_t j = i + 2; j < p.vertices.size(); j++)
            if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
    return true;
}

// --- set-level predicates -------------------------------------------------

// Connected components of g[within], sorted by minimum member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    const int n = g.vertex_count();
    if (within.universe() != n) throw InvalidArgument("components: set universe mismatch");
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    while (!unseen.empty()) {
        VertexId start = unseen.first();
        VertexSet comp(n);
        comp.add(start);
        VertexSet frontier(n);
        frontier.add(start);
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](VertexId v) { next |= g.neighbors(v); });
            next &= within;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out; // ascending scan over `unseen` already sorts by min member
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return components(g, g.vertex_set()).size() == 1;
}

// bd(X,Y): vertices of x with at least one neighbor in y. x and y disjoint.
inline VertexSet boundary(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) {
        VertexSet overlap = x & y;
        throw InvalidArgument("boundary: sets overlap at vertex " + std::to_string(overlap.first()));
    }
    VertexSet out(g.vertex_count());
    x.for_each([&](VertexId v) {
        if (g.neighbors(v).intersects(y)) out.add(v);
    });
    return out;
}

// True iff every vertex of target is in d or adjacent to some vertex of d.
inline bool dominates(const Graph& g, const VertexSet& d, const VertexSet& target) {
    bool ok = true;
    target.for_each([&](VertexId v) {
        if (ok && !d.contains(v) && !g.neighbors(v).intersects(d)) ok = false;
    });
    return ok;
}

// Some target vertex not dominated by d, or -1.
inline VertexId undominated_witness(const Graph& g, const VertexSet& d, const VertexSet& target) {
    VertexId w = -1;
    target.for_each([&](VertexId v) {
        if (w < 0 && !d.contains(v) && !g.neighbors(v).intersects(d)) w = v;
    });
    return w;
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet out = x;
    x.for_each([&](VertexId v) { out |= g.neighbors(v); });
    return out;
}

// Induced subgraph with the old-id <-> new-id map kept explicit.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> to_parent;      // new id -> old id, ascending
    std::vector<VertexId> from_parent;    // old id -> new id, or -1

    VertexId parent_of(VertexId local) const { return to_parent[size_t(local)]; }
    VertexId local_of(VertexId parent) const { return from_parent[size_t(parent)]; }

    VertexSet lift(const VertexSet& local) const {
        VertexSet out(int(from_parent.size()));
        local.for_each([&](VertexId v) { out.add(to_parent[size_t(v)]); });
        return out;
    }
    VertexSet restrict(const VertexSet& parent) const {
        VertexSet out(graph.vertex_count());
        parent.for_each([&](VertexId v) {
            if (from_parent[size_t(v)] >= 0) out.add(from_parent[size_t(v)]);
        });
        return out;
    }
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& x) {
    InducedSubgraph sub;
    sub.to_parent = x.members();
    sub.from_parent.assign(size_t(g.vertex_count()), -1);
    for (size_t i = 0; i < sub.to_parent.size(); i++)
        sub.from_parent[size_t(sub.to_parent[i])] = VertexId(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < sub.to_parent.size(); i++)
        for (size_t j = i + 1; j < sub.to_parent.size(); j++)
            if (g.adjacent(sub.to_parent[i], sub.to_parent[j]))
                edges.emplace_back(int(i), int(j));
    sub.graph = Graph::from_edge_list(int(sub.to_parent.size()), edges);
    return sub;
}

inline bool is_clique(const Graph& g, const VertexSet& x) {
    auto vs = x.members();
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = i + 1; j < vs.size(); j++)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) {
        VertexSet overlap = x & y;
        throw InvalidArgument("is_complete_between: sets overlap at vertex " +
                              std::to_string(overlap.first()));
    }
    bool ok = true;
    x.for_each([&](VertexId u) {
        if (ok && !y.is_subset_of(g.neighbors(u))) ok = false;
    });
    return ok;
}

// d nonempty, g[d] connected, and d dominates all of g.
inline bool is_connected_dominating(const Graph& g, const VertexSet& d) {
    if (d.empty()) throw InvalidArgument("is_connected_dominating: empty set");
    if (components(g, d).size() != 1) return false;
    return dominates(g, d, g.vertex_set() - d);
}

} // namespace lpt
