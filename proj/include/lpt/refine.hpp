#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lpt/graph.hpp"
#include "lpt/oracle.hpp"

namespace lpt {

// One component C of g - m together with its boundary bd(C, m) and the
// longest length of a path in g[C] anchored at the boundary.
struct ComponentProfile {
    VertexSet component;
    VertexSet boundary;
    int t_value = 0;
};

// Profiles for the components of g - m, sorted by descending t_value, ties by
// minimum member. Empty when m covers the graph.
inline std::vector<ComponentProfile> component_profiles(const Graph& g, const VertexSet& m,
                                                        const OracleLimits& limits = {}) {
    VertexSet rest = g.vertex_set() - m;
    std::vector<ComponentProfile> out;
    for (const VertexSet& comp : components(g, rest)) {
        ComponentProfile p;
        p.component = comp;
        p.boundary = boundary(g, comp, m);
        auto t = longest_anchored_path_length(g, comp, p.boundary, limits);
        p.t_value = t.value_or(0); // g connected and m nonempty => boundary nonempty
        out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const ComponentProfile& a, const ComponentProfile& b) {
        if (a.t_value != b.t_value) return a.t_value > b.t_value;
        return a.component.first() < b.component.first();
    });
    return out;
}

// The path-maximal component, or nullopt when m covers the graph.
inline std::optional<ComponentProfile> path_maximal_component(const Graph& g, const VertexSet& m,
                                                              const OracleLimits& limits = {}) {
    auto profiles = component_profiles(g, m, limits);
    if (profiles.empty()) return std::nullopt;
    return profiles.front();
}

// Hypotheses of the refinement theorem, re-verified before use.
//   m : a longest path transversal of g
//   d : a connected dominating set of g[m], d subseteq m
//   s : a subset of m dominating bd(C_max, m)
struct RefinementInput {
    Graph g;
    VertexSet m;
    VertexSet d;
    VertexSet s;
    // When the oracle cannot check that m is a transversal at this size, the
    // caller must vouch for it explicitly.
    bool m_asserted_by_caller = false;
};

namespace detail {

// Validates every hypothesis; throws HypothesisError naming the violated one.
// Returns whether "m is a transversal" was oracle-checked (vs taken on trust).
inline bool validate_refinement_input(const RefinementInput& in, const OracleLimits& limits) {
    const Graph& g = in.g;
    if (!is_connected(g)) throw HypothesisError("g connected", "graph is disconnected");
    if (!in.d.is_subset_of(in.m)) throw HypothesisError("d subset of m", in.d.to_string());
    if (!in.s.is_subset_of(in.m)) throw HypothesisError("s subset of m", in.s.to_string());

    bool m_checked = false;
    if (g.vertex_count() <= limits.enum_limit) {
        if (!is_transversal(g, in.m, limits))
            throw HypothesisError("m is a longest path transversal",
                                  "some longest path avoids m=" + in.m.to_string());
        m_checked = true;
    } else if (!in.m_asserted_by_caller) {
        throw HypothesisError("m is a longest path transversal",
                              "oracle infeasible at n=" + std::to_string(g.vertex_count()) +
                                  " and caller did not assert m");
    }

    InducedSubgraph gm = induced(g, in.m);
    VertexSet d_local = gm.restrict(in.d);
    if (d_local.empty() || !is_connected_dominating(gm.graph, d_local))
        throw HypothesisError("d is a connected dominating set of g[m]", in.d.to_string());

    if (auto cmax = path_maximal_component(g, in.m, limits)) {
        VertexId w = undominated_witness(g, in.s, cmax->boundary);
        if (w >= 0)
            throw HypothesisError("s dominates bd(C_max, m)",
                                  "vertex " + std::to_string(w) + " undominated by s");
    }
    return m_checked;
}

} // namespace detail

// The refinement theorem: under the hypotheses above, d ∪ s is a longest path
// transversal.
inline TransversalCertificate refine_transversal(const RefinementInput& in,
                                                 const OracleLimits& limits = {}) {
    bool m_checked = detail::validate_refinement_input(in, limits);
    TransversalCertificate cert;
    cert.transversal = in.d | in.s;
    cert.method = Method::refine;
    cert.assumed_input = !m_checked;
    try_verify(in.g, cert, limits);
    return cert;
}

// A connected dominating set is itself a longest path transversal.
inline TransversalCertificate cds_transversal(const Graph& g, const VertexSet& d,
                                              const OracleLimits& limits = {}) {
    if (!is_connected_dominating(g, d))
        throw InvalidArgument("cds_transversal: set is not a connected dominating set");
    TransversalCertificate cert;
    cert.transversal = d;
    cert.method = Method::refine;
    try_verify(g, cert, limits);
    return cert;
}

// An inclusion-minimal subset of pool dominating target: greedy cover, then
// one-pass pruning in descending id order.
inline VertexSet minimal_dominating_subset(const Graph& g, const VertexSet& pool,
                                           const VertexSet& target) {
    {
        VertexId w = undominated_witness(g, pool, target);
        if (w >= 0)
            throw InvalidArgument("minimal_dominating_subset: pool does not dominate target, witness " +
                                  std::to_string(w));
    }
    const int n = g.vertex_count();
    if (target.empty()) return VertexSet(n);

    auto covered_by = [&](VertexId d) {
        VertexSet c = g.neighbors(d) & target;
        if (target.contains(d)) c.add(d);
        return c;
    };

    // greedy cover; ties go to the lowest id
    VertexSet chosen(n);
    VertexSet uncovered = target;
    while (!uncovered.empty()) {
        VertexId best = -1;
        int best_gain = 0;
        pool.for_each([&](VertexId cand) {
            if (chosen.contains(cand)) return;
            int gain = (covered_by(cand) & uncovered).size();
            if (gain > best_gain) { best_gain = gain; best = cand; }
        });
        chosen.add(best);
        uncovered -= covered_by(best);
    }

    // one-pass pruning, descending id
    std::vector<VertexId> order = chosen.members();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexSet without = chosen;
        without.remove(*it);
        if (dominates(g, without, target)) chosen = without;
    }
    return chosen;
}

} // namespace lpt
