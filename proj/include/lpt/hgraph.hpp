#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lpt/graph.hpp"
#include "lpt/oracle.hpp"
#include "lpt/treewidth.hpp"

#include <nlohmann/json.hpp>

namespace lpt {

// An H-representation: host graph h, its subdivision h_phi, the per-edge
// subdivision paths, and the segment map phi of the represented graph.
//
// h_phi vertex ids are canonical: host vertices first (host id i maps to
// h_phi id i), then for each host edge in sorted order its internal vertices
// in path order. Labels are "v<i>" and "e<a>-<b>/<k>".
struct HRepresentation {
    Graph h;
    Graph h_phi;
    std::vector<VertexId> host_image;                             // host id -> h_phi id
    std::map<std::pair<int, int>, std::vector<VertexId>> edge_paths; // (a<b) -> h_phi path a..b
    std::vector<VertexSet> phi;                                   // G vertex -> segment

    int represented_vertices() const { return int(phi.size()); }

    std::string label(VertexId hphi_vertex) const {
        for (size_t i = 0; i < host_image.size(); i++)
            if (host_image[i] == hphi_vertex) return "v" + std::to_string(i);
        for (const auto& [edge, path] : edge_paths)
            for (size_t k = 1; k + 1 < path.size(); k++)
                if (path[k] == hphi_vertex)
                    return "e" + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                           "/" + std::to_string(k);
        return "?" + std::to_string(hphi_vertex);
    }

    VertexId vertex_by_label(const std::string& lab) const {
        if (!lab.empty() && lab[0] == 'v') {
            int i = std::stoi(lab.substr(1));
            if (i < 0 || i >= int(host_image.size())) throw InvalidArgument("bad host label " + lab);
            return host_image[size_t(i)];
        }
        if (!lab.empty() && lab[0] == 'e') {
            auto dash = lab.find('-');
            auto slash = lab.find('/');
            if (dash == std::string::npos || slash == std::string::npos)
                throw InvalidArgument("bad label " + lab);
            int a = std::stoi(lab.substr(1, dash - 1));
            int b = std::stoi(lab.substr(dash + 1, slash - dash - 1));
            int k = std::stoi(lab.substr(slash + 1));
            if (a > b) std::swap(a, b);
            auto it = edge_paths.find({a, b});
            if (it == edge_paths.end()) throw InvalidArgument("no host edge for label " + lab);
            if (k < 1 || k + 1 > int(it->second.size()) - 1)
                throw InvalidArgument("internal index out of range in label " + lab);
            return it->second[size_t(k)];
        }
        throw InvalidArgument("bad h_phi label " + lab);
    }

    // Segment owners of an h_phi vertex: V_x = { v in G : x in phi(v) }.
    VertexSet segment_owners(VertexId hphi_vertex) const {
        VertexSet out(represented_vertices());
        for (size_t v = 0; v < phi.size(); v++)
            if (phi[v].contains(hphi_vertex)) out.add(int(v));
        return out;
    }
};

// Build the subdivision skeleton: host + path length per edge (length >= 1,
// length-1 internal vertices). phi left empty.
inline HRepresentation make_skeleton(const Graph& host,
                                     const std::map<std::pair<int, int>, int>& lengths) {
    if (host.vertex_count() < 2) throw InvalidArgument("host must have at least 2 vertices");
    if (!is_connected(host)) throw InvalidArgument("host must be connected");
    HRepresentation rep;
    rep.h = host;
    int next = host.vertex_count();
    std::vector<std::pair<int, int>> phi_edges;
    for (auto [a, b] : host.edges()) {
        auto it = lengths.find({a, b});
        int len = it == lengths.end() ? 1 : it->second;
        if (len < 1) throw InvalidArgument("subdivision length must be >= 1");
        std::vector<VertexId> path;
        path.push_back(a);
        for (int k = 1; k < len; k++) path.push_back(next++);
        path.push_back(b);
        for (size_t i = 0; i + 1 < path.size(); i++) phi_edges.emplace_back(path[i], path[i + 1]);
        rep.edge_paths[{a, b}] = std::move(path);
    }
    rep.h_phi = Graph::from_edge_list(next, phi_edges);
    rep.host_image.resize(size_t(host.vertex_count()));
    for (int i = 0; i < host.vertex_count(); i++) rep.host_image[size_t(i)] = i;
    return rep;
}

// Structural validity: every segment nonempty and connected in h_phi.
inline void validate_representation(const HRepresentation& rep) {
    for (size_t v = 0; v < rep.phi.size(); v++) {
        if (rep.phi[v].empty())
            throw InvalidArgument("segment of vertex " + std::to_string(v) + " is empty");
        if (components(rep.h_phi, rep.phi[v]).size() != 1)
            throw InvalidArgument("segment of vertex " + std::to_string(v) +
                                  " is disconnected in the subdivision");
    }
}

// The intersection graph realized by the representation.
inline Graph realize(const HRepresentation& rep) {
    validate_representation(rep);
    const int n = rep.represented_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rep.phi[size_t(u)].intersects(rep.phi[size_t(v)])) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Niceness: (a) every h_phi vertex covered by a segment, (b) every h_phi edge
// jointly covered by a segment.
inline bool is_nice(const HRepresentation& rep, std::string* why = nullptr) {
    for (int x = 0; x < rep.h_phi.vertex_count(); x++)
        if (rep.segment_owners(x).empty()) {
            if (why) *why = "vertex " + rep.label(x) + " uncovered";
            return false;
        }
    for (auto [x, y] : rep.h_phi.edges()) {
        VertexSet joint = rep.segment_owners(x) & rep.segment_owners(y);
        if (joint.empty()) {
            if (why) *why = "edge " + rep.label(x) + "-" + rep.label(y) + " not jointly covered";
            return false;
        }
    }
    return true;
}

namespace detail {

// Contraction workspace over the original h_phi: union-find with host tags
// and owner sets.
struct NiceNormalizer {
    const HRepresentation& rep;
    Graph g0;                                  // realize(rep), fixed reference
    std::vector<int> parent;
    std::vector<int> host_tag;                 // -1 or host vertex id, per root
    std::vector<VertexSet> owners;             // per root, over G
    std::vector<int> min_id;                   // canonical order key per root
    bool changed = false;

    explicit NiceNormalizer(const HRepresentation& r) : rep(r), g0(realize(r)) {
        const int n = rep.h_phi.vertex_count();
        parent.resize(size_t(n));
        host_tag.assign(size_t(n), -1);
        owners.assign(size_t(n), VertexSet(rep.represented_vertices()));
        min_id.resize(size_t(n));
        for (int i = 0; i < n; i++) { parent[size_t(i)] = i; min_id[size_t(i)] = i; }
        for (size_t i = 0; i < rep.host_image.size(); i++)
            host_tag[size_t(rep.host_image[i])] = int(i);
        for (int x = 0; x < n; x++) owners[size_t(x)] = rep.segment_owners(x);
    }

    int find(int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); }

    void merge(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (host_tag[size_t(rx)] >= 0 && host_tag[size_t(ry)] >= 0)
            throw InvalidArgument("normalize_nice: contraction would merge host vertices v" +
                                  std::to_string(host_tag[size_t(rx)]) + " and v" +
                                  std::to_string(host_tag[size_t(ry)]));
        int keep = rx, drop = ry;
        if (host_tag[size_t(ry)] >= 0) std::swap(keep, drop);
        parent[size_t(drop)] = keep;
        owners[size_t(keep)] |= owners[size_t(drop)];
        min_id[size_t(keep)] = std::min(min_id[size_t(keep)], min_id[size_t(drop)]);
        changed = true;
    }

    // current collapsed path of a host edge, as roots
    std::vector<int> current_path(const std::pair<int, int>& e) {
        std::vector<int> out;
        for (VertexId v : rep.edge_paths.at(e)) {
            int r = find(v);
            if (out.empty() || out.back() != r) out.push_back(r);
        }
        return out;
    }

    // all current edges as root pairs with a representative original edge,
    // canonical order
    std::vector<std::pair<int, int>> current_edges() {
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> out;
        for (const auto& [e, path] : rep.edge_paths) {
            auto cp = current_path(e);
            for (size_t i = 0; i + 1 < cp.size(); i++) {
                int a = cp[i], b = cp[i + 1];
                auto key = std::minmax(min_id[size_t(a)], min_id[size_t(b)]);
                if (seen.insert({key.first, key.second}).second) out.push_back({a, b});
            }
        }
        std::sort(out.begin(), out.end(), [&](auto& p, auto& q) {
            auto kp = std::minmax(min_id[size_t(p.first)], min_id[size_t(p.second)]);
            auto kq = std::minmax(min_id[size_t(q.first)], min_id[size_t(q.second)]);
            return kp < kq;
        });
        return out;
    }

    // contract uncovered nodes; host vertices of degree >= 3 are rejected
    bool uncovered_pass() {
        bool did = false;
        for (;;) {
            auto edges = current_edges();
            std::map<int, std::vector<int>> nbrs;
            for (auto [a, b] : edges) {
                nbrs[a].push_back(b);
                nbrs[b].push_back(a);
            }
            int worst = -1;
            for (auto& [r, ns] : nbrs) {
                if (!owners[size_t(r)].empty()) continue;
                if (worst < 0 || min_id[size_t(r)] < min_id[size_t(worst)]) worst = r;
            }
            if (worst < 0) return did;
            if (host_tag[size_t(worst)] >= 0 && int(nbrs[worst].size()) >= 3)
                throw InvalidArgument("normalize_nice: host branch vertex v" +
                                      std::to_string(host_tag[size_t(worst)]) +
                                      " is uncovered and has degree >= 3");
            auto& ns = nbrs[worst];
            int pick = ns.front();
            for (int cand : ns)
                if (min_id[size_t(cand)] < min_id[size_t(pick)]) pick = cand;
            merge(worst, pick);
            did = true;
        }
    }

    // contract edges not jointly covered; reject if contraction would change G
    bool joint_pass() {
        bool did = false;
        for (;;) {
            bool found = false;
            for (auto [a, b] : current_edges()) {
                VertexSet oa = owners[size_t(find(a))], ob = owners[size_t(find(b))];
                if (oa.intersects(ob)) continue;
                // safety: merging may only identify segments that already meet
                bool safe = true;
                VertexId bad_u = -1, bad_v = -1;
                (oa - ob).for_each([&](VertexId u) {
                    if (!safe) return;
                    (ob - oa).for_each([&](VertexId v) {
                        if (safe && !g0.adjacent(u, v)) { safe = false; bad_u = u; bad_v = v; }
                    });
                });
                if (!safe)
                    throw InvalidArgument(
                        "normalize_nice: edge " + rep.label(min_id[size_t(find(a))]) + "-" +
                        rep.label(min_id[size_t(find(b))]) +
                        " is not jointly covered and cannot be contracted (segments of " +
                        std::to_string(bad_u) + " and " + std::to_string(bad_v) +
                        " would start to intersect)");
                merge(a, b);
                did = found = true;
                break;
            }
            if (!found) return did;
        }
    }

    HRepresentation rebuild() {
        HRepresentation out;
        out.h = rep.h;
        // new ids: host images in host order, then internals per sorted edge
        std::map<int, int> new_id;
        int next = 0;
        out.host_image.resize(rep.host_image.size());
        for (size_t i = 0; i < rep.host_image.size(); i++) {
            int r = find(rep.host_image[i]);
            if (!new_id.count(r)) new_id[r] = next++;
            out.host_image[i] = new_id[r];
        }
        std::vector<std::pair<int, int>> phi_edges;
        for (const auto& [e, path] : rep.edge_paths) {
            auto cp = current_path(e);
            std::vector<VertexId> new_path;
            for (int r : cp) {
                if (!new_id.count(r)) new_id[r] = next++;
                new_path.push_back(new_id[r]);
            }
            if (new_path.size() < 2)
                throw InvalidArgument("normalize_nice: host edge " + std::to_string(e.first) + "-" +
                                      std::to_string(e.second) + " collapsed entirely");
            for (size_t i = 0; i + 1 < new_path.size(); i++)
                phi_edges.emplace_back(new_path[i], new_path[i + 1]);
            out.edge_paths[e] = std::move(new_path);
        }
        out.h_phi = Graph::from_edge_list(next, phi_edges);
        out.phi.assign(rep.phi.size(), VertexSet(next));
        for (auto& [r, id] : new_id)
            owners[size_t(r)].for_each([&](VertexId v) { out.phi[size_t(v)].add(id); });
        return out;
    }
};

} // namespace detail

// Turn a representation into a nice one by contracting uncovered subdivision
// vertices and not-jointly-covered edges. Partial by design: inputs needing
// anything else are rejected with the offending vertex or edge.
inline HRepresentation normalize_nice(const HRepresentation& rep) {
    validate_representation(rep);
    if (is_nice(rep)) return rep;
    detail::NiceNormalizer norm(rep);
    bool more = true;
    while (more) {
        bool a = norm.uncovered_pass();
        bool b = norm.joint_pass();
        more = a || b;
    }
    HRepresentation out = norm.rebuild();
    std::string why;
    if (!is_nice(out, &why))
        throw InvalidArgument("normalize_nice: still not nice after contraction: " + why);
    if (!(realize(out) == norm.g0))
        throw InternalContradictionError("normalize_nice: realized graph changed");
    return out;
}

// Tree decomposition of h_phi: exact branch-and-bound up to 25 vertices,
// otherwise an exact decomposition of H lifted with size-<=3 chain bags.
inline TreeDecomposition decompose(const HRepresentation& rep) {
    if (rep.h_phi.vertex_count() <= 25) return exact_tree_decomposition(rep.h_phi);

    TreeDecomposition td_h = exact_tree_decomposition(rep.h);
    const int n = rep.h_phi.vertex_count();
    TreeDecomposition td;
    for (const auto& bag : td_h.bags) {
        VertexSet lifted(n);
        bag.for_each([&](VertexId hv) { lifted.add(rep.host_image[size_t(hv)]); });
        td.bags.push_back(lifted);
    }
    std::vector<std::pair<int, int>> tedges;
    for (auto [u, v] : td_h.tree.edges()) tedges.emplace_back(u, v);

    for (const auto& [e, path] : rep.edge_paths) {
        if (path.size() == 2) continue;
        VertexId b_img = path.back();
        // a host bag containing both endpoints, guaranteed by condition (ii)
        int anchor = -1;
        for (size_t t = 0; t < td_h.bags.size(); t++)
            if (td_h.bags[t].contains(e.first) && td_h.bags[t].contains(e.second)) {
                anchor = int(t);
                break;
            }
        if (anchor < 0)
            throw InternalContradictionError("decompose: no bag holds host edge " +
                                             std::to_string(e.first) + "-" + std::to_string(e.second));
        int prev = anchor;
        for (size_t i = 0; i + 1 < path.size(); i++) {
            VertexSet bag(n);
            bag.add(path[i]);
            bag.add(path[i + 1]);
            if (i + 2 < path.size()) bag.add(b_img);
            int id = int(td.bags.size());
            td.bags.push_back(bag);
            tedges.emplace_back(prev, id);
            prev = id;
        }
    }
    td.tree = Graph::from_edge_list(int(td.bags.size()), tedges);
    td.exact_width = false;
    return td;
}

// A node t whose bag's segment owners hit every longest path: intersect the
// tree-node supports of all longest paths; nonempty by the Helly property of
// subtrees. Deterministic pick: minimum node id.
inline int helly_bag(const HRepresentation& rep, const TreeDecomposition& td,
                     const OracleLimits& limits = {}) {
    Graph g = realize(rep);
    if (!is_connected(g)) throw InvalidArgument("helly_bag: realized graph is disconnected");
    auto report = enumerate_longest_paths(g, limits);

    const int nt = td.tree.vertex_count();
    std::vector<VertexSet> support(rep.phi.size(), VertexSet(nt));
    for (size_t v = 0; v < rep.phi.size(); v++)
        for (int t = 0; t < nt; t++)
            if (td.bags[size_t(t)].intersects(rep.phi[v])) support[v].add(t);

    VertexSet common = VertexSet::full(nt);
    for (const Path& p : report.paths) {
        VertexSet path_support(nt);
        for (VertexId v : p.vertices) path_support |= support[size_t(v)];
        common &= path_support;
    }
    if (common.empty())
        throw InternalContradictionError(
            "helly_bag: longest-path supports have empty intersection; the Helly argument "
            "requires valid representation and decomposition");
    return common.first();
}

// Intermediate graph: h_phi with every edge touching a vertex outside
// V(H) ∪ X(t) contracted. h_phi stays a subdivision of it.
struct IntermediateGraph {
    Graph graph;                                                    // Ĥ
    std::vector<VertexId> to_hphi;                                  // Ĥ id -> h_phi id
    std::map<std::pair<int, int>, std::vector<VertexId>> edge_paths; // Ĥ edge (x<y) -> h_phi path
};

inline IntermediateGraph intermediate_graph(const HRepresentation& rep,
                                            const TreeDecomposition& td, int t) {
    VertexSet keep(rep.h_phi.vertex_count());
    for (VertexId img : rep.host_image) keep.add(img);
    keep |= td.bags[size_t(t)];

    IntermediateGraph out;
    out.to_hphi = keep.members();
    std::vector<int> to_new(size_t(rep.h_phi.vertex_count()), -1);
    for (size_t i = 0; i < out.to_hphi.size(); i++) to_new[size_t(out.to_hphi[i])] = int(i);

    std::vector<std::pair<int, int>> edges;
    for (const auto& [e, path] : rep.edge_paths) {
        size_t last = 0; // path[0] is a host image, always kept
        for (size_t i = 1; i < path.size(); i++) {
            if (to_new[size_t(path[i])] < 0) continue;
            int x = to_new[size_t(path[last])], y = to_new[size_t(path[i])];
            std::vector<VertexId> sub(path.begin() + long(last), path.begin() + long(i) + 1);
            if (x > y) {
                std::swap(x, y);
                std::reverse(sub.begin(), sub.end());
            }
            edges.emplace_back(x, y);
            out.edge_paths[{x, y}] = std::move(sub);
            last = i;
        }
    }
    out.graph = Graph::from_edge_list(int(out.to_hphi.size()), edges);
    return out;
}

// Longest prefix of the oriented subdivision path a->b fully inside phi(v).
inline int reach(const HRepresentation& rep, VertexId v, const std::vector<VertexId>& oriented_path) {
    if (!rep.phi[size_t(v)].contains(oriented_path.front()))
        throw InvalidArgument("reach: vertex " + std::to_string(v) +
                              " does not own the path's first vertex");
    int i = 0;
    while (i < int(oriented_path.size()) && rep.phi[size_t(v)].contains(oriented_path[size_t(i)])) i++;
    return i;
}

struct ExtractionTrace {
    int helly_node = -1;
    VertexSet x_bag;                                   // over h_phi
    std::map<int, VertexSet> v_x;                      // bag member -> V_x (over G)
    IntermediateGraph intermediate;
    std::map<int, std::vector<int>> a_x;               // bag member -> A_x (Ĥ ids)
    std::map<std::tuple<int, int, int>, int> selections; // (x, a->b as Ĥ ids) -> chosen G vertex
    VertexSet q;

    int host_edges = 0;       // |E(H)|
    int intermediate_edges = 0; // |E(Ĥ)|
    int width = 0;            // achieved decomposition width
    bool exact_width = false;
    bool s1_ok = false;       // |E(Ĥ)| <= |E(H)| + width + 1
    bool s2_ok = false;       // |Q| <= |X| * 2 * |E(Ĥ)|
    std::optional<int> theorem_bound; // 4*(width+1)*|E(H)|, when |E(H)| >= 2
    bool theorem_ok = true;
};

// The Q-set transversal: for every bag member x, every a in A_x and every
// oriented intermediate edge a->b, pick the owner of a in V_x with maximum
// reach toward b (ties: minimum vertex id).
inline TransversalCertificate extract_q(const HRepresentation& rep, const TreeDecomposition& td,
                                        const OracleLimits& limits = {},
                                        ExtractionTrace* trace_out = nullptr) {
    ExtractionTrace trace;
    trace.helly_node = helly_bag(rep, td, limits);
    trace.x_bag = td.bags[size_t(trace.helly_node)];
    trace.intermediate = intermediate_graph(rep, td, trace.helly_node);
    trace.width = td.width();
    trace.exact_width = td.exact_width;
    trace.host_edges = rep.h.edge_count();
    trace.intermediate_edges = trace.intermediate.graph.edge_count();
    trace.s1_ok = trace.intermediate_edges <= trace.host_edges + trace.width + 1;

    const Graph& hat = trace.intermediate.graph;
    std::vector<VertexSet> owners_by_hat;
    for (VertexId hv : trace.intermediate.to_hphi) owners_by_hat.push_back(rep.segment_owners(hv));

    auto oriented = [&](int a, int b) {
        auto it = trace.intermediate.edge_paths.find({std::min(a, b), std::max(a, b)});
        std::vector<VertexId> path = it->second;
        if (a > b) std::reverse(path.begin(), path.end());
        return path;
    };

    VertexSet q(rep.represented_vertices());
    for (VertexId x : trace.x_bag.members()) {
        VertexSet vx = rep.segment_owners(x);
        trace.v_x[x] = vx;
        std::vector<int> ax;
        for (int a = 0; a < hat.vertex_count(); a++)
            if (vx.intersects(owners_by_hat[size_t(a)])) ax.push_back(a);
        trace.a_x[x] = ax;
        for (int a : ax) {
            for (VertexId b : hat.neighbors(a).members()) {
                auto path = oriented(a, b);
                VertexSet pool = vx & owners_by_hat[size_t(a)];
                int best_v = -1, best_reach = -1;
                pool.for_each([&](VertexId v) {
                    int r = reach(rep, v, path);
                    if (r > best_reach) { best_reach = r; best_v = v; }
                });
                trace.selections[{x, a, b}] = best_v;
                q.add(best_v);
            }
        }
    }
    trace.q = q;
    trace.s2_ok = q.size() <= trace.x_bag.size() * 2 * trace.intermediate_edges;
    if (trace.host_edges >= 2) {
        trace.theorem_bound = 4 * (trace.width + 1) * trace.host_edges;
        trace.theorem_ok = q.size() <= *trace.theorem_bound;
    }

    TransversalCertificate cert;
    cert.transversal = q;
    cert.method = Method::hgraph;
    cert.bound_claimed = trace.theorem_bound;
    try_verify(realize(rep), cert, limits);
    if (trace_out) *trace_out = std::move(trace);
    return cert;
}

struct ClaimsReport {
    bool vx_cliques = false;       // each V_x is a clique in G
    bool q_meets_every_vx = false; // Q ∩ V_x nonempty for all bag members
    bool claim1 = false;           // Q ∩ V_x dominates bd(V(G)\S, S ∩ V_x)
    bool claim2 = false;           // Q is a longest path transversal
    std::string detail;

    bool all() const { return vx_cliques && q_meets_every_vx && claim1 && claim2; }
};

inline ClaimsReport verify_claims(const ExtractionTrace& trace, const Graph& g,
                                  const OracleLimits& limits = {}) {
    ClaimsReport r;
    r.vx_cliques = true;
    r.q_meets_every_vx = true;
    r.claim1 = true;

    VertexSet s(g.vertex_count());
    for (const auto& [x, vx] : trace.v_x) s |= vx;

    for (const auto& [x, vx] : trace.v_x) {
        if (!is_clique(g, vx)) {
            r.vx_cliques = false;
            r.detail += "V_" + std::to_string(x) + " not a clique; ";
        }
        VertexSet qx = trace.q & vx;
        if (qx.empty()) {
            r.q_meets_every_vx = false;
            r.detail += "Q misses V_" + std::to_string(x) + "; ";
        }
        VertexSet outside = g.vertex_set() - s;
        VertexSet svx = s & vx;
        VertexSet bd_set = boundary(g, outside, svx);
        if (!dominates(g, qx, bd_set)) {
            r.claim1 = false;
            r.detail += "claim 1 fails at x=" + std::to_string(x) + "; ";
        }
    }
    r.claim2 = is_transversal(g, trace.q, limits);
    if (!r.claim2) r.detail += "Q is not a transversal; ";
    return r;
}

// --- JSON format ---------------------------------------------------------
// { "h": {"n":…, "edges":[[a,b],…]},
//   "subdivision": {"a-b": length, …},
//   "phi": {"0": ["v0","e0-1/1",…], …} }

inline HRepresentation representation_from_json(const nlohmann::json& j) {
    if (!j.contains("h") || !j["h"].contains("n") || !j["h"].contains("edges"))
        throw InvalidArgument("representation json: missing h.n or h.edges");
    int hn = j["h"]["n"].get<int>();
    std::vector<std::pair<int, int>> hedges;
    for (const auto& e : j["h"]["edges"]) hedges.emplace_back(e[0].get<int>(), e[1].get<int>());
    Graph host = Graph::from_edge_list(hn, hedges);

    std::map<std::pair<int, int>, int> lengths;
    if (j.contains("subdivision"))
        for (auto it = j["subdivision"].begin(); it != j["subdivision"].end(); ++it) {
            auto dash = it.key().find('-');
            if (dash == std::string::npos)
                throw InvalidArgument("representation json: bad subdivision key " + it.key());
            int a = std::stoi(it.key().substr(0, dash));
            int b = std::stoi(it.key().substr(dash + 1));
            if (a > b) std::swap(a, b);
            lengths[{a, b}] = it.value().get<int>();
        }
    HRepresentation rep = make_skeleton(host, lengths);

    if (!j.contains("phi")) throw InvalidArgument("representation json: missing phi");
    int n = 0;
    for (auto it = j["phi"].begin(); it != j["phi"].end(); ++it)
        n = std::max(n, std::stoi(it.key()) + 1);
    rep.phi.assign(size_t(n), VertexSet(rep.h_phi.vertex_count()));
    for (auto it = j["phi"].begin(); it != j["phi"].end(); ++it) {
        int v = std::stoi(it.key());
        for (const auto& lab : it.value())
            rep.phi[size_t(v)].add(rep.vertex_by_label(lab.get<std::string>()));
    }
    validate_representation(rep);
    return rep;
}

inline nlohmann::json representation_to_json(const HRepresentation& rep) {
    nlohmann::json j;
    j["h"]["n"] = rep.h.vertex_count();
    j["h"]["edges"] = nlohmann::json::array();
    for (auto [a, b] : rep.h.edges()) j["h"]["edges"].push_back({a, b});
    j["subdivision"] = nlohmann::json::object();
    for (const auto& [e, path] : rep.edge_paths)
        j["subdivision"][std::to_string(e.first) + "-" + std::to_string(e.second)] =
            int(path.size()) - 1;
    j["phi"] = nlohmann::json::object();
    for (size_t v = 0; v < rep.phi.size(); v++) {
        auto arr = nlohmann::json::array();
        rep.phi[v].for_each([&](VertexId x) { arr.push_back(rep.label(x)); });
        j["phi"][std::to_string(v)] = arr;
    }
    return j;
}

} // namespace lpt
