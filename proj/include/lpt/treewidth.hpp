#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpt/graph.hpp"

namespace lpt {

struct TreeDecomposition {
    Graph tree;                   // nodes are bag indices
    std::vector<VertexSet> bags;  // over the decomposed graph's vertices
    bool exact_width = false;     // solver-certified minimum width

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, b.size() - 1);
        return w;
    }
};

// Conditions (i)-(iii): every vertex in some bag, every edge in some bag,
// every vertex's bag support nonempty and connected in the tree.
inline bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td,
                                        std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (td.tree.vertex_count() != int(td.bags.size())) return fail("bag count != tree size");
    if (td.bags.empty()) return fail("no bags");
    if (!is_connected(td.tree) && td.tree.vertex_count() > 1) return fail("tree not connected");
    if (td.tree.edge_count() != td.tree.vertex_count() - 1) return fail("tree has a cycle");
    for (int v = 0; v < g.vertex_count(); v++) {
        VertexSet support(td.tree.vertex_count());
        for (size_t t = 0; t < td.bags.size(); t++)
            if (td.bags[t].contains(v)) support.add(int(t));
        if (support.empty()) return fail("vertex " + std::to_string(v) + " in no bag");
        if (components(td.tree, support).size() != 1)
            return fail("bag support of vertex " + std::to_string(v) + " not connected");
    }
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& b : td.bags)
            if (b.contains(u) && b.contains(v)) { found = true; break; }
        if (!found)
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag");
    }
    return true;
}

namespace detail {

// Elimination-order branch and bound with subset memoization and a min-fill
// upper bound. Exact for n <= 25.
class TreewidthSolver {
public:
    explicit TreewidthSolver(const Graph& g) : n_(g.vertex_count()) {
        adj_.resize(size_t(n_));
        for (int v = 0; v < n_; v++) adj_[size_t(v)] = std::uint32_t(g.neighbors(v).word());
    }

    // returns (width, elimination order)
    std::pair<int, std::vector<int>> solve() {
        if (n_ == 0) return {0, {}};
        if (n_ == 1) return {0, {0}};
        auto [ubw, uborder] = min_fill_order();
        best_width_ = ubw;
        best_order_ = uborder;
        cur_adj_ = adj_;
        order_.clear();
        memo_.clear();
        dfs(0, 0);
        return {best_width_, best_order_};
    }

private:
    int degree_in(std::uint32_t row, std::uint32_t alive) const {
        return std::popcount(row & alive);
    }

    std::pair<int, std::vector<int>> min_fill_order() {
        auto adj = adj_;
        std::uint32_t alive = (n_ == 32) ? ~0u : (1u << n_) - 1;
        std::vector<int> order;
        int width = 0;
        for (int step = 0; step < n_; step++) {
            int best = -1;
            long best_fill = -1;
            std::uint32_t scan = alive;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                std::uint32_t nb = adj[size_t(v)] & alive;
                long fill = 0;
                std::uint32_t a = nb;
                while (a) {
                    int x = std::countr_zero(a);
                    a &= a - 1;
                    fill += std::popcount(nb & ~adj[size_t(x)] & ~(1u << x));
                }
                if (best < 0 || fill < best_fill) { best = v; best_fill = fill; }
            }
            std::uint32_t nb = adj[size_t(best)] & alive;
            width = std::max(width, std::popcount(nb));
            std::uint32_t a = nb;
            while (a) {
                int x = std::countr_zero(a);
                a &= a - 1;
                adj[size_t(x)] |= nb & ~(1u << x);
            }
            alive &= ~(1u << best);
            order.push_back(best);
        }
        return {width, order};
    }

    void dfs(std::uint32_t eliminated, int width_so_far) {
        if (width_so_far >= best_width_) return; // only strictly better is useful
        int remaining = n_ - std::popcount(eliminated);
        if (remaining <= width_so_far + 1) {
            // eliminate the rest in any order without exceeding width_so_far
            best_width_ = width_so_far;
            best_order_ = order_;
            std::uint32_t rest = ~eliminated & ((n_ == 32) ? ~0u : (1u << n_) - 1);
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                best_order_.push_back(v);
            }
            return;
        }
        auto it = memo_.find(eliminated);
        if (it != memo_.end() && it->second <= width_so_far) return;
        memo_[eliminated] = width_so_far;

        std::uint32_t alive = ~eliminated & ((n_ == 32) ? ~0u : (1u << n_) - 1);

        // a simplicial vertex may always be eliminated first
        std::uint32_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint32_t nb = cur_adj_[size_t(v)] & alive;
            bool simplicial = true;
            std::uint32_t a = nb;
            while (a && simplicial) {
                int x = std::countr_zero(a);
                a &= a - 1;
                if (nb & ~cur_adj_[size_t(x)] & ~(1u << x)) simplicial = false;
            }
            if (simplicial) {
                eliminate_and_recurse(v, eliminated, width_so_far, alive);
                return;
            }
        }

        scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            eliminate_and_recurse(v, eliminated, width_so_far, alive);
        }
    }

    void eliminate_and_recurse(int v, std::uint32_t eliminated, int width_so_far,
                               std::uint32_t alive) {
        std::uint32_t nb = cur_adj_[size_t(v)] & alive & ~(1u << v);
        int cost = std::popcount(nb);
        if (std::max(width_so_far, cost) >= best_width_) return;
        // add fill edges, remember what changed
        std::vector<std::pair<int, std::uint32_t>> undo;
        std::uint32_t a = nb;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            std::uint32_t add = nb & ~cur_adj_[size_t(x)] & ~(1u << x);
            if (add) {
                undo.emplace_back(x, cur_adj_[size_t(x)]);
                cur_adj_[size_t(x)] |= add;
            }
        }
        order_.push_back(v);
        dfs(eliminated | (1u << v), std::max(width_so_far, cost));
        order_.pop_back();
        for (auto& [x, row] : undo) cur_adj_[size_t(x)] = row;
    }

    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> cur_adj_;
    std::vector<int> order_, best_order_;
    int best_width_ = 1 << 20;
    std::unordered_map<std::uint32_t, int> memo_;
};

// Tree decomposition from an elimination order: bag(v) = {v} + later fill
// neighbors, attached at the earliest later fill neighbor's bag.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(size_t(n), 0u);
    for (int v = 0; v < n; v++) adj[size_t(v)] = std::uint32_t(g.neighbors(v).word());
    std::vector<int> pos(size_t(n), 0);
    for (int i = 0; i < n; i++) pos[size_t(order[size_t(i)])] = i;

    std::uint32_t alive = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> bag_mask(size_t(n), 0);
    for (int i = 0; i < n; i++) {
        int v = order[size_t(i)];
        std::uint32_t nb = adj[size_t(v)] & alive & ~(1u << v);
        bag_mask[size_t(i)] = nb | (1u << v);
        std::uint32_t a = nb;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            adj[size_t(x)] |= nb & ~(1u << x);
        }
        alive &= ~(1u << v);
    }

    TreeDecomposition td;
    std::vector<std::pair<int, int>> tedges;
    for (int i = 0; i < n; i++) {
        VertexSet bag(n);
        std::uint32_t m = bag_mask[size_t(i)];
        while (m) {
            int x = std::countr_zero(m);
            m &= m - 1;
            bag.add(x);
        }
        td.bags.push_back(bag);
        // parent: earliest-eliminated later neighbor
        std::uint32_t later = bag_mask[size_t(i)] & ~(1u << order[size_t(i)]);
        int parent = -1;
        std::uint32_t a = later;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            if (parent < 0 || pos[size_t(x)] < parent) parent = pos[size_t(x)];
        }
        if (parent < 0 && i + 1 < n) parent = i + 1; // isolated at elimination
        if (parent >= 0) tedges.emplace_back(i, parent);
    }
    td.tree = Graph::from_edge_list(n, tedges);
    return td;
}

} // namespace detail

// Exact minimum-width tree decomposition; n <= 25 enforced.
inline TreeDecomposition exact_tree_decomposition(const Graph& g) {
    if (g.vertex_count() > 25)
        throw SizeLimitError("exact_tree_decomposition: n=" + std::to_string(g.vertex_count()) +
                             " exceeds the exact solver limit 25");
    if (g.vertex_count() == 0) throw InvalidArgument("exact_tree_decomposition: empty graph");
    detail::TreewidthSolver solver(g);
    auto [width, order] = solver.solve();
    TreeDecomposition td = detail::decomposition_from_order(g, order);
    td.exact_width = true;
    if (td.width() != width)
        throw InternalContradictionError("exact_tree_decomposition: order width mismatch");
    return td;
}

inline int treewidth(const Graph& g) { return exact_tree_decomposition(g).width(); }

// --- PACE 2017 td format -----------------------------------------------------
// `s td <#bags> <width+1> <#vertices>`, `b <id> <members...>`, then tree edges.
// Vertices and bag ids are 1-based.

inline TreeDecomposition read_pace_decomposition(std::istream& in, int expected_vertices) {
    TreeDecomposition td;
    std::string line;
    int lineno = 0;
    long bags = -1, nverts = -1;
    std::vector<std::pair<int, int>> tedges;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "s") {
            std::string td_tok;
            long width_plus_1;
            if (!(ls >> td_tok >> bags >> width_plus_1 >> nverts) || td_tok != "td")
                throw ParseError(lineno, "malformed solution line");
            if (nverts != expected_vertices)
                throw ParseError(lineno, "decomposition is over " + std::to_string(nverts) +
                                             " vertices, expected " + std::to_string(expected_vertices));
            td.bags.assign(size_t(bags), VertexSet(expected_vertices));
            seen.assign(size_t(bags), false);
        } else if (tok == "b") {
            if (bags < 0) throw ParseError(lineno, "bag before solution line");
            long id;
            if (!(ls >> id) || id < 1 || id > bags) throw ParseError(lineno, "bad bag id");
            if (seen[size_t(id - 1)]) throw ParseError(lineno, "duplicate bag id");
            seen[size_t(id - 1)] = true;
            long v;
            while (ls >> v) {
                if (v < 1 || v > nverts) throw ParseError(lineno, "bag member out of range");
                td.bags[size_t(id - 1)].add(int(v - 1));
            }
        } else {
            if (bags < 0) throw ParseError(lineno, "edge before solution line");
            long a = -1, b = -1;
            std::istringstream es(line);
            if (!(es >> a >> b) || a < 1 || a > bags || b < 1 || b > bags)
                throw ParseError(lineno, "bad tree edge");
            tedges.emplace_back(int(a - 1), int(b - 1));
        }
    }
    if (bags < 0) throw ParseError(lineno + 1, "missing solution line");
    td.tree = Graph::from_edge_list(int(bags), tedges);
    td.exact_width = false;
    return td;
}

inline std::string write_pace_decomposition(const TreeDecomposition& td, int nvertices) {
    std::string out = "s td " + std::to_string(td.bags.size()) + " " +
                      std::to_string(td.width() + 1) + " " + std::to_string(nvertices) + "\n";
    for (size_t i = 0; i < td.bags.size(); i++) {
        out += "b " + std::to_string(i + 1);
        td.bags[i].for_each([&](VertexId v) { out += " " + std::to_string(v + 1); });
        out += "\n";
    }
    for (auto [u, v] : td.tree.edges())
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace lpt
