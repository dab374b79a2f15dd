#pragma once

#include <vector>

#include "lpt/graph.hpp"

namespace lpt {
namespace patterns {

inline Graph path(int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < t; i++) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(t, e);
}

inline Graph cycle(int k) {
    if (k < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; i++) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edge_list(k, e);
}

inline Graph complete(int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; i++)
        for (int j = i + 1; j < t; j++) e.emplace_back(i, j);
    return Graph::from_edge_list(t, e);
}

// K_{1,3}: center 0, leaves 1..3.
inline Graph claw() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
}

// Claw with the edge to leaf 3 subdivided once: 0 is the center, 4 the far end.
inline Graph chair() {
    return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

// P4 0-1-2-3 plus vertex 4 adjacent to the two middle vertices.
inline Graph bull() {
    return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
}

// K_t joined to an independent set of size t by a perfect matching.
// Vertices 0..t-1 form the clique; t+i is matched to i.
inline Graph matched_clique(int t) {
    if (t < 1) throw InvalidArgument("matched_clique needs t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; i++)
        for (int j = i + 1; j < t; j++) e.emplace_back(i, j);
    for (int i = 0; i < t; i++) e.emplace_back(i, t + i);
    return Graph::from_edge_list(2 * t, e);
}

} // namespace patterns
} // namespace lpt
