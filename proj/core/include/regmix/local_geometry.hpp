#pragma once

#include <cstdint>
#include <vector>

#include "regmix/graph.hpp"

namespace regmix {

// BFS layers around a center. layers[i] holds the boundary at distance i;
// layers[0] is the center itself.
struct BallLayers {
    std::vector<std::vector<std::uint32_t>> layers;
    std::size_t total = 0;
};

BallLayers ball_layers(const RegularGraph& g, Vertex center, int t);

// Layers under non-backtracking reachability from a directed edge; the
// successors of e are the out-edges of head(e) except twin(e). Distances
// need not be symmetric.
BallLayers directed_ball_layers(const DirectedEdgeSpace& es, EdgeId center, int t);

// Induced edges of the ball minus (|ball| - 1); zero iff the ball is a tree.
int tree_excess(const RegularGraph& g, Vertex center, int t);

// Directed-edge variant, computed on the undirected graph underlying the
// directed edges of B_t(center).
int tree_excess(const DirectedEdgeSpace& es, EdgeId center, int t);

bool is_k_root(const RegularGraph& g, Vertex center, int k);
bool is_k_root(const DirectedEdgeSpace& es, EdgeId center, int k);

// Vertices of the distance-t boundary with a unique length-t path to the
// center. Layered DP: a length-t path to a distance-t vertex crosses the
// layers strictly outward, so c(v, i+1) = sum of c(w, i) over in-layer
// neighbors w. Returned sorted.
std::vector<Vertex> boundary_star(const RegularGraph& g, Vertex center, int t);

// Exact count of simple u-v paths with k edges by exhaustive DFS; throws
// CapExceeded once the number of partial-path expansions passes cap.
std::uint64_t count_simple_paths(const RegularGraph& g, Vertex u, Vertex v, int k,
                                 std::uint64_t cap = 10000000);

// C_m(x, .): number of m-step non-backtracking trajectories from x per
// terminal edge. Exact 64-bit integers while (d-1)^m < 2^62, afterwards
// 64-bit floating point with the approximate flag set.
struct TrajectoryCounts {
    bool approximate = false;
    std::vector<std::uint64_t> exact; // filled when !approximate
    std::vector<double> approx;       // filled when approximate

    double value(std::size_t y) const {
        return approximate ? approx[y] : static_cast<double>(exact[y]);
    }
    std::size_t size() const { return approximate ? approx.size() : exact.size(); }
};

TrajectoryCounts trajectory_count_vector(const DirectedEdgeSpace& es, EdgeId x, int m);

} // namespace regmix
