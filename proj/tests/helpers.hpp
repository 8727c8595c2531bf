#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "regmix/graph.hpp"

namespace regmix::test {

inline RegularGraph k4() {
    return RegularGraph::from_adjacency(4, 3,
                                        {1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
}

inline RegularGraph k33() {
    // parts {0,1,2} and {3,4,5}
    return RegularGraph::from_adjacency(6, 3,
                                        {3, 4, 5, 3, 4, 5, 3, 4, 5, 0, 1, 2, 0, 1, 2, 0, 1, 2});
}

inline RegularGraph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Vertex> adj(30);
    for (Vertex i = 0; i < 5; ++i) {
        adj[i * 3 + 0] = (i + 1) % 5;
        adj[i * 3 + 1] = (i + 4) % 5;
        adj[i * 3 + 2] = i + 5;
    }
    for (Vertex i = 0; i < 5; ++i) {
        adj[(5 + i) * 3 + 0] = 5 + (i + 2) % 5;
        adj[(5 + i) * 3 + 1] = 5 + (i + 3) % 5;
        adj[(5 + i) * 3 + 2] = i;
    }
    return RegularGraph::from_adjacency(10, 3, adj);
}

inline RegularGraph two_k4s() {
    std::vector<Vertex> adj;
    for (Vertex off : {0u, 4u})
        for (Vertex v = 0; v < 4; ++v)
            for (Vertex u = 0; u < 4; ++u)
                if (u != v) adj.push_back(off + u);
    return RegularGraph::from_adjacency(8, 3, adj);
}

// All-pairs shortest distances by n BFS sweeps; independent of the
// library's layered BFS.
inline std::vector<std::vector<int>> all_pairs_distances(const RegularGraph& g) {
    const Vertex n = g.num_vertices();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> frontier{s};
        dist[s][s] = 0;
        int level = 0;
        while (!frontier.empty()) {
            std::vector<Vertex> next;
            ++level;
            for (Vertex v : frontier)
                for (Vertex u : g.neighbors(v))
                    if (dist[s][u] < 0) {
                        dist[s][u] = level;
                        next.push_back(u);
                    }
            frontier.swap(next);
        }
    }
    return dist;
}

// Dense row-stochastic matrices for oracle-side evolution.
using Dense = std::vector<std::vector<double>>;

inline Dense srw_matrix(const RegularGraph& g) {
    const Vertex n = g.num_vertices();
    Dense P(n, std::vector<double>(n, 0.0));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) P[v][u] += 1.0 / g.degree();
    return P;
}

inline Dense nbrw_matrix(const DirectedEdgeSpace& es) {
    const std::size_t m = es.num_edges();
    const Vertex d = es.graph().degree();
    Dense B(m, std::vector<double>(m, 0.0));
    for (EdgeId e = 0; e < m; ++e)
        for (Vertex s = 0; s < d; ++s) {
            const EdgeId f = es.head(e) * d + s;
            if (f != es.twin(e)) B[e][f] = 1.0 / (d - 1);
        }
    return B;
}

inline std::vector<double> apply(const Dense& M, const std::vector<double>& x) {
    std::vector<double> y(M[0].size(), 0.0);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[i].size(); ++j) y[j] += x[i] * M[i][j];
    return y;
}

class TempDir {
public:
    TempDir() {
        base_ = std::filesystem::temp_directory_path() /
                ("regmix_test_" + std::to_string(counter_++));
        std::filesystem::create_directories(base_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(base_, ec);
    }
    std::string path(const std::string& name) const { return (base_ / name).string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path base_;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace regmix::test
