#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regmix/errors.hpp"

namespace regmix {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Immutable simple d-regular graph in a contiguous adjacency array.
// The block [v*d, (v+1)*d) lists the neighbors of v in generation/file
// order; that order is part of the object (it fixes walk trajectories)
// but equality compares sorted blocks.
class RegularGraph {
public:
    static RegularGraph from_adjacency(Vertex n, Vertex d, std::vector<Vertex> adjacency);

    Vertex num_vertices() const { return n_; }
    Vertex degree() const { return d_; }
    std::size_t num_directed_edges() const { return static_cast<std::size_t>(n_) * d_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + static_cast<std::size_t>(v) * d_, d_};
    }
    Vertex neighbor(Vertex v, Vertex slot) const {
        return adjacency_[static_cast<std::size_t>(v) * d_ + slot];
    }
    const std::vector<Vertex>& adjacency() const { return adjacency_; }

    // Neighbor blocks sorted ascending; basis of order-independent equality.
    std::vector<Vertex> sorted_adjacency() const;

    friend bool operator==(const RegularGraph& a, const RegularGraph& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.sorted_adjacency() == b.sorted_adjacency();
    }

private:
    RegularGraph(Vertex n, Vertex d, std::vector<Vertex> adjacency)
        : n_(n), d_(d), adjacency_(std::move(adjacency)) {}

    Vertex n_ = 0;
    Vertex d_ = 0;
    std::vector<Vertex> adjacency_;
};

// State space of the non-backtracking walk: the dn directed edges.
// Edge e = v*d + slot has tail v and head adjacency[e]; twin(e) is the
// reverse orientation, an involution without fixed points.
class DirectedEdgeSpace {
public:
    explicit DirectedEdgeSpace(const RegularGraph& g);

    const RegularGraph& graph() const { return *g_; }
    std::size_t num_edges() const { return twin_.size(); }

    Vertex tail(EdgeId e) const { return e / g_->degree(); }
    Vertex head(EdgeId e) const { return g_->adjacency()[e]; }
    EdgeId twin(EdgeId e) const { return twin_[e]; }
    const std::vector<EdgeId>& twins() const { return twin_; }

private:
    const RegularGraph* g_;
    std::vector<EdgeId> twin_;
};

struct ValidationReport {
    bool is_regular = false;
    bool is_simple = false;
    bool is_connected = false;
    bool is_bipartite = false;
};

DirectedEdgeSpace build_edge_space(const RegularGraph& g);

// Full scans: symmetry of the adjacency blocks, simplicity, and a BFS
// for connectivity plus 2-coloring.
ValidationReport validate(const RegularGraph& g);

// Canonical text format: optional '#' comment lines, one "n d" line,
// then exactly dn/2 lines "u v" (0-based). Loops and repeated pairs are
// rejected. save_graph writes a canonical edge order; load∘save is the
// identity on (n, d, sorted neighbor blocks) and save∘load∘save is
// byte-stable.
RegularGraph load_graph(const std::string& path);
void save_graph(const RegularGraph& g, const std::string& path,
                const std::vector<std::string>& comment_lines = {});

} // namespace regmix
