#include "regmix/local_geometry.hpp"

#include <algorithm>
#include <limits>

namespace regmix {

namespace {

constexpr std::uint64_t SAT = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > SAT - b) ? SAT : a + b;
}

// Largest m with (d-1)^m < 2^62.
int exact_count_limit(Vertex d) {
    const std::uint64_t base = d - 1;
    const std::uint64_t cap = std::uint64_t{1} << 62;
    std::uint64_t p = 1;
    int m = 0;
    while (p <= (cap - 1) / base) {
        p *= base;
        ++m;
    }
    return m;
}

// Reusable membership set with O(1) clear; ball scans over many centers
// must not pay O(n) per call.
struct StampSet {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    void begin(std::size_t n) {
        if (stamp.size() < n) stamp.assign(n, 0);
        if (++epoch == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
    }
    bool insert(std::uint32_t i) {
        if (stamp[i] == epoch) return false;
        stamp[i] = epoch;
        return true;
    }
    bool contains(std::uint32_t i) const { return stamp[i] == epoch; }
};

thread_local StampSet tl_vertex_set;
thread_local StampSet tl_edge_set;

BallLayers ball_layers_impl(const RegularGraph& g, Vertex center, int t, StampSet& seen) {
    if (t < 0) raise(Errc::bad_level, "radius must be nonnegative");
    if (center >= g.num_vertices()) raise(Errc::index_out_of_range, "center vertex");
    seen.begin(g.num_vertices());
    BallLayers out;
    out.layers.push_back({center});
    seen.insert(center);
    out.total = 1;
    for (int i = 0; i < t; ++i) {
        std::vector<std::uint32_t> next;
        for (Vertex v : out.layers.back())
            for (Vertex u : g.neighbors(v))
                if (seen.insert(u)) next.push_back(u);
        if (next.empty()) break;
        out.total += next.size();
        out.layers.push_back(std::move(next));
    }
    return out;
}

} // namespace

BallLayers ball_layers(const RegularGraph& g, Vertex center, int t) {
    return ball_layers_impl(g, center, t, tl_vertex_set);
}

BallLayers directed_ball_layers(const DirectedEdgeSpace& es, EdgeId center, int t) {
    if (t < 0) raise(Errc::bad_level, "radius must be nonnegative");
    if (center >= es.num_edges()) raise(Errc::index_out_of_range, "center edge");
    const Vertex d = es.graph().degree();
    StampSet& seen = tl_edge_set;
    seen.begin(es.num_edges());
    BallLayers out;
    out.layers.push_back({center});
    seen.insert(center);
    out.total = 1;
    for (int i = 0; i < t; ++i) {
        std::vector<std::uint32_t> next;
        for (EdgeId e : out.layers.back()) {
            const Vertex h = es.head(e);
            const EdgeId tw = es.twin(e);
            for (Vertex s = 0; s < d; ++s) {
                const EdgeId f = static_cast<EdgeId>(static_cast<std::size_t>(h) * d + s);
                if (f != tw && seen.insert(f)) next.push_back(f);
            }
        }
        if (next.empty()) break;
        out.total += next.size();
        out.layers.push_back(std::move(next));
    }
    return out;
}

int tree_excess(const RegularGraph& g, Vertex center, int t) {
    StampSet& in_ball = tl_vertex_set;
    const BallLayers ball = ball_layers_impl(g, center, t, in_ball);
    std::size_t twice_edges = 0;
    for (const auto& layer : ball.layers)
        for (Vertex v : layer)
            for (Vertex u : g.neighbors(v))
                if (in_ball.contains(u)) ++twice_edges;
    return static_cast<int>(twice_edges / 2 - (ball.total - 1));
}

int tree_excess(const DirectedEdgeSpace& es, EdgeId center, int t) {
    const BallLayers ball = directed_ball_layers(es, center, t);
    // Underlying undirected graph on the ball's directed edges.
    std::vector<Vertex> verts;
    std::vector<EdgeId> und;
    for (const auto& layer : ball.layers)
        for (EdgeId e : layer) {
            verts.push_back(es.tail(e));
            verts.push_back(es.head(e));
            und.push_back(std::min(e, es.twin(e)));
        }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(und.begin(), und.end());
    und.erase(std::unique(und.begin(), und.end()), und.end());
    // Connected by construction: every ball edge touches its predecessor.
    return static_cast<int>(und.size()) - static_cast<int>(verts.size() - 1);
}

bool is_k_root(const RegularGraph& g, Vertex center, int k) {
    return tree_excess(g, center, k) == 0;
}

bool is_k_root(const DirectedEdgeSpace& es, EdgeId center, int k) {
    return tree_excess(es, center, k) == 0;
}

std::vector<Vertex> boundary_star(const RegularGraph& g, Vertex center, int t) {
    if (t < 1) raise(Errc::bad_level, "boundary_star needs t >= 1");
    const BallLayers ball = ball_layers(g, center, t);
    if (static_cast<int>(ball.layers.size()) <= t) return {};

    // Strictly-outward path-count DP over the layers; counts saturate,
    // only equality with 1 matters.
    std::vector<std::int32_t> level(g.num_vertices(), -1);
    std::vector<std::uint64_t> paths(g.num_vertices(), 0);
    for (std::size_t i = 0; i < ball.layers.size(); ++i)
        for (Vertex v : ball.layers[i]) level[v] = static_cast<std::int32_t>(i);
    paths[center] = 1;
    for (int i = 0; i < t; ++i)
        for (Vertex v : ball.layers[i + 1]) {
            std::uint64_t c = 0;
            for (Vertex u : g.neighbors(v))
                if (level[u] == i) c = sat_add(c, paths[u]);
            paths[v] = c;
        }

    std::vector<Vertex> star;
    for (Vertex v : ball.layers[t])
        if (paths[v] == 1) star.push_back(v);
    std::sort(star.begin(), star.end());
    return star;
}

namespace {

struct PathDfs {
    const RegularGraph& g;
    Vertex target;
    int k;
    std::uint64_t cap;
    std::uint64_t expansions = 0;
    std::uint64_t found = 0;
    std::vector<std::int8_t> visited;

    void run(Vertex v, int depth) {
        if (++expansions > cap) raise(Errc::cap_exceeded, "simple-path DFS cap");
        if (depth == k) {
            if (v == target) ++found;
            return;
        }
        visited[v] = 1;
        for (Vertex u : g.neighbors(v))
            if (!visited[u]) run(u, depth + 1);
        visited[v] = 0;
    }
};

} // namespace

std::uint64_t count_simple_paths(const RegularGraph& g, Vertex u, Vertex v, int k,
                                 std::uint64_t cap) {
    if (k < 1) raise(Errc::bad_level, "path length must be >= 1");
    if (u >= g.num_vertices() || v >= g.num_vertices())
        raise(Errc::index_out_of_range, "path endpoint");
    PathDfs dfs{g, v, k, cap, 0, 0, std::vector<std::int8_t>(g.num_vertices(), 0)};
    dfs.run(u, 0);
    return dfs.found;
}

TrajectoryCounts trajectory_count_vector(const DirectedEdgeSpace& es, EdgeId x, int m) {
    if (m < 0) raise(Errc::bad_level, "step count must be nonnegative");
    if (x >= es.num_edges()) raise(Errc::index_out_of_range, "start edge");
    const RegularGraph& g = es.graph();
    const Vertex n = g.num_vertices();
    const Vertex d = g.degree();
    const std::size_t ne = es.num_edges();

    TrajectoryCounts out;
    out.approximate = m > exact_count_limit(d);

    // One step sends count c(e) to every out-edge of head(e) except
    // twin(e): c'(f) = S[tail(f)] - c(twin(f)) with S the per-vertex sum
    // of counts on incoming edges.
    if (!out.approximate) {
        std::vector<std::uint64_t> cur(ne, 0), nxt(ne, 0), vsum(n, 0);
        cur[x] = 1;
        for (int step = 0; step < m; ++step) {
            std::fill(vsum.begin(), vsum.end(), 0);
            for (std::size_t e = 0; e < ne; ++e) vsum[g.adjacency()[e]] += cur[e];
            for (std::size_t e = 0; e < ne; ++e)
                nxt[e] = vsum[e / d] - cur[es.twin(static_cast<EdgeId>(e))];
            cur.swap(nxt);
        }
        out.exact = std::move(cur);
    } else {
        std::vector<double> cur(ne, 0.0), nxt(ne, 0.0), vsum(n, 0.0);
        cur[x] = 1.0;
        for (int step = 0; step < m; ++step) {
            std::fill(vsum.begin(), vsum.end(), 0.0);
            for (std::size_t e = 0; e < ne; ++e) vsum[g.adjacency()[e]] += cur[e];
            for (std::size_t e = 0; e < ne; ++e)
                nxt[e] = vsum[e / d] - cur[es.twin(static_cast<EdgeId>(e))];
            cur.swap(nxt);
        }
        out.approx = std::move(cur);
    }
    return out;
}

} // namespace regmix
