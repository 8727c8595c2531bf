#include "regmix/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

namespace regmix {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::odd_product: return "OddProduct";
        case Errc::degree_too_small: return "DegreeTooSmall";
        case Errc::bad_degree: return "BadDegree";
        case Errc::attempts_exhausted: return "AttemptsExhausted";
        case Errc::invalid_trials: return "InvalidTrials";
        case Errc::parse_error: return "ParseError";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::loop_or_multi_edge: return "LoopOrMultiEdge";
        case Errc::not_simple: return "NotSimple";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::space_mismatch: return "SpaceMismatch";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::count_overflow: return "CountOverflow";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::not_connected: return "NotConnected";
        case Errc::max_iters_exceeded: return "MaxItersExceeded";
        case Errc::bad_level: return "BadLevel";
        case Errc::bad_epsilon: return "BadEpsilon";
        case Errc::mass_drift: return "MassDrift";
        case Errc::switching_failed: return "SwitchingFailed";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

RegularGraph RegularGraph::from_adjacency(Vertex n, Vertex d, std::vector<Vertex> adjacency) {
    if (d < 3) raise(Errc::degree_too_small, "degree must be at least 3");
    if (adjacency.size() != static_cast<std::size_t>(n) * d)
        raise(Errc::degree_mismatch, "adjacency array has wrong length");

    std::vector<Vertex> sorted = adjacency;
    for (Vertex v = 0; v < n; ++v) {
        auto* base = sorted.data() + static_cast<std::size_t>(v) * d;
        for (Vertex s = 0; s < d; ++s) {
            if (base[s] >= n) raise(Errc::parse_error, "neighbor id out of range");
            if (base[s] == v) raise(Errc::loop_or_multi_edge, "self-loop in adjacency");
        }
        std::sort(base, base + d);
        if (std::adjacent_find(base, base + d) != base + d)
            raise(Errc::loop_or_multi_edge, "repeated neighbor in adjacency block");
    }

    // Symmetry: since blocks are duplicate-free, u in N(v) must imply v in N(u).
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : std::span<const Vertex>(adjacency.data() + static_cast<std::size_t>(v) * d, d)) {
            const auto* base = sorted.data() + static_cast<std::size_t>(u) * d;
            if (!std::binary_search(base, base + d, v))
                raise(Errc::degree_mismatch, "asymmetric adjacency");
        }

    return RegularGraph(n, d, std::move(adjacency));
}

std::vector<Vertex> RegularGraph::sorted_adjacency() const {
    std::vector<Vertex> out = adjacency_;
    for (Vertex v = 0; v < n_; ++v) {
        auto* base = out.data() + static_cast<std::size_t>(v) * d_;
        std::sort(base, base + d_);
    }
    return out;
}

DirectedEdgeSpace::DirectedEdgeSpace(const RegularGraph& g) : g_(&g) {
    const Vertex n = g.num_vertices();
    const Vertex d = g.degree();
    const std::size_t m = static_cast<std::size_t>(n) * d;
    twin_.assign(m, 0);

    // For each unordered edge, the two orientations pair up. With simple
    // graphs each neighbor occurs once per block, so a single scan with a
    // "next unused slot" cursor resolves twins deterministically.
    std::vector<bool> used(m, false);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex s = 0; s < d; ++s) {
            const EdgeId e = static_cast<EdgeId>(v) * d + s;
            if (used[e]) continue;
            const Vertex u = g.adjacency()[e];
            EdgeId mate = 0;
            bool found = false;
            for (Vertex s2 = 0; s2 < d; ++s2) {
                const EdgeId f = static_cast<EdgeId>(u) * d + s2;
                if (!used[f] && g.adjacency()[f] == v) {
                    mate = f;
                    found = true;
                    break;
                }
            }
            if (!found || mate == e) raise(Errc::not_simple, "graph is not simple/symmetric");
            twin_[e] = mate;
            twin_[mate] = e;
            used[e] = used[mate] = true;
        }
    }
}

DirectedEdgeSpace build_edge_space(const RegularGraph& g) { return DirectedEdgeSpace(g); }

ValidationReport validate(const RegularGraph& g) {
    ValidationReport rep;
    const Vertex n = g.num_vertices();
    const Vertex d = g.degree();

    rep.is_simple = true;
    rep.is_regular = true;
    std::vector<Vertex> block(d);
    std::vector<std::uint32_t> appear(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        std::copy(nb.begin(), nb.end(), block.begin());
        std::sort(block.begin(), block.end());
        for (Vertex s = 0; s < d; ++s) {
            if (block[s] == v) rep.is_simple = false;
            if (s > 0 && block[s] == block[s - 1]) rep.is_simple = false;
            ++appear[block[s]];
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (appear[v] != d) rep.is_regular = false;

    // BFS with 2-coloring.
    std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    color[0] = 0;
    q.push(0);
    std::size_t seen = 1;
    rep.is_bipartite = true;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
            if (color[u] < 0) {
                color[u] = static_cast<std::int8_t>(1 - color[v]);
                q.push(u);
                ++seen;
            } else if (color[u] == color[v]) {
                rep.is_bipartite = false;
            }
        }
    }
    rep.is_connected = (seen == n);
    return rep;
}

RegularGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open " + path);

    std::string line;
    std::size_t lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        return false;
    };

    auto parse_fail = [&](const std::string& what) {
        raise(Errc::parse_error, what + " at line " + std::to_string(lineno));
    };

    if (!next_content_line()) parse_fail("missing header");
    long long n_ll = 0, d_ll = 0;
    {
        std::istringstream iss(line);
        if (!(iss >> n_ll >> d_ll)) parse_fail("bad header, expected \"n d\"");
        std::string extra;
        if (iss >> extra) parse_fail("trailing tokens in header");
    }
    if (n_ll <= 0 || d_ll < 3 || d_ll >= n_ll)
        raise(Errc::degree_mismatch, "header requires 3 <= d < n");
    const Vertex n = static_cast<Vertex>(n_ll);
    const Vertex d = static_cast<Vertex>(d_ll);
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        raise(Errc::odd_product, "dn must be even");

    std::vector<Vertex> adjacency(static_cast<std::size_t>(n) * d);
    std::vector<Vertex> fill(static_cast<std::size_t>(n), 0);
    // Pair-presence set for duplicate detection.
    std::vector<std::vector<Vertex>> seen_pairs(static_cast<std::size_t>(n));

    const std::size_t expected = static_cast<std::size_t>(n) * d / 2;
    for (std::size_t i = 0; i < expected; ++i) {
        if (!next_content_line()) raise(Errc::degree_mismatch, "file ends before dn/2 edges");
        long long u_ll = 0, v_ll = 0;
        std::istringstream iss(line);
        if (!(iss >> u_ll >> v_ll)) parse_fail("bad edge line");
        std::string extra;
        if (iss >> extra) parse_fail("trailing tokens in edge line");
        if (u_ll < 0 || v_ll < 0 || u_ll >= n || v_ll >= n) parse_fail("vertex id out of range");
        const Vertex u = static_cast<Vertex>(u_ll);
        const Vertex v = static_cast<Vertex>(v_ll);
        if (u == v) raise(Errc::loop_or_multi_edge,
                          "loop at line " + std::to_string(lineno));
        const Vertex lo = std::min(u, v), hi = std::max(u, v);
        auto& bucket = seen_pairs[lo];
        if (std::find(bucket.begin(), bucket.end(), hi) != bucket.end())
            raise(Errc::loop_or_multi_edge, "repeated edge at line " + std::to_string(lineno));
        bucket.push_back(hi);
        if (fill[u] >= d || fill[v] >= d)
            raise(Errc::degree_mismatch, "vertex degree exceeds d at line " + std::to_string(lineno));
        adjacency[static_cast<std::size_t>(u) * d + fill[u]++] = v;
        adjacency[static_cast<std::size_t>(v) * d + fill[v]++] = u;
    }
    if (next_content_line()) parse_fail("trailing content after dn/2 edges");
    for (Vertex v = 0; v < n; ++v)
        if (fill[v] != d)
            raise(Errc::degree_mismatch, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(fill[v]) + ", expected " + std::to_string(d));

    return RegularGraph::from_adjacency(n, d, std::move(adjacency));
}

void save_graph(const RegularGraph& g, const std::string& path,
                const std::vector<std::string>& comment_lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot write " + path);
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    const Vertex n = g.num_vertices();
    const Vertex d = g.degree();
    out << n << " " << d << "\n";
    // Canonical order: each undirected edge once, at its first occurrence
    // in a sorted-block sweep.
    const std::vector<Vertex> sorted = g.sorted_adjacency();
    for (Vertex v = 0; v < n; ++v) {
        const auto* base = sorted.data() + static_cast<std::size_t>(v) * d;
        for (Vertex s = 0; s < d; ++s)
            if (base[s] > v) out << v << " " << base[s] << "\n";
    }
    if (!out) raise(Errc::io_error, "write failed for " + path);
}

} // namespace regmix
