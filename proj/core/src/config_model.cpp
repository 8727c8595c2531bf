#include "regmix/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace regmix {

namespace {

void check_basic(Vertex n, Vertex d) {
    if (d < 3) raise(Errc::degree_too_small, "degree must be at least 3");
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        raise(Errc::odd_product, "dn must be even");
}

std::uint64_t pair_key(Vertex u, Vertex v) {
    const Vertex lo = std::min(u, v), hi = std::max(u, v);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

// Adjacency in point order: slot k of vertex v is the vertex matched to
// point v*d+k. Keeps generated graphs reproducible down to slot order.
RegularGraph graph_from_matching(Vertex n, Vertex d, const std::vector<std::uint32_t>& match) {
    std::vector<Vertex> adjacency(static_cast<std::size_t>(n) * d);
    for (std::size_t p = 0; p < match.size(); ++p) adjacency[p] = match[p] / d;
    return RegularGraph::from_adjacency(n, d, std::move(adjacency));
}

} // namespace

Pairing sample_pairing(Vertex n, Vertex d, std::uint64_t seed, std::uint64_t stream) {
    check_basic(n, d);
    const std::size_t m = static_cast<std::size_t>(n) * d;
    std::vector<std::uint32_t> points(m);
    for (std::size_t i = 0; i < m; ++i) points[i] = static_cast<std::uint32_t>(i);

    Rng rng(seed, stream);
    // Fisher-Yates; pairing consecutive entries of a uniform shuffle is a
    // uniform perfect matching.
    for (std::size_t i = m - 1; i > 0; --i)
        std::swap(points[i], points[rng.below(i + 1)]);

    Pairing p;
    p.n = n;
    p.d = d;
    p.match.assign(m, 0);
    for (std::size_t i = 0; i < m; i += 2) {
        p.match[points[i]] = points[i + 1];
        p.match[points[i + 1]] = points[i];
    }
    return p;
}

MultiGraph collapse_to_multigraph(const Pairing& p) {
    MultiGraph g;
    g.n = p.n;
    g.d = p.d;
    g.edges.reserve(p.match.size() / 2);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(p.match.size());
    for (std::uint32_t pt = 0; pt < p.match.size(); ++pt) {
        const std::uint32_t mate = p.match[pt];
        if (mate < pt) continue;
        const Vertex u = pt / p.d;
        const Vertex v = mate / p.d;
        g.edges.emplace_back(u, v);
        if (u == v) {
            ++g.loop_count;
        } else if (!seen.insert(pair_key(u, v)).second) {
            ++g.multi_count;
        }
    }
    return g;
}

Classification classify(const MultiGraph& m) {
    return {m.loop_count == 0 && m.multi_count == 0, m.loop_count, m.multi_count};
}

SampleResult sample_simple_regular(Vertex n, Vertex d, std::uint64_t seed,
                                   std::uint32_t max_attempts) {
    check_basic(n, d);
    if (d >= n) raise(Errc::bad_degree, "need d < n for a simple graph");
    for (std::uint32_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Pairing p = sample_pairing(n, d, seed, Rng::derive_stream(seed, attempt));
        MultiGraph m = collapse_to_multigraph(p);
        if (classify(m).simple)
            return {graph_from_matching(n, d, p.match), attempt, false};
    }
    raise(Errc::attempts_exhausted,
          "no simple graph in " + std::to_string(max_attempts) + " attempts");
}

SampleResult sample_regular_switching(Vertex n, Vertex d, std::uint64_t seed) {
    check_basic(n, d);
    if (d >= n) raise(Errc::bad_degree, "need d < n for a simple graph");

    Pairing p = sample_pairing(n, d, seed, Rng::derive_stream(seed, 0));
    std::vector<std::pair<Vertex, Vertex>> edges;
    const std::size_t m = p.match.size() / 2;
    edges.reserve(m);
    for (std::uint32_t pt = 0; pt < p.match.size(); ++pt)
        if (p.match[pt] > pt) edges.emplace_back(pt / d, p.match[pt] / d);

    std::unordered_multiset<std::uint64_t> present;
    present.reserve(2 * m);
    for (auto [u, v] : edges) present.insert(pair_key(u, v));

    auto is_bad = [&](std::size_t i) {
        auto [u, v] = edges[i];
        return u == v || present.count(pair_key(u, v)) > 1;
    };

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < m; ++i)
        if (is_bad(i)) bad.push_back(i);

    Rng rng(seed, Rng::derive_stream(seed, 1));
    std::uint64_t stalls = 0;
    const std::uint64_t stall_limit = 1000000 + 200 * static_cast<std::uint64_t>(bad.size());
    while (!bad.empty()) {
        if (++stalls > stall_limit)
            raise(Errc::switching_failed, "edge switching did not converge");
        const std::size_t bi = static_cast<std::size_t>(rng.below(bad.size()));
        const std::size_t i = bad[bi];
        if (!is_bad(i)) { // repaired as a side effect of an earlier switch
            bad[bi] = bad.back();
            bad.pop_back();
            continue;
        }
        const std::size_t j = static_cast<std::size_t>(rng.below(m));
        if (j == i) continue;
        auto [a, b] = edges[i];
        auto [c, e] = edges[j];
        if (rng.coin()) std::swap(c, e);
        // Proposed switch: (a,b),(c,e) -> (a,e),(c,b).
        if (a == e || c == b) continue;
        const auto k_ae = pair_key(a, e), k_cb = pair_key(c, b);
        if (present.count(k_ae) > 0 || present.count(k_cb) > 0) continue;
        present.erase(present.find(pair_key(a, b)));
        present.erase(present.find(pair_key(c, e)));
        present.insert(k_ae);
        present.insert(k_cb);
        edges[i] = {a, e};
        edges[j] = {c, b};
        if (!is_bad(i)) {
            bad[bi] = bad.back();
            bad.pop_back();
        }
        if (is_bad(j)) bad.push_back(j); // cannot happen, kept as a guard
    }

    std::vector<Vertex> adjacency(static_cast<std::size_t>(n) * d);
    std::vector<Vertex> fill(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        adjacency[static_cast<std::size_t>(u) * d + fill[u]++] = v;
        adjacency[static_cast<std::size_t>(v) * d + fill[v]++] = u;
    }
    return {RegularGraph::from_adjacency(n, d, std::move(adjacency)), 1, true};
}

SimpleProbEstimate estimate_simple_probability(Vertex n, Vertex d, std::uint64_t trials,
                                               std::uint64_t seed) {
    if (trials == 0) raise(Errc::invalid_trials, "trials must be positive");
    check_basic(n, d);
    std::uint64_t simple = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Pairing p = sample_pairing(n, d, seed, Rng::derive_stream(seed, t));
        if (classify(collapse_to_multigraph(p)).simple) ++simple;
    }
    SimpleProbEstimate est;
    est.trials = trials;
    est.fraction = static_cast<double>(simple) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(trials));
    return est;
}

} // namespace regmix
