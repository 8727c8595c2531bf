#include "regmix/monte_carlo.hpp"

#include <cmath>
#include <queue>

#include "regmix/local_geometry.hpp"

namespace regmix {

Trajectory sample_walk(const Kernel& k, std::uint32_t start, int steps, std::uint64_t seed,
                       std::uint64_t stream) {
    if (start >= k.state_count()) raise(Errc::index_out_of_range, "start state");
    if (steps < 0) raise(Errc::bad_level, "steps must be nonnegative");

    Trajectory tr;
    tr.kind = k.kind();
    tr.seed = seed;
    tr.states.reserve(static_cast<std::size_t>(steps) + 1);
    tr.states.push_back(start);

    Rng rng(seed, stream);
    const RegularGraph& g = k.graph();
    const Vertex d = g.degree();
    std::uint32_t cur = start;
    for (int t = 0; t < steps; ++t) {
        switch (k.kind()) {
            case WalkKind::srw:
                cur = g.neighbor(cur, rng.below_u32(d));
                break;
            case WalkKind::lazy:
                if (!rng.coin()) cur = g.neighbor(cur, rng.below_u32(d));
                break;
            case WalkKind::nbrw: {
                const DirectedEdgeSpace& es = k.edge_space();
                const Vertex h = es.head(cur);
                // twin(cur) is an out-edge of h; skip its slot to draw
                // uniformly over the remaining d-1.
                const Vertex forbidden = es.twin(cur) % d;
                Vertex s = rng.below_u32(d - 1);
                if (s >= forbidden) ++s;
                cur = static_cast<EdgeId>(static_cast<std::size_t>(h) * d + s);
                break;
            }
        }
        tr.states.push_back(cur);
    }
    return tr;
}

std::vector<SpeedPoint> distance_speed_profile(const RegularGraph& g, Vertex u,
                                               const std::vector<double>& c_values,
                                               std::uint32_t trials, std::uint64_t seed) {
    if (trials == 0) raise(Errc::invalid_trials, "trials must be positive");
    if (u >= g.num_vertices()) raise(Errc::index_out_of_range, "start vertex");

    const double logn = std::log(static_cast<double>(g.num_vertices())) /
                        std::log(static_cast<double>(g.degree() - 1));

    // One BFS from u; distances reused by every trial.
    std::vector<std::int32_t> dist(g.num_vertices(), -1);
    std::queue<Vertex> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }

    std::vector<SpeedPoint> out;
    out.reserve(c_values.size());
    int t_longest = 0;
    for (double c : c_values)
        t_longest = std::max(t_longest, static_cast<int>(std::floor(c * logn)));

    const Kernel k = Kernel::srw(g);
    std::vector<std::vector<double>> ratios(c_values.size());
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        const Trajectory tr =
            sample_walk(k, u, t_longest, seed, Rng::derive_stream(seed, trial));
        for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
            const int t = static_cast<int>(std::floor(c_values[ci] * logn));
            ratios[ci].push_back(dist[tr.states[static_cast<std::size_t>(t)]] / logn);
        }
    }

    for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
        SpeedPoint pt;
        pt.c = c_values[ci];
        pt.t = static_cast<int>(std::floor(c_values[ci] * logn));
        double mean = 0.0;
        for (double r : ratios[ci]) mean += r;
        mean /= static_cast<double>(trials);
        double var = 0.0;
        for (double r : ratios[ci]) var += (r - mean) * (r - mean);
        var /= std::max<double>(1.0, static_cast<double>(trials) - 1.0);
        pt.mean_ratio = mean;
        pt.std_error = std::sqrt(var / static_cast<double>(trials));
        out.push_back(pt);
    }
    return out;
}

namespace {

RateEstimate rate_from_hits(std::uint64_t hits, std::uint32_t trials) {
    RateEstimate est;
    est.trials = trials;
    est.rate = static_cast<double>(hits) / trials;
    est.std_error = std::sqrt(est.rate * (1.0 - est.rate) / trials);
    return est;
}

} // namespace

RateEstimate burn_in_root_rate(const RegularGraph& g, Vertex u, int burn_steps,
                               int root_radius, std::uint32_t trials, std::uint64_t seed) {
    if (trials == 0) raise(Errc::invalid_trials, "trials must be positive");
    const Kernel k = Kernel::srw(g);
    std::uint64_t hits = 0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        const Trajectory tr =
            sample_walk(k, u, burn_steps, seed, Rng::derive_stream(seed, trial));
        if (is_k_root(g, tr.states.back(), root_radius)) ++hits;
    }
    return rate_from_hits(hits, trials);
}

RateEstimate burn_in_root_rate(const DirectedEdgeSpace& es, EdgeId x, int burn_steps,
                               int root_radius, std::uint32_t trials, std::uint64_t seed) {
    if (trials == 0) raise(Errc::invalid_trials, "trials must be positive");
    const Kernel k = Kernel::nbrw(es);
    std::uint64_t hits = 0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        const Trajectory tr =
            sample_walk(k, x, burn_steps, seed, Rng::derive_stream(seed, trial));
        if (is_k_root(es, tr.states.back(), root_radius)) ++hits;
    }
    return rate_from_hits(hits, trials);
}

} // namespace regmix
