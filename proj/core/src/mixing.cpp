#include "regmix/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <queue>
#include <unordered_set>

#include "regmix/parallel.hpp"
#include "regmix/rng.hpp"
#include "regmix/theory.hpp"

namespace regmix {

std::string StartPolicy::to_string() const {
    switch (kind) {
        case Kind::all: return "all";
        case Kind::sample: return "sample:" + std::to_string(sample_size);
        case Kind::single: return "single:" + std::to_string(state);
    }
    return "?";
}

double tv_distance(const ProbVector& p, const ProbVector& q) {
    if (p.space != q.space || p.size() != q.size())
        raise(Errc::space_mismatch, "tv_distance on different spaces");
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double x = std::abs(p.values[i] - q.values[i]);
        const double t = s + x;
        c += (s >= x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    return 0.5 * (s + c);
}

namespace {

// TV against the uniform law, without materialising a uniform vector.
double tv_to_uniform(const std::vector<double>& values) {
    const double pi = 1.0 / static_cast<double>(values.size());
    double s = 0.0, c = 0.0;
    for (double v : values) {
        const double x = std::abs(v - pi);
        const double t = s + x;
        c += (s >= x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    return 0.5 * (s + c);
}

double tv_projected(const DirectedEdgeSpace& es, const std::vector<double>& edge_values) {
    const RegularGraph& g = es.graph();
    std::vector<double> vert(g.num_vertices(), 0.0);
    for (std::size_t e = 0; e < edge_values.size(); ++e)
        vert[g.adjacency()[e]] += edge_values[e];
    return tv_to_uniform(vert);
}

std::vector<double> profile_curve(const Kernel& k, std::uint32_t start, int t_max,
                                  bool projected) {
    std::vector<double> mu(k.state_count(), 0.0);
    mu[start] = 1.0;
    std::vector<double> scratch(mu.size());
    std::vector<double> tv;
    tv.reserve(static_cast<std::size_t>(t_max) + 1);
    MassGuard guard;
    for (int t = 0;; ++t) {
        tv.push_back(projected ? tv_projected(k.edge_space(), mu) : tv_to_uniform(mu));
        if (t == t_max) break;
        k.step(mu.data(), scratch.data());
        mu.swap(scratch);
        guard.after_step(mu);
    }
    return tv;
}

} // namespace

MixingProfile distance_profile(const Kernel& k, std::uint32_t start, int t_max,
                               bool projected) {
    if (t_max < 0) raise(Errc::bad_level, "t_max must be nonnegative");
    if (start >= k.state_count()) raise(Errc::index_out_of_range, "start state");
    if (projected && k.kind() != WalkKind::nbrw)
        raise(Errc::space_mismatch, "projection applies to the NBRW only");

    MixingProfile p;
    p.walk = k.kind();
    p.projected = projected;
    p.policy = StartPolicy::single(start).to_string();
    p.exact = false;
    p.n = k.graph().num_vertices();
    p.d = k.graph().degree();
    p.tv = profile_curve(k, start, t_max, projected);
    return p;
}

MixingProfile worst_case_profile(const Kernel& k, const StartPolicy& policy, int t_max,
                                 bool projected, double budget, unsigned threads) {
    if (t_max < 0) raise(Errc::bad_level, "t_max must be nonnegative");
    if (projected && k.kind() != WalkKind::nbrw)
        raise(Errc::space_mismatch, "projection applies to the NBRW only");

    std::vector<std::uint32_t> starts;
    const std::size_t states = k.state_count();
    switch (policy.kind) {
        case StartPolicy::Kind::all: {
            const double work = static_cast<double>(states) * states *
                                static_cast<double>(t_max) * k.graph().degree();
            if (work > budget)
                raise(Errc::budget_exceeded,
                      "all-starts sweep needs " + std::to_string(work) +
                          " state-updates; use a sample policy");
            starts.resize(states);
            for (std::size_t i = 0; i < states; ++i) starts[i] = static_cast<std::uint32_t>(i);
            break;
        }
        case StartPolicy::Kind::sample: {
            if (policy.sample_size == 0) raise(Errc::invalid_trials, "empty start sample");
            const std::uint64_t m = std::min<std::uint64_t>(policy.sample_size, states);
            Rng rng(policy.seed, Rng::derive_stream(policy.seed, 0x5741));
            std::unordered_set<std::uint32_t> chosen;
            chosen.reserve(m * 2);
            while (chosen.size() < m)
                chosen.insert(static_cast<std::uint32_t>(rng.below(states)));
            starts.assign(chosen.begin(), chosen.end());
            std::sort(starts.begin(), starts.end());
            break;
        }
        case StartPolicy::Kind::single:
            starts.push_back(policy.state);
            break;
    }
    for (std::uint32_t s : starts)
        if (s >= states) raise(Errc::index_out_of_range, "start state");

    std::vector<std::vector<double>> curves(starts.size());
    parallel_for_index(starts.size(), threads, [&](std::size_t i) {
        curves[i] = profile_curve(k, starts[i], t_max, projected);
    });

    MixingProfile p;
    p.walk = k.kind();
    p.projected = projected;
    p.policy = policy.to_string();
    p.seed = policy.kind == StartPolicy::Kind::sample ? policy.seed : 0;
    p.exact = policy.kind == StartPolicy::Kind::all;
    p.n = k.graph().num_vertices();
    p.d = k.graph().degree();
    p.tv.assign(static_cast<std::size_t>(t_max) + 1, 0.0);
    for (const auto& curve : curves)
        for (std::size_t t = 0; t < p.tv.size(); ++t)
            p.tv[t] = std::max(p.tv[t], curve[t]);
    return p;
}

std::optional<int> mixing_time(const MixingProfile& profile, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) raise(Errc::bad_epsilon, "epsilon must be in (0,1)");
    for (std::size_t t = 0; t < profile.tv.size(); ++t)
        if (profile.tv[t] < eps) return static_cast<int>(t);
    return std::nullopt;
}

std::optional<int> profile_width(const MixingProfile& profile, double eps) {
    const auto hi = mixing_time(profile, eps);
    const auto lo = mixing_time(profile, 1.0 - eps);
    if (!hi || !lo) return std::nullopt;
    return *hi - *lo;
}

double poissonization_stat(const DirectedEdgeSpace& es, EdgeId x, int m) {
    const TrajectoryCounts counts = trajectory_count_vector(es, x, m);
    const std::size_t ne = es.num_edges();
    const double log_mu = m * std::log(static_cast<double>(es.graph().degree() - 1)) -
                          std::log(static_cast<double>(ne));
    const double inv_mu = std::exp(-log_mu);
    double s = 0.0;
    for (std::size_t y = 0; y < ne; ++y) s += std::abs(counts.value(y) * inv_mu - 1.0);
    return s / static_cast<double>(ne);
}

double duality_residual(const RegularGraph& g, Vertex u, int t, WalkKind kind) {
    if (kind == WalkKind::nbrw) raise(Errc::bad_level, "duality is for srw or lazy walks");
    if (u >= g.num_vertices()) raise(Errc::index_out_of_range, "start vertex");
    if (t < 0) raise(Errc::bad_level, "t must be nonnegative");

    const Vertex n = g.num_vertices();
    const Vertex d = g.degree();
    const DirectedEdgeSpace es(g);
    const Kernel nb = Kernel::nbrw(es);

    const std::vector<double> h = tree_height_distribution(d, t, kind == WalkKind::lazy);

    // rho_0 = point mass at u; rho_k for k >= 1 is the vertex projection
    // of the NBRW after k-1 steps from the uniform law on u's out-edges.
    std::vector<double> rhs(n, 0.0);
    rhs[u] += h[0];
    std::vector<double> nu(es.num_edges(), 0.0), scratch(es.num_edges());
    for (Vertex s = 0; s < d; ++s) nu[static_cast<std::size_t>(u) * d + s] = 1.0 / d;
    MassGuard guard;
    for (int k = 1; k <= t; ++k) {
        for (std::size_t e = 0; e < nu.size(); ++e)
            rhs[g.adjacency()[e]] += h[k] * nu[e];
        if (k < t) {
            nb.step(nu.data(), scratch.data());
            nu.swap(scratch);
            guard.after_step(nu);
        }
    }

    const Kernel walk = kind == WalkKind::lazy ? Kernel::lazy(g) : Kernel::srw(g);
    ProbVector mu = initial_distribution(StateSpace::vertices, n, PointMass{u});
    mu = evolve(walk, mu, t);

    double worst = 0.0;
    for (Vertex v = 0; v < n; ++v)
        worst = std::max(worst, std::abs(mu.values[v] - rhs[v]));
    return worst;
}

double second_eigenvalue_estimate(const RegularGraph& g, int max_iters, double tol) {
    const Vertex n = g.num_vertices();
    if (!validate(g).is_connected) raise(Errc::not_connected, "graph is not connected");

    const Kernel p = Kernel::srw(g);
    std::vector<double> x(n), y(n), z(n);
    Rng rng(0x9e37, 0);
    for (Vertex v = 0; v < n; ++v) x[v] = rng.uniform01() - 0.5;

    auto remove_mean = [&](std::vector<double>& w) {
        double mean = 0.0;
        for (double v : w) mean += v;
        mean /= static_cast<double>(n);
        for (double& v : w) v -= mean;
    };
    auto norm = [&](const std::vector<double>& w) {
        double s = 0.0;
        for (double v : w) s += v * v;
        return std::sqrt(s);
    };

    remove_mean(x);
    {
        const double nx = norm(x);
        for (double& v : x) v /= nx;
    }

    // Power iteration on P^2: converges on |lambda| even when the extreme
    // eigenvalues come in near-symmetric +- pairs (e.g. bipartite inputs).
    double lambda = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        p.step(x.data(), y.data());
        p.step(y.data(), z.data());
        remove_mean(z);
        double rayleigh = 0.0;
        for (Vertex v = 0; v < n; ++v) rayleigh += x[v] * z[v];
        const double lam_new = std::sqrt(std::max(rayleigh, 0.0));

        double resid = 0.0;
        for (Vertex v = 0; v < n; ++v) {
            const double r = z[v] - rayleigh * x[v];
            resid += r * r;
        }
        resid = std::sqrt(resid);

        const double nz = norm(z);
        if (nz == 0.0) return 0.0;
        for (Vertex v = 0; v < n; ++v) x[v] = z[v] / nz;

        const bool settled = std::abs(lam_new - lambda) <= 0.01 * tol;
        lambda = lam_new;
        if (resid <= tol || settled) return lambda;
    }
    raise(Errc::max_iters_exceeded, "power iteration did not settle");
}

void write_profile_csv(const MixingProfile& profile, std::ostream& out) {
    out << "# walk " << walk_name(profile.walk) << "\n";
    out << "# n " << profile.n << "\n";
    out << "# d " << profile.d << "\n";
    out << "# policy " << profile.policy << "\n";
    out << "# seed " << profile.seed << "\n";
    out << "# exactness " << (profile.exact ? "exact" : "lower_bound") << "\n";
    out << "# projected " << (profile.projected ? 1 : 0) << "\n";
    out << "t,tv\n";
    char buf[64];
    for (std::size_t t = 0; t < profile.tv.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%.17g", profile.tv[t]);
        out << t << "," << buf << "\n";
    }
}

} // namespace regmix
