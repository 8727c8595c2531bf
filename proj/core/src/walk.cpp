#include "regmix/walk.hpp"

#include <cmath>
#include <numeric>

namespace regmix {

const char* walk_name(WalkKind kind) {
    switch (kind) {
        case WalkKind::srw: return "srw";
        case WalkKind::lazy: return "lazy";
        case WalkKind::nbrw: return "nbrw";
    }
    return "?";
}

double ProbVector::sum() const {
    // Neumaier-compensated sum; mass checks need better than plain
    // accumulation at dn ~ 1e6 entries.
    double s = 0.0, c = 0.0;
    for (double x : values) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

ProbVector initial_distribution(StateSpace space, std::size_t state_count, PointMass start) {
    if (start.state >= state_count) raise(Errc::index_out_of_range, "point mass state");
    ProbVector mu;
    mu.space = space;
    mu.values.assign(state_count, 0.0);
    mu.values[start.state] = 1.0;
    return mu;
}

ProbVector initial_distribution(StateSpace space, std::size_t state_count, Uniform) {
    ProbVector mu;
    mu.space = space;
    mu.values.assign(state_count, 1.0 / static_cast<double>(state_count));
    return mu;
}

void Kernel::step(const double* in, double* out) const {
    const Vertex n = g_->num_vertices();
    const Vertex d = g_->degree();
    const auto& adj = g_->adjacency();
    const double inv_d = 1.0 / d;

    switch (kind_) {
        case WalkKind::srw: {
            for (Vertex v = 0; v < n; ++v) {
                const auto* base = adj.data() + static_cast<std::size_t>(v) * d;
                double acc = 0.0;
                for (Vertex s = 0; s < d; ++s) acc += in[base[s]];
                out[v] = acc * inv_d;
            }
            break;
        }
        case WalkKind::lazy: {
            for (Vertex v = 0; v < n; ++v) {
                const auto* base = adj.data() + static_cast<std::size_t>(v) * d;
                double acc = 0.0;
                for (Vertex s = 0; s < d; ++s) acc += in[base[s]];
                out[v] = 0.5 * in[v] + 0.5 * (acc * inv_d);
            }
            break;
        }
        case WalkKind::nbrw: {
            // Predecessors of e are the in-edges of tail(e) minus twin(e),
            // and in-edges of v are exactly the twins of v's out-edges:
            // out[e] = (S[tail(e)] - in[twin(e)]) / (d-1).
            const std::size_t ne = es_->num_edges();
            const auto& twin = es_->twins();
            static thread_local std::vector<double> vsum;
            vsum.assign(n, 0.0);
            for (std::size_t e = 0; e < ne; ++e) vsum[adj[e]] += in[e];
            const double inv_d1 = 1.0 / (d - 1);
            for (std::size_t e = 0; e < ne; ++e)
                out[e] = (vsum[e / d] - in[twin[e]]) * inv_d1;
            break;
        }
    }
}

void MassGuard::check_and_renormalize(std::vector<double>& values) {
    double s = 0.0, c = 0.0;
    for (double x : values) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    s += c;
    const double drift = std::abs(s - 1.0);
    if (drift > TOL_PER_STEP * (steps_since_renorm_ + 1))
        raise(Errc::mass_drift, "mass drift " + std::to_string(drift) + " after " +
                                    std::to_string(steps_since_renorm_) + " steps");
    const double inv = 1.0 / s;
    for (double& x : values) x *= inv;
    steps_since_renorm_ = 0;
}

void MassGuard::after_step(std::vector<double>& values) {
    if (++steps_since_renorm_ >= CADENCE) check_and_renormalize(values);
}

void MassGuard::finish(std::vector<double>& values) {
    if (steps_since_renorm_ > 0) check_and_renormalize(values);
}

ProbVector evolve(const Kernel& k, const ProbVector& mu, int steps) {
    if (mu.space != k.space() || mu.size() != k.state_count())
        raise(Errc::space_mismatch, "distribution does not match kernel space");
    if (steps < 0) raise(Errc::bad_level, "steps must be nonnegative");

    ProbVector cur = mu;
    std::vector<double> scratch(cur.size());
    MassGuard guard;
    for (int t = 0; t < steps; ++t) {
        k.step(cur.values.data(), scratch.data());
        cur.values.swap(scratch);
        guard.after_step(cur.values);
    }
    guard.finish(cur.values);
    return cur;
}

ProbVector project_to_vertices(const DirectedEdgeSpace& es, const ProbVector& mu_edges) {
    if (mu_edges.space != StateSpace::directed_edges || mu_edges.size() != es.num_edges())
        raise(Errc::space_mismatch, "expected an edge-space distribution");
    const RegularGraph& g = es.graph();
    ProbVector out;
    out.space = StateSpace::vertices;
    out.values.assign(g.num_vertices(), 0.0);
    for (std::size_t e = 0; e < es.num_edges(); ++e)
        out.values[g.adjacency()[e]] += mu_edges.values[e];
    return out;
}

} // namespace regmix
