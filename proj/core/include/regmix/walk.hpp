#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regmix/graph.hpp"

namespace regmix {

enum class StateSpace { vertices, directed_edges };
enum class WalkKind { srw, lazy, nbrw };

const char* walk_name(WalkKind kind);

// Probability distribution over vertices or directed edges.
struct ProbVector {
    StateSpace space = StateSpace::vertices;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double sum() const;
};

struct PointMass {
    std::uint32_t state;
};
struct Uniform {};

ProbVector initial_distribution(StateSpace space, std::size_t state_count, PointMass start);
ProbVector initial_distribution(StateSpace space, std::size_t state_count, Uniform start);

// Matrix-free transition kernel. SRW and Lazy act on vertices, NBRW on
// directed edges. All three are doubly stochastic on regular graphs, so
// the uniform distribution is a fixed point.
class Kernel {
public:
    static Kernel srw(const RegularGraph& g) { return Kernel(WalkKind::srw, &g, nullptr); }
    static Kernel lazy(const RegularGraph& g) { return Kernel(WalkKind::lazy, &g, nullptr); }
    static Kernel nbrw(const DirectedEdgeSpace& es) {
        return Kernel(WalkKind::nbrw, &es.graph(), &es);
    }

    WalkKind kind() const { return kind_; }
    StateSpace space() const {
        return kind_ == WalkKind::nbrw ? StateSpace::directed_edges : StateSpace::vertices;
    }
    std::size_t state_count() const {
        return kind_ == WalkKind::nbrw ? es_->num_edges() : g_->num_vertices();
    }
    const RegularGraph& graph() const { return *g_; }
    const DirectedEdgeSpace& edge_space() const { return *es_; }

    // One exact push-forward step, gather form: out[s] is a fixed-order
    // sum over the predecessors of s, so results are independent of any
    // parallel partitioning over states.
    void step(const double* in, double* out) const;

private:
    Kernel(WalkKind kind, const RegularGraph* g, const DirectedEdgeSpace* es)
        : kind_(kind), g_(g), es_(es) {}

    WalkKind kind_;
    const RegularGraph* g_;
    const DirectedEdgeSpace* es_;
};

// Exact t-step evolution mu P^t. Mass drift beyond 1e-12 per step is a
// kernel bug and raises MassDrift; within tolerance the vector is
// renormalized every 64 steps.
ProbVector evolve(const Kernel& k, const ProbVector& mu, int steps);

// (x,y) -> y: vertex mass is the sum over incoming edge mass.
ProbVector project_to_vertices(const DirectedEdgeSpace& es, const ProbVector& mu_edges);

// Renormalization cadence shared by evolve() and the profile loops.
class MassGuard {
public:
    static constexpr int CADENCE = 64;
    static constexpr double TOL_PER_STEP = 1e-12;

    // Call after each step; checks and renormalizes on cadence boundaries.
    void after_step(std::vector<double>& values);
    void finish(std::vector<double>& values);

private:
    void check_and_renormalize(std::vector<double>& values);
    int steps_since_renorm_ = 0;
};

} // namespace regmix
