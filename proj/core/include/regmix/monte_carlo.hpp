#pragma once

#include <cstdint>
#include <vector>

#include "regmix/rng.hpp"
#include "regmix/walk.hpp"

namespace regmix {

// Sampled path; states are vertices for SRW/Lazy and directed edges for
// the NBRW. states[0] is the start, so states.size() == steps + 1.
struct Trajectory {
    WalkKind kind = WalkKind::srw;
    std::vector<std::uint32_t> states;
    std::uint64_t seed = 0;
};

Trajectory sample_walk(const Kernel& k, std::uint32_t start, int steps, std::uint64_t seed,
                       std::uint64_t stream = 0);

struct SpeedPoint {
    double c = 0.0;
    int t = 0;            // floor(c log_{d-1} n)
    double mean_ratio = 0.0; // mean of dist(X_t, u) / log_{d-1} n
    double std_error = 0.0;
};

// Mean normalized distance from the start at times c log_{d-1} n.
// Distances come from one BFS from u, shared across trials.
std::vector<SpeedPoint> distance_speed_profile(const RegularGraph& g, Vertex u,
                                               const std::vector<double>& c_values,
                                               std::uint32_t trials, std::uint64_t seed);

struct RateEstimate {
    double rate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

// Fraction of SRW trials of length burn_steps from u that end at a
// root_radius-root.
RateEstimate burn_in_root_rate(const RegularGraph& g, Vertex u, int burn_steps,
                               int root_radius, std::uint32_t trials, std::uint64_t seed);

// NBRW variant: fraction of trials ending at a directed root_radius-root.
RateEstimate burn_in_root_rate(const DirectedEdgeSpace& es, EdgeId x, int burn_steps,
                               int root_radius, std::uint32_t trials, std::uint64_t seed);

} // namespace regmix
