#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "regmix/graph.hpp"
#include "regmix/rng.hpp"

namespace regmix {

// Perfect matching of the dn vertex-points; point i belongs to vertex i/d.
struct Pairing {
    Vertex n = 0;
    Vertex d = 0;
    std::vector<std::uint32_t> match; // involution without fixed points
};

struct MultiGraph {
    Vertex n = 0;
    Vertex d = 0;
    std::vector<std::pair<Vertex, Vertex>> edges; // dn/2 unordered slots
    std::uint32_t loop_count = 0;
    std::uint32_t multi_count = 0; // edge slots beyond the first per vertex pair
};

struct Classification {
    bool simple = false;
    std::uint32_t loop_count = 0;
    std::uint32_t multi_count = 0;
};

struct SampleResult {
    RegularGraph graph;
    std::uint32_t attempts = 0;
    bool approximate = false; // true for the switching-repaired sampler
};

struct SimpleProbEstimate {
    double fraction = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

// Uniform perfect matching on the dn points (Fisher-Yates over the point
// array, consumed in pairs). Deterministic per (seed, stream).
Pairing sample_pairing(Vertex n, Vertex d, std::uint64_t seed, std::uint64_t stream = 0);

MultiGraph collapse_to_multigraph(const Pairing& p);

Classification classify(const MultiGraph& m);

// Rejection sampling: resample pairings until Simple. Exactly uniform
// over G(n,d); attempt k uses stream derive_stream(seed, k).
SampleResult sample_simple_regular(Vertex n, Vertex d, std::uint64_t seed,
                                   std::uint32_t max_attempts = 100000);

// Approximate mode for degrees where rejection is hopeless: collapse one
// pairing, then remove loops/parallel edges by uniformly random edge
// switchings. Output is flagged approximate (close to, but not exactly,
// uniform over G(n,d)).
SampleResult sample_regular_switching(Vertex n, Vertex d, std::uint64_t seed);

SimpleProbEstimate estimate_simple_probability(Vertex n, Vertex d, std::uint64_t trials,
                                               std::uint64_t seed);

} // namespace regmix
