#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regmix/local_geometry.hpp"
#include "regmix/walk.hpp"

namespace regmix {

// Sequence t -> d(t) of total-variation distances to the uniform
// stationary distribution, plus the metadata needed to reproduce it.
// exact == true only for the All start policy (true worst case); sampled
// and single-start profiles are lower bounds on the worst case.
struct MixingProfile {
    WalkKind walk = WalkKind::srw;
    bool projected = false; // NBRW reported through its vertex projection
    std::string policy;     // "all", "sample:m", "single:state"
    std::uint64_t seed = 0;
    bool exact = false;
    Vertex n = 0;
    Vertex d = 0;
    std::vector<double> tv; // indices 0..t_max
};

struct StartPolicy {
    enum class Kind { all, sample, single };
    Kind kind = Kind::all;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
    std::uint32_t state = 0;

    static StartPolicy all() { return {Kind::all, 0, 0, 0}; }
    static StartPolicy sample(std::uint64_t m, std::uint64_t seed) {
        return {Kind::sample, m, seed, 0};
    }
    static StartPolicy single(std::uint32_t state) { return {Kind::single, 0, 0, state}; }

    std::string to_string() const;
};

// Half the L1 distance between two distributions on the same space.
double tv_distance(const ProbVector& p, const ProbVector& q);

// d_start(t) for t = 0..t_max against the uniform distribution of the
// kernel's space. projected applies only to NBRW kernels and measures the
// vertex-projected chain instead.
MixingProfile distance_profile(const Kernel& k, std::uint32_t start, int t_max,
                               bool projected = false);

// Pointwise max of distance_profile over the chosen starts. The default
// budget caps total state-updates (starts x steps x states x degree);
// All beyond the budget raises BudgetExceeded and the caller should fall
// back to Sample.
MixingProfile worst_case_profile(const Kernel& k, const StartPolicy& policy, int t_max,
                                 bool projected = false, double budget = 1e10,
                                 unsigned threads = 1);

// min { t : d(t) < eps }, strict, per the definition of t_mix(eps);
// nullopt when the profile never gets below eps (NotReached).
std::optional<int> mixing_time(const MixingProfile& profile, double eps);

// t_mix(eps) - t_mix(1-eps); nullopt when either side is NotReached.
std::optional<int> profile_width(const MixingProfile& profile, double eps);

// Mean absolute relative deviation of the m-step trajectory counts from
// their flat value: E_y |C_m(x,y)/mu - 1| with mu = (d-1)^m / dn,
// averaged over all dn directed edges y.
double poissonization_stat(const DirectedEdgeSpace& es, EdgeId x, int m);

// Exact cover-tree identity: the SRW (or lazy) distribution at time t
// equals the height-distribution mixture of uniform non-backtracking
// path endpoints. Returns max_v |mu_t(v) - sum_k h_t(k) rho_k(v)|;
// expected at rounding level (<= 1e-10) on any simple regular graph.
double duality_residual(const RegularGraph& g, Vertex u, int t,
                        WalkKind kind = WalkKind::srw);

// Second-largest absolute eigenvalue of the SRW kernel, by power
// iteration on P^2 restricted to the complement of the constant vector.
double second_eigenvalue_estimate(const RegularGraph& g, int max_iters = 20000,
                                  double tol = 1e-6);

// Profile CSV: '#' metadata lines, a "t,tv" header, then one row per
// step with 17-significant-digit values.
void write_profile_csv(const MixingProfile& profile, std::ostream& out);

} // namespace regmix
