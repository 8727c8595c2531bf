#pragma once

#include <cstdint>
#include <vector>

#include "regmix/errors.hpp"

namespace regmix {

// Evaluated closed forms for given (n, d, s/eps).

struct SrwPrediction {
    double cutoff_point = 0.0;  // (d/(d-2)) log_{d-1} n
    double tmix_estimate = 0.0; // cutoff - Lambda Phi^{-1}(s) sqrt(log_{d-1} n)
    double window_scale = 0.0;  // sqrt(log_{d-1} n)
    double lambda = 0.0;        // 2 sqrt(d(d-1)) / (d-2)^{3/2}
};

struct NbrwBounds {
    int lower = 0; // bound on t_mix(1-eps)
    int upper = 0; // bound on t_mix(eps)
};

struct LargeDPrediction {
    int tmix_low = 0;         // ceil(log_{d-1}(dn))
    int tmix_high = 0;        // tmix_low + 1
    double srw_window = 0.0;  // sqrt(log n / (d log d))
    double proxy = 0.0;       // d log log n / log n (natural logs)
    bool coincide = false;    // documented finite proxy: proxy >= 10
};

SrwPrediction srw_prediction(std::uint64_t n, std::uint32_t d, double s);

NbrwBounds nbrw_bounds(std::uint64_t n, std::uint32_t d, double epsilon);

LargeDPrediction large_d_predictions(std::uint64_t n, std::uint32_t d);

// Distance-from-root law of the t-step walk on the infinite d-regular
// tree (lazy variant mixes each step with staying put). Exact DP;
// index k of the result is the mass at height k.
std::vector<double> tree_height_distribution(std::uint32_t d, int t, bool lazy = false);

double gaussian_cdf(double x);
double gaussian_quantile(double p); // bracketed root-finding on the cdf

// Smallest k >= 0 with base^k >= x, by integer power comparison.
int ceil_log_int(std::uint32_t base, std::uint64_t x);

// ceil(log_base(1/eps)) with a rational guard: 1/eps within 1e-9
// relative of an integer is treated as that integer, never floored
// through floating-point logs.
int ceil_log_recip(std::uint32_t base, double eps);

} // namespace regmix
