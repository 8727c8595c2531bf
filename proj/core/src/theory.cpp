#include "regmix/theory.hpp"

#include <cmath>

namespace regmix {

int ceil_log_int(std::uint32_t base, std::uint64_t x) {
    if (base < 2) raise(Errc::bad_degree, "log base must be >= 2");
    if (x == 0) raise(Errc::bad_level, "log argument must be positive");
    int k = 0;
    std::uint64_t p = 1;
    while (p < x) {
        if (p > (std::uint64_t{1} << 63) / base)
            raise(Errc::count_overflow, "integer log overflow");
        p *= base;
        ++k;
    }
    return k;
}

int ceil_log_recip(std::uint32_t base, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) raise(Errc::bad_epsilon, "epsilon must be in (0,1)");
    const double recip = 1.0 / eps;
    const double nearest = std::round(recip);
    std::uint64_t x;
    if (std::abs(recip - nearest) <= 1e-9 * recip)
        x = static_cast<std::uint64_t>(nearest);
    else
        x = static_cast<std::uint64_t>(std::ceil(recip));
    return ceil_log_int(base, x);
}

SrwPrediction srw_prediction(std::uint64_t n, std::uint32_t d, double s) {
    if (d < 3) raise(Errc::bad_degree, "degree must be at least 3");
    if (!(s > 0.0) || !(s < 1.0)) raise(Errc::bad_level, "level must be in (0,1)");
    const double logn = std::log(static_cast<double>(n)) / std::log(static_cast<double>(d - 1));
    SrwPrediction out;
    out.lambda = 2.0 * std::sqrt(static_cast<double>(d) * (d - 1.0)) / std::pow(d - 2.0, 1.5);
    out.cutoff_point = (static_cast<double>(d) / (d - 2.0)) * logn;
    out.window_scale = std::sqrt(logn);
    out.tmix_estimate = out.cutoff_point - out.lambda * gaussian_quantile(s) * out.window_scale;
    return out;
}

NbrwBounds nbrw_bounds(std::uint64_t n, std::uint32_t d, double epsilon) {
    if (d < 3) raise(Errc::bad_degree, "degree must be at least 3");
    const int t = ceil_log_int(d - 1, static_cast<std::uint64_t>(n) * d);
    const int le = ceil_log_recip(d - 1, epsilon);
    return {t - le, t + 3 * le + 4};
}

LargeDPrediction large_d_predictions(std::uint64_t n, std::uint32_t d) {
    if (d < 3) raise(Errc::bad_degree, "degree must be at least 3");
    LargeDPrediction out;
    out.tmix_low = ceil_log_int(d - 1, static_cast<std::uint64_t>(n) * d);
    out.tmix_high = out.tmix_low + 1;
    const double ln_n = std::log(static_cast<double>(n));
    out.srw_window = std::sqrt(ln_n / (d * std::log(static_cast<double>(d))));
    out.proxy = d * std::log(ln_n) / ln_n;
    out.coincide = out.proxy >= 10.0;
    return out;
}

std::vector<double> tree_height_distribution(std::uint32_t d, int t, bool lazy) {
    if (d < 3) raise(Errc::bad_degree, "degree must be at least 3");
    if (t < 0) raise(Errc::bad_level, "t must be nonnegative");
    std::vector<double> h(static_cast<std::size_t>(t) + 1, 0.0), nh(h.size(), 0.0);
    h[0] = 1.0;
    const double down = 1.0 / d;
    const double up = (d - 1.0) / d;
    for (int step = 0; step < t; ++step) {
        std::fill(nh.begin(), nh.end(), 0.0);
        // From the root every move goes to height 1; away from the root
        // the height is the biased +-1 walk with up-probability (d-1)/d.
        nh[1] += h[0];
        nh[0] += h[1] * down;
        for (int k = 1; k <= step; ++k) {
            nh[k + 1] += h[k] * up;
            if (k >= 2) nh[k - 1] += h[k] * down;
        }
        if (lazy)
            for (int k = 0; k <= t; ++k) nh[k] = 0.5 * h[k] + 0.5 * nh[k];
        h.swap(nh);
    }
    return h;
}

double gaussian_cdf(double x) {
    // Phi(x) = erfc(-x / sqrt(2)) / 2; std::erfc keeps full relative
    // accuracy in both tails, well inside the 1e-7 contract.
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double gaussian_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) raise(Errc::bad_level, "quantile level must be in (0,1)");
    double lo = -40.0, hi = 40.0;
    // Bisection to 1e-9; the cdf is monotone and the bracket covers all
    // representable levels.
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gaussian_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace regmix
