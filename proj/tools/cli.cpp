#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "regmix/config_model.hpp"
#include "regmix/local_geometry.hpp"
#include "regmix/mixing.hpp"
#include "regmix/monte_carlo.hpp"
#include "regmix/theory.hpp"

namespace regmix::cli {

namespace {

bool is_validation_error(Errc code) {
    switch (code) {
        case Errc::odd_product:
        case Errc::degree_too_small:
        case Errc::bad_degree:
        case Errc::bad_epsilon:
        case Errc::bad_level:
        case Errc::invalid_trials:
        case Errc::budget_exceeded:
        case Errc::index_out_of_range:
        case Errc::space_mismatch:
            return true;
        default:
            return false;
    }
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

WalkKind parse_walk(const std::string& name) {
    if (name == "srw") return WalkKind::srw;
    if (name == "lazy") return WalkKind::lazy;
    if (name == "nbrw") return WalkKind::nbrw;
    raise(Errc::bad_level, "unknown walk kind: " + name);
}

StartPolicy parse_policy(const std::string& text, std::uint64_t seed) {
    if (text == "all") return StartPolicy::all();
    if (text.rfind("sample:", 0) == 0)
        return StartPolicy::sample(std::stoull(text.substr(7)), seed);
    if (text.rfind("single:", 0) == 0)
        return StartPolicy::single(static_cast<std::uint32_t>(std::stoul(text.substr(7))));
    raise(Errc::bad_level, "unknown start policy: " + text + " (all|sample:m|single:state)");
}

double flog(double x, std::uint32_t d) { return std::log(x) / std::log(double(d - 1)); }

struct ProfileArgs {
    std::string walk = "srw";
    std::string graph_path;
    std::string starts = "all";
    int t_max = 0;
    std::uint64_t seed = 0;
    bool project = false;
    double budget = 1e10;
    unsigned threads = 1;
};

MixingProfile compute_profile(const ProfileArgs& a) {
    const RegularGraph g = load_graph(a.graph_path);
    const WalkKind kind = parse_walk(a.walk);
    std::optional<DirectedEdgeSpace> es;
    Kernel k = [&] {
        switch (kind) {
            case WalkKind::srw: return Kernel::srw(g);
            case WalkKind::lazy: return Kernel::lazy(g);
            default:
                es.emplace(g);
                return Kernel::nbrw(*es);
        }
    }();
    const StartPolicy policy = parse_policy(a.starts, a.seed);
    MixingProfile p = worst_case_profile(k, policy, a.t_max, a.project, a.budget, a.threads);
    return p;
}

int cmd_gen(const std::string& out_path, std::uint64_t n, std::uint32_t d, std::uint64_t seed,
            bool approx, std::uint32_t max_attempts) {
    const SampleResult res =
        approx ? sample_regular_switching(static_cast<Vertex>(n), d, seed)
               : sample_simple_regular(static_cast<Vertex>(n), d, seed, max_attempts);
    std::ostringstream cfg;
    cfg << "regmix gen n=" << n << " d=" << d << " seed=" << seed
        << " sampler=" << (approx ? "switching(approximately-uniform)" : "rejection")
        << " attempts=" << res.attempts;
    save_graph(res.graph, out_path, {cfg.str()});
    std::cout << "wrote " << out_path << " (attempts " << res.attempts
              << (res.approximate ? ", approximately uniform" : ", exactly uniform") << ")\n";
    return 0;
}

int cmd_profile(const ProfileArgs& a, const std::string& out_path) {
    const MixingProfile p = compute_profile(a);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot write " + out_path);
    write_profile_csv(p, out);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_tmix(const ProfileArgs& a, const std::vector<double>& eps_levels) {
    const MixingProfile p = compute_profile(a);
    std::cout << "# walk " << walk_name(p.walk) << "\n# n " << p.n << " d " << p.d
              << "\n# policy " << p.policy << "\n# seed " << p.seed << "\n# exactness "
              << (p.exact ? "exact" : "lower_bound") << "\n";
    for (double eps : eps_levels) {
        const auto t = mixing_time(p, eps);
        if (t)
            std::cout << "eps " << fmt(eps) << " tmix " << *t << "\n";
        else
            std::cout << "eps " << fmt(eps) << " NotReached(" << a.t_max << ")\n";
    }
    return 0;
}

int cmd_predict(bool srw, bool nbrw, bool large_d, std::uint64_t n, std::uint32_t d, double s,
                double eps) {
    if (srw) {
        const SrwPrediction p = srw_prediction(n, d, s);
        std::cout << "kind           srw_cutoff\n";
        std::cout << "cutoff_point   " << fmt(p.cutoff_point) << "\n";
        std::cout << "tmix_estimate  " << fmt(p.tmix_estimate) << "\n";
        std::cout << "window_scale   " << fmt(p.window_scale) << "\n";
        std::cout << "lambda         " << fmt(p.lambda) << "\n";
    }
    if (nbrw) {
        const NbrwBounds b = nbrw_bounds(n, d, eps);
        std::cout << "lower " << b.lower << " upper " << b.upper << "\n";
    }
    if (large_d) {
        const LargeDPrediction p = large_d_predictions(n, d);
        std::cout << "tmix_set       {" << p.tmix_low << ", " << p.tmix_high << "}\n";
        std::cout << "srw_window     " << fmt(p.srw_window) << "\n";
        std::cout << "proxy          " << fmt(p.proxy)
                  << "   (d log log n / log n, natural logs)\n";
        std::cout << "coincide       " << (p.coincide ? "true" : "false")
                  << "   (finite proxy: proxy >= 10)\n";
    }
    return 0;
}

int cmd_bd_speed(const std::string& graph_path, Vertex u, const std::vector<double>& cs,
                 std::uint32_t trials, std::uint64_t seed, const std::string& out_path) {
    const RegularGraph g = load_graph(graph_path);
    const auto points = distance_speed_profile(g, u, cs, trials, seed);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot write " + out_path);
    out << "# regmix bd-speed graph=" << graph_path << " u=" << u << " trials=" << trials
        << " seed=" << seed << "\n";
    out << "# n " << g.num_vertices() << "\n# d " << g.degree() << "\n";
    out << "c,t,mean_ratio,std_error\n";
    for (const auto& pt : points)
        out << fmt(pt.c) << "," << pt.t << "," << fmt17(pt.mean_ratio) << ","
            << fmt17(pt.std_error) << "\n";
    std::cout << "wrote " << out_path << "\n";
    for (const auto& pt : points)
        std::cout << "c " << fmt(pt.c) << " t " << pt.t << " mean_ratio " << fmt(pt.mean_ratio)
                  << " se " << fmt(pt.std_error) << "\n";
    return 0;
}

// Lemma verification suite: deterministic identities are hard checks,
// whp/asymptotic statements are warn-level, the Poissonization bound is
// informational (its finite-n constant exceeds 1 at desk scale).
int cmd_verify(const std::string& graph_path, std::uint64_t seed, std::uint32_t trials,
               unsigned threads) {
    const RegularGraph g = load_graph(graph_path);
    const DirectedEdgeSpace es(g);
    const Vertex n = g.num_vertices();
    const std::uint32_t d = g.degree();
    const std::size_t dn = es.num_edges();
    int hard_failures = 0;
    int warnings = 0;

    auto hard = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!ok) ++hard_failures;
    };
    auto soft = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[WARN] ") << name << ": " << detail << "\n";
        if (!ok) ++warnings;
    };

    const ValidationReport rep = validate(g);
    hard("graph validation", rep.is_regular && rep.is_simple,
         std::string("regular=") + (rep.is_regular ? "1" : "0") + " simple=" +
             (rep.is_simple ? "1" : "0") + " connected=" + (rep.is_connected ? "1" : "0") +
             " bipartite=" + (rep.is_bipartite ? "1" : "0"));

    // Duality residual (exact identity).
    const int t_dual = std::min(60, static_cast<int>(3.0 * flog(double(n), d)) + 8);
    {
        const double r_srw = duality_residual(g, 0, t_dual, WalkKind::srw);
        hard("duality residual srw t=" + std::to_string(t_dual), r_srw <= 1e-10,
             fmt(r_srw) + " <= 1e-10");
        const double r_lazy = duality_residual(g, 0, t_dual, WalkKind::lazy);
        hard("duality residual lazy t=" + std::to_string(t_dual), r_lazy <= 1e-10,
             fmt(r_lazy) + " <= 1e-10");
    }

    // Trajectory-count normalization.
    {
        const int m_max = std::min(20, 61 / std::max(1, ceil_log_int(d - 1, 2)));
        bool ok = true;
        std::uint64_t expect = 1;
        const TrajectoryCounts counts = trajectory_count_vector(es, 0, m_max);
        for (int i = 0; i < m_max; ++i) expect *= (d - 1);
        std::uint64_t total = 0;
        for (std::uint64_t c : counts.exact) total += c;
        ok = !counts.approximate && total == expect;
        hard("trajectory count sum m=" + std::to_string(m_max), ok,
             std::to_string(total) + " == (d-1)^m");
    }

    // Universal NBRW lower bound (Claim): holds for every start on every
    // d-regular graph.
    {
        const Kernel nb = Kernel::nbrw(es);
        const int t_upper = nbrw_bounds(n, d, 0.1).upper + 2;
        const double all_work =
            static_cast<double>(dn) * dn * t_upper * d;
        const StartPolicy policy = all_work <= 1e10
                                       ? StartPolicy::all()
                                       : StartPolicy::sample(std::min<std::uint64_t>(200, dn), seed);
        const MixingProfile prof = worst_case_profile(nb, policy, t_upper, false, 1e18, threads);
        for (double eps : {0.5, 0.25, 0.1}) {
            const int bound = nbrw_bounds(n, d, eps).lower;
            const auto t = mixing_time(prof, 1.0 - eps);
            const bool ok = !t || *t >= bound;
            hard("nbrw lower bound eps=" + fmt(eps), ok,
                 (t ? "tmix(1-eps)=" + std::to_string(*t) : "tmix(1-eps)=NotReached") +
                     " >= " + std::to_string(bound));
        }
        for (std::size_t t = 0; t + 1 < prof.tv.size(); ++t)
            if (prof.tv[t + 1] > prof.tv[t] + 1e-9) {
                hard("profile monotonicity", false, "d(t) increased at t=" + std::to_string(t));
                break;
            }
    }

    // Tree excess (whp lemma): tx(B_t(u)) <= 1 for all u at
    // t = floor((1/5) log_{d-1} n).
    {
        const int t = static_cast<int>(std::floor(0.2 * flog(double(n), d)));
        int worst = 0;
        for (Vertex u = 0; u < n; ++u) worst = std::max(worst, tree_excess(g, u, t));
        soft("tree excess t=" + std::to_string(t), worst <= 1,
             "max tx = " + std::to_string(worst) + " <= 1");
    }

    // Boundary sizes at K-roots (whp lemma).
    {
        const double fl = flog(double(n), d);
        const int K = fl > 1.0 ? std::max(0, static_cast<int>(std::floor(flog(fl, d)))) : 0;
        const int t_hi = static_cast<int>(std::floor(4.0 / 7.0 * fl));
        std::size_t roots = 0, failing = 0;
        double min_ratio = 2.0;
        for (Vertex u = 0; u < n; ++u) {
            if (!is_k_root(g, u, K)) continue;
            ++roots;
            const BallLayers ball = ball_layers(g, u, t_hi);
            for (int t = 1; t <= t_hi; ++t) {
                const double full = double(d) * std::pow(double(d - 1), t - 1);
                const double ratio =
                    (static_cast<int>(ball.layers.size()) > t ? ball.layers[t].size() : 0) / full;
                min_ratio = std::min(min_ratio, ratio);
                if (ratio < 0.9) {
                    ++failing;
                    break;
                }
            }
        }
        soft("boundary sizes K=" + std::to_string(K) + " t<=" + std::to_string(t_hi),
             failing == 0, std::to_string(roots) + " roots, " + std::to_string(failing) +
                               " below 0.9 (min ratio " + fmt(min_ratio) + ")");
    }

    // SRW burn-in to K-roots.
    {
        const double fl = flog(double(n), d);
        const int K = fl > 1.0 ? std::max(0, static_cast<int>(std::floor(flog(fl, d)))) : 0;
        Vertex start = 0;
        bool have_nonroot = false, have_root = false;
        for (Vertex u = 0; u < n; ++u) {
            if (!is_k_root(g, u, K)) {
                if (!have_nonroot) start = u;
                have_nonroot = true;
            } else {
                have_root = true;
            }
            if (have_nonroot && have_root) break;
        }
        if (!have_root) {
            std::cout << "[SKIP] srw burn-in: no " << K << "-roots (below the lemma's regime)\n";
        } else {
            const RateEstimate est = burn_in_root_rate(g, start, 4 * K, K, trials, seed);
            soft("srw burn-in K=" + std::to_string(K) + " from " + std::to_string(start),
                 est.rate >= 0.9, "rate " + fmt(est.rate) + " >= 0.9");
        }
    }

    // NBRW burn-in to directed L-roots (eps = 1/8).
    {
        const double eps = 0.125;
        const int K = ceil_log_recip(d - 1, eps / 2.0);
        const int L = static_cast<int>(std::floor(flog(double(n), d) / 6.0));
        EdgeId start = 0;
        bool have_nonroot = false, have_root = false;
        for (EdgeId x = 0; x < dn; ++x) {
            if (!is_k_root(es, x, L)) {
                if (!have_nonroot) start = x;
                have_nonroot = true;
            } else {
                have_root = true;
            }
            if (have_nonroot && have_root) break;
        }
        if (!have_root) {
            std::cout << "[SKIP] nbrw burn-in: no directed " << L << "-roots\n";
        } else {
            const RateEstimate est = burn_in_root_rate(es, start, K, L, trials, seed);
            const double floor_rate = 1.0 - eps - 3.0 * est.std_error;
            soft("nbrw burn-in K=" + std::to_string(K) + " L=" + std::to_string(L),
                 est.rate >= floor_rate, "rate " + fmt(est.rate) + " >= " + fmt(floor_rate));
        }
    }

    // Poissonization statistic at a directed L-root (logged; the bound's
    // finite-n constant 5/loglog n exceeds 1 at desk scale).
    {
        const double eps = 1.0 / ((d - 1.0) * (d - 1.0));
        const int T = ceil_log_int(d - 1, static_cast<std::uint64_t>(n) * d);
        const int K = static_cast<int>(std::ceil(2.0 * std::log(1.0 / eps) / std::log(double(d - 1))));
        const int L = static_cast<int>(std::ceil(flog(double(dn), d) / 6.0));
        EdgeId x = 0;
        bool found = false;
        for (EdgeId e = 0; e < dn; ++e)
            if (is_k_root(es, e, L)) {
                x = e;
                found = true;
                break;
            }
        if (!found) {
            std::cout << "[SKIP] poissonization: no directed " << L << "-roots\n";
        } else {
            const double stat = poissonization_stat(es, x, T + K);
            const double ref = 2.0 * eps + 5.0 / std::log(std::log(double(n)));
            std::cout << "[INFO] poissonization x=" << x << " m=" << (T + K) << ": stat "
                      << fmt(stat) << " (reference bound " << fmt(ref) << ")\n";
        }
    }

    std::cout << "summary: hard_failures " << hard_failures << " warnings " << warnings << "\n";
    return hard_failures == 0 ? 0 : 2;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"random d-regular graphs, walk evolution, and cutoff profiles"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample a simple d-regular graph to a file");
    std::uint64_t gen_n = 0;
    std::uint32_t gen_d = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    bool gen_approx = false;
    std::uint32_t gen_attempts = 100000;
    gen->add_option("-n,--vertices", gen_n, "vertex count")->required();
    gen->add_option("-d,--degree", gen_d, "degree (>= 3)")->required();
    gen->add_option("-s,--seed", gen_seed, "RNG seed")->required();
    gen->add_option("-o,--output", gen_out, "output graph file")->required();
    gen->add_flag("-a,--approx", gen_approx,
                  "switching-repaired sampler (approximately uniform; for large d)");
    gen->add_option("-m,--max-attempts", gen_attempts, "rejection budget");

    // profile
    auto* profile = app.add_subcommand("profile", "worst-case TV profile to CSV");
    ProfileArgs pa;
    std::string profile_out;
    profile->add_option("-w,--walk", pa.walk, "srw|lazy|nbrw")->required();
    profile->add_option("-g,--graph", pa.graph_path, "graph file")->required();
    profile->add_option("-k,--starts", pa.starts, "all|sample:m|single:state");
    profile->add_option("-t,--tmax", pa.t_max, "profile horizon")->required();
    profile->add_option("-s,--seed", pa.seed, "seed (required for sample starts)");
    profile->add_flag("-p,--project", pa.project, "project the NBRW onto vertices");
    profile->add_option("-b,--budget", pa.budget, "state-update budget for --starts all");
    profile->add_option("-j,--threads", pa.threads, "parallel sweep width");
    profile->add_option("-o,--output", profile_out, "output CSV")->required();

    // tmix
    auto* tmix = app.add_subcommand("tmix", "mixing times at given levels");
    ProfileArgs ta;
    std::vector<double> tmix_eps;
    tmix->add_option("-w,--walk", ta.walk, "srw|lazy|nbrw")->required();
    tmix->add_option("-g,--graph", ta.graph_path, "graph file")->required();
    tmix->add_option("-k,--starts", ta.starts, "all|sample:m|single:state");
    tmix->add_option("-t,--tmax", ta.t_max, "profile horizon")->required();
    tmix->add_option("-s,--seed", ta.seed, "seed (required for sample starts)");
    tmix->add_flag("-p,--project", ta.project, "project the NBRW onto vertices");
    tmix->add_option("-b,--budget", ta.budget, "state-update budget for --starts all");
    tmix->add_option("-j,--threads", ta.threads, "parallel sweep width");
    tmix->add_option("-e,--eps", tmix_eps, "levels in (0,1)")->required();

    // predict
    auto* predict = app.add_subcommand("predict", "closed-form predictions");
    bool p_srw = false, p_nbrw = false, p_large = false;
    std::uint64_t p_n = 0;
    std::uint32_t p_d = 0;
    double p_s = 0.25, p_eps = 0.25;
    predict->add_flag("--srw", p_srw, "SRW cutoff location/window");
    predict->add_flag("--nbrw", p_nbrw, "NBRW mixing-time bounds");
    predict->add_flag("--large-d", p_large, "large-degree two-step window");
    predict->add_option("-n,--vertices", p_n, "vertex count")->required();
    predict->add_option("-d,--degree", p_d, "degree (>= 3)")->required();
    predict->add_option("--s", p_s, "SRW level s in (0,1)");
    predict->add_option("-e,--eps", p_eps, "NBRW epsilon in (0,1)");

    // verify
    auto* verify = app.add_subcommand("verify", "lemma suite: pass/warn report");
    std::string v_graph;
    std::uint64_t v_seed = 0;
    std::uint32_t v_trials = 400;
    unsigned v_threads = 1;
    verify->add_option("-g,--graph", v_graph, "graph file")->required();
    verify->add_option("-s,--seed", v_seed, "RNG seed")->required();
    verify->add_option("-r,--trials", v_trials, "trials per statistical check");
    verify->add_option("-j,--threads", v_threads, "parallel sweep width");

    // bd-speed
    auto* bd = app.add_subcommand("bd-speed", "distance-from-start speed profile to CSV");
    std::string b_graph, b_out;
    Vertex b_u = 0;
    std::vector<double> b_c;
    std::uint32_t b_trials = 400;
    std::uint64_t b_seed = 0;
    bd->add_option("-g,--graph", b_graph, "graph file")->required();
    bd->add_option("-u,--start", b_u, "start vertex");
    bd->add_option("-c,--c-values", b_c, "time multipliers c")->required();
    bd->add_option("-r,--trials", b_trials, "Monte Carlo trials");
    bd->add_option("-s,--seed", b_seed, "RNG seed")->required();
    bd->add_option("-o,--output", b_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_out, gen_n, gen_d, gen_seed, gen_approx, gen_attempts);
        if (profile->parsed()) return cmd_profile(pa, profile_out);
        if (tmix->parsed()) return cmd_tmix(ta, tmix_eps);
        if (predict->parsed()) {
            if (!p_srw && !p_nbrw && !p_large)
                raise(Errc::bad_level, "choose at least one of --srw/--nbrw/--large-d");
            return cmd_predict(p_srw, p_nbrw, p_large, p_n, p_d, p_s, p_eps);
        }
        if (verify->parsed()) return cmd_verify(v_graph, v_seed, v_trials, v_threads);
        if (bd->parsed()) return cmd_bd_speed(b_graph, b_u, b_c, b_trials, b_seed, b_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_validation_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace regmix::cli
