#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "regmix/config_model.hpp"
#include "regmix/local_geometry.hpp"
#include "regmix/walk.hpp"

using namespace regmix;

TEST_CASE("initial distributions") {
    const ProbVector pm = initial_distribution(StateSpace::vertices, 4, PointMass{0});
    CHECK(pm.values == std::vector<double>{1, 0, 0, 0});
    const ProbVector un = initial_distribution(StateSpace::directed_edges, 12, Uniform{});
    for (double v : un.values) CHECK(v == doctest::Approx(1.0 / 12));
    CHECK_THROWS_AS(initial_distribution(StateSpace::vertices, 4, PointMass{99}), Error);
}

TEST_CASE("single-step kernels on K4") {
    const RegularGraph g = test::k4();
    const ProbVector start = initial_distribution(StateSpace::vertices, 4, PointMass{0});

    const ProbVector srw1 = evolve(Kernel::srw(g), start, 1);
    CHECK(srw1.values[0] == doctest::Approx(0.0));
    for (Vertex v : {1u, 2u, 3u}) CHECK(srw1.values[v] == doctest::Approx(1.0 / 3));

    const ProbVector lazy1 = evolve(Kernel::lazy(g), start, 1);
    CHECK(lazy1.values[0] == doctest::Approx(0.5));
    for (Vertex v : {1u, 2u, 3u}) CHECK(lazy1.values[v] == doctest::Approx(1.0 / 6));

    const DirectedEdgeSpace es(g);
    EdgeId x01 = 0;
    for (Vertex s = 0; s < 3; ++s)
        if (g.neighbor(0, s) == 1) x01 = s;
    const ProbVector nb1 =
        evolve(Kernel::nbrw(es), initial_distribution(StateSpace::directed_edges, 12, PointMass{x01}), 1);
    for (EdgeId e = 0; e < 12; ++e) {
        const bool succ = es.tail(e) == 1 && es.head(e) != 0;
        CHECK(nb1.values[e] == doctest::Approx(succ ? 0.5 : 0.0));
        if (e == es.twin(x01)) CHECK(nb1.values[e] == 0.0); // never the twin
    }
}

TEST_CASE("uniform is a fixed point of all kernels") {
    const RegularGraph g = test::petersen();
    const DirectedEdgeSpace es(g);
    for (int steps : {1, 7}) {
        const ProbVector u1 = evolve(Kernel::srw(g),
                                     initial_distribution(StateSpace::vertices, 10, Uniform{}), steps);
        const ProbVector u2 = evolve(Kernel::lazy(g),
                                     initial_distribution(StateSpace::vertices, 10, Uniform{}), steps);
        const ProbVector u3 = evolve(Kernel::nbrw(es),
                                     initial_distribution(StateSpace::directed_edges, 30, Uniform{}), steps);
        for (double v : u1.values) CHECK(v == doctest::Approx(0.1).epsilon(1e-12));
        for (double v : u2.values) CHECK(v == doctest::Approx(0.1).epsilon(1e-12));
        for (double v : u3.values) CHECK(v == doctest::Approx(1.0 / 30).epsilon(1e-12));
    }
}

TEST_CASE("lazy step is the exact half-half mixture before renormalization") {
    const RegularGraph g = sample_simple_regular(50, 3, 13).graph;
    ProbVector mu = initial_distribution(StateSpace::vertices, 50, PointMass{7});
    mu = evolve(Kernel::srw(g), mu, 3); // some non-trivial distribution

    std::vector<double> lazy_out(50), srw_out(50);
    Kernel::lazy(g).step(mu.values.data(), lazy_out.data());
    Kernel::srw(g).step(mu.values.data(), srw_out.data());
    for (Vertex v = 0; v < 50; ++v)
        CHECK(lazy_out[v] == 0.5 * mu.values[v] + 0.5 * srw_out[v]); // bitwise
}

TEST_CASE("semigroup property") {
    const RegularGraph g = sample_simple_regular(80, 4, 31).graph;
    const DirectedEdgeSpace es(g);
    for (const Kernel& k : {Kernel::srw(g), Kernel::lazy(g), Kernel::nbrw(es)}) {
        const ProbVector start =
            initial_distribution(k.space(), k.state_count(), PointMass{5});
        const ProbVector onego = evolve(k, start, 9);
        const ProbVector split = evolve(k, evolve(k, start, 4), 5);
        for (std::size_t i = 0; i < onego.size(); ++i)
            CHECK(std::abs(onego.values[i] - split.values[i]) <= 1e-12);
    }
}

TEST_CASE("NBRW distribution equals normalized trajectory counts") {
    const RegularGraph g = sample_simple_regular(60, 3, 37).graph;
    const DirectedEdgeSpace es(g);
    const int m = 12;
    const TrajectoryCounts counts = trajectory_count_vector(es, 3, m);
    const ProbVector mu = evolve(Kernel::nbrw(es),
                                 initial_distribution(StateSpace::directed_edges,
                                                      es.num_edges(), PointMass{3}),
                                 m);
    const double scale = std::pow(2.0, m); // (d-1)^m
    for (std::size_t e = 0; e < es.num_edges(); ++e)
        CHECK(mu.values[e] * scale ==
              doctest::Approx(double(counts.exact[e])).epsilon(1e-9));
}

TEST_CASE("project_to_vertices") {
    const RegularGraph g = test::k4();
    const DirectedEdgeSpace es(g);
    const ProbVector uniform_edges =
        initial_distribution(StateSpace::directed_edges, 12, Uniform{});
    const ProbVector proj = project_to_vertices(es, uniform_edges);
    for (double v : proj.values) CHECK(v == doctest::Approx(0.25));

    EdgeId x01 = 0;
    for (Vertex s = 0; s < 3; ++s)
        if (g.neighbor(0, s) == 1) x01 = s;
    const ProbVector pm = project_to_vertices(
        es, initial_distribution(StateSpace::directed_edges, 12, PointMass{x01}));
    CHECK(pm.values[1] == doctest::Approx(1.0));

    // Two edges with a common head stack onto that head.
    ProbVector two;
    two.space = StateSpace::directed_edges;
    two.values.assign(12, 0.0);
    EdgeId a = 0, b = 0;
    for (Vertex s = 0; s < 3; ++s) {
        if (g.neighbor(1, s) == 2) a = 1 * 3 + s;
        if (g.neighbor(3, s) == 2) b = 3 * 3 + s;
    }
    two.values[a] = 0.5;
    two.values[b] = 0.5;
    const ProbVector out = project_to_vertices(es, two);
    CHECK(out.values[2] == doctest::Approx(1.0));

    CHECK_THROWS_AS(project_to_vertices(es, proj), Error); // wrong space
}

TEST_CASE("space mismatch raises") {
    const RegularGraph g = test::k4();
    const DirectedEdgeSpace es(g);
    const ProbVector vdist = initial_distribution(StateSpace::vertices, 4, Uniform{});
    try {
        evolve(Kernel::nbrw(es), vdist, 1);
        FAIL("expected SpaceMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::space_mismatch);
    }
}
