#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fracdiff/types.hpp"

using namespace fracdiff;

TEST_CASE("grid covers the domain with uniform spacing") {
    const SpatialGrid g = make_grid(-10.0, 10.0, 100);
    CHECK(g.dx() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(g.n_nodes() == 101);
    CHECK(g.node(0) == -10.0);
    CHECK(g.node(1) == doctest::Approx(-9.8).epsilon(1e-15));
    CHECK(g.node(100) - g.node(0) == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("smallest valid grid") {
    const SpatialGrid g = make_grid(0.0, 1.0, 2);
    CHECK(g.dx() == 0.5);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(1) == 0.5);
    CHECK(g.node(2) == 1.0);
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(2.0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("nearest node snapping") {
    const SpatialGrid g = make_grid(-10.0, 10.0, 100);
    CHECK(g.nearest_node(0.0) == 50);
    CHECK(g.nearest_node(0.09) == 50);
    CHECK(g.nearest_node(0.11) == 51);
    CHECK(g.nearest_node(-10.0) == 0);
    CHECK(g.nearest_node(10.0) == 100);
    CHECK_THROWS_AS(g.nearest_node(10.5), std::invalid_argument);
}

TEST_CASE("temporal mesh appends") {
    TemporalMesh m;
    CHECK(m.size() == 1);
    CHECK(m[0] == 0.0);
    m.append(0.5);
    CHECK(m.back() == 0.5);
    m.append(0.25);
    CHECK(m.back() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(m.dt(2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(m.append(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(m.append(0.0), std::invalid_argument);
}

TEST_CASE("temporal mesh stays strictly increasing under random appends") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dt(1e-8, 1.0);
    TemporalMesh m;
    for (int i = 0; i < 1000; ++i) {
        m.append(dt(rng));
    }
    for (std::size_t i = 1; i < m.size(); ++i) {
        REQUIRE(m[i] > m[i - 1]);
    }
}

TEST_CASE("problem validation names the violated bound") {
    ProblemSpec p;
    p.gamma = 1.5;
    CHECK_THROWS_WITH_AS(p.validate(),
                         doctest::Contains("gamma"), std::invalid_argument);
    p.gamma = 0.5;
    p.k_coeff = -1.0;
    CHECK_THROWS_WITH_AS(p.validate(),
                         doctest::Contains("k_coeff"), std::invalid_argument);
    p.k_coeff = 1.0;
    p.x_left = 2.0;
    p.x_right = 1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("history keeps V equal to U until an impulse overrides it") {
    SolutionHistory h(3);
    h.append({1.0, 2.0, 3.0});
    CHECK(h.size() == 1);
    CHECK(h.v_right(0) == h.u_left(0));
    CHECK_FALSE(h.impulse_at(0));

    h.v_back()[1] += 5.0;
    CHECK(h.impulse_at(0));
    CHECK(h.u_left(0)[1] == 2.0);
    CHECK(h.v_right(0)[1] == 7.0);

    CHECK_THROWS_AS(h.append({1.0, 2.0}), std::invalid_argument);
}
