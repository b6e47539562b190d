#include <algorithm>
#include <cmath>
#include <numeric>

#include <doctest.h>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/exact.hpp"
#include "aoi_patrol/instance.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/scenarios.hpp"
#include "helpers.hpp"

using namespace aoi_patrol;
using namespace aoi_patrol::testing;

TEST_CASE("matrix_from_coords basic travel times") {
    auto a = matrix_from_coords({{0, 0}, {20, 0}}, 20.0);
    CHECK(a.t(0, 1) == doctest::Approx(1.0));

    auto b = matrix_from_coords({{0, 0}, {3, 4}}, 1.0);
    CHECK(b.t(0, 1) == doctest::Approx(5.0));

    auto c = matrix_from_coords({{0, 0}, {20, 0}, {0, 20}}, 20.0);
    CHECK(c.t(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("matrix_from_coords rejects bad input") {
    CHECK_THROWS_AS(matrix_from_coords({{0, 0}, {1, 1}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_coords({{0, 0}}, 1.0), std::invalid_argument);
}

TEST_CASE("validate accepts Euclidean instances") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        auto inst = random_euclidean(6, rng);
        CHECK(validate(inst).empty());
    }
}

TEST_CASE("validate flags a triangle violation with its triple") {
    Instance inst;
    inst.n_data = 2;
    inst.travel = {0, 1, 3, 1, 0, 1, 3, 1, 0};
    const auto report = validate(inst);
    REQUIRE_FALSE(report.empty());
    bool found = false;
    for (const auto& v : report) {
        if (v.kind == Violation::Kind::triangle && v.i == 0 && v.j == 2 && v.k == 1) {
            CHECK(v.magnitude == doctest::Approx(1.0));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("validate accepts the counterexample fixture") {
    CHECK(validate(counterexample_instance(100.5)).empty());
}

TEST_CASE("segment_time sums consecutive legs") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    CHECK(segment_time(tri, route, 0, 2) == doctest::Approx(2.0));
    for (int k = 0; k <= 3; ++k) {
        CHECK(segment_time(tri, route, k, k) == 0.0);
    }

    const auto cx = counterexample_instance(100.5);
    const Route r{{1, 3, 2}};
    CHECK(segment_time(cx, r, 1, 4) == doctest::Approx(201.0));
    CHECK_THROWS_AS(segment_time(cx, r, 2, 5), std::out_of_range);
}

TEST_CASE("round_trip") {
    const auto cx = counterexample_instance(100.5);
    CHECK(round_trip(cx, Route{{1, 3, 2}}) == doctest::Approx(202.0));
    CHECK(round_trip(cx, Route{{3, 1, 2}}) == doctest::Approx(202.5));

    Instance single;
    single.n_data = 1;
    single.travel = {0, 5, 5, 0};
    CHECK(round_trip(single, Route{{1}}) == doctest::Approx(10.0));
}

TEST_CASE("aoi formula") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    CHECK(aoi(tri, route, 1, 1.0) == doctest::Approx(4.0));
    // delta equal to the full wait back to the server gives exactly T_R.
    const double back = segment_time(tri, route, 1, 3);
    CHECK(aoi(tri, route, 1, back) == doctest::Approx(round_trip(tri, route)));
    // delta -> 0 approaches the per-node MAI.
    const auto m = metrics(tri, route);
    CHECK(aoi(tri, route, 1, 0.0) == doctest::Approx(m.mai_per_node[1]));
    CHECK_THROWS_AS(aoi(tri, route, 1, -0.5), std::out_of_range);
    CHECK_THROWS_AS(aoi(tri, route, 1, 100.0), std::out_of_range);
}

TEST_CASE("metrics on the counterexample fixtures") {
    const auto cx = counterexample_instance(100.5);
    CHECK(metrics(cx, Route{{1, 3, 2}}).mai == doctest::Approx(403.0));
    CHECK(metrics(cx, Route{{3, 1, 2}}).mai == doctest::Approx(304.5));

    Instance single;
    single.n_data = 1;
    single.travel = {0, 5, 5, 0};
    CHECK(metrics(single, Route{{1}}).mai == doctest::Approx(15.0));
}

TEST_CASE("metric identities on random instances and routes") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(uniform_index(rng, 7));
        const Instance inst = rep % 2 ? random_euclidean(n, rng) : random_metric(n, rng);
        Route route;
        route.order.resize(n);
        std::iota(route.order.begin(), route.order.end(), 1);
        shuffle_vector(route.order, rng);

        const auto m = metrics(inst, route);
        const double tol = 1e-9 * std::max(1.0, m.round_trip);

        // MAI_R = 2 T_R - T_R(0,1)
        CHECK(m.mai == doctest::Approx(2.0 * m.round_trip - m.prefix[1]).epsilon(1e-12));
        // prefix nondecreasing, per-node MAI nonincreasing, max at k = 1
        for (int k = 2; k <= n; ++k) {
            CHECK(m.prefix[k] >= m.prefix[k - 1] - tol);
            CHECK(m.mai_per_node[k] <= m.mai_per_node[k - 1] + tol);
        }
        CHECK(m.mai == doctest::Approx(*std::max_element(m.mai_per_node.begin() + 1,
                                                         m.mai_per_node.end())));
        // mai_per_node[k] = round_trip + (round_trip - prefix[k])
        for (int k = 1; k <= n; ++k) {
            CHECK(m.mai_per_node[k] ==
                  doctest::Approx(2.0 * m.round_trip - m.prefix[k]).epsilon(1e-12));
        }
        // aoi is strictly decreasing in delta
        const double step = m.round_trip / 8.0;
        double prev = aoi(inst, route, 1, 0.0);
        for (int s = 1; s <= 7; ++s) {
            const double cur = aoi(inst, route, 1, s * step);
            CHECK(cur < prev);
            prev = cur;
        }
        // reversal keeps the round trip
        CHECK(round_trip(inst, route.reversed()) == doctest::Approx(m.round_trip));
    }
}

TEST_CASE("uniform scaling scales metrics and keeps routes") {
    std::mt19937_64 rng(11);
    const Instance inst = random_metric(6, rng);
    Instance scaled = inst;
    const double c = 3.5;
    for (double& w : scaled.travel) w *= c;

    const Route route{{3, 1, 5, 2, 6, 4}};
    const auto m0 = metrics(inst, route);
    const auto m1 = metrics(scaled, route);
    CHECK(m1.round_trip == doctest::Approx(c * m0.round_trip));
    CHECK(m1.mai == doctest::Approx(c * m0.mai));
    for (int k = 1; k <= 6; ++k) {
        CHECK(m1.prefix[k] == doctest::Approx(c * m0.prefix[k]));
        CHECK(m1.mai_per_node[k] == doctest::Approx(c * m0.mai_per_node[k]));
    }
}

TEST_CASE("route validity is enforced") {
    const auto tri = unit_triangle();
    CHECK_THROWS_AS(round_trip(tri, Route{{1, 1}}), ValidationError);
    CHECK_THROWS_AS(round_trip(tri, Route{{1}}), ValidationError);
    CHECK(is_valid_route(tri, Route{{2, 1}}));
}
