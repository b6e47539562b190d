#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <doctest.h>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/scenarios.hpp"
#include "aoi_patrol/simulate.hpp"
#include "helpers.hpp"

using namespace aoi_patrol;
using namespace aoi_patrol::testing;

namespace fs = std::filesystem;

TEST_CASE("worst_case observed AoI equals the analytic per-node MAI minus delta") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 2 + static_cast<int>(uniform_index(rng, 6));
        const Instance inst = rep % 2 ? random_euclidean(n, rng) : random_metric(n, rng);
        Route route;
        route.order.resize(n);
        std::iota(route.order.begin(), route.order.end(), 1);
        shuffle_vector(route.order, rng);
        const auto m = metrics(inst, route);
        const double delta = uniform(rng, 0.0, 0.5) * m.round_trip;

        const auto trace = run(inst, route, GenerationProcess::worst_case(delta), 4);
        CHECK(trace.packets.size() == static_cast<std::size_t>(n) * 3);
        for (int pos = 1; pos <= n; ++pos) {
            const int node = route.order[pos - 1];
            CHECK(trace.max_aoi_per_node[node] ==
                  doctest::Approx(m.mai_per_node[pos] - delta).epsilon(1e-12));
        }
        CHECK(trace.max_steady_aoi == doctest::Approx(m.mai - delta).epsilon(1e-12));
        // delta -> 0 realizes the MAI exactly.
        const auto tight = run(inst, route, GenerationProcess::worst_case(0.0), 3);
        CHECK(tight.max_steady_aoi == doctest::Approx(m.mai).epsilon(1e-12));
        CHECK(summarize(tight).route_max_aoi == doctest::Approx(m.mai).epsilon(1e-12));
    }
}

TEST_CASE("periodic packets generated at the arrival instant ride for the return leg") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    const auto m = metrics(tri, route);
    // Phase equal to the arrival time at position 1, one packet per cycle.
    const auto trace = run(tri, route, GenerationProcess::periodic(m.round_trip, m.prefix[1]), 5);
    REQUIRE_FALSE(trace.packets.empty());
    for (const auto& p : trace.packets) {
        if (p.node != route.order[0]) continue;
        CHECK(p.pickup_time == doctest::Approx(p.gen_time));
        CHECK(p.aoi == doctest::Approx(m.round_trip - m.prefix[1]));
        CHECK(p.steady_state);
    }
}

TEST_CASE("every steady-state AoI respects the analytic bounds") {
    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 3 + static_cast<int>(uniform_index(rng, 4));
        const Instance inst = random_euclidean(n, rng);
        Route route;
        route.order.resize(n);
        std::iota(route.order.begin(), route.order.end(), 1);
        shuffle_vector(route.order, rng);
        const auto m = metrics(inst, route);

        std::vector<GenerationProcess> procs = {
            GenerationProcess::periodic(m.round_trip / 7.3, 0.0),
            GenerationProcess::poisson(5.0 / m.round_trip, rep),
        };
        for (const auto& proc : procs) {
            const auto trace = run(inst, route, proc, 20);
            const double tol = 1e-9 * m.round_trip;
            for (const auto& p : trace.packets) {
                CHECK(p.aoi >= 0.0);
                CHECK(p.pickup_time >= p.gen_time - tol);
                CHECK(p.delivery_time >= p.pickup_time - tol);
                if (!p.steady_state) continue;
                CHECK(p.aoi <= m.mai + tol);
                // Delivery latency floor: the return leg from the node.
                int pos = 1;
                while (route.order[pos - 1] != p.node) ++pos;
                CHECK(p.aoi >= m.round_trip - m.prefix[pos] - tol);
            }
        }
    }
}

TEST_CASE("high-rate poisson traffic approaches the MAI") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    const auto m = metrics(tri, route);
    const auto trace = run(tri, route, GenerationProcess::poisson(50.0, 7), 200);
    CHECK(trace.max_steady_aoi <= m.mai + 1e-9);
    CHECK(trace.max_steady_aoi >= 0.99 * m.mai);
}

TEST_CASE("run validates its inputs") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    CHECK_THROWS_AS(run(tri, route, GenerationProcess::worst_case(-0.1), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(tri, route, GenerationProcess::worst_case(3.0), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(tri, route, GenerationProcess::periodic(0.0, 0.0), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(tri, route, GenerationProcess::poisson(0.0, 0), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(tri, route, GenerationProcess::worst_case(0.0), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(run(tri, Route{{1, 1}}, GenerationProcess::worst_case(0.0), 3),
                    ValidationError);
}

TEST_CASE("summarize") {
    CHECK_THROWS_AS(summarize(AoiTrace{}), ValidationError);

    AoiTrace trace;
    PacketRecord a;
    a.node = 1;
    a.aoi = 4.0;
    a.steady_state = true;
    trace.packets.push_back(a);
    const auto s1 = summarize(trace);
    REQUIRE(s1.per_node.size() == 1);
    CHECK(s1.per_node[0].max_aoi == 4.0);
    CHECK(s1.per_node[0].mean_aoi == 4.0);
    CHECK(s1.per_node[0].packets == 1);
    CHECK(s1.route_max_aoi == 4.0);

    PacketRecord b = a;
    b.node = 2;
    b.aoi = 6.0;
    trace.packets.push_back(b);
    PacketRecord c = a;
    c.aoi = 2.0;
    trace.packets.push_back(c);
    const auto s2 = summarize(trace);
    REQUIRE(s2.per_node.size() == 2);
    CHECK(s2.per_node[0].node == 1);
    CHECK(s2.per_node[0].mean_aoi == doctest::Approx(3.0));
    CHECK(s2.route_max_aoi == 6.0);

    // Non-steady packets do not move the route-level max.
    PacketRecord d = a;
    d.aoi = 100.0;
    d.steady_state = false;
    trace.packets.push_back(d);
    CHECK(summarize(trace).route_max_aoi == 6.0);
}

TEST_CASE("trace CSV export") {
    const auto tri = unit_triangle();
    const Route route{{1, 2}};
    const auto trace = run(tri, route, GenerationProcess::worst_case(0.25), 3);

    const fs::path dir = fs::temp_directory_path() / "aoi_patrol_test_trace";
    fs::create_directories(dir);
    const fs::path file = dir / "trace.csv";
    write_trace_csv(trace, file);

    std::ifstream in(file);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "node,gen_time_s,pickup_time_s,delivery_time_s,aoi_s,cycle,steady_state");
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == static_cast<int>(trace.packets.size()));
    CHECK_THROWS_AS(write_trace_csv(trace, dir / "nope" / "trace.csv"), IoError);
    fs::remove_all(dir);
}
