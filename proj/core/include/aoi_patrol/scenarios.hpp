#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aoi_patrol/instance.hpp"

namespace aoi_patrol {

enum class Distribution { grid, cluster, outlier };

Distribution distribution_from_string(const std::string& name);
std::string to_string(Distribution dist);

struct ScenarioConfig {
    int n_data = 8;
    double area_m = 1000.0;  // side length of the square deployment area
    Distribution distribution = Distribution::grid;
    std::uint64_t seed = 0;
    double speed_mps = 20.0;
};

// Instance plus the generation metadata needed to reproduce it.
struct Scenario {
    Instance instance;
    std::string distribution;
    double area_m = 0.0;
    std::uint64_t seed = 0;
    std::string id;
};

// Synthetic deployment with the server at the area center.
//  grid:    4x4 cells, round-robin node counts over a seed-shuffled cell order.
//  cluster: all nodes packed into 1 cell (n <= 8) or 4 cells.
//  outlier: 2x2 cells; one cell holds a single node, another holds the rest.
// Deterministic given the config.
Scenario gen_scenario(const ScenarioConfig& config);

// Hamiltonian-path reduction: adds a server connected to every vertex at
// weight 1; graph edges weigh 1, non-edges weigh 2. The input graph has a
// Hamiltonian path iff the optimal MAI of the result is at most 2N+1.
Instance ham_path_reduction(int n_vertices, const std::vector<std::pair<int, int>>& edges);

// Family of weighted graphs on which the srtt MAI ratio approaches 3/2:
// a line of unit edges with (1+eps) skip chords, completed by all-pairs
// shortest paths. N must be odd and at least 5.
Instance tightness_instance(int n_data, double eps);

// 4-node instance where the shortest cycle has a larger MAI than a longer
// one: t01 = t02 = t12 = 1, t13 = t23 = 100, t03 in (100, 101).
Instance counterexample_instance(double t03);

}  // namespace aoi_patrol
