#include "aoi_patrol/scenarios.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aoi_patrol/rng.hpp"

namespace aoi_patrol {

Distribution distribution_from_string(const std::string& name) {
    if (name == "grid") return Distribution::grid;
    if (name == "cluster") return Distribution::cluster;
    if (name == "outlier") return Distribution::outlier;
    throw std::invalid_argument("unknown distribution: " + name);
}

std::string to_string(Distribution dist) {
    switch (dist) {
        case Distribution::grid: return "grid";
        case Distribution::cluster: return "cluster";
        case Distribution::outlier: return "outlier";
    }
    return {};
}

namespace {

struct Cell {
    int row;
    int col;
};

// Per-cell node counts dealt round-robin over the given cell order.
std::vector<std::array<double, 2>> place_nodes(const std::vector<Cell>& cells, int n,
                                               double cell_size, std::mt19937_64& rng) {
    std::vector<int> counts(cells.size(), 0);
    for (int i = 0; i < n; ++i) ++counts[i % cells.size()];
    std::vector<std::array<double, 2>> coords;
    coords.reserve(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const double x0 = cells[c].col * cell_size;
        const double y0 = cells[c].row * cell_size;
        for (int i = 0; i < counts[c]; ++i) {
            coords.push_back({uniform(rng, x0, x0 + cell_size), uniform(rng, y0, y0 + cell_size)});
        }
    }
    return coords;
}

}  // namespace

Scenario gen_scenario(const ScenarioConfig& config) {
    if (config.n_data < 1) throw std::invalid_argument("need at least one data node");
    if (config.area_m <= 0.0) throw std::invalid_argument("area must be positive");
    if (config.speed_mps <= 0.0) throw std::invalid_argument("speed must be positive");

    std::mt19937_64 rng(config.seed);
    std::vector<std::array<double, 2>> nodes;

    switch (config.distribution) {
        case Distribution::grid: {
            const double cell = config.area_m / 4.0;
            std::vector<int> order(16);
            std::iota(order.begin(), order.end(), 0);
            shuffle_vector(order, rng);
            std::vector<Cell> cells;
            for (int idx : order) cells.push_back({idx / 4, idx % 4});
            nodes = place_nodes(cells, config.n_data, cell, rng);
            break;
        }
        case Distribution::cluster: {
            const double cell = config.area_m / 4.0;
            const int n_cells = config.n_data <= 8 ? 1 : 4;
            std::vector<int> order(16);
            std::iota(order.begin(), order.end(), 0);
            shuffle_vector(order, rng);
            std::vector<Cell> cells;
            for (int i = 0; i < n_cells; ++i) cells.push_back({order[i] / 4, order[i] % 4});
            nodes = place_nodes(cells, config.n_data, cell, rng);
            break;
        }
        case Distribution::outlier: {
            if (config.n_data < 2) {
                throw std::invalid_argument("outlier distribution needs at least 2 nodes");
            }
            const double cell = config.area_m / 2.0;
            const int outlier_cell = static_cast<int>(uniform_index(rng, 4));
            int rest_cell = static_cast<int>(uniform_index(rng, 3));
            if (rest_cell >= outlier_cell) ++rest_cell;
            const Cell oc{outlier_cell / 2, outlier_cell % 2};
            const Cell rc{rest_cell / 2, rest_cell % 2};
            auto one = place_nodes({oc}, 1, cell, rng);
            auto rest = place_nodes({rc}, config.n_data - 1, cell, rng);
            nodes = one;
            nodes.insert(nodes.end(), rest.begin(), rest.end());
            break;
        }
    }

    std::vector<std::array<double, 2>> coords;
    coords.reserve(nodes.size() + 1);
    coords.push_back({config.area_m / 2.0, config.area_m / 2.0});  // server at the center
    coords.insert(coords.end(), nodes.begin(), nodes.end());

    Scenario scenario;
    scenario.instance = matrix_from_coords(coords, config.speed_mps);
    scenario.distribution = to_string(config.distribution);
    scenario.area_m = config.area_m;
    scenario.seed = config.seed;
    std::ostringstream id;
    id << scenario.distribution << "_" << config.n_data << "_" << config.seed;
    scenario.id = id.str();
    return scenario;
}

Instance ham_path_reduction(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    if (n_vertices < 2) throw std::invalid_argument("reduction needs at least 2 vertices");
    Instance inst;
    inst.n_data = n_vertices;
    const int n = inst.n_nodes();
    inst.travel.assign(static_cast<std::size_t>(n) * n, 2.0);
    for (int i = 0; i < n; ++i) inst.t(i, i) = 0.0;
    for (int i = 1; i <= n_vertices; ++i) {
        inst.t(0, i) = 1.0;
        inst.t(i, 0) = 1.0;
    }
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices || u == v) {
            throw std::invalid_argument("edge endpoints out of range");
        }
        inst.t(u + 1, v + 1) = 1.0;  // input vertices are 0-based, data nodes 1-based
        inst.t(v + 1, u + 1) = 1.0;
    }
    return inst;
}

Instance tightness_instance(int n_data, double eps) {
    if (n_data < 5 || n_data % 2 == 0) {
        throw std::invalid_argument("n_data must be odd and at least 5");
    }
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    const int n = n_data + 1;
    constexpr double inf = std::numeric_limits<double>::infinity();
    Instance inst;
    inst.n_data = n_data;
    inst.travel.assign(static_cast<std::size_t>(n) * n, inf);
    auto set_edge = [&](int i, int j, double w) {
        inst.t(i, j) = std::min(inst.t(i, j), w);
        inst.t(j, i) = inst.t(i, j);
    };
    for (int i = 0; i < n; ++i) inst.t(i, i) = 0.0;
    set_edge(0, 1, 1.0);
    for (int i = 0; i + 2 <= n_data; ++i) set_edge(i, i + 2, 1.0);
    set_edge(0, 3, 1.0 + eps);
    set_edge(1, 2, 1.0 + eps);
    for (int i = 0; i + 4 <= n_data; ++i) set_edge(i, i + 4, 1.0 + eps);
    // Complete the graph with all-pairs shortest paths (Floyd-Warshall).
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                inst.t(i, j) = std::min(inst.t(i, j), inst.t(i, k) + inst.t(k, j));
            }
        }
    }
    return inst;
}

Instance counterexample_instance(double t03) {
    if (!(t03 > 100.0 && t03 < 101.0)) {
        throw std::invalid_argument("t03 must lie strictly between 100 and 101");
    }
    Instance inst;
    inst.n_data = 3;
    inst.travel.assign(16, 0.0);
    auto set_edge = [&](int i, int j, double w) {
        inst.t(i, j) = w;
        inst.t(j, i) = w;
    };
    set_edge(0, 1, 1.0);
    set_edge(0, 2, 1.0);
    set_edge(1, 2, 1.0);
    set_edge(1, 3, 100.0);
    set_edge(2, 3, 100.0);
    set_edge(0, 3, t03);
    return inst;
}

}  // namespace aoi_patrol
