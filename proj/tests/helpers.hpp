#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "aoi_patrol/instance.hpp"
#include "aoi_patrol/rng.hpp"

namespace aoi_patrol::testing {

// Random points in a square, server at index 0.
inline Instance random_euclidean(int n_data, std::mt19937_64& rng, double side = 1000.0,
                                 double speed = 20.0) {
    std::vector<std::array<double, 2>> coords;
    coords.reserve(n_data + 1);
    for (int i = 0; i <= n_data; ++i) {
        coords.push_back({uniform(rng, 0.0, side), uniform(rng, 0.0, side)});
    }
    return matrix_from_coords(coords, speed);
}

// Random symmetric weights turned into a metric by shortest-path closure.
inline Instance random_metric(int n_data, std::mt19937_64& rng) {
    Instance inst;
    inst.n_data = n_data;
    const int n = inst.n_nodes();
    inst.travel.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = uniform(rng, 1.0, 100.0);
            inst.t(i, j) = w;
            inst.t(j, i) = w;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                inst.t(i, j) = std::min(inst.t(i, j), inst.t(i, k) + inst.t(k, j));
            }
        }
    }
    return inst;
}

// Unit-weight triangle: one server, two data nodes, all travel times 1.
inline Instance unit_triangle() {
    Instance inst;
    inst.n_data = 2;
    inst.travel = {0, 1, 1, 1, 0, 1, 1, 1, 0};
    return inst;
}

// Exhaustive Hamiltonian path check on a 0-based undirected graph, n <= ~10.
inline bool has_hamiltonian_path(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : edges) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    // DP over subsets: reachable[mask][v] = a path visiting mask ends at v.
    std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) reach[std::size_t{1} << v][v] = true;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            for (int u = 0; u < n; ++u) {
                if (!adj[v][u] || (mask >> u) & 1) continue;
                reach[mask | (std::size_t{1} << u)][u] = true;
            }
        }
    }
    const std::size_t full = (std::size_t{1} << n) - 1;
    return std::any_of(reach[full].begin(), reach[full].end(), [](bool b) { return b; });
}

// Random simple graph with the given edge probability.
inline std::vector<std::pair<int, int>> random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) edges.emplace_back(i, j);
        }
    }
    return edges;
}

}  // namespace aoi_patrol::testing
