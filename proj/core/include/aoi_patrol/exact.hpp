#pragma once

#include <cstdint>
#include <vector>

#include "aoi_patrol/instance.hpp"

namespace aoi_patrol {

// Largest instance the Held-Karp table is allowed to cover. Beyond this the
// table would not fit in memory on the machines this targets, so the solver
// refuses explicitly instead of thrashing.
inline constexpr int HK_LIMIT = 24;

// Held-Karp table over all nonempty subsets of data nodes. dp(S, j) is the
// minimum travel time of a path that starts at the server, visits exactly the
// data nodes in S and ends at j (j in S). Laid out subset-major.
class PathTable {
public:
    PathTable(int n_data);

    int n_data() const { return n_; }

    double cost(std::uint32_t subset, int j) const { return dp_[index(subset, j)]; }

    // Predecessor data node on the optimal path, or 0 when the path is the
    // single edge from the server.
    int parent(std::uint32_t subset, int j) const { return parent_[index(subset, j)]; }

    std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

    // Shortest server -> ... -> j path over all data nodes, in visit order.
    std::vector<int> reconstruct(int j) const;

private:
    friend PathTable held_karp(const Instance& instance);

    std::size_t index(std::uint32_t subset, int j) const {
        return (static_cast<std::size_t>(subset) - 1) * n_ + (j - 1);
    }

    int n_;
    std::vector<double> dp_;
    std::vector<std::uint8_t> parent_;
};

// Fills the full table. Throws InfeasibleError when n_data exceeds HK_LIMIT
// or the table would exceed the memory guard.
PathTable held_karp(const Instance& instance);

// Globally MAI-optimal route: argmin over first nodes i of
// t(0,i) + 2 * cost(full, i), the path reversed so i is visited first.
Route dp_optimal(const Instance& instance);

// Exhaustive minimum-MAI search over all permutations, n_data <= 10. Ties go
// to the lexicographically smallest order. Independent oracle for dp_optimal.
Route brute_force(const Instance& instance);

// Weight of the optimal closed TSP tour, derived from the Held-Karp table.
double tsp_optimum(const Instance& instance);

}  // namespace aoi_patrol
