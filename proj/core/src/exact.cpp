#include "aoi_patrol/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/metrics.hpp"

namespace aoi_patrol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Hard cap on the table allocation; the N=24 table is ~3.4 GB and anything
// larger must fail loudly before allocation.
constexpr std::size_t kMemoryGuardBytes = std::size_t{6} << 30;

}  // namespace

PathTable::PathTable(int n_data) : n_(n_data) {
    const std::size_t cells = ((std::size_t{1} << n_) - 1) * static_cast<std::size_t>(n_);
    dp_.assign(cells, kInf);
    parent_.assign(cells, 0);
}

std::vector<int> PathTable::reconstruct(int j) const {
    std::vector<int> path;
    std::uint32_t mask = full_mask();
    int cur = j;
    while (cur != 0) {
        path.push_back(cur);
        const int prev = parent(mask, cur);
        mask &= ~(std::uint32_t{1} << (cur - 1));
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

PathTable held_karp(const Instance& instance) {
    const int n = instance.n_data;
    if (n > HK_LIMIT) {
        throw InfeasibleError("held_karp: " + std::to_string(n) + " data nodes exceed the limit of " +
                              std::to_string(HK_LIMIT));
    }
    const std::size_t cells = ((std::size_t{1} << n) - 1) * static_cast<std::size_t>(n);
    if (cells * (sizeof(double) + sizeof(std::uint8_t)) > kMemoryGuardBytes) {
        throw InfeasibleError("held_karp: table would exceed the memory guard");
    }
    PathTable table(n);
    const std::uint32_t full = table.full_mask();
    for (int j = 1; j <= n; ++j) {
        table.dp_[table.index(std::uint32_t{1} << (j - 1), j)] = instance.t(0, j);
    }
    // Ascending mask order: every strict subset has a smaller mask value.
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singletons are base cases
        for (int j = 1; j <= n; ++j) {
            if (!((mask >> (j - 1)) & 1)) continue;
            const std::uint32_t rest = mask & ~(std::uint32_t{1} << (j - 1));
            double best = kInf;
            int best_k = 0;
            for (int k = 1; k <= n; ++k) {
                if (!((rest >> (k - 1)) & 1)) continue;
                const double cand = table.dp_[table.index(rest, k)] + instance.t(k, j);
                if (cand < best) {
                    best = cand;
                    best_k = k;
                }
            }
            const std::size_t idx = table.index(mask, j);
            table.dp_[idx] = best;
            table.parent_[idx] = static_cast<std::uint8_t>(best_k);
        }
    }
    return table;
}

Route dp_optimal(const Instance& instance) {
    const PathTable table = held_karp(instance);
    const std::uint32_t full = table.full_mask();
    int best_i = 1;
    double best = kInf;
    for (int i = 1; i <= instance.n_data; ++i) {
        // MAI of the route that visits i first then follows the shortest
        // Hamiltonian path back to the server (paths are weight-symmetric).
        const double mai = instance.t(0, i) + 2.0 * table.cost(full, i);
        if (mai < best) {
            best = mai;
            best_i = i;
        }
    }
    auto path = table.reconstruct(best_i);
    std::reverse(path.begin(), path.end());
    return Route{std::move(path)};
}

Route brute_force(const Instance& instance) {
    const int n = instance.n_data;
    if (n > 10) {
        throw InfeasibleError("brute_force is limited to 10 data nodes");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Route best{perm};
    double best_mai = route_mai(instance, best);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const Route cand{perm};
        const double mai = route_mai(instance, cand);
        if (mai < best_mai) {
            best_mai = mai;
            best = cand;
        }
    }
    return best;
}

double tsp_optimum(const Instance& instance) {
    const PathTable table = held_karp(instance);
    const std::uint32_t full = table.full_mask();
    double best = kInf;
    for (int j = 1; j <= instance.n_data; ++j) {
        best = std::min(best, table.cost(full, j) + instance.t(j, 0));
    }
    return best;
}

}  // namespace aoi_patrol
