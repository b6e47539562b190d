#include "aoi_patrol/local_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aoi_patrol/construction.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/rng.hpp"

namespace aoi_patrol {

namespace {

// tour holds node ids with tour[0] == 0 fixed; moves operate on the cycle.
double tour_length(const Instance& inst, const std::vector<int>& tour) {
    double len = 0.0;
    for (std::size_t i = 0; i < tour.size(); ++i) {
        len += inst.t(tour[i], tour[(i + 1) % tour.size()]);
    }
    return len;
}

// Reverse tour[i..j]; gain of the 2-opt move on the cycle.
bool two_opt_pass(const Instance& inst, std::vector<int>& tour, double tol) {
    const int n = static_cast<int>(tour.size());
    bool improved = false;
    for (int i = 1; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = tour[i - 1], b = tour[i];
            const int c = tour[j], d = tour[(j + 1) % n];
            const double delta = inst.t(a, c) + inst.t(b, d) - inst.t(a, b) - inst.t(c, d);
            if (delta < -tol) {
                std::reverse(tour.begin() + i, tour.begin() + j + 1);
                improved = true;
            }
        }
    }
    return improved;
}

// Relocate a segment of 1-3 nodes elsewhere on the cycle, forward or reversed.
bool or_opt_pass(const Instance& inst, std::vector<int>& tour, double tol) {
    const int n = static_cast<int>(tour.size());
    bool improved = false;
    for (int len = 1; len <= 3 && len < n - 1; ++len) {
        for (int i = 1; i + len <= n; ++i) {
            const int prev = tour[i - 1];
            const int first = tour[i];
            const int last = tour[i + len - 1];
            const int next = tour[(i + len) % n];
            const double removed = inst.t(prev, first) + inst.t(last, next) - inst.t(prev, next);
            // Try every insertion point outside the segment.
            for (int p = 0; p < n; ++p) {
                if (p >= i - 1 && p <= i + len - 1) continue;
                const int u = tour[p];
                const int v = tour[(p + 1) % n];
                if ((p + 1) % n == i) continue;
                const double fwd = inst.t(u, first) + inst.t(last, v) - inst.t(u, v);
                const double rev = inst.t(u, last) + inst.t(first, v) - inst.t(u, v);
                const bool reverse_seg = rev < fwd;
                const double added = reverse_seg ? rev : fwd;
                if (added - removed < -tol) {
                    std::vector<int> seg(tour.begin() + i, tour.begin() + i + len);
                    if (reverse_seg) std::reverse(seg.begin(), seg.end());
                    tour.erase(tour.begin() + i, tour.begin() + i + len);
                    // Position of u may have shifted after the erase.
                    const auto it = std::find(tour.begin(), tour.end(), u);
                    tour.insert(it + 1, seg.begin(), seg.end());
                    improved = true;
                    // Segment indices are stale; restart this length.
                    i = 0;
                    break;
                }
            }
        }
    }
    return improved;
}

std::vector<int> to_tour(const Route& route) {
    std::vector<int> tour{0};
    tour.insert(tour.end(), route.order.begin(), route.order.end());
    return tour;
}

Route from_tour(const std::vector<int>& tour) {
    // Rotate so the server leads, then strip it.
    const auto at = std::find(tour.begin(), tour.end(), 0);
    Route route;
    route.order.insert(route.order.end(), at + 1, tour.end());
    route.order.insert(route.order.end(), tour.begin(), at);
    return route;
}

}  // namespace

Route improve(const Instance& instance, const Route& start, const ImproverConfig& config) {
    require_valid_route(instance, start);
    if (config.max_passes < 1) {
        throw std::invalid_argument("max_passes must be at least 1");
    }
    std::vector<int> tour = to_tour(start);
    const double tol = instance.tol();
    for (int pass = 0; pass < config.max_passes; ++pass) {
        const bool a = two_opt_pass(instance, tour, tol);
        const bool b = or_opt_pass(instance, tour, tol);
        if (!a && !b) break;
    }
    return orient(instance, from_tour(tour));
}

Route ls_route(const Instance& instance, const ImproverConfig& config) {
    if (config.restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    std::mt19937_64 rng(config.seed);
    Route best;
    double best_len = 0.0;
    for (int r = 0; r < config.restarts; ++r) {
        Route start;
        if (r == 0) {
            start = nearest_neighbor(instance);
        } else {
            start.order.resize(instance.n_data);
            std::iota(start.order.begin(), start.order.end(), 1);
            shuffle_vector(start.order, rng);
        }
        const Route candidate = improve(instance, start, config);
        const double len = round_trip(instance, candidate);
        // Strict comparison keeps the earliest restart on ties.
        if (r == 0 || len < best_len) {
            best_len = len;
            best = candidate;
        }
    }
    return orient(instance, best);
}

}  // namespace aoi_patrol
