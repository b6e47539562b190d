#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace aoi_patrol {

// A problem instance: one server (index 0) plus n_data stationary data nodes,
// connected by a complete graph of symmetric travel times in seconds.
// Instances are immutable after construction and safe to share across threads.
struct Instance {
    int n_data = 0;
    // Row-major (n_data+1)^2 matrix of direct travel times, seconds.
    std::vector<double> travel;
    // Optional (x, y) positions in meters, index 0 = server; present together with speed.
    std::optional<std::vector<std::array<double, 2>>> coords;
    std::optional<double> speed_mps;

    int n_nodes() const { return n_data + 1; }

    double t(int i, int j) const { return travel[static_cast<std::size_t>(i) * n_nodes() + j]; }

    double& t(int i, int j) { return travel[static_cast<std::size_t>(i) * n_nodes() + j]; }

    double max_travel() const;

    // Relative tolerance used by all metric checks: 1e-9 * max(1, largest entry).
    double tol() const { return 1e-9 * std::max(1.0, max_travel()); }
};

// Visiting order of data nodes, a permutation of {1..n_data}. The patrol
// implicitly starts and ends at the server.
struct Route {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }

    Route reversed() const { return Route{{order.rbegin(), order.rend()}}; }
};

struct Violation {
    enum class Kind {
        bad_dimensions,
        negative_weight,
        nonzero_diagonal,
        asymmetry,
        triangle,
        coords_mismatch,
        zero_distance,  // advisory only: coincident nodes are allowed but surfaced
    };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;
    double magnitude = 0.0;
    std::string message;

    bool is_error() const { return kind != Kind::zero_distance; }
};

// Builds a Euclidean instance: travel[i][j] = distance(i, j) / speed.
// coords[0] is the server. Throws std::invalid_argument on bad input.
Instance matrix_from_coords(const std::vector<std::array<double, 2>>& coords, double speed_mps);

// Report-based validation so callers can surface every violation at once.
// An empty list of error-grade violations means the instance is usable.
std::vector<Violation> validate(const Instance& instance);

inline bool is_valid(const std::vector<Violation>& report) {
    for (const auto& v : report) {
        if (v.is_error()) return false;
    }
    return true;
}

// True iff route.order is a permutation of {1..n_data}.
bool is_valid_route(const Instance& instance, const Route& route);

// Throws ValidationError unless the route is a permutation of the data nodes.
void require_valid_route(const Instance& instance, const Route& route);

}  // namespace aoi_patrol
