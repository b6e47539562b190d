#include "aoi_patrol/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aoi_patrol/errors.hpp"

namespace aoi_patrol {

double Instance::max_travel() const {
    double m = 0.0;
    for (double w : travel) m = std::max(m, w);
    return m;
}

Instance matrix_from_coords(const std::vector<std::array<double, 2>>& coords, double speed_mps) {
    if (speed_mps <= 0.0) {
        throw std::invalid_argument("speed must be positive");
    }
    if (coords.size() < 2) {
        throw std::invalid_argument("need the server and at least one data node");
    }
    Instance inst;
    inst.n_data = static_cast<int>(coords.size()) - 1;
    inst.coords = coords;
    inst.speed_mps = speed_mps;
    const int n = inst.n_nodes();
    inst.travel.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = coords[i][0] - coords[j][0];
            const double dy = coords[i][1] - coords[j][1];
            const double time = std::hypot(dx, dy) / speed_mps;
            inst.t(i, j) = time;
            inst.t(j, i) = time;
        }
    }
    return inst;
}

namespace {

std::string describe(const Violation& v) {
    std::ostringstream os;
    switch (v.kind) {
        case Violation::Kind::bad_dimensions:
            os << "travel matrix size does not match n_data";
            break;
        case Violation::Kind::negative_weight:
            os << "negative travel time at (" << v.i << "," << v.j << ")";
            break;
        case Violation::Kind::nonzero_diagonal:
            os << "nonzero diagonal at (" << v.i << "," << v.i << ")";
            break;
        case Violation::Kind::asymmetry:
            os << "asymmetric pair (" << v.i << "," << v.j << "), difference " << v.magnitude;
            break;
        case Violation::Kind::triangle:
            os << "triangle violation at (" << v.i << "," << v.j << "," << v.k << ") of magnitude "
               << v.magnitude;
            break;
        case Violation::Kind::coords_mismatch:
            os << "travel[" << v.i << "][" << v.j << "] disagrees with euclidean(i,j)/speed by "
               << v.magnitude;
            break;
        case Violation::Kind::zero_distance:
            os << "nodes " << v.i << " and " << v.j << " coincide (zero travel time)";
            break;
    }
    return os.str();
}

void add(std::vector<Violation>& report, Violation v) {
    v.message = describe(v);
    report.push_back(std::move(v));
}

}  // namespace

std::vector<Violation> validate(const Instance& instance) {
    std::vector<Violation> report;
    const int n = instance.n_nodes();
    if (instance.n_data < 1 ||
        instance.travel.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        add(report, {Violation::Kind::bad_dimensions});
        return report;
    }
    const double tol = instance.tol();

    for (int i = 0; i < n; ++i) {
        if (instance.t(i, i) != 0.0) {
            add(report, {Violation::Kind::nonzero_diagonal, i, i, -1, instance.t(i, i)});
        }
        for (int j = i + 1; j < n; ++j) {
            if (instance.t(i, j) < 0.0 || instance.t(j, i) < 0.0) {
                add(report, {Violation::Kind::negative_weight, i, j, -1,
                             std::min(instance.t(i, j), instance.t(j, i))});
            }
            const double diff = std::abs(instance.t(i, j) - instance.t(j, i));
            if (diff > tol) {
                add(report, {Violation::Kind::asymmetry, i, j, -1, diff});
            }
            if (instance.t(i, j) == 0.0 && instance.t(j, i) == 0.0) {
                add(report, {Violation::Kind::zero_distance, i, j});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double slack = instance.t(i, j) - instance.t(i, k) - instance.t(k, j);
                if (slack > tol) {
                    add(report, {Violation::Kind::triangle, i, j, k, slack});
                }
            }
        }
    }

    if (instance.coords) {
        if (!instance.speed_mps || *instance.speed_mps <= 0.0 ||
            instance.coords->size() != static_cast<std::size_t>(n)) {
            add(report, {Violation::Kind::coords_mismatch});
        } else {
            const auto& c = *instance.coords;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const double expected =
                        std::hypot(c[i][0] - c[j][0], c[i][1] - c[j][1]) / *instance.speed_mps;
                    const double diff = std::abs(instance.t(i, j) - expected);
                    if (diff > tol) {
                        add(report, {Violation::Kind::coords_mismatch, i, j, -1, diff});
                    }
                }
            }
        }
    }
    return report;
}

bool is_valid_route(const Instance& instance, const Route& route) {
    if (route.size() != instance.n_data) return false;
    std::vector<bool> seen(static_cast<std::size_t>(instance.n_data) + 1, false);
    for (int v : route.order) {
        if (v < 1 || v > instance.n_data || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

void require_valid_route(const Instance& instance, const Route& route) {
    if (!is_valid_route(instance, route)) {
        throw ValidationError("route is not a permutation of the data nodes");
    }
}

}  // namespace aoi_patrol
