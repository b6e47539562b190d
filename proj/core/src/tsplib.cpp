#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/local_search.hpp"
#include "aoi_patrol/metrics.hpp"

namespace aoi_patrol {

namespace {

// Smallest power of ten making every weight integral within tolerance,
// capped at 1e6.
double pick_scale(const Instance& inst) {
    const double tol = inst.tol();
    double scale = 1.0;
    for (int k = 0; k <= 6; ++k, scale *= 10.0) {
        bool ok = true;
        for (double w : inst.travel) {
            const double scaled = w * scale;
            if (std::abs(scaled - std::round(scaled)) > tol * scale) {
                ok = false;
                break;
            }
        }
        if (ok) return scale;
    }
    return 1e6;
}

}  // namespace

void export_tsplib(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    const int dim = instance.n_nodes();
    out << "NAME: " << (path.stem().empty() ? "instance" : path.stem().string()) << "\n";
    out << "TYPE: TSP\n";
    out << "DIMENSION: " << dim << "\n";
    if (instance.coords) {
        out << "EDGE_WEIGHT_TYPE: EUC_2D\n";
        out << "NODE_COORD_SECTION\n";
        out.precision(17);
        for (int i = 0; i < dim; ++i) {
            out << (i + 1) << " " << (*instance.coords)[i][0] << " " << (*instance.coords)[i][1]
                << "\n";
        }
    } else {
        const double scale = pick_scale(instance);
        out << "COMMENT: SCALE " << static_cast<long long>(scale)
            << " (weights are seconds multiplied by SCALE)\n";
        out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
        out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
        out << "EDGE_WEIGHT_SECTION\n";
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                out << (j ? " " : "") << static_cast<long long>(std::llround(instance.t(i, j) * scale));
            }
            out << "\n";
        }
    }
    out << "EOF\n";
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

Route import_tour(const Instance& instance, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::vector<int> tour;  // 0-based node ids
    bool in_section = false;
    std::string line;
    while (std::getline(in, line)) {
        // Strip potential CR and surrounding whitespace.
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line == "TOUR_SECTION") {
            in_section = true;
            continue;
        }
        if (!in_section) continue;
        std::istringstream fields(line);
        long long id;
        while (fields >> id) {
            if (id == -1) {
                in_section = false;
                break;
            }
            tour.push_back(static_cast<int>(id) - 1);  // TSPLIB ids are 1-based
        }
    }
    if (tour.empty()) {
        throw IoError("no TOUR_SECTION in " + path.string());
    }
    const int dim = instance.n_nodes();
    std::vector<bool> seen(dim, false);
    if (static_cast<int>(tour.size()) != dim) {
        throw ValidationError("tour does not cover all nodes exactly once");
    }
    for (int v : tour) {
        if (v < 0 || v >= dim || seen[v]) {
            throw ValidationError("tour node set does not match the instance");
        }
        seen[v] = true;
    }
    // Rotate so the server leads, then pick the better direction.
    const auto at = std::find(tour.begin(), tour.end(), 0);
    Route route;
    route.order.insert(route.order.end(), at + 1, tour.end());
    route.order.insert(route.order.end(), tour.begin(), at);
    const Route rev = route.reversed();
    return route_mai(instance, rev) < route_mai(instance, route) ? rev : route;
}

}  // namespace aoi_patrol
