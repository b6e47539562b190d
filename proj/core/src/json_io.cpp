#include "aoi_patrol/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/metrics.hpp"

namespace aoi_patrol {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario) {
    const Instance& inst = scenario.instance;
    json j;
    j["n_data"] = inst.n_data;
    if (inst.coords) {
        json coords = json::array();
        for (const auto& c : *inst.coords) coords.push_back({c[0], c[1]});
        j["coords"] = std::move(coords);
        j["speed_mps"] = *inst.speed_mps;
    } else {
        j["travel"] = inst.travel;
    }
    json meta = json::object();
    if (!scenario.distribution.empty()) meta["distribution"] = scenario.distribution;
    if (scenario.area_m > 0.0) meta["area_m"] = scenario.area_m;
    meta["seed"] = scenario.seed;
    if (!scenario.id.empty()) meta["id"] = scenario.id;
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("n_data")) {
        throw IoError("scenario JSON must be an object with n_data");
    }
    Scenario scenario;
    const int n_data = j["n_data"].get<int>();
    const bool has_coords = j.contains("coords");
    const bool has_travel = j.contains("travel");
    if (has_coords == has_travel) {
        throw IoError("exactly one of coords/travel is required");
    }
    if (has_coords) {
        if (!j.contains("speed_mps")) throw IoError("speed_mps is required with coords");
        std::vector<std::array<double, 2>> coords;
        for (const auto& c : j["coords"]) {
            coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
        }
        if (static_cast<int>(coords.size()) != n_data + 1) {
            throw IoError("coords must have n_data + 1 entries");
        }
        scenario.instance = matrix_from_coords(coords, j["speed_mps"].get<double>());
    } else {
        Instance inst;
        inst.n_data = n_data;
        inst.travel = j["travel"].get<std::vector<double>>();
        const std::size_t n = static_cast<std::size_t>(n_data) + 1;
        if (inst.travel.size() != n * n) {
            throw IoError("travel must be a row-major (n_data+1)^2 array");
        }
        scenario.instance = std::move(inst);
    }
    if (j.contains("meta") && j["meta"].is_object()) {
        const json& meta = j["meta"];
        scenario.distribution = meta.value("distribution", std::string{});
        scenario.area_m = meta.value("area_m", 0.0);
        scenario.seed = meta.value("seed", std::uint64_t{0});
        scenario.id = meta.value("id", std::string{});
    }
    return scenario;
}

void write_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    write_file(path, scenario_to_json(scenario));
}

Scenario read_scenario(const std::filesystem::path& path) {
    try {
        return scenario_from_json(read_file(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

std::string route_to_json(const Instance& instance, const Route& route,
                          const std::string& algorithm) {
    const RouteMetrics m = metrics(instance, route);
    json j;
    j["algorithm"] = algorithm;
    j["order"] = route.order;
    j["round_trip_s"] = m.round_trip;
    j["mai_s"] = m.mai;
    j["mai_per_node_s"] = std::vector<double>(m.mai_per_node.begin() + 1, m.mai_per_node.end());
    return j.dump(2) + "\n";
}

Route route_from_json(const Instance& instance, const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("order")) {
        throw IoError("route JSON must be an object with an order array");
    }
    Route route{j["order"].get<std::vector<int>>()};
    require_valid_route(instance, route);
    return route;
}

void write_route(const Instance& instance, const Route& route, const std::string& algorithm,
                 const std::filesystem::path& path) {
    write_file(path, route_to_json(instance, route, algorithm));
}

Route read_route(const Instance& instance, const std::filesystem::path& path) {
    return route_from_json(instance, read_file(path));
}

}  // namespace aoi_patrol
