#pragma once

#include <filesystem>
#include <string>

#include "aoi_patrol/instance.hpp"
#include "aoi_patrol/scenarios.hpp"

namespace aoi_patrol {

// Scenario/instance JSON schema: n_data (int), exactly one of coords
// ([[x,y],...], meters, index 0 = server) or travel (row-major (N+1)^2
// seconds), speed_mps (required with coords), meta (free-form object holding
// distribution, area_m, seed).

std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

void write_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario read_scenario(const std::filesystem::path& path);

// Planner output: order, round_trip_s, mai_s, mai_per_node_s.
std::string route_to_json(const Instance& instance, const Route& route,
                          const std::string& algorithm);
Route route_from_json(const Instance& instance, const std::string& text);

void write_route(const Instance& instance, const Route& route, const std::string& algorithm,
                 const std::filesystem::path& path);
Route read_route(const Instance& instance, const std::filesystem::path& path);

}  // namespace aoi_patrol
