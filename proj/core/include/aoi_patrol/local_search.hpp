#pragma once

#include <filesystem>

#include "aoi_patrol/instance.hpp"
#include "aoi_patrol/local_search_config.hpp"

namespace aoi_patrol {

// First-improvement 2-opt and Or-opt (segments of length 1-3) on the closed
// tour until no improving move or max_passes. Never increases the round trip;
// the result is oriented for minimum MAI.
Route improve(const Instance& instance, const Route& start, const ImproverConfig& config = {});

// Round-trip minimizing route: best of improve() over a nearest-neighbor
// start and seeded random restarts. Stand-in for an external TSP solver.
Route ls_route(const Instance& instance, const ImproverConfig& config = {});

// Writes the instance in TSPLIB95 format: EUC_2D with coordinates when
// present, otherwise an EXPLICIT FULL_MATRIX with integer-scaled weights (the
// scale factor is recorded in a COMMENT line).
void export_tsplib(const Instance& instance, const std::filesystem::path& path);

// Reads a TSPLIB .tour file covering all nodes, rotates it so the server
// leads, and returns the orientation with the smaller MAI.
Route import_tour(const Instance& instance, const std::filesystem::path& path);

}  // namespace aoi_patrol
