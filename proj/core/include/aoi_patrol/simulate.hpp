#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "aoi_patrol/instance.hpp"

namespace aoi_patrol {

// How data packets appear at the nodes during a patrol.
struct GenerationProcess {
    enum class Kind { worst_case, periodic, poisson };
    Kind kind = Kind::worst_case;
    double delta = 0.0;      // worst_case: generation lag after each departure
    double interval = 1.0;   // periodic: seconds between packets
    double phase = 0.0;      // periodic: time of the first packet
    double rate = 1.0;       // poisson: packets per second per node
    std::uint64_t seed = 0;  // poisson

    static GenerationProcess worst_case(double delta) {
        return {Kind::worst_case, delta, 1.0, 0.0, 1.0, 0};
    }
    static GenerationProcess periodic(double interval, double phase) {
        return {Kind::periodic, 0.0, interval, phase, 1.0, 0};
    }
    static GenerationProcess poisson(double rate, std::uint64_t seed) {
        return {Kind::poisson, 0.0, 1.0, 0.0, rate, seed};
    }
};

struct PacketRecord {
    int node = 0;  // node id, not route position
    double gen_time = 0.0;
    double pickup_time = 0.0;
    double delivery_time = 0.0;
    double aoi = 0.0;
    int cycle = 0;  // patrol cycle of the pickup
    // False for packets generated before the drone's first visit to the node;
    // the age formula presumes a prior visit, so those make no claims.
    bool steady_state = false;
};

struct AoiTrace {
    std::vector<PacketRecord> packets;
    std::vector<double> max_aoi_per_node;  // indexed by node id, 0 unused
    double max_steady_aoi = 0.0;
};

struct NodeSummary {
    int node = 0;
    double max_aoi = 0.0;
    double mean_aoi = 0.0;
    int packets = 0;
};

struct TraceSummary {
    std::vector<NodeSummary> per_node;
    double route_max_aoi = 0.0;  // over steady-state packets
};

// Replays the route for `cycles` full loops at constant progression. Packets
// are picked up at the drone's next arrival at their node and delivered at
// the following server arrival; exchange time is zero. Packets never picked
// up before the simulation ends are dropped.
AoiTrace run(const Instance& instance, const Route& route, const GenerationProcess& process,
             int cycles);

TraceSummary summarize(const AoiTrace& trace);

// CSV columns: node, gen_time_s, pickup_time_s, delivery_time_s, aoi_s, cycle, steady_state.
void write_trace_csv(const AoiTrace& trace, const std::filesystem::path& path);

}  // namespace aoi_patrol
