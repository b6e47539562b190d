#include "aoi_patrol/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/rng.hpp"

namespace aoi_patrol {

AoiTrace run(const Instance& instance, const Route& route, const GenerationProcess& process,
             int cycles) {
    require_valid_route(instance, route);
    if (cycles < 1) throw std::invalid_argument("need at least one cycle");

    const RouteMetrics m = metrics(instance, route);
    const double t_round = m.round_trip;
    const int n = route.size();
    const double horizon = cycles * t_round;

    AoiTrace trace;
    trace.max_aoi_per_node.assign(static_cast<std::size_t>(instance.n_data) + 1, 0.0);

    // Position k is visited at c * T_R + prefix[k] in cycle c; the drone is
    // back at the server at (c + 1) * T_R.
    auto record = [&](int pos, double gen_time, int cycle) {
        const double first_visit = m.prefix[pos];
        if (cycle >= cycles) return;  // never picked up within the horizon
        PacketRecord rec;
        rec.node = route.order[pos - 1];
        rec.gen_time = gen_time;
        rec.pickup_time = cycle * t_round + m.prefix[pos];
        rec.delivery_time = (cycle + 1) * t_round;
        rec.aoi = rec.delivery_time - rec.gen_time;
        rec.cycle = cycle;
        rec.steady_state = gen_time >= first_visit;
        trace.max_aoi_per_node[rec.node] = std::max(trace.max_aoi_per_node[rec.node], rec.aoi);
        if (rec.steady_state) {
            trace.max_steady_aoi = std::max(trace.max_steady_aoi, rec.aoi);
        }
        trace.packets.push_back(rec);
    };

    // Pickup at the first arrival at or after the generation instant; a packet
    // generated exactly at an arrival is collected on the spot.
    auto deliver = [&](int pos, double gen_time) {
        double c = std::ceil((gen_time - m.prefix[pos]) / t_round);
        if (c < 0.0) c = 0.0;
        record(pos, gen_time, static_cast<int>(c));
    };

    switch (process.kind) {
        case GenerationProcess::Kind::worst_case:
            if (process.delta < 0.0 || process.delta >= t_round) {
                throw std::invalid_argument("delta must lie in [0, round trip)");
            }
            // Generated just after each departure, so collected one cycle later
            // even when delta is exactly zero.
            for (int pos = 1; pos <= n; ++pos) {
                for (int c = 0; c + 1 < cycles; ++c) {
                    record(pos, c * t_round + m.prefix[pos] + process.delta, c + 1);
                }
            }
            break;
        case GenerationProcess::Kind::periodic: {
            if (process.interval <= 0.0) throw std::invalid_argument("interval must be positive");
            for (int pos = 1; pos <= n; ++pos) {
                for (double g = process.phase; g < horizon; g += process.interval) {
                    deliver(pos, g);
                }
            }
            break;
        }
        case GenerationProcess::Kind::poisson: {
            if (process.rate <= 0.0) throw std::invalid_argument("rate must be positive");
            for (int pos = 1; pos <= n; ++pos) {
                // Independent stream per node, deterministic in (seed, node).
                std::mt19937_64 rng(process.seed ^ (0x9e3779b97f4a7c15ULL * route.order[pos - 1]));
                double g = 0.0;
                while (true) {
                    g += -std::log(1.0 - uniform01(rng)) / process.rate;
                    if (g >= horizon) break;
                    deliver(pos, g);
                }
            }
            break;
        }
    }

    std::sort(trace.packets.begin(), trace.packets.end(),
              [](const PacketRecord& a, const PacketRecord& b) {
                  if (a.gen_time != b.gen_time) return a.gen_time < b.gen_time;
                  return a.node < b.node;
              });
    return trace;
}

TraceSummary summarize(const AoiTrace& trace) {
    if (trace.packets.empty()) {
        throw ValidationError("trace is empty");
    }
    int max_node = 0;
    for (const auto& p : trace.packets) max_node = std::max(max_node, p.node);
    std::vector<NodeSummary> acc(static_cast<std::size_t>(max_node) + 1);
    TraceSummary summary;
    for (const auto& p : trace.packets) {
        auto& s = acc[p.node];
        s.node = p.node;
        s.max_aoi = std::max(s.max_aoi, p.aoi);
        s.mean_aoi += p.aoi;
        ++s.packets;
        if (p.steady_state) {
            summary.route_max_aoi = std::max(summary.route_max_aoi, p.aoi);
        }
    }
    for (auto& s : acc) {
        if (s.packets > 0) {
            s.mean_aoi /= s.packets;
            summary.per_node.push_back(s);
        }
    }
    return summary;
}

void write_trace_csv(const AoiTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "node,gen_time_s,pickup_time_s,delivery_time_s,aoi_s,cycle,steady_state\n";
    char buf[256];
    for (const auto& p : trace.packets) {
        std::snprintf(buf, sizeof(buf), "%d,%.9f,%.9f,%.9f,%.9f,%d,%d\n", p.node, p.gen_time,
                      p.pickup_time, p.delivery_time, p.aoi, p.cycle, p.steady_state ? 1 : 0);
        out << buf;
    }
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace aoi_patrol
