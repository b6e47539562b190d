#pragma once

#include <vector>

#include "aoi_patrol/instance.hpp"

namespace aoi_patrol {

// Timing metrics of one patrol cycle. Positions are indices into the cyclic
// tour server, order[0], ..., order[N-1], server; position 0 and N+1 both
// denote the server.
struct RouteMetrics {
    double round_trip = 0.0;
    // prefix[k] = travel time from the server to the k-th visited node, k = 1..N.
    // prefix[0] = 0 by convention.
    std::vector<double> prefix;
    // mai_per_node[k] = worst-case age of a packet from the k-th visited node,
    // k = 1..N; index 0 unused.
    std::vector<double> mai_per_node;
    // Route-level maximum age; always equals mai_per_node[1].
    double mai = 0.0;
};

// Travel time along the route from position i to position j, i <= j, where
// positions 0 and N+1 denote the server. segment_time(x, x) = 0.
double segment_time(const Instance& instance, const Route& route, int i, int j);

double round_trip(const Instance& instance, const Route& route);

// Age of a packet generated at the k-th visited node, delta seconds after the
// drone's previous departure from it: (T(k,0) - delta) + T(0,k) + T(k,0).
double aoi(const Instance& instance, const Route& route, int k, double delta);

RouteMetrics metrics(const Instance& instance, const Route& route);

// Shorthand used throughout the planners.
inline double route_mai(const Instance& instance, const Route& route) {
    return metrics(instance, route).mai;
}

}  // namespace aoi_patrol
