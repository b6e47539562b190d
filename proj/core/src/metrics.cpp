#include "aoi_patrol/metrics.hpp"

#include <stdexcept>

#include "aoi_patrol/errors.hpp"

namespace aoi_patrol {

namespace {

// Node id at tour position p; positions 0 and N+1 are the server.
int node_at(const Route& route, int p) {
    const int n = route.size();
    if (p == 0 || p == n + 1) return 0;
    return route.order[p - 1];
}

}  // namespace

double segment_time(const Instance& instance, const Route& route, int i, int j) {
    const int n = route.size();
    if (i < 0 || j > n + 1 || i > j) {
        throw std::out_of_range("segment positions out of range");
    }
    double sum = 0.0;
    for (int p = i; p < j; ++p) {
        sum += instance.t(node_at(route, p), node_at(route, p + 1));
    }
    return sum;
}

double round_trip(const Instance& instance, const Route& route) {
    require_valid_route(instance, route);
    return segment_time(instance, route, 0, route.size() + 1);
}

double aoi(const Instance& instance, const Route& route, int k, double delta) {
    require_valid_route(instance, route);
    const int n = route.size();
    if (k < 1 || k > n) {
        throw std::out_of_range("node position out of range");
    }
    const double to_node = segment_time(instance, route, 0, k);
    const double back = segment_time(instance, route, k, n + 1);
    if (delta < 0.0 || delta > to_node + back) {
        throw std::out_of_range("delta outside [0, round trip]");
    }
    return (back - delta) + to_node + back;
}

RouteMetrics metrics(const Instance& instance, const Route& route) {
    require_valid_route(instance, route);
    const int n = route.size();
    RouteMetrics m;
    m.prefix.assign(static_cast<std::size_t>(n) + 1, 0.0);
    int prev = 0;
    for (int k = 1; k <= n; ++k) {
        m.prefix[k] = m.prefix[k - 1] + instance.t(prev, route.order[k - 1]);
        prev = route.order[k - 1];
    }
    m.round_trip = m.prefix[n] + instance.t(prev, 0);
    m.mai_per_node.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        m.mai_per_node[k] = m.round_trip + (m.round_trip - m.prefix[k]);
    }
    m.mai = m.mai_per_node[1];
    return m;
}

}  // namespace aoi_patrol
