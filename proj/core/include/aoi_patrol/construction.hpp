#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aoi_patrol/instance.hpp"
#include "aoi_patrol/local_search_config.hpp"

namespace aoi_patrol {

struct SpanningTree {
    std::vector<std::pair<int, int>> edges;  // exactly N edges over N+1 nodes
    double total_weight = 0.0;
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // disjoint, covers the given vertex set
    double total_weight = 0.0;
    // True when found by the exact subset DP; the 1.5 approximation guarantee
    // is only certified in that mode.
    bool exact = true;
};

// Multiset union of a spanning tree and a matching; every vertex even degree.
struct EulerMultigraph {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

// Largest odd-vertex set handled by the exact matching DP.
inline constexpr int MATCH_EXACT_LIMIT = 20;

// Greedy heuristic: from the server, repeatedly visit the closest unvisited
// data node. Ties go to the lowest node index.
Route nearest_neighbor(const Instance& instance);

// Prim's algorithm from the server. With a seed edge (0, i) the tree is the
// minimum spanning tree among those containing that edge.
SpanningTree prim_mst(const Instance& instance, std::optional<std::pair<int, int>> seed_edge = {});

// Vertices with odd degree in the tree; always an even number of them.
std::vector<int> odd_vertices(const SpanningTree& tree);

// Exact minimum-weight perfect matching (subset DP) for up to
// MATCH_EXACT_LIMIT vertices; greedy plus pairwise-swap improvement above
// that, flagged non-exact.
Matching min_weight_perfect_matching(const Instance& instance, const std::vector<int>& verts);

EulerMultigraph combine(const Instance& instance, const SpanningTree& tree, const Matching& matching);

// Hierholzer's algorithm. Returns a closed walk from start traversing every
// edge exactly once; when first_edge is given it is the first traversed edge.
std::vector<int> euler_circuit(const EulerMultigraph& multigraph, int start,
                               std::optional<std::pair<int, int>> first_edge = {});

// Drops repeated nodes from a closed walk, keeping first occurrences. With
// pin_first the first data node of the walk is asserted to stay in front.
Route shortcut(const std::vector<int>& walk, bool pin_first = false);

// Picks the direction of an undirected Hamiltonian cycle with the smaller
// MAI, i.e. the one whose first leg from the server is longer. Ties go to the
// lower first node index.
Route orient(const Instance& instance, const Route& tour);

// Christofides-based shortest-round-trip planner: MST, matching on odd
// vertices, Euler circuit, shortcut, orientation. At most 1.5x the optimal
// MAI when the matching is exact.
Route srtt(const Instance& instance);

// For every server edge (0, i), builds a Christofides route forced to start
// with that edge, evaluates both directions, and keeps the overall min-MAI
// candidate. The plain srtt route is always included, so the result never
// loses to srtt.
Route enforced(const Instance& instance);

// Min-MAI of enforced() and the local-search route (see local_search.hpp).
Route hybrid(const Instance& instance, const ImproverConfig& config = {});

}  // namespace aoi_patrol
