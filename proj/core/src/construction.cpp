#include "aoi_patrol/construction.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "aoi_patrol/errors.hpp"
#include "aoi_patrol/local_search.hpp"
#include "aoi_patrol/metrics.hpp"

namespace aoi_patrol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<int, int> normalized(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

}  // namespace

Route nearest_neighbor(const Instance& instance) {
    const int n = instance.n_data;
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    Route route;
    route.order.reserve(n);
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        double best_w = kInf;
        for (int v = 1; v <= n; ++v) {
            if (!visited[v] && instance.t(cur, v) < best_w) {
                best_w = instance.t(cur, v);
                best = v;
            }
        }
        visited[best] = true;
        route.order.push_back(best);
        cur = best;
    }
    return route;
}

SpanningTree prim_mst(const Instance& instance, std::optional<std::pair<int, int>> seed_edge) {
    const int n = instance.n_nodes();
    std::vector<bool> in_tree(n, false);
    // best[v]: cheapest edge from the tree to v; best_from[v] tracks the
    // lowest tree endpoint achieving it.
    std::vector<double> best(n, kInf);
    std::vector<int> best_from(n, -1);
    SpanningTree tree;
    tree.edges.reserve(n - 1);

    auto absorb = [&](int u) {
        in_tree[u] = true;
        for (int v = 0; v < n; ++v) {
            if (!in_tree[v] && instance.t(u, v) < best[v]) {
                best[v] = instance.t(u, v);
                best_from[v] = u;
            }
        }
    };

    absorb(0);
    if (seed_edge) {
        auto e = normalized(*seed_edge);
        if (e.first != 0 || e.second < 1 || e.second >= n) {
            throw std::invalid_argument("seed edge must join the server to a data node");
        }
        tree.edges.push_back(e);
        tree.total_weight += instance.t(e.first, e.second);
        absorb(e.second);
    }

    while (static_cast<int>(tree.edges.size()) < n - 1) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!in_tree[v] && (pick == -1 || best[v] < best[pick])) pick = v;
        }
        tree.edges.push_back(normalized({best_from[pick], pick}));
        tree.total_weight += best[pick];
        absorb(pick);
    }
    return tree;
}

std::vector<int> odd_vertices(const SpanningTree& tree) {
    int max_node = 0;
    for (const auto& [u, v] : tree.edges) max_node = std::max({max_node, u, v});
    std::vector<int> degree(static_cast<std::size_t>(max_node) + 1, 0);
    for (const auto& [u, v] : tree.edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> odd;
    for (int v = 0; v <= max_node; ++v) {
        if (degree[v] % 2 == 1) odd.push_back(v);
    }
    return odd;
}

namespace {

Matching matching_exact(const Instance& instance, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    const std::size_t n_masks = std::size_t{1} << k;
    std::vector<double> dp(n_masks, kInf);
    // choice[mask]: the vertex paired with the lowest set bit of mask.
    std::vector<std::uint8_t> choice(n_masks, 0);
    dp[0] = 0.0;
    for (std::size_t mask = 1; mask < n_masks; ++mask) {
        const int i = __builtin_ctzll(mask);
        if (!((mask >> i) & 1)) continue;
        for (int j = i + 1; j < k; ++j) {
            if (!((mask >> j) & 1)) continue;
            const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
            const double cand = dp[rest] + instance.t(verts[i], verts[j]);
            if (cand < dp[mask]) {
                dp[mask] = cand;
                choice[mask] = static_cast<std::uint8_t>(j);
            }
        }
    }
    Matching m;
    m.total_weight = dp[n_masks - 1];
    std::size_t mask = n_masks - 1;
    while (mask != 0) {
        const int i = __builtin_ctzll(mask);
        const int j = choice[mask];
        m.pairs.emplace_back(verts[i], verts[j]);
        mask &= ~(std::size_t{1} << i);
        mask &= ~(std::size_t{1} << j);
    }
    return m;
}

Matching matching_greedy(const Instance& instance, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<bool> used(k, false);
    // Repeatedly take the globally cheapest pair among unmatched vertices.
    std::vector<int> partner(k, -1);
    for (int taken = 0; taken < k; taken += 2) {
        int bi = -1, bj = -1;
        double bw = kInf;
        for (int i = 0; i < k; ++i) {
            if (used[i]) continue;
            for (int j = i + 1; j < k; ++j) {
                if (used[j]) continue;
                if (instance.t(verts[i], verts[j]) < bw) {
                    bw = instance.t(verts[i], verts[j]);
                    bi = i;
                    bj = j;
                }
            }
        }
        used[bi] = used[bj] = true;
        partner[bi] = bj;
        partner[bj] = bi;
    }
    // Pairwise swap improvement until local optimum.
    bool improved = true;
    while (improved) {
        improved = false;
        for (int a = 0; a < k; ++a) {
            const int b = partner[a];
            if (b < a) continue;
            for (int c = a + 1; c < k; ++c) {
                if (c == b) continue;
                const int d = partner[c];
                if (d < c || d == a) continue;
                const double cur =
                    instance.t(verts[a], verts[b]) + instance.t(verts[c], verts[d]);
                const double alt1 =
                    instance.t(verts[a], verts[c]) + instance.t(verts[b], verts[d]);
                const double alt2 =
                    instance.t(verts[a], verts[d]) + instance.t(verts[b], verts[c]);
                if (alt1 < cur && alt1 <= alt2) {
                    partner[a] = c;
                    partner[c] = a;
                    partner[b] = d;
                    partner[d] = b;
                    improved = true;
                    break;  // partner[a] changed, rescan from a fresh pair
                }
                if (alt2 < cur) {
                    partner[a] = d;
                    partner[d] = a;
                    partner[b] = c;
                    partner[c] = b;
                    improved = true;
                    break;
                }
            }
        }
    }
    Matching m;
    m.exact = false;
    for (int i = 0; i < k; ++i) {
        if (partner[i] > i) {
            m.pairs.emplace_back(verts[i], verts[partner[i]]);
            m.total_weight += instance.t(verts[i], verts[partner[i]]);
        }
    }
    return m;
}

}  // namespace

Matching min_weight_perfect_matching(const Instance& instance, const std::vector<int>& verts) {
    if (verts.size() % 2 != 0) {
        throw std::invalid_argument("perfect matching needs an even vertex set");
    }
    if (verts.empty()) return {};
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) <= MATCH_EXACT_LIMIT) {
        return matching_exact(instance, sorted);
    }
    return matching_greedy(instance, sorted);
}

EulerMultigraph combine(const Instance& instance, const SpanningTree& tree,
                        const Matching& matching) {
    EulerMultigraph g;
    g.n_nodes = instance.n_nodes();
    g.edges = tree.edges;
    for (const auto& p : matching.pairs) g.edges.push_back(normalized(p));
    return g;
}

std::vector<int> euler_circuit(const EulerMultigraph& multigraph, int start,
                               std::optional<std::pair<int, int>> first_edge) {
    const int n = multigraph.n_nodes;
    const int m = static_cast<int>(multigraph.edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    std::vector<int> degree(n, 0);
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = multigraph.edges[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < n; ++v) {
        if (degree[v] % 2 != 0) {
            throw ValidationError("multigraph has an odd-degree vertex");
        }
        std::sort(adj[v].begin(), adj[v].end());
    }
    std::vector<bool> used(m, false);

    auto take_next = [&](int v) -> int {
        for (const auto& [u, e] : adj[v]) {
            if (!used[e]) {
                used[e] = true;
                return u;
            }
        }
        return -1;
    };

    // Greedy trail from start; with all degrees even it can only stop back at
    // start. Subtours are spliced in afterwards, never before the first edge.
    std::vector<int> walk{start};
    int cur = start;
    if (first_edge) {
        auto e = normalized(*first_edge);
        bool found = false;
        for (const auto& [u, id] : adj[start]) {
            if (!used[id] && normalized(multigraph.edges[id]) == e &&
                (e.first == start || e.second == start)) {
                used[id] = true;
                cur = u;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::invalid_argument("first edge is not incident to the start vertex");
        }
        walk.push_back(cur);
    }
    for (int next = take_next(cur); next != -1; next = take_next(cur)) {
        walk.push_back(next);
        cur = next;
    }

    // Splice remaining subtours into the walk, always after the forced first
    // edge so it stays in front.
    const std::size_t splice_from = first_edge ? 1 : 0;
    while (true) {
        std::size_t pos = walk.size();
        for (std::size_t p = splice_from; p < walk.size(); ++p) {
            bool has_unused = false;
            for (const auto& [u, e] : adj[walk[p]]) {
                if (!used[e]) {
                    has_unused = true;
                    break;
                }
            }
            if (has_unused) {
                pos = p;
                break;
            }
        }
        if (pos == walk.size()) break;
        std::vector<int> subtour{walk[pos]};
        int c = walk[pos];
        for (int next = take_next(c); next != -1; next = take_next(c)) {
            subtour.push_back(next);
            c = next;
        }
        walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(pos) + 1, subtour.begin() + 1,
                    subtour.end());
    }
    if (static_cast<int>(std::count(used.begin(), used.end(), true)) != m) {
        throw ValidationError("multigraph is disconnected");
    }
    return walk;
}

Route shortcut(const std::vector<int>& walk, bool pin_first) {
    if (walk.size() < 2 || walk.front() != 0 || walk.back() != 0) {
        throw ValidationError("walk must start and end at the server");
    }
    Route route;
    std::vector<bool> seen;
    for (int v : walk) {
        if (v == 0) continue;
        if (static_cast<std::size_t>(v) >= seen.size()) seen.resize(v + 1, false);
        if (!seen[v]) {
            seen[v] = true;
            route.order.push_back(v);
        }
    }
    if (pin_first) {
        assert(!route.order.empty() && route.order.front() == walk[1]);
    }
    return route;
}

Route orient(const Instance& instance, const Route& tour) {
    const Route rev = tour.reversed();
    const double mai_fwd = route_mai(instance, tour);
    const double mai_rev = route_mai(instance, rev);
    if (mai_fwd < mai_rev) return tour;
    if (mai_rev < mai_fwd) return rev;
    return tour.order.front() <= rev.order.front() ? tour : rev;
}

Route srtt(const Instance& instance) {
    const SpanningTree tree = prim_mst(instance);
    const Matching matching = min_weight_perfect_matching(instance, odd_vertices(tree));
    const auto walk = euler_circuit(combine(instance, tree, matching), 0);
    return orient(instance, shortcut(walk));
}

Route enforced(const Instance& instance) {
    Route best;
    double best_mai = kInf;
    auto consider = [&](const Route& candidate) {
        const double m = route_mai(instance, candidate);
        if (m < best_mai) {
            best_mai = m;
            best = candidate;
        }
    };
    for (int i = 1; i <= instance.n_data; ++i) {
        const SpanningTree tree = prim_mst(instance, std::pair{0, i});
        const Matching matching = min_weight_perfect_matching(instance, odd_vertices(tree));
        const auto walk = euler_circuit(combine(instance, tree, matching), 0, std::pair{0, i});
        const Route forward = shortcut(walk, /*pin_first=*/true);
        consider(forward);
        consider(forward.reversed());
    }
    consider(srtt(instance));
    return best;
}

Route hybrid(const Instance& instance, const ImproverConfig& config) {
    const Route a = enforced(instance);
    const Route b = ls_route(instance, config);
    return route_mai(instance, b) < route_mai(instance, a) ? b : a;
}

}  // namespace aoi_patrol
