#include "alphab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "alphab/errors.hpp"

namespace alphab {

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj) twice += a.size();
    return static_cast<int>(twice / 2);
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    int idx = 0;
    for (const auto& [u, v] : edge_list) {
        ++idx;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge " + std::to_string(idx) + " (" + std::to_string(u) +
                              ", " + std::to_string(v) + ") has an endpoint outside [0, " +
                              std::to_string(n) + ")");
        if (u == v)
            throw input_error("edge " + std::to_string(idx) + " is a self-loop at vertex " +
                              std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int u = 0; u < n; ++u) {
        auto& a = g.adj[u];
        std::sort(a.begin(), a.end());
        auto dup = std::adjacent_find(a.begin(), a.end());
        if (dup != a.end())
            throw input_error("duplicate edge (" + std::to_string(std::min(u, *dup)) + ", " +
                              std::to_string(std::max(u, *dup)) + ")");
    }
    return g;
}

namespace {

void bfs_from(const Graph& g, int s, int* dist_row) {
    std::fill(dist_row, dist_row + g.n, DistanceTable::kUnreachable);
    dist_row[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.adj[u]) {
            if (dist_row[v] == DistanceTable::kUnreachable) {
                dist_row[v] = dist_row[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

DistanceTable all_pairs_distances(const Graph& g) {
    DistanceTable t;
    t.n = g.n;
    t.dist.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    t.ecc.assign(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        int* row = t.dist.data() + static_cast<std::size_t>(s) * g.n;
        bfs_from(g, s, row);
        int e = 0;
        for (int v = 0; v < g.n; ++v) {
            if (row[v] == DistanceTable::kUnreachable) {
                e = DistanceTable::kUnreachable;
                break;
            }
            e = std::max(e, row[v]);
        }
        t.ecc[s] = e;
        if (t.diameter != DistanceTable::kUnreachable)
            t.diameter = e == DistanceTable::kUnreachable ? e : std::max(t.diameter, e);
    }
    return t;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<int> dist(g.n);
    bfs_from(g, 0, dist.data());
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == DistanceTable::kUnreachable; });
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

Graph add_universal_vertex(const Graph& g) {
    if (g.n < 1) throw input_error("add_universal_vertex: graph must be non-empty");
    Graph out = g;
    out.n = g.n + 1;
    out.adj.emplace_back(g.n);
    std::iota(out.adj.back().begin(), out.adj.back().end(), 0);
    for (int v = 0; v < g.n; ++v) out.adj[v].push_back(g.n);
    return out;
}

}  // namespace alphab
