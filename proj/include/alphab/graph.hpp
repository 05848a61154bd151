#pragma once

#include <span>
#include <utility>
#include <vector>

namespace alphab {

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted ascending; no self-loops, no parallel edges.  Build through
// build_graph so the invariants hold.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    // Edges as (u, v) with u < v, sorted ascending.
    std::vector<std::pair<int, int>> edges() const;
};

// Validates endpoints, rejects self-loops and duplicate edges; error messages
// name the offending edge by its position in the input list.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

// All-pairs distances from one BFS per source.  Unreachable pairs (and the
// eccentricity/diameter of disconnected graphs) hold kUnreachable.
struct DistanceTable {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> dist;  // n*n, row-major
    std::vector<int> ecc;
    int diameter = 0;

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

DistanceTable all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Connected with exactly n-1 edges.  The empty graph is not a tree.
bool is_tree(const Graph& g);

// New vertex n adjacent to all of 0..n-1.  Requires n >= 1; the result has
// diameter <= 2 and the same independence number as g.
Graph add_universal_vertex(const Graph& g);

}  // namespace alphab
