#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "alphab/broadcast.hpp"
#include "alphab/graph.hpp"

namespace alphab {

// Reference solvers for small graphs.  Exponential; guarded by explicit
// size limits so a stray large input fails fast instead of hanging.

struct BruteForceResult {
    int value = 0;
    Broadcast witness;
};

// Maximum-weight independent broadcast by exhaustive search with
// branch-and-bound pruning.  Vertices are assigned in id order with values
// tried ascending and strict improvement updates, so the returned witness is
// the lexicographically smallest optimal value vector.  Requires g connected
// and g.n <= limit.
BruteForceResult brute_alpha_b(const Graph& g, int limit = 10);

struct IndependentSetResult {
    int size = 0;
    std::vector<int> set;  // ascending
};

// Exact maximum independent set: per component, reduce away isolated and
// pendant vertices (taking them is always safe), then branch on a maximum-
// degree vertex.  The witness is re-verified by adjacency scan before
// returning.  Throws solver_timeout if a deadline is given and hit.
IndependentSetResult max_independent_set(
    const Graph& g,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

// For diameter-2 graphs with independence number alpha >= 3, the broadcast
// independence number collapses to alpha; checks that equality on one graph
// via the two brute-force solvers.  Preconditions (diameter exactly 2,
// alpha >= 3, size within the brute-force limit) raise input_error.
bool alpha_b_equals_alpha_diam2(const Graph& g, int limit = 10);

}  // namespace alphab
