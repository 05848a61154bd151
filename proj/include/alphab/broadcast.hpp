#pragma once

#include <string>
#include <vector>

#include "alphab/graph.hpp"

namespace alphab {

// Vertex labeling f: V -> {0, 1, 2, ...}; values[v] = f(v).
struct Broadcast {
    std::vector<int> values;

    int weight() const;
};

// One broken invariant of an independent broadcast: either a value exceeds
// its vertex's eccentricity (kValueExceedsEcc, y unused) or two positive
// vertices are too close (kPairTooClose: dist(x, y) <= max(f(x), f(y))).
struct Violation {
    enum Kind { kValueExceedsEcc, kPairTooClose } kind;
    int x = -1;
    int y = -1;

    std::string describe(const Graph& g, const Broadcast& f,
                         const DistanceTable& dt) const;
};

// Checks f is an independent broadcast on connected g; returns every
// violation (empty means valid).  Pair violations are reported once with
// x < y.
std::vector<Violation> validate_broadcast(const Graph& g, const Broadcast& f);

// Same check against a precomputed distance table for g.
std::vector<Violation> validate_broadcast(const Graph& g, const Broadcast& f,
                                          const DistanceTable& dt);

}  // namespace alphab
