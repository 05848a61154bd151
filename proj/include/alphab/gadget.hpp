#pragma once

#include <array>
#include <chrono>
#include <vector>

#include "alphab/broadcast.hpp"
#include "alphab/graph.hpp"

namespace alphab {

enum class VertexRole { kOriginal, kSubdivision, kStarCenter, kStarLeaf };

// Hardness-reduction graph built from a connected cubic graph H.
//
// Layout: ids [0, h.n) are H's vertices; each H-edge (in sorted order)
// contributes two subdivision vertices, nearer endpoint first; the result of
// that is the core (the twice-subdivided H).  Then every core vertex gets
// pendant stars of three leaves each, centers attached to the core vertex:
// one star per original vertex, two per subdivision vertex, appended in core
// id order (center first, then its leaves).
//
// leaves[y] is the set L(y) of endvertices at distance two from core vertex
// y: 3 for originals, 6 for subdivision vertices.  Every endvertex of the
// gadget lies in exactly one L(y).
struct GadgetGraph {
    Graph graph;
    Graph source;     // the cubic graph H
    int core_order = 0;  // n(H) + 2 m(H)
    std::vector<VertexRole> role;
    std::vector<int> owner;  // star centers/leaves: owning core vertex; -1 on the core
    std::vector<std::vector<int>> leaves;           // per core vertex, ascending
    std::vector<std::array<int, 2>> edge_subdivision;  // per sorted H-edge
};

// Each edge (u, v) becomes a path u - a - b - v; returns the new graph and,
// per sorted input edge, the pair (a, b).
std::pair<Graph, std::vector<std::array<int, 2>>> subdivide_twice(const Graph& g);

// Requires h connected and 3-regular.
GadgetGraph build_gadget(const Graph& h);

// alpha of the gadget: alpha(H) + 45 n(H) / 2.  n(H) is even for cubic H.
int target_value(const Graph& h, int alpha_h);

struct NormalizeStats {
    int weight_in = 0;
    // Weight after each phase; phase 1 preserves it, phases 2 and 3 never
    // decrease it.
    std::array<int, 3> weight_after_phase{};
    int rewrites = 0;
};

// Rewrites a valid broadcast on the gadget, without losing weight, into one
// whose positive values are 1s or live on endvertices in restricted shapes.
// Three phases, each run to fixpoint:
//   1. a value k >= 2 off the endvertices moves to the nearest endvertex
//      (ties: smallest id); weight-preserving.
//   2. a value 2 or 3 on some x in L(y) becomes value 1 on all of L(y); any
//      value left on y's star centers (at most 1 each) is cleared, since the
//      new 1s sit next to them.
//   3. a value 4..6 on some x in L(y) with y a subdivision vertex becomes
//      value 1 on all six of L(y).
// Validity is re-checked after every individual rewrite; a break means the
// rewrite system is wrong and raises logic_error.
Broadcast normalize_broadcast(const GadgetGraph& gg, const Broadcast& f,
                              NormalizeStats* stats = nullptr);

// From a normalized broadcast, builds an independent set at least as large
// as the broadcast's weight (ascending ids).  Per positive vertex x:
//   f(x) = 1          -> {x}
//   f(x) = 4          -> {y} plus L(y), where x in L(y), y original
//   f(x) = 5          -> L(y) plus L(y'), y' = smallest core neighbor of y
//   f(x) >= 6         -> the union of L(x_i) for i = 2..floor(f/2) along a
//                        shortest path x_0 = x, x_2 = y that continues
//                        inside the core (breadth-first, smallest-id ties)
// The contributions are checked pairwise disjoint and jointly independent.
std::vector<int> extract_independent_set(const GadgetGraph& gg, const Broadcast& f);

struct CertifyReport {
    int h_order = 0;
    int alpha_h = 0;
    int gadget_order = 0;
    int endvertices = 0;
    int max_degree = 0;
    bool connected = false;
    bool leaf_sets_ok = false;  // |L(y)| = 3 / 6 as the roles dictate
    int target = 0;
    int alpha_gadget = -1;      // -1 when the solver timed out
    bool partial = false;       // timed out before alpha_gadget was known
    bool matches = false;       // alpha_gadget == target
};

// End-to-end check of the reduction on one small cubic graph (h.n <= 12):
// builds the gadget, verifies its structure, and compares the gadget's exact
// independence number to the target within the time budget.
CertifyReport certify_small(const Graph& h,
                            std::chrono::milliseconds budget = std::chrono::seconds(60));

}  // namespace alphab
