#pragma once

#include <vector>

#include "alphab/graph.hpp"

namespace alphab {

// A tree with a chosen root and the derived structure the solver needs.
// children[u] is ascending; order lists vertices by nonincreasing depth
// (ties by id), so every vertex appears after all of its children.
struct RootedTree {
    Graph tree;
    int root = 0;
    std::vector<int> parent;  // -1 at the root
    std::vector<int> depth;
    std::vector<std::vector<int>> children;
    std::vector<int> order;
};

// Throws input_error if g is not a tree or root is out of range.
RootedTree root_tree(const Graph& g, int root);

}  // namespace alphab
