#include "alphab/rooted_tree.hpp"

#include <algorithm>
#include <numeric>

#include "alphab/errors.hpp"

namespace alphab {

RootedTree root_tree(const Graph& g, int root) {
    if (!is_tree(g)) throw input_error("not a tree");
    if (root < 0 || root >= g.n) throw input_error("root out of range");

    RootedTree t;
    t.tree = g;
    t.root = root;
    t.parent.assign(g.n, -1);
    t.depth.assign(g.n, 0);
    t.children.assign(g.n, {});

    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.adj[u]) {
            if (v == t.parent[u]) continue;
            t.parent[v] = u;
            t.depth[v] = t.depth[u] + 1;
            t.children[u].push_back(v);  // ascending: adjacency is sorted
            queue.push_back(v);
        }
    }

    t.order.resize(g.n);
    std::iota(t.order.begin(), t.order.end(), 0);
    std::stable_sort(t.order.begin(), t.order.end(),
                     [&](int a, int b) { return t.depth[a] > t.depth[b]; });
    return t;
}

}  // namespace alphab
