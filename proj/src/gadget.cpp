#include "alphab/gadget.hpp"

#include <algorithm>
#include <string>

#include "alphab/errors.hpp"
#include "alphab/oracle.hpp"

namespace alphab {

std::pair<Graph, std::vector<std::array<int, 2>>> subdivide_twice(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<std::array<int, 2>> subs;
    int next = g.n;
    for (auto [u, v] : g.edges()) {
        const int a = next++;
        const int b = next++;
        out.emplace_back(u, a);
        out.emplace_back(a, b);
        out.emplace_back(b, v);
        subs.push_back({a, b});
    }
    return {build_graph(next, out), std::move(subs)};
}

GadgetGraph build_gadget(const Graph& h) {
    if (h.n < 1 || !is_connected(h)) throw input_error("build_gadget: H must be connected");
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) != 3)
            throw input_error("build_gadget: H must be 3-regular, vertex " + std::to_string(v) +
                              " has degree " + std::to_string(h.degree(v)));

    GadgetGraph gg;
    gg.source = h;
    auto [core, subs] = subdivide_twice(h);
    gg.core_order = core.n;
    gg.edge_subdivision = std::move(subs);
    gg.leaves.assign(core.n, {});

    std::vector<std::pair<int, int>> edges = core.edges();
    gg.role.assign(core.n, VertexRole::kSubdivision);
    std::fill(gg.role.begin(), gg.role.begin() + h.n, VertexRole::kOriginal);
    gg.owner.assign(core.n, -1);

    int next = core.n;
    auto add_star = [&](int y) {
        const int center = next++;
        gg.role.push_back(VertexRole::kStarCenter);
        gg.owner.push_back(y);
        edges.emplace_back(y, center);
        for (int l = 0; l < 3; ++l) {
            const int leaf = next++;
            gg.role.push_back(VertexRole::kStarLeaf);
            gg.owner.push_back(y);
            edges.emplace_back(center, leaf);
            gg.leaves[y].push_back(leaf);
        }
    };
    // One pendant star per original vertex, two per subdivision vertex, so
    // L(y) has 3 or 6 endvertices at distance two from y.
    for (int y = 0; y < core.n; ++y) {
        add_star(y);
        if (y >= h.n) add_star(y);
    }
    gg.graph = build_graph(next, edges);
    return gg;
}

int target_value(const Graph& h, int alpha_h) {
    if (h.n % 2 != 0)
        throw input_error("target_value: a 3-regular graph has even order, got " +
                          std::to_string(h.n));
    return alpha_h + 45 * h.n / 2;
}

namespace {

void apply_checked(const GadgetGraph& gg, const DistanceTable& dt, Broadcast& f,
                   const char* phase, NormalizeStats* stats) {
    const auto violations = validate_broadcast(gg.graph, f, dt);
    if (!violations.empty())
        throw std::logic_error(std::string("normalize: ") + phase +
                               " rewrite broke validity: " +
                               violations.front().describe(gg.graph, f, dt));
    if (stats) ++stats->rewrites;
}

}  // namespace

Broadcast normalize_broadcast(const GadgetGraph& gg, const Broadcast& f,
                              NormalizeStats* stats) {
    const DistanceTable dt = all_pairs_distances(gg.graph);
    if (!validate_broadcast(gg.graph, f, dt).empty())
        throw input_error("normalize: input broadcast is not a valid independent broadcast");
    if (stats) {
        *stats = {};
        stats->weight_in = f.weight();
    }

    Broadcast g = f;

    // Phase 1: move any value k >= 2 sitting off the endvertices onto the
    // nearest endvertex (ties: smallest id).  Weight-preserving.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < gg.graph.n; ++x) {
            if (gg.role[x] == VertexRole::kStarLeaf || g.values[x] < 2) continue;
            int best = -1;
            for (int y = 0; y < gg.graph.n; ++y) {
                if (gg.role[y] != VertexRole::kStarLeaf) continue;
                if (best < 0 || dt.at(x, y) < dt.at(x, best)) best = y;
            }
            g.values[best] = g.values[x];
            g.values[x] = 0;
            apply_checked(gg, dt, g, "phase 1", stats);
            changed = true;
        }
    }
    if (stats) stats->weight_after_phase[0] = g.weight();
    if (g.weight() != f.weight())
        throw std::logic_error("normalize: phase 1 changed the weight");

    // Phase 2: a value 2 or 3 somewhere in L(y) turns into value 1 on all of
    // L(y).  Every leaf of y's stars has the same distances to the world
    // outside those stars as the triggering vertex, so the only conflicts the
    // new 1s can create are with y's own star centers; those can carry at
    // most 1 here (phase 1 cleared larger values) and get zeroed, which the
    // gain of at least three 1s pays for.  Never decreases the weight.
    changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < gg.core_order; ++y) {
            const auto& ly = gg.leaves[y];
            if (std::none_of(ly.begin(), ly.end(),
                             [&](int x) { return g.values[x] == 2 || g.values[x] == 3; }))
                continue;
            const int before = g.weight();
            for (int c : gg.graph.adj[y])
                if (c >= gg.core_order) g.values[c] = 0;
            for (int x : ly) g.values[x] = 1;
            if (g.weight() < before)
                throw std::logic_error("normalize: phase 2 rewrite lost weight");
            apply_checked(gg, dt, g, "phase 2", stats);
            changed = true;
        }
    }
    if (stats) stats->weight_after_phase[1] = g.weight();

    // Phase 3: a value 4..6 in the L(y) of a subdivision vertex turns into
    // value 1 on all six of L(y).  Never decreases the weight.
    changed = true;
    while (changed) {
        changed = false;
        for (int y = gg.source.n; y < gg.core_order; ++y) {
            const auto& ly = gg.leaves[y];
            if (std::none_of(ly.begin(), ly.end(), [&](int x) {
                    return g.values[x] >= 4 && g.values[x] <= 6;
                }))
                continue;
            for (int x : ly) g.values[x] = 1;
            apply_checked(gg, dt, g, "phase 3", stats);
            changed = true;
        }
    }
    if (stats) stats->weight_after_phase[2] = g.weight();
    if (g.weight() < f.weight())
        throw std::logic_error("normalize: weight decreased");
    return g;
}

namespace {

// Shortest path of the requested length inside the core, starting at y:
// breadth-first with neighbors scanned ascending, endpoint the smallest id
// at that distance, path read off the parent pointers.
std::vector<int> core_path_from(const GadgetGraph& gg, int y, int length) {
    std::vector<int> dist(gg.core_order, -1), parent(gg.core_order, -1);
    std::vector<int> queue{y};
    dist[y] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int w : gg.graph.adj[u]) {
            if (w >= gg.core_order || dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    int z = -1;
    for (int v = 0; v < gg.core_order; ++v)
        if (dist[v] == length) {
            z = v;
            break;
        }
    if (z < 0)
        throw std::logic_error("extract: no core vertex at distance " +
                               std::to_string(length) + " from " + std::to_string(y));
    std::vector<int> path;
    for (int v = z; v >= 0; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // path[0] == y
    return path;
}

}  // namespace

std::vector<int> extract_independent_set(const GadgetGraph& gg, const Broadcast& f) {
    if (!validate_broadcast(gg.graph, f).empty())
        throw input_error("extract: broadcast is not a valid independent broadcast");

    std::vector<std::vector<int>> parts;
    for (int x = 0; x < gg.graph.n; ++x) {
        const int v = f.values[x];
        if (v == 0) continue;
        if (v == 1) {
            parts.push_back({x});
            continue;
        }
        if (gg.role[x] != VertexRole::kStarLeaf || v == 2 || v == 3)
            throw input_error("extract: broadcast is not normalized (value " +
                              std::to_string(v) + " at vertex " + std::to_string(x) + ")");
        const int y = gg.owner[x];
        const bool y_original = y < gg.source.n;
        if (!y_original && v <= 6)
            throw input_error("extract: broadcast is not normalized (value " +
                              std::to_string(v) + " on a subdivision star leaf " +
                              std::to_string(x) + ")");
        std::vector<int> part;
        if (v == 4) {
            part.push_back(y);
            part.insert(part.end(), gg.leaves[y].begin(), gg.leaves[y].end());
        } else if (v == 5) {
            // Both L(y) and L(y') for the smallest core neighbor y' of y;
            // neighbors of an original vertex in the core are subdivision
            // vertices, so this contributes 3 + 6 vertices.
            int yp = -1;
            for (int w : gg.graph.adj[y])
                if (w < gg.core_order) {
                    yp = w;
                    break;
                }
            part = gg.leaves[y];
            part.insert(part.end(), gg.leaves[yp].begin(), gg.leaves[yp].end());
        } else {
            // v >= 6: walk a shortest path x_2 = y, ..., x_l in the core,
            // l = floor(v / 2), and take every L(x_i).  Consecutive core
            // vertices never both own 3-leaf sets, so the union has at
            // least v members.
            const auto path = core_path_from(gg, y, v / 2 - 2);
            for (int xi : path) part.insert(part.end(), gg.leaves[xi].begin(), gg.leaves[xi].end());
        }
        if (static_cast<int>(part.size()) < v)
            throw std::logic_error("extract: contribution of vertex " + std::to_string(x) +
                                   " has " + std::to_string(part.size()) +
                                   " members for value " + std::to_string(v));
        parts.push_back(std::move(part));
    }

    std::vector<int> all;
    for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("extract: contributions overlap");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (gg.graph.has_edge(all[i], all[j]))
                throw std::logic_error("extract: result is not independent");
    return all;
}

CertifyReport certify_small(const Graph& h, std::chrono::milliseconds budget) {
    if (h.n > 12) throw input_error("certify_small: H has more than 12 vertices");
    const auto deadline = std::chrono::steady_clock::now() + budget;

    const GadgetGraph gg = build_gadget(h);
    CertifyReport r;
    r.h_order = h.n;
    r.gadget_order = gg.graph.n;
    r.max_degree = 0;
    r.endvertices = 0;
    for (int v = 0; v < gg.graph.n; ++v) {
        r.max_degree = std::max(r.max_degree, gg.graph.degree(v));
        if (gg.graph.degree(v) == 1) ++r.endvertices;
    }
    r.connected = is_connected(gg.graph);

    const DistanceTable dt = all_pairs_distances(gg.graph);
    r.leaf_sets_ok = true;
    int covered = 0;
    for (int y = 0; y < gg.core_order; ++y) {
        const int expect = y < h.n ? 3 : 6;
        if (static_cast<int>(gg.leaves[y].size()) != expect) r.leaf_sets_ok = false;
        for (int l : gg.leaves[y]) {
            ++covered;
            if (gg.graph.degree(l) != 1 || dt.at(l, y) != 2) r.leaf_sets_ok = false;
        }
    }
    if (covered != r.endvertices) r.leaf_sets_ok = false;

    try {
        r.alpha_h = max_independent_set(h, deadline).size;
        r.target = target_value(h, r.alpha_h);
        r.alpha_gadget = max_independent_set(gg.graph, deadline).size;
        r.matches = r.alpha_gadget == r.target;
    } catch (const solver_timeout&) {
        r.partial = true;
    }
    return r;
}

}  // namespace alphab
