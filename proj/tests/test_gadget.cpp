#include <algorithm>
#include <chrono>
#include <vector>

#include "alphab/broadcast.hpp"
#include "alphab/errors.hpp"
#include "alphab/gadget.hpp"
#include "alphab/generators.hpp"
#include "alphab/graph.hpp"
#include "alphab/oracle.hpp"
#include "doctest.h"
#include "support/test_oracles.hpp"

using alphab::Broadcast;
using alphab::build_gadget;
using alphab::GadgetGraph;
using alphab::Graph;
using alphab::VertexRole;

namespace {

bool independent_in(const Graph& g, const std::vector<int>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.has_edge(set[a], set[b])) return false;
    return true;
}

Graph two_k4s() {
    std::vector<std::pair<int, int>> e;
    for (int base : {0, 4})
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) e.push_back({base + a, base + b});
    return alphab::build_graph(8, e);
}

}  // namespace

TEST_CASE("subdivide_twice turns each edge into a three-edge path") {
    const auto [g, pairs] = alphab::subdivide_twice(alphab::cubic_catalog("k4"));
    CHECK(g.n == 16);
    CHECK(g.edge_count() == 18);
    REQUIRE(pairs.size() == 6);
    // First sorted edge of K_4 is (0, 1); its path is 0 - 4 - 5 - 1.
    CHECK(pairs[0] == std::array<int, 2>{4, 5});
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(4, 5));
    CHECK(g.has_edge(5, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    // Independence numbers of the twice-subdivided catalog graphs.
    CHECK(alphab::max_independent_set(g).size == 7);
    CHECK(testsupport::mis_exhaustive(g) == 7);
    const auto [gp, pp] = alphab::subdivide_twice(alphab::cubic_catalog("prism3"));
    CHECK(gp.n == 24);
    CHECK(gp.edge_count() == 27);
    CHECK(alphab::max_independent_set(gp).size == 11);
}

TEST_CASE("gadget structure for the cubic catalog") {
    for (const char* name : {"k4", "prism3", "cube"}) {
        const Graph h = alphab::cubic_catalog(name);
        const GadgetGraph gg = build_gadget(h);
        CHECK(gg.graph.n == 32 * h.n);
        CHECK(gg.core_order == h.n + 2 * h.edge_count());
        CHECK(alphab::is_connected(gg.graph));

        int endvertices = 0;
        int max_degree = 0;
        for (int v = 0; v < gg.graph.n; ++v) {
            endvertices += gg.graph.degree(v) == 1;
            max_degree = std::max(max_degree, gg.graph.degree(v));
        }
        CHECK(endvertices == 21 * h.n);
        CHECK(max_degree == 4);

        // Roles partition the vertices; owners point leaves at core vertices.
        int originals = 0, subdivisions = 0, centers = 0, leaves = 0;
        for (int v = 0; v < gg.graph.n; ++v) {
            switch (gg.role[v]) {
                case VertexRole::kOriginal: ++originals; break;
                case VertexRole::kSubdivision: ++subdivisions; break;
                case VertexRole::kStarCenter: ++centers; break;
                case VertexRole::kStarLeaf: ++leaves; break;
            }
            CHECK((gg.owner[v] == -1) == (v < gg.core_order));
        }
        CHECK(originals == h.n);
        CHECK(subdivisions == 2 * h.edge_count());
        CHECK(centers == originals + 2 * subdivisions);
        CHECK(leaves == 3 * centers);

        // L(y) sizes: 3 per original, 6 per subdivision vertex, and each
        // leaf sits at distance exactly 2 from its core vertex.
        const auto dt = alphab::all_pairs_distances(gg.graph);
        int covered = 0;
        for (int y = 0; y < gg.core_order; ++y) {
            const int expect = gg.role[y] == VertexRole::kOriginal ? 3 : 6;
            CHECK(static_cast<int>(gg.leaves[y].size()) == expect);
            covered += expect;
            for (int x : gg.leaves[y]) {
                CHECK(gg.role[x] == VertexRole::kStarLeaf);
                CHECK(dt.at(x, y) == 2);
            }
        }
        CHECK(covered == endvertices);
    }
}

TEST_CASE("gadget construction is deterministic and validates its input") {
    CHECK(build_gadget(alphab::cubic_catalog("k4")).graph.edges() ==
          build_gadget(alphab::cubic_catalog("k4")).graph.edges());
    CHECK_THROWS_AS(build_gadget(alphab::make_path(4)), alphab::input_error);
    CHECK_THROWS_AS(build_gadget(two_k4s()), alphab::input_error);
}

TEST_CASE("target values for the catalog") {
    CHECK(alphab::target_value(alphab::cubic_catalog("k4"), 1) == 91);
    CHECK(alphab::target_value(alphab::cubic_catalog("prism3"), 2) == 137);
    CHECK(alphab::target_value(alphab::cubic_catalog("cube"), 4) == 184);
}

TEST_CASE("normalization moves an off-leaf value to a leaf and spreads it") {
    const GadgetGraph gg = build_gadget(alphab::cubic_catalog("k4"));
    // Value 2 on original vertex 0: phase 1 moves it to the nearest leaf,
    // phase 2 turns that into 1s across the leaf's L-set (3 leaves).
    Broadcast f{std::vector<int>(gg.graph.n, 0)};
    f.values[0] = 2;
    alphab::NormalizeStats stats;
    const Broadcast norm = alphab::normalize_broadcast(gg, f, &stats);
    CHECK(stats.weight_in == 2);
    CHECK(stats.weight_after_phase[0] == 2);
    CHECK(stats.weight_after_phase[2] == 3);
    CHECK(norm.weight() == 3);
    CHECK(alphab::validate_broadcast(gg.graph, norm).empty());
    int ones = 0;
    for (int x : gg.leaves[0]) ones += norm.values[x] == 1;
    CHECK(ones == 3);

    const auto set = alphab::extract_independent_set(gg, norm);
    CHECK(static_cast<int>(set.size()) >= norm.weight());
    CHECK(independent_in(gg.graph, set));
}

TEST_CASE("normalization spreads mid values over subdivision leaf sets") {
    const GadgetGraph gg = build_gadget(alphab::cubic_catalog("k4"));
    const int sub = gg.edge_subdivision[0][0];
    REQUIRE(gg.role[sub] == VertexRole::kSubdivision);

    // Value 3 on a subdivision-owned leaf: phase 2 yields six 1s.
    Broadcast f3{std::vector<int>(gg.graph.n, 0)};
    f3.values[gg.leaves[sub][0]] = 3;
    const Broadcast norm3 = alphab::normalize_broadcast(gg, f3);
    CHECK(norm3.weight() == 6);

    // Value 5 there: phase 3 yields the same six 1s.
    Broadcast f5{std::vector<int>(gg.graph.n, 0)};
    f5.values[gg.leaves[sub][0]] = 5;
    alphab::NormalizeStats stats;
    const Broadcast norm5 = alphab::normalize_broadcast(gg, f5, &stats);
    CHECK(norm5.weight() == 6);
    CHECK(stats.weight_after_phase[1] == 5);
    for (int x : gg.leaves[sub]) CHECK(norm5.values[x] == 1);
    CHECK(alphab::extract_independent_set(gg, norm5).size() == 6);
}

TEST_CASE("high values on original-owned leaves extract star unions") {
    const GadgetGraph gg = build_gadget(alphab::cubic_catalog("k4"));
    // Value 4 stays put on an original-owned leaf; extraction takes the
    // original plus its L-set.
    Broadcast f{std::vector<int>(gg.graph.n, 0)};
    const int leaf = gg.leaves[0][0];
    f.values[leaf] = 4;
    REQUIRE(alphab::validate_broadcast(gg.graph, f).empty());
    const Broadcast norm = alphab::normalize_broadcast(gg, f);
    CHECK(norm.values[leaf] == 4);
    const auto set = alphab::extract_independent_set(gg, norm);
    CHECK(set.size() == 4);
    CHECK(independent_in(gg.graph, set));
    std::vector<int> expect = gg.leaves[0];
    expect.push_back(0);
    std::sort(expect.begin(), expect.end());
    CHECK(set == expect);
}

TEST_CASE("random valid broadcasts survive the normalize-extract pipeline") {
    const GadgetGraph gg = build_gadget(alphab::cubic_catalog("k4"));
    const auto dt = alphab::all_pairs_distances(gg.graph);
    alphab::SplitMix64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const Broadcast f = testsupport::random_valid_broadcast(gg.graph, dt, rng);
        alphab::NormalizeStats stats;
        const Broadcast norm = alphab::normalize_broadcast(gg, f, &stats);
        CHECK(stats.weight_in == f.weight());
        CHECK(stats.weight_after_phase[0] == f.weight());
        CHECK(stats.weight_after_phase[1] >= stats.weight_after_phase[0]);
        CHECK(stats.weight_after_phase[2] >= stats.weight_after_phase[1]);
        CHECK(norm.weight() == stats.weight_after_phase[2]);
        CHECK(alphab::validate_broadcast(gg.graph, norm, dt).empty());
        const auto set = alphab::extract_independent_set(gg, norm);
        CHECK(static_cast<int>(set.size()) >= norm.weight());
        CHECK(independent_in(gg.graph, set));
        CHECK(std::is_sorted(set.begin(), set.end()));
    }
}

TEST_CASE("extraction rejects non-normalized broadcasts") {
    const GadgetGraph gg = build_gadget(alphab::cubic_catalog("k4"));
    Broadcast off_leaf{std::vector<int>(gg.graph.n, 0)};
    off_leaf.values[0] = 2;
    CHECK_THROWS_AS(alphab::extract_independent_set(gg, off_leaf), alphab::input_error);
    Broadcast low_leaf{std::vector<int>(gg.graph.n, 0)};
    low_leaf.values[gg.leaves[0][0]] = 2;
    CHECK_THROWS_AS(alphab::extract_independent_set(gg, low_leaf), alphab::input_error);
}

TEST_CASE("certify_small confirms the smallest reduction end to end") {
    const auto report = alphab::certify_small(alphab::cubic_catalog("k4"));
    CHECK(report.h_order == 4);
    CHECK(report.alpha_h == 1);
    CHECK(report.gadget_order == 128);
    CHECK(report.endvertices == 84);
    CHECK(report.max_degree == 4);
    CHECK(report.connected);
    CHECK(report.leaf_sets_ok);
    CHECK(report.target == 91);
    CHECK(report.alpha_gadget == 91);
    CHECK_FALSE(report.partial);
    CHECK(report.matches);
}
