#include "support/test_oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "alphab/tree_dp.hpp"

namespace testsupport {

using alphab::Broadcast;
using alphab::DistanceTable;
using alphab::Envelope;
using alphab::Graph;
using alphab::RootedTree;
using alphab::SplitMix64;

bool dominates_pointwise(Envelope a, Envelope b) {
    // Past both breakpoints the difference is constant, so two extra steps
    // beyond max(p_a, p_b, 0) settle the comparison forever.
    const long long horizon = std::max({a.p, b.p, 0}) + 2;
    for (long long d = 1; d <= horizon; ++d) {
        if (g_of(a, d) > g_of(b, d)) return false;
    }
    return true;
}

bool permits_pointwise(int p, int q, int f, int dist) {
    const long long horizon =
        static_cast<long long>(std::abs(p)) + std::abs(f) + std::abs(dist) + 2;
    for (long long d = 1; d <= horizon; ++d) {
        if (g_of({p, q}, d) > g_of({f, f}, d + dist)) return false;
    }
    return true;
}

bool is_pointwise_min(const std::vector<Envelope>& parts, Envelope got, int horizon) {
    for (long long d = 0; d <= horizon; ++d) {
        long long want = g_of(parts.front(), d);
        for (std::size_t k = 1; k < parts.size(); ++k) want = std::min(want, g_of(parts[k], d));
        if (g_of(got, d) != want) return false;
    }
    return true;
}

int mis_exhaustive(const Graph& g) {
    if (g.n > 20) throw std::runtime_error("mis_exhaustive: graph too large");
    if (g.n == 0) return 0;
    std::vector<std::uint32_t> nbr(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) nbr[u] |= 1u << v;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (std::uint32_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            ok = (nbr[u] & mask) == 0;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

std::vector<std::vector<long long>> floyd_warshall(const Graph& g) {
    std::vector<std::vector<long long>> d(g.n, std::vector<long long>(g.n, kFwInf));
    for (int u = 0; u < g.n; ++u) {
        d[u][u] = 0;
        for (int v : g.adj[u]) d[u][v] = 1;
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

Broadcast random_valid_broadcast(const Graph& g, const DistanceTable& dt, SplitMix64& rng) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = g.n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    Broadcast f{std::vector<int>(g.n, 0)};
    for (int x : order) {
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(dt.ecc[x]) + 1));
        if (v == 0) continue;
        bool ok = true;
        for (int y = 0; y < g.n && ok; ++y) {
            if (f.values[y] == 0) continue;
            ok = dt.at(x, y) > std::max(v, f.values[y]);
        }
        if (ok) f.values[x] = v;
    }
    return f;
}

std::vector<int> subtree_vertices(const RootedTree& t, int u, int i) {
    std::vector<int> verts{u};
    std::vector<int> stack(t.children[u].begin(), t.children[u].begin() + i);
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        verts.push_back(x);
        for (int c : t.children[x]) stack.push_back(c);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

namespace {

// One feasibility class: which in-keys admit the labeling (words 0-1), which
// out-keys it leaves intact (words 2-3).  Sized for n <= 6 key spaces.
using MaskPair = std::array<std::uint64_t, 4>;

}  // namespace

std::vector<std::vector<int>> state_oracle(const RootedTree& t, const DistanceTable& dt, int u,
                                           int i) {
    const int n = t.tree.n;
    const alphab::EnvelopeKeys keys(n);
    if (keys.in_count() > 128 || keys.out_count() > 128)
        throw std::runtime_error("state_oracle: key space too large");

    const std::vector<int> verts = subtree_vertices(t, u, i);
    const int m = static_cast<int>(verts.size());

    // A labeling's masks are per-vertex ANDs, so precompute one MaskPair per
    // (value, distance-from-u) from the literal definitions: in-key k stays
    // admissible iff v <= g_in(d); out-key k stays intact iff g_out permits
    // value v at distance d (checked pointwise).  Value 0 constrains nothing.
    const int vmax = *std::max_element(dt.ecc.begin(), dt.ecc.end());
    std::vector<std::vector<MaskPair>> row(static_cast<std::size_t>(vmax) + 1,
                                           std::vector<MaskPair>(static_cast<std::size_t>(n)));
    for (int v = 0; v <= vmax; ++v) {
        for (int d = 0; d < n; ++d) {
            MaskPair& mp = row[v][d];
            for (int k = 0; k < keys.in_count(); ++k) {
                if (v <= g_of(keys.in_at(k), d))
                    mp[static_cast<std::size_t>(k / 64)] |= 1ull << (k % 64);
            }
            for (int k = 0; k < keys.out_count(); ++k) {
                const Envelope out = keys.out_at(k);
                if (v == 0 || permits_pointwise(out.p, out.q, v, d))
                    mp[static_cast<std::size_t>(2 + k / 64)] |= 1ull << (k % 64);
            }
        }
    }

    // Enumerate every labeling of the subtree that is an independent
    // broadcast there, then bucket by (in-mask, out-mask) keeping the top
    // weight per bucket.
    std::map<MaskPair, int> classes;
    std::vector<int> values(m, 0);
    std::vector<MaskPair> partial(static_cast<std::size_t>(m) + 1);
    partial[0] = {~0ull, ~0ull, ~0ull, ~0ull};
    const auto enumerate = [&](auto&& self, int j, int weight) -> void {
        if (j == m) {
            auto [it, inserted] = classes.emplace(partial[m], weight);
            if (!inserted) it->second = std::max(it->second, weight);
            return;
        }
        const MaskPair& base = partial[j];
        for (int v = 0; v <= dt.ecc[verts[j]]; ++v) {
            if (v > 0) {
                bool ok = true;
                for (int k = 0; k < j && ok; ++k) {
                    if (values[k] == 0) continue;
                    ok = dt.at(verts[j], verts[k]) > std::max(v, values[k]);
                }
                if (!ok) continue;
            }
            const MaskPair& r = row[v][dt.at(u, verts[j])];
            for (int w = 0; w < 4; ++w) partial[j + 1][w] = base[w] & r[w];
            values[j] = v;
            self(self, j + 1, weight + v);
        }
        values[j] = 0;
    };
    enumerate(enumerate, 0, 0);

    std::vector<std::vector<int>> table(static_cast<std::size_t>(keys.in_count()),
                                        std::vector<int>(keys.out_count(), 0));
    for (const auto& [masks, weight] : classes) {
        for (int a = 0; a < keys.in_count(); ++a) {
            if (!(masks[static_cast<std::size_t>(a / 64)] >> (a % 64) & 1)) continue;
            auto& row = table[a];
            for (int b = 0; b < keys.out_count(); ++b) {
                if (masks[static_cast<std::size_t>(2 + b / 64)] >> (b % 64) & 1)
                    row[b] = std::max(row[b], weight);
            }
        }
    }
    return table;
}

}  // namespace testsupport
