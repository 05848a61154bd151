#include "alphab/oracle.hpp"

#include <algorithm>
#include <string>

#include "alphab/errors.hpp"

namespace alphab {

namespace {

struct BruteState {
    const DistanceTable& dt;
    std::vector<int> values;
    std::vector<int> ecc_suffix;  // ecc_suffix[i] = sum of ecc over [i, n)
    int best = -1;
    std::vector<int> best_values;
};

// Assigns vertex i given the partial labeling on [0, i).  Values are tried
// ascending and improvements are strict, so the first optimum reached is the
// lexicographically smallest one.
void brute_rec(BruteState& s, int i, int current) {
    const int n = s.dt.n;
    if (current + s.ecc_suffix[i] <= s.best) return;  // cannot beat the incumbent
    if (i == n) {
        s.best = current;
        s.best_values = s.values;
        return;
    }
    // Largest value x = i may take next to the already-placed positive
    // vertices: it must stay under dist(i, y) for each, and a positive value
    // is impossible when some placed y already reaches i (dist <= f(y)).
    int bound = s.dt.ecc[i];
    for (int y = 0; y < i && bound > 0; ++y) {
        if (s.values[y] == 0) continue;
        const int d = s.dt.at(i, y);
        bound = d <= s.values[y] ? 0 : std::min(bound, d - 1);
    }
    for (int v = 0; v <= bound; ++v) {
        s.values[i] = v;
        brute_rec(s, i + 1, current + v);
    }
    s.values[i] = 0;
}

}  // namespace

BruteForceResult brute_alpha_b(const Graph& g, int limit) {
    if (g.n > limit)
        throw input_error("brute_alpha_b: graph has " + std::to_string(g.n) +
                          " vertices, limit is " + std::to_string(limit));
    if (!is_connected(g)) throw input_error("brute_alpha_b: graph must be connected");

    const DistanceTable dt = all_pairs_distances(g);
    BruteState s{dt, std::vector<int>(g.n, 0), std::vector<int>(g.n + 1, 0), -1, {}};
    for (int i = g.n - 1; i >= 0; --i) s.ecc_suffix[i] = s.ecc_suffix[i + 1] + dt.ecc[i];
    brute_rec(s, 0, 0);
    return {s.best, Broadcast{std::move(s.best_values)}};
}

namespace {

struct MisSearch {
    const Graph& g;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t nodes = 0;
    int best = -1;
    std::vector<int> best_set;

    void run(std::vector<int> active, std::vector<int>& chosen) {
        if (deadline && (++nodes & 255u) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            throw solver_timeout("max_independent_set: time budget exceeded");

        const std::size_t chosen_mark = chosen.size();

        // Degree <= 1 vertices are always safe to take: reduce to fixpoint.
        std::vector<char> in(g.n, 0);
        for (int v : active) in[v] = 1;
        auto deg = [&](int v) {
            int d = 0;
            for (int w : g.adj[v]) d += in[w];
            return d;
        };
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (int v : active) {
                if (in[v] && deg(v) <= 1) {
                    chosen.push_back(v);
                    in[v] = 0;
                    for (int w : g.adj[v]) in[w] = 0;
                    reduced = true;
                }
            }
        }
        std::vector<int> remaining;
        for (int v : active)
            if (in[v]) remaining.push_back(v);

        if (remaining.empty()) {
            if (static_cast<int>(chosen.size()) > best) {
                best = static_cast<int>(chosen.size());
                best_set = chosen;
            }
        } else if (static_cast<int>(chosen.size() + remaining.size()) > best) {
            int pivot = remaining[0];
            for (int v : remaining)
                if (deg(v) > deg(pivot)) pivot = v;

            std::vector<int> with;  // take pivot: drop its closed neighborhood
            for (int v : remaining)
                if (v != pivot && !g.has_edge(pivot, v)) with.push_back(v);
            chosen.push_back(pivot);
            run(std::move(with), chosen);
            chosen.pop_back();

            std::vector<int> without(remaining);
            without.erase(std::find(without.begin(), without.end(), pivot));
            run(std::move(without), chosen);
        }

        chosen.resize(chosen_mark);  // undo this call's reductions
    }
};

}  // namespace

IndependentSetResult max_independent_set(
    const Graph& g, std::optional<std::chrono::steady_clock::time_point> deadline) {
    // Solve per connected component and concatenate.
    std::vector<int> comp(g.n, -1);
    std::vector<int> result;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = s;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (int w : g.adj[members[head]])
                if (comp[w] < 0) {
                    comp[w] = s;
                    members.push_back(w);
                }
        MisSearch search{g, deadline, 0, -1, {}};
        std::vector<int> chosen;
        search.run(std::move(members), chosen);
        result.insert(result.end(), search.best_set.begin(), search.best_set.end());
    }
    std::sort(result.begin(), result.end());

    for (std::size_t i = 0; i < result.size(); ++i)
        for (std::size_t j = i + 1; j < result.size(); ++j)
            if (g.has_edge(result[i], result[j]))
                throw std::logic_error("max_independent_set: witness is not independent");
    return {static_cast<int>(result.size()), std::move(result)};
}

bool alpha_b_equals_alpha_diam2(const Graph& g, int limit) {
    const DistanceTable dt = all_pairs_distances(g);
    if (dt.diameter != 2)
        throw input_error("alpha_b_equals_alpha_diam2: diameter must be exactly 2");
    const IndependentSetResult mis = max_independent_set(g);
    if (mis.size < 3)
        throw input_error("alpha_b_equals_alpha_diam2: independence number " +
                          std::to_string(mis.size) + " is below 3");
    return brute_alpha_b(g, limit).value == mis.size;
}

}  // namespace alphab
