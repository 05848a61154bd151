#include "alphab/broadcast.hpp"

#include <numeric>
#include <string>

#include "alphab/errors.hpp"

namespace alphab {

int Broadcast::weight() const {
    return std::accumulate(values.begin(), values.end(), 0);
}

std::string Violation::describe(const Graph&, const Broadcast& f,
                                const DistanceTable& dt) const {
    if (kind == kValueExceedsEcc)
        return "B1 vertex " + std::to_string(x) + " value " + std::to_string(f.values[x]) +
               " ecc " + std::to_string(dt.ecc[x]);
    return "B2 pair " + std::to_string(x) + " " + std::to_string(y) + " dist " +
           std::to_string(dt.at(x, y)) + " f " + std::to_string(f.values[x]) + " " +
           std::to_string(f.values[y]);
}

std::vector<Violation> validate_broadcast(const Graph& g, const Broadcast& f) {
    if (!is_connected(g)) throw input_error("validate: graph must be connected");
    return validate_broadcast(g, f, all_pairs_distances(g));
}

std::vector<Violation> validate_broadcast(const Graph& g, const Broadcast& f,
                                          const DistanceTable& dt) {
    if (static_cast<int>(f.values.size()) != g.n)
        throw input_error("validate: broadcast covers " + std::to_string(f.values.size()) +
                          " vertices, graph has " + std::to_string(g.n));
    for (int v = 0; v < g.n; ++v)
        if (f.values[v] < 0) throw input_error("validate: negative value at vertex " + std::to_string(v));

    std::vector<Violation> out;
    for (int v = 0; v < g.n; ++v)
        if (f.values[v] > dt.ecc[v]) out.push_back({Violation::kValueExceedsEcc, v, -1});
    for (int x = 0; x < g.n; ++x) {
        if (f.values[x] <= 0) continue;
        for (int y = x + 1; y < g.n; ++y) {
            if (f.values[y] <= 0) continue;
            if (dt.at(x, y) <= std::max(f.values[x], f.values[y]))
                out.push_back({Violation::kPairTooClose, x, y});
        }
    }
    return out;
}

}  // namespace alphab
