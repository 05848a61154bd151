#include "alphab/generators.hpp"

#include <algorithm>
#include <charconv>

#include "alphab/errors.hpp"

namespace alphab {

namespace {

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

}  // namespace

Graph make_path(int n) {
    if (n < 1) throw input_error("path: n must be >= 1");
    auto e = path_edges(n);
    return build_graph(n, e);
}

Graph make_star(int leaves) {
    if (leaves < 1) throw input_error("star: leaf count must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int l = 1; l <= leaves; ++l) e.emplace_back(0, l);
    return build_graph(leaves + 1, e);
}

Graph make_spider(int legs, int leg_len) {
    if (legs < 1 || leg_len < 1) throw input_error("spider: legs and leg length must be >= 1");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int s = 0; s < leg_len; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(next, e);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("random_tree: n must be >= 1");
    if (n == 1) return build_graph(1, {});
    if (n == 2) return make_path(2);

    SplitMix64 rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

    // Linear-time decode: repeatedly join the smallest leaf to the next code
    // entry.  degree[] counts remaining stubs; a vertex becomes a leaf when
    // it drops to 1.
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return build_graph(n, edges);
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw input_error("random_connected: n must be >= 1");
    if (n >= 2 && !(edge_prob > 0.0))
        throw input_error("random_connected: edge_prob must be positive");
    if (edge_prob > 1.0) throw input_error("random_connected: edge_prob must be <= 1");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < edge_prob) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        if (is_connected(g)) return g;
    }
    throw solver_timeout("random_connected: no connected sample found");
}

Graph cubic_catalog(const std::string& name) {
    std::vector<std::pair<int, int>> e;
    int n = 0;
    if (name == "k4") {
        n = 4;
        e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    } else if (name == "prism3") {
        n = 6;
        e = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
    } else if (name == "cube") {
        n = 8;
        for (int i = 0; i < 8; ++i)
            for (int b : {1, 2, 4})
                if (i < (i ^ b)) e.emplace_back(i, i ^ b);
    } else {
        throw input_error("unknown cubic graph \"" + name + "\" (expected k4, prism3, cube)");
    }
    return build_graph(n, e);
}

namespace {

int parse_int(const std::string& s, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        throw input_error(std::string(what) + ": not an integer: \"" + s + "\"");
    return value;
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        double value = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw input_error(std::string(what) + ": not a number: \"" + s + "\"");
    }
}

}  // namespace

Graph generate(const std::string& kind, const std::vector<std::string>& params,
               std::uint64_t seed) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw input_error("generate " + kind + ": expected " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (kind == "path") {
        want(1);
        return make_path(parse_int(params[0], "path n"));
    }
    if (kind == "star") {
        want(1);
        return make_star(parse_int(params[0], "star leaves"));
    }
    if (kind == "spider") {
        want(2);
        return make_spider(parse_int(params[0], "spider legs"),
                           parse_int(params[1], "spider leg length"));
    }
    if (kind == "random_tree") {
        want(1);
        return random_tree(parse_int(params[0], "random_tree n"), seed);
    }
    if (kind == "random_connected") {
        want(2);
        return random_connected(parse_int(params[0], "random_connected n"),
                                parse_double(params[1], "random_connected edge_prob"), seed);
    }
    if (kind == "cubic") {
        want(1);
        return cubic_catalog(params[0]);
    }
    throw input_error("unknown generator kind \"" + kind + "\"");
}

}  // namespace alphab
