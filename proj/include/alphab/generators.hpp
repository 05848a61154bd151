#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphab/graph.hpp"

namespace alphab {

// splitmix64: the output stage scrambles a 64-bit Weyl sequence.  Constants
// are the standard published ones; fixed here so seeded runs reproduce
// bit-identically across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound) by modulo reduction.  The bias for
    // bound << 2^64 is negligible and the reduction is deliberately simple
    // so other implementations can reproduce the stream.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

Graph make_path(int n);
Graph make_star(int leaves);          // K_{1,k}: center 0, leaves 1..k
Graph make_spider(int legs, int leg_len);  // center 0, legs laid out one after another

// Decodes a uniformly sampled code sequence of length n-2 over [0, n-1] into
// a labeled tree (the classical sequence <-> tree bijection), so the result
// is uniform over labeled trees on n vertices.
Graph random_tree(int n, std::uint64_t seed);

// G(n, p) resampled until connected.  edge_prob must be positive for n >= 2.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

// Named cubic graphs: "k4", "prism3" (two triangles joined by a matching),
// "cube" (the 3-dimensional hypercube).
Graph cubic_catalog(const std::string& name);

// CLI-facing dispatcher: kind is one of path, star, spider, random_tree,
// random_connected, cubic; params are the kind's numeric (or name)
// arguments in order.
Graph generate(const std::string& kind, const std::vector<std::string>& params,
               std::uint64_t seed);

}  // namespace alphab
