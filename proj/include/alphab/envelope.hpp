#pragma once

#include <span>

#include "alphab/errors.hpp"

namespace alphab {

// Piecewise-linear value cap, parameterized by an integer pair (p, q) with
// q >= 1.  Evaluates to 0 for d <= p and to d - p + q - 1 beyond, i.e. it is
// 0 up to p and then climbs with slope 1 starting from q at d = p + 1.
//
// These caps bound how large a broadcast value may be at a given distance;
// the tree solver keys its tables by them.  p may be negative (then the cap
// is positive everywhere).
struct Envelope {
    int p = 0;
    int q = 1;

    friend bool operator==(const Envelope&, const Envelope&) = default;
};

constexpr int eval(Envelope e, int d) {
    return d <= e.p ? 0 : d - e.p + e.q - 1;
}

// shift(e, k) evaluated at d equals e evaluated at d + k.
constexpr Envelope shift(Envelope e, int k) {
    return {e.p - k, e.q};
}

// Pointwise minimum of two envelopes is again an envelope: flat up to the
// larger p, and from there on both branches climb with slope 1, so the
// smaller value at p* + 1 decides the rest.
constexpr Envelope min_combine(Envelope a, Envelope b) {
    const int p = a.p > b.p ? a.p : b.p;
    const int qa = eval(a, p + 1);
    const int qb = eval(b, p + 1);
    return {p, qa < qb ? qa : qb};
}

inline Envelope min_combine(std::span<const Envelope> es) {
    if (es.empty()) throw input_error("min_combine: empty envelope list");
    Envelope acc = es[0];
    for (std::size_t i = 1; i < es.size(); ++i) acc = min_combine(acc, es[i]);
    return acc;
}

// dominates(a, b) <=> eval(a, d) <= eval(b, d) for every d >= 1.
// Both sides are 0-then-slope-1, so a stays below b iff a's climbing branch
// is below b's (slopes equal, compare offsets q - p) and a does not become
// positive strictly before b does on d >= 1 (only relevant when b is still 0
// somewhere there, i.e. p_b >= 1).
constexpr bool dominates(Envelope a, Envelope b) {
    return a.q - a.p <= b.q - b.p && (b.p <= 0 || a.p >= b.p);
}

// permits(p, q, f, dist) <=> g_(p,q)(d) <= g_(f,f)(d + dist) for all d >= 1,
// i.e. a value f sitting dist away does not cut below the cap (p, q).
// Equivalent to dominates((p, q), (f - dist, f)); expanded to the closed
// form max{f - max(p, 0), q - p} <= dist.
constexpr bool permits(int p, int q, int f, int dist) {
    const int a = f - (p > 0 ? p : 0);
    const int b = q - p;
    return (a > b ? a : b) <= dist;
}

}  // namespace alphab
