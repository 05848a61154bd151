#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "alphab/broadcast.hpp"
#include "alphab/envelope.hpp"
#include "alphab/rooted_tree.hpp"

namespace alphab {

// Table-key enumeration for the tree solver.  States are keyed by a pair of
// envelopes (in, out) with q in [1, n] and p in [-n, n]; the in-side p range
// is widened to [-(n+1), n] because combining a child's shifted envelope can
// push p one past -n.  Derived keys provably stay inside these ranges.
class EnvelopeKeys {
  public:
    explicit EnvelopeKeys(int n) : n_(n) {}

    int n() const { return n_; }
    int in_count() const { return (2 * n_ + 2) * n_; }
    int out_count() const { return (2 * n_ + 1) * n_; }

    int in_index(Envelope e) const { return (e.p + n_ + 1) * n_ + (e.q - 1); }
    int out_index(Envelope e) const { return (e.p + n_) * n_ + (e.q - 1); }
    Envelope in_at(int idx) const { return {idx / n_ - n_ - 1, idx % n_ + 1}; }
    Envelope out_at(int idx) const { return {idx / n_ - n_, idx % n_ + 1}; }

  private:
    int n_;
};

// Largest single value assignable to the subtree {u}: zero when the outside
// cap forbids any positive value below its own climb (q_out > p_out), else
// capped by the eccentricity, the inside cap at distance 0, and p_out.
int beta_base(Envelope in, Envelope out, int ecc_u);

enum class DpMode {
    kNaive,   // per-state maximum over all child envelope tuples
    kPruned,  // aggregate tuples by combined out-envelope, answer by dominance
};

struct DpOptions {
    DpMode mode = DpMode::kNaive;
    int threads = 1;
    // Keep every (u, i) slab so value() and witness() work; switching this
    // off frees each slab once its parent state is merged.
    bool retain_tables = true;
    // Naive mode precomputes admissible-tuple lists while the out-key count
    // stays at or below this; larger instances test admissibility inline so
    // memory stays O(n^4).  Same results either way.
    int naive_list_limit = 420;
};

// Dynamic-programming tables beta((u, i), in, out) over the rooted tree:
// the maximum weight of a labeling of the subtree made of u plus its first
// i children's branches that (a) is an independent broadcast there, (b) obeys
// the inside cap in as seen from u, and (c) whose values, seen from outside
// through u, keep at least the cap out available.
//
// alpha_b equals the root state with the trivial caps: in = (-1, n) lets the
// root carry up to n, out = (n, 1) demands nothing below distance n.
class BetaTable {
  public:
    // The tree must outlive the table.
    explicit BetaTable(const RootedTree& t, const DpOptions& opts = {});
    ~BetaTable();

    int alpha_b() const { return alpha_b_; }

    // Entry lookup; requires retain_tables.  i ranges over [0, children(u)].
    int value(int u, int i, Envelope in, Envelope out) const;

    // Maximum-weight labeling recovered by replaying merge decisions
    // top-down; requires retain_tables.  Deterministic: the first achieving
    // tuple in enumeration order is taken.
    Broadcast witness() const;

    const EnvelopeKeys& keys() const { return keys_; }

  private:
    struct Impl;

    void merge_rows(const std::int32_t* chain_by_out, const std::int32_t* child_slab,
                    std::int32_t* merged, int lo, int hi) const;

    const RootedTree& tree_;
    EnvelopeKeys keys_;
    int alpha_b_ = 0;
    std::unique_ptr<Impl> impl_;
};

struct TreeSolveResult {
    int value = 0;
    Broadcast witness;
};

// Naive-mode solve with witness reconstruction.
TreeSolveResult solve_alpha_b(const RootedTree& t, int threads = 1);

// Pruned-mode solve, value only, slabs freed as soon as possible.
int solve_alpha_b_pruned(const RootedTree& t, int threads = 1);

}  // namespace alphab
