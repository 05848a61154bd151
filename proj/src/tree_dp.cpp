#include "alphab/tree_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "alphab/errors.hpp"

namespace alphab {

int beta_base(Envelope in, Envelope out, int ecc_u) {
    if (out.q > out.p) return 0;
    return std::min({ecc_u, eval(in, 0), out.p});
}

namespace {

// Runs fn(lo, hi) over a partition of [0, rows); each range writes disjoint
// table rows, so the result does not depend on the thread count.
template <typename Fn>
void split_rows(int rows, int threads, Fn&& fn) {
    threads = std::min(threads, rows);
    if (threads <= 1) {
        fn(0, rows);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) {
        const int lo = static_cast<int>(static_cast<long long>(rows) * k / threads);
        const int hi = static_cast<int>(static_cast<long long>(rows) * (k + 1) / threads);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

struct BetaTable::Impl {
    DpOptions opts;
    std::vector<int> ecc;

    // slab[u][i], each E_in * E_out values (in-major); empty once discarded.
    std::vector<std::vector<std::vector<std::int32_t>>> slab;

    // Per out-key: p and the slope offset s = q - p.  dominates(a, b) as a
    // key test reads s_a <= s_b && (p_b <= 0 || p_a >= p_b).
    std::vector<std::int16_t> out_p, out_s;

    // Per child-envelope tuple (out0, out1), flattened j0 * E_out + j1: the
    // combined envelope c = min_combine(out0, shift(out1, 1)).  c always has
    // an out-range key.  Which representations exist depends on the mode.
    std::vector<std::int32_t> c_key;        // pruned: key index of c
    std::vector<std::int16_t> c_p, c_s;     // naive inline test
    std::vector<std::uint32_t> list_off;    // naive lists: bucket (j0, jo)
    std::vector<std::uint32_t> list_out1;
    bool use_lists = false;
};

BetaTable::BetaTable(const RootedTree& t, const DpOptions& opts)
    : tree_(t), keys_(t.tree.n), impl_(std::make_unique<Impl>()) {
    impl_->opts = opts;
    if (opts.threads < 1) throw input_error("thread count must be >= 1");

    const int n = t.tree.n;
    const int E = keys_.out_count();
    const int Ein = keys_.in_count();
    impl_->ecc = all_pairs_distances(t.tree).ecc;

    auto& im = *impl_;
    im.out_p.resize(E);
    im.out_s.resize(E);
    for (int j = 0; j < E; ++j) {
        const Envelope e = keys_.out_at(j);
        im.out_p[j] = static_cast<std::int16_t>(e.p);
        im.out_s[j] = static_cast<std::int16_t>(e.q - e.p);
    }

    const bool naive = opts.mode == DpMode::kNaive;
    im.use_lists = naive && E <= opts.naive_list_limit;
    if (naive) {
        im.c_p.resize(static_cast<std::size_t>(E) * E);
        im.c_s.resize(static_cast<std::size_t>(E) * E);
    } else {
        im.c_key.resize(static_cast<std::size_t>(E) * E);
    }
    for (int j0 = 0; j0 < E; ++j0) {
        const Envelope e0 = keys_.out_at(j0);
        const std::size_t row = static_cast<std::size_t>(j0) * E;
        for (int j1 = 0; j1 < E; ++j1) {
            const Envelope c = min_combine(e0, shift(keys_.out_at(j1), 1));
            if (naive) {
                im.c_p[row + j1] = static_cast<std::int16_t>(c.p);
                im.c_s[row + j1] = static_cast<std::int16_t>(c.q - c.p);
            } else {
                im.c_key[row + j1] = keys_.out_index(c);
            }
        }
    }
    if (im.use_lists) {
        // CSR over buckets (j0, jo): out1 indices whose combined envelope is
        // dominated by out key jo.
        im.list_off.assign(static_cast<std::size_t>(E) * E + 1, 0);
        for (int j0 = 0; j0 < E; ++j0) {
            const std::size_t row = static_cast<std::size_t>(j0) * E;
            for (int j1 = 0; j1 < E; ++j1) {
                const std::int16_t cp = im.c_p[row + j1], cs = im.c_s[row + j1];
                for (int jo = 0; jo < E; ++jo)
                    if (im.out_s[jo] <= cs && (cp <= 0 || im.out_p[jo] >= cp))
                        ++im.list_off[row + jo + 1];
            }
        }
        for (std::size_t k = 1; k < im.list_off.size(); ++k) im.list_off[k] += im.list_off[k - 1];
        im.list_out1.resize(im.list_off.back());
        std::vector<std::uint32_t> cursor(im.list_off.begin(), im.list_off.end() - 1);
        for (int j0 = 0; j0 < E; ++j0) {
            const std::size_t row = static_cast<std::size_t>(j0) * E;
            for (int j1 = 0; j1 < E; ++j1) {
                const std::int16_t cp = im.c_p[row + j1], cs = im.c_s[row + j1];
                for (int jo = 0; jo < E; ++jo)
                    if (im.out_s[jo] <= cs && (cp <= 0 || im.out_p[jo] >= cp))
                        im.list_out1[cursor[row + jo]++] = static_cast<std::uint32_t>(j1);
            }
        }
    }

    im.slab.resize(n);
    for (int u = 0; u < n; ++u) im.slab[u].resize(t.children[u].size() + 1);

    std::vector<std::int32_t> transposed(static_cast<std::size_t>(Ein) * E);
    for (int u : t.order) {
        // Base slab: the subtree is {u} alone.
        auto& base = im.slab[u][0];
        base.resize(static_cast<std::size_t>(Ein) * E);
        split_rows(Ein, opts.threads, [&](int lo, int hi) {
            for (int ii = lo; ii < hi; ++ii) {
                const int g0 = eval(keys_.in_at(ii), 0);
                std::int32_t* row = base.data() + static_cast<std::size_t>(ii) * E;
                for (int jo = 0; jo < E; ++jo) {
                    const int p = im.out_p[jo];
                    const int q = p + im.out_s[jo];
                    row[jo] = q > p ? 0 : std::min({im.ecc[u], g0, p});
                }
            }
        });

        for (std::size_t i = 1; i <= t.children[u].size(); ++i) {
            const int child = t.children[u][i - 1];
            auto& prev = im.slab[u][i - 1];
            auto& sub = im.slab[child].back();

            for (int ii = 0; ii < Ein; ++ii)
                for (int jo = 0; jo < E; ++jo)
                    transposed[static_cast<std::size_t>(jo) * Ein + ii] =
                        prev[static_cast<std::size_t>(ii) * E + jo];

            auto& merged = im.slab[u][i];
            merged.assign(static_cast<std::size_t>(Ein) * E, 0);
            split_rows(Ein, opts.threads, [&](int lo, int hi) {
                merge_rows(transposed.data(), sub.data(), merged.data(), lo, hi);
            });

            if (!opts.retain_tables) {
                prev = {};
                sub = {};
            }
        }
    }

    const Envelope top_in{-1, n}, top_out{n, 1};
    alpha_b_ = static_cast<int>(
        im.slab[t.root].back()[static_cast<std::size_t>(keys_.in_index(top_in)) * E +
                               keys_.out_index(top_out)]);
}

BetaTable::~BetaTable() = default;

// One merge row block: all out-states of (u, i) for in-keys [lo, hi), built
// from the chain slab transposed to out-major (chain_by_out) and the child's
// full slab.  For each tuple of child out-envelopes (j0 for the chain, j1
// for the branch) the reachable weight is chain[in0][j0] + child[in1][j1],
// where in0/in1 are the tuple's derived inside caps; the state value is the
// maximum over tuples whose combined outside cap still dominates out.
void BetaTable::merge_rows(const std::int32_t* chain_by_out, const std::int32_t* child_slab,
                           std::int32_t* merged, int lo, int hi) const {
    const auto& im = *impl_;
    const int E = keys_.out_count();
    const int Ein = keys_.in_count();
    const std::int32_t* at = chain_by_out;
    const std::int32_t* sub = child_slab;

    std::vector<std::int32_t> in0_key(E), in1_key(E), sums(E);
    std::vector<std::int32_t> best(im.opts.mode == DpMode::kPruned ? E : 0);

    for (int ii = lo; ii < hi; ++ii) {
        const Envelope ein = keys_.in_at(ii);
        for (int j = 0; j < E; ++j) {
            const Envelope ej = keys_.out_at(j);
            in0_key[j] = keys_.in_index(min_combine(ein, shift(ej, 1)));
            in1_key[j] = keys_.in_index(min_combine(shift(ein, 1), shift(ej, 1)));
        }
        std::int32_t* mrow = merged + static_cast<std::size_t>(ii) * E;

        if (im.opts.mode == DpMode::kPruned) {
            // Aggregate tuples by their combined envelope's key, then answer
            // every out query by a dominance sweep over the aggregates.
            std::fill(best.begin(), best.end(), -1);
            for (int j0 = 0; j0 < E; ++j0) {
                const std::int32_t* arow = at + static_cast<std::size_t>(j0) * Ein;
                const std::int32_t* brow =
                    sub + static_cast<std::size_t>(in1_key[j0]) * E;
                const std::int32_t* ckey = im.c_key.data() + static_cast<std::size_t>(j0) * E;
                for (int j1 = 0; j1 < E; ++j1) {
                    const std::int32_t w = arow[in0_key[j1]] + brow[j1];
                    const std::int32_t c = ckey[j1];
                    if (w > best[c]) best[c] = w;
                }
            }
            for (int jo = 0; jo < E; ++jo) {
                const std::int16_t po = im.out_p[jo], so = im.out_s[jo];
                std::int32_t m = 0;
                for (int c = 0; c < E; ++c)
                    if (best[c] > m && so <= im.out_s[c] &&
                        (im.out_p[c] <= 0 || po >= im.out_p[c]))
                        m = best[c];
                mrow[jo] = m;
            }
            continue;
        }

        for (int j0 = 0; j0 < E; ++j0) {
            const std::int32_t* arow = at + static_cast<std::size_t>(j0) * Ein;
            const std::int32_t* brow = sub + static_cast<std::size_t>(in1_key[j0]) * E;
            for (int j1 = 0; j1 < E; ++j1) sums[j1] = arow[in0_key[j1]] + brow[j1];

            if (im.use_lists) {
                const std::size_t row = static_cast<std::size_t>(j0) * E;
                for (int jo = 0; jo < E; ++jo) {
                    std::uint32_t k = im.list_off[row + jo];
                    const std::uint32_t kend = im.list_off[row + jo + 1];
                    std::int32_t m = mrow[jo];
                    for (; k < kend; ++k) m = std::max(m, sums[im.list_out1[k]]);
                    mrow[jo] = m;
                }
            } else {
                const std::int16_t* cp = im.c_p.data() + static_cast<std::size_t>(j0) * E;
                const std::int16_t* cs = im.c_s.data() + static_cast<std::size_t>(j0) * E;
                for (int jo = 0; jo < E; ++jo) {
                    const std::int16_t po = im.out_p[jo], so = im.out_s[jo];
                    std::int32_t m = mrow[jo];
                    for (int j1 = 0; j1 < E; ++j1)
                        if (so <= cs[j1] && (cp[j1] <= 0 || po >= cp[j1]))
                            m = std::max(m, sums[j1]);
                    mrow[jo] = m;
                }
            }
        }
    }
}

int BetaTable::value(int u, int i, Envelope in, Envelope out) const {
    const auto& im = *impl_;
    if (!im.opts.retain_tables) throw std::logic_error("BetaTable: tables were not retained");
    if (u < 0 || u >= tree_.tree.n || i < 0 ||
        i > static_cast<int>(tree_.children[u].size()))
        throw std::out_of_range("BetaTable: state out of range");
    const int n = keys_.n();
    if (in.p < -(n + 1) || in.p > n || in.q < 1 || in.q > n || out.p < -n || out.p > n ||
        out.q < 1 || out.q > n)
        throw std::out_of_range("BetaTable: envelope key out of range");
    return im.slab[u][i][static_cast<std::size_t>(keys_.in_index(in)) * keys_.out_count() +
                         keys_.out_index(out)];
}

Broadcast BetaTable::witness() const {
    const auto& im = *impl_;
    if (!im.opts.retain_tables) throw std::logic_error("BetaTable: tables were not retained");
    const int n = tree_.tree.n;
    const int E = keys_.out_count();

    Broadcast f;
    f.values.assign(n, 0);

    struct Frame {
        int u, i, in_idx, out_idx;
    };
    std::vector<Frame> stack{{tree_.root, static_cast<int>(tree_.children[tree_.root].size()),
                              keys_.in_index({-1, n}), keys_.out_index({n, 1})}};
    while (!stack.empty()) {
        const auto [u, i, in_idx, out_idx] = stack.back();
        stack.pop_back();
        const std::int32_t target =
            im.slab[u][i][static_cast<std::size_t>(in_idx) * E + out_idx];
        if (i == 0) {
            f.values[u] = target;
            continue;
        }
        const int child = tree_.children[u][i - 1];
        const Envelope ein = keys_.in_at(in_idx);
        const Envelope eout = keys_.out_at(out_idx);
        const auto& prev = im.slab[u][i - 1];
        const auto& sub = im.slab[child].back();

        bool found = false;
        for (int j0 = 0; j0 < E && !found; ++j0) {
            const Envelope e0 = keys_.out_at(j0);
            const int in1 = keys_.in_index(min_combine(shift(ein, 1), shift(e0, 1)));
            for (int j1 = 0; j1 < E; ++j1) {
                const Envelope e1 = keys_.out_at(j1);
                if (!dominates(eout, min_combine(e0, shift(e1, 1)))) continue;
                const int in0 = keys_.in_index(min_combine(ein, shift(e1, 1)));
                const std::int32_t v0 = prev[static_cast<std::size_t>(in0) * E + j0];
                const std::int32_t v1 = sub[static_cast<std::size_t>(in1) * E + j1];
                if (v0 + v1 == target) {
                    stack.push_back({u, i - 1, in0, j0});
                    stack.push_back({child, static_cast<int>(tree_.children[child].size()),
                                     in1, j1});
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw std::logic_error("BetaTable: no merge tuple reproduces the table value");
    }
    return f;
}

TreeSolveResult solve_alpha_b(const RootedTree& t, int threads) {
    BetaTable table(t, {DpMode::kNaive, threads, true});
    return {table.alpha_b(), table.witness()};
}

int solve_alpha_b_pruned(const RootedTree& t, int threads) {
    BetaTable table(t, {DpMode::kPruned, threads, false});
    return table.alpha_b();
}

}  // namespace alphab
