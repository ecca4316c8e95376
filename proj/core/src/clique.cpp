#include "subcode/clique.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace subcode {

namespace {

inline bool test_bit(const std::vector<uint64_t>& m, uint32_t i) {
    return (m[i / 64] >> (i % 64)) & 1;
}
inline void clear_bit(std::vector<uint64_t>& m, uint32_t i) {
    m[i / 64] &= ~(uint64_t(1) << (i % 64));
}

std::vector<uint64_t> alive_mask(const ConflictGraph& g) {
    std::vector<uint64_t> m(g.words, 0);
    for (uint32_t j = 0; j < g.n; ++j)
        if (g.alive[j]) m[j / 64] |= uint64_t(1) << (j % 64);
    return m;
}

}  // namespace

ConflictGraph to_conflict_graph(const CondensedSystem& s) {
    ConflictGraph g;
    g.n = uint32_t(s.n_cols());
    g.words = (size_t(g.n) + 63) / 64;
    g.weights = s.col_weights;
    g.alive.assign(g.n, 1);
    for (const auto& row : s.rows)
        for (const auto& [j, cnt] : row)
            if (cnt >= 2) g.alive[j] = 0;
    g.compat.assign(size_t(g.n) * g.words, 0);
    auto live = alive_mask(g);
    for (uint32_t i = 0; i < g.n; ++i) {
        if (!g.alive[i]) continue;
        uint64_t* row = g.compat.data() + size_t(i) * g.words;
        std::copy(live.begin(), live.end(), row);
        row[i / 64] &= ~(uint64_t(1) << (i % 64));
    }
    auto cut = [&g](uint32_t i, uint32_t j) {
        g.compat[size_t(i) * g.words + j / 64] &= ~(uint64_t(1) << (j % 64));
        g.compat[size_t(j) * g.words + i / 64] &= ~(uint64_t(1) << (i % 64));
    };
    for (const auto& row : s.rows)
        for (size_t a = 0; a < row.size(); ++a)
            for (size_t b = a + 1; b < row.size(); ++b) cut(row[a].first, row[b].first);
    return g;
}

bool feasible(const ConflictGraph& g, const std::vector<uint32_t>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= g.n || !g.alive[cols[i]]) return false;
        for (size_t j = i + 1; j < cols.size(); ++j)
            if (cols[i] == cols[j] || !g.compatible(cols[i], cols[j])) return false;
    }
    return true;
}

Solution solve_greedy(const ConflictGraph& g) {
    std::vector<uint32_t> order(g.n);
    for (uint32_t i = 0; i < g.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&g](uint32_t a, uint32_t b) { return g.weights[a] > g.weights[b]; });
    auto cand = alive_mask(g);
    Solution s;
    for (;;) {
        uint32_t pick = UINT32_MAX;
        for (uint32_t v : order)
            if (test_bit(cand, v)) {
                pick = v;
                break;
            }
        if (pick == UINT32_MAX) break;
        s.cols.push_back(pick);
        s.weight += g.weights[pick];
        const uint64_t* row = g.row(pick);
        for (size_t w = 0; w < g.words; ++w) cand[w] &= row[w];
        ++s.iterations;
    }
    std::sort(s.cols.begin(), s.cols.end());
    return s;
}

namespace {

// Shared working state for the tabu search.
struct LocalState {
    const ConflictGraph& g;
    std::vector<char> in_cur;
    std::vector<uint32_t> cur;
    std::vector<uint64_t> cur_mask;
    std::vector<uint32_t> miss;  // per vertex: members of cur incompatible with it
    uint64_t cur_weight = 0;
    std::vector<uint64_t> live;

    explicit LocalState(const ConflictGraph& gr)
        : g(gr), in_cur(gr.n, 0), cur_mask(gr.words, 0), miss(gr.n, 0), live(alive_mask(gr)) {}

    void add(uint32_t v) {
        in_cur[v] = 1;
        cur.push_back(v);
        cur_mask[v / 64] |= uint64_t(1) << (v % 64);
        cur_weight += g.weights[v];
        const uint64_t* row = g.row(v);
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t x = live[w] & ~row[w];
            while (x) {
                uint32_t b = uint32_t(w * 64 + unsigned(std::countr_zero(x)));
                x &= x - 1;
                if (b != v) ++miss[b];
            }
        }
    }

    void remove(uint32_t v) {
        in_cur[v] = 0;
        cur.erase(std::find(cur.begin(), cur.end(), v));
        cur_mask[v / 64] &= ~(uint64_t(1) << (v % 64));
        cur_weight -= g.weights[v];
        const uint64_t* row = g.row(v);
        for (size_t w = 0; w < g.words; ++w) {
            uint64_t x = live[w] & ~row[w];
            while (x) {
                uint32_t b = uint32_t(w * 64 + unsigned(std::countr_zero(x)));
                x &= x - 1;
                if (b != v) --miss[b];
            }
        }
    }
};

}  // namespace

Solution solve_local(const ConflictGraph& g, const LocalOpts& opts) {
    LocalState st(g);
    if (!opts.start.empty()) {
        if (!feasible(g, opts.start))
            throw std::invalid_argument("warm start is not a feasible selection");
        for (uint32_t v : opts.start) st.add(v);
    }
    std::mt19937_64 rng(opts.seed);
    std::vector<uint64_t> tabu_until(g.n, 0);
    std::vector<uint32_t> best_cols = st.cur;
    uint64_t best_weight = st.cur_weight;
    Solution out;
    auto t0 = std::chrono::steady_clock::now();
    uint64_t iter = 0;
    auto record = [&] {
        if (st.cur_weight > best_weight) {
            best_weight = st.cur_weight;
            best_cols = st.cur;
        }
    };
    record();
    while (iter < opts.max_iters) {
        if (opts.target && best_weight >= opts.target) break;
        if (opts.time_limit > 0 && (iter & 1023) == 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            if (dt.count() >= opts.time_limit) break;
        }
        ++iter;
        // add the heaviest compatible vertex; recently shaken ones are tabu
        // unless the add would beat the incumbent
        uint32_t pick = UINT32_MAX;
        for (uint32_t v = 0; v < g.n; ++v) {
            if (!g.alive[v] || st.in_cur[v] || st.miss[v] != 0) continue;
            if (iter < tabu_until[v] && st.cur_weight + g.weights[v] <= best_weight) continue;
            if (pick == UINT32_MAX || g.weights[v] > g.weights[pick]) pick = v;
        }
        if (pick != UINT32_MAX) {
            st.add(pick);
            record();
            continue;
        }
        // (1,1) swap: v outside conflicts with exactly one member u
        uint32_t best_v = UINT32_MAX, best_u = UINT32_MAX;
        int64_t best_gain = -1;
        for (uint32_t v = 0; v < g.n; ++v) {
            if (!g.alive[v] || st.in_cur[v] || st.miss[v] != 1) continue;
            uint32_t u = UINT32_MAX;
            const uint64_t* row = g.row(v);
            for (size_t w = 0; w < g.words && u == UINT32_MAX; ++w) {
                uint64_t x = st.cur_mask[w] & ~row[w];
                if (x) u = uint32_t(w * 64 + unsigned(std::countr_zero(x)));
            }
            int64_t gain = int64_t(g.weights[v]) - int64_t(g.weights[u]);
            if (gain < 0) continue;
            bool aspire = st.cur_weight + uint64_t(gain) > best_weight;
            if (iter < tabu_until[v] && !aspire) continue;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
                best_u = u;
            }
        }
        if (best_v != UINT32_MAX) {
            st.remove(best_u);
            tabu_until[best_u] = iter + opts.tabu_tenure + rng() % (opts.tabu_tenure + 1);
            st.add(best_v);
            record();
            continue;
        }
        // stuck: shake off a random chunk; with everything tabu the iteration
        // is a no-op and the tenures run down
        if (!st.cur.empty()) {
            size_t drop = 1 + size_t(rng() % (st.cur.size() / 3 + 1));
            for (size_t i = 0; i < drop && !st.cur.empty(); ++i) {
                uint32_t u = st.cur[size_t(rng() % st.cur.size())];
                st.remove(u);
                tabu_until[u] = iter + opts.tabu_tenure + rng() % (opts.tabu_tenure + 1);
            }
        }
    }
    out.cols = std::move(best_cols);
    std::sort(out.cols.begin(), out.cols.end());
    out.weight = best_weight;
    out.iterations = iter;
    return out;
}

namespace {

struct ExactSearch {
    const ConflictGraph& g;
    const ExactOpts& opts;
    std::vector<uint32_t> perm;      // search ordinal -> original id
    std::vector<uint64_t> adj;       // reordered adjacency
    std::vector<uint64_t> w;         // reordered weights
    size_t words = 0;
    uint32_t n = 0;
    std::vector<uint32_t> cur, best;
    uint64_t cur_weight = 0, best_weight = 0;
    uint64_t nodes = 0;
    bool stopped = false;

    explicit ExactSearch(const ConflictGraph& gr, const ExactOpts& o) : g(gr), opts(o) {
        std::vector<uint32_t> live;
        for (uint32_t v = 0; v < g.n; ++v)
            if (g.alive[v]) live.push_back(v);
        std::vector<uint32_t> deg(g.n, 0);
        for (uint32_t v : live) {
            const uint64_t* row = g.row(v);
            uint32_t d = 0;
            for (size_t i = 0; i < g.words; ++i) d += uint32_t(std::popcount(row[i]));
            deg[v] = d;
        }
        std::stable_sort(live.begin(), live.end(), [&](uint32_t a, uint32_t b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return g.weights[a] > g.weights[b];
        });
        perm = live;
        n = uint32_t(perm.size());
        words = (size_t(n) + 63) / 64;
        adj.assign(size_t(n) * words, 0);
        w.resize(n);
        std::vector<uint32_t> inv(g.n, UINT32_MAX);
        for (uint32_t i = 0; i < n; ++i) inv[perm[i]] = i;
        for (uint32_t i = 0; i < n; ++i) {
            w[i] = g.weights[perm[i]];
            const uint64_t* row = g.row(perm[i]);
            for (size_t wd = 0; wd < g.words; ++wd) {
                uint64_t x = row[wd];
                while (x) {
                    uint32_t b = uint32_t(wd * 64 + unsigned(std::countr_zero(x)));
                    x &= x - 1;
                    if (inv[b] != UINT32_MAX)
                        adj[size_t(i) * words + inv[b] / 64] |= uint64_t(1) << (inv[b] % 64);
                }
            }
        }
    }

    void run() {
        std::vector<uint64_t> all(words, 0);
        for (uint32_t i = 0; i < n; ++i) all[i / 64] |= uint64_t(1) << (i % 64);
        recurse(all);
    }

    void record() {
        if (cur_weight > best_weight) {
            best_weight = cur_weight;
            best = cur;
            if (opts.target && best_weight >= opts.target) stopped = true;
        }
    }

    void recurse(std::vector<uint64_t> P) {
        if (stopped) return;
        ++nodes;
        if (opts.max_nodes && nodes > opts.max_nodes)
            throw CapExceeded("exact search exceeded node cap");
        record();
        // greedy coloring: classes are pairwise-incompatible sets, so any
        // clique takes at most the heaviest member of each
        std::vector<std::vector<uint64_t>> class_mask;
        std::vector<uint64_t> class_max;
        std::vector<uint32_t> seq;
        std::vector<uint32_t> seq_class;
        for (size_t wd = 0; wd < words; ++wd) {
            uint64_t x = P[wd];
            while (x) {
                uint32_t v = uint32_t(wd * 64 + unsigned(std::countr_zero(x)));
                x &= x - 1;
                const uint64_t* row = adj.data() + size_t(v) * words;
                size_t c = 0;
                for (; c < class_mask.size(); ++c) {
                    bool clash = false;
                    for (size_t i = 0; i < words && !clash; ++i)
                        clash = (class_mask[c][i] & row[i]) != 0;
                    if (!clash) break;
                }
                if (c == class_mask.size()) {
                    class_mask.emplace_back(words, 0);
                    class_max.push_back(0);
                }
                class_mask[c][v / 64] |= uint64_t(1) << (v % 64);
                class_max[c] = std::max(class_max[c], w[v]);
                seq.push_back(v);
                seq_class.push_back(uint32_t(c));
            }
        }
        std::vector<uint64_t> cum(class_max.size() + 1, 0);
        for (size_t c = 0; c < class_max.size(); ++c) cum[c + 1] = cum[c] + class_max[c];
        // branch from the last color down; once the bound for the remaining
        // colors cannot beat the incumbent, the whole node is done
        std::vector<uint32_t> order(seq.size());
        for (size_t i = 0; i < seq.size(); ++i) order[i] = uint32_t(i);
        std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            return seq_class[a] < seq_class[b];
        });
        for (size_t oi = order.size(); oi-- > 0;) {
            if (stopped) return;
            uint32_t v = seq[order[oi]];
            uint32_t c = seq_class[order[oi]];
            if (cur_weight + cum[c + 1] <= best_weight) return;
            std::vector<uint64_t> child(words);
            const uint64_t* row = adj.data() + size_t(v) * words;
            bool any = false;
            for (size_t i = 0; i < words; ++i) {
                child[i] = P[i] & row[i];
                any |= child[i] != 0;
            }
            cur.push_back(v);
            cur_weight += w[v];
            if (any)
                recurse(std::move(child));
            else
                record();
            cur.pop_back();
            cur_weight -= w[v];
            P[v / 64] &= ~(uint64_t(1) << (v % 64));
        }
    }
};

}  // namespace

Solution solve_exact(const ConflictGraph& g, const ExactOpts& opts) {
    ExactSearch s(g, opts);
    if (!opts.warm.empty()) {
        if (!feasible(g, opts.warm)) throw std::invalid_argument("warm incumbent is infeasible");
        s.best_weight = 0;
        for (uint32_t v : opts.warm) s.best_weight += g.weights[v];
        std::vector<uint32_t> inv(g.n, UINT32_MAX);
        for (uint32_t i = 0; i < s.n; ++i) inv[s.perm[i]] = i;
        for (uint32_t v : opts.warm) s.best.push_back(inv[v]);
        if (opts.target && s.best_weight >= opts.target) s.stopped = true;
    }
    if (!s.stopped) s.run();
    Solution out;
    out.weight = s.best_weight;
    out.cols.reserve(s.best.size());
    for (uint32_t i : s.best) out.cols.push_back(s.perm[i]);
    std::sort(out.cols.begin(), out.cols.end());
    out.optimal = !s.stopped;
    out.iterations = s.nodes;
    return out;
}

std::string write_solution(const Solution& s) {
    std::string out = "objective " + std::to_string(s.weight) + "\n";
    out += std::string("optimal ") + (s.optimal ? "true" : "false") + "\n";
    out += "cols";
    for (uint32_t c : s.cols) out += " " + std::to_string(c);
    out += "\n";
    return out;
}

Solution read_solution(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Solution s;
    if (!(in >> tok) || tok != "objective" || !(in >> s.weight))
        throw ParseError("solution file: bad objective line");
    if (!(in >> tok) || tok != "optimal" || !(in >> tok) || (tok != "true" && tok != "false"))
        throw ParseError("solution file: bad optimal line");
    s.optimal = tok == "true";
    if (!(in >> tok) || tok != "cols") throw ParseError("solution file: bad cols line");
    uint32_t c;
    while (in >> c) s.cols.push_back(c);
    if (!in.eof()) throw ParseError("solution file: trailing tokens");
    if (!std::is_sorted(s.cols.begin(), s.cols.end()))
        throw ParseError("solution file: cols must be sorted");
    return s;
}

}  // namespace subcode
