// Column selection as weighted clique search. Vertices are system columns;
// two columns are compatible when no row sees both, so feasible selections
// of the packing system are exactly the cliques of the compatibility
// relation. Columns whose own orbit already repeats a row (entry >= 2) are
// dead: they can never be selected.
#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "subcode/kramer_mesner.hpp"

namespace subcode {

struct ConflictGraph {
    uint32_t n = 0;
    size_t words = 0;                // words per adjacency row
    std::vector<uint64_t> weights;
    std::vector<char> alive;         // dead columns can never be selected
    std::vector<uint64_t> compat;    // n rows x words; bit j of row i = compatible

    bool compatible(uint32_t i, uint32_t j) const {
        return (compat[size_t(i) * words + j / 64] >> (j % 64)) & 1;
    }
    const uint64_t* row(uint32_t i) const { return compat.data() + size_t(i) * words; }
};

ConflictGraph to_conflict_graph(const CondensedSystem& s);

struct Solution {
    std::vector<uint32_t> cols;  // selected column ordinals, sorted
    uint64_t weight = 0;
    bool optimal = false;   // proven maximum
    uint64_t iterations = 0;
};

// Highest weight first, lowest ordinal on ties.
Solution solve_greedy(const ConflictGraph& g);

struct LocalOpts {
    uint64_t seed = 1;
    uint64_t max_iters = 1000000;
    double time_limit = 0;             // seconds; 0 = no wall clock stop
    uint64_t target = 0;               // stop once best weight reaches this
    uint32_t tabu_tenure = 7;
    std::vector<uint32_t> start;       // optional feasible warm start
};

// Tabu add/swap/perturb search. Never returns less than the warm start.
// With time_limit = 0 the outcome depends only on the graph and opts.
Solution solve_local(const ConflictGraph& g, const LocalOpts& opts);

struct ExactOpts {
    uint64_t target = 0;     // stop early once best weight reaches this
    uint64_t max_nodes = 0;  // 0 = unlimited; otherwise CapExceeded past this
    std::vector<uint32_t> warm;  // optional feasible incumbent
};

// Branch and bound with a greedy coloring bound. Solution.optimal reports
// whether the search space was exhausted (false after a target stop).
Solution solve_exact(const ConflictGraph& g, const ExactOpts& opts = {});

// Checks pairwise compatibility and liveness of a column selection.
bool feasible(const ConflictGraph& g, const std::vector<uint32_t>& cols);

// Text form:
//   objective <weight>
//   optimal <true|false>
//   cols <sorted ordinals>
std::string write_solution(const Solution& s);
Solution read_solution(const std::string& text);

}  // namespace subcode
