// Incidence systems between orbits of t-subspaces (rows) and orbits of
// k-subspaces (columns) under a prescribed matrix group. The entry at
// (orbit of W, orbit omega) counts the members of omega through a fixed W;
// transitivity makes the count independent of the choice of W.
//
// A 0/1 column selection x with  M x <= 1  picks k-space orbits whose union
// has pairwise intersection dimension < t, hence subspace distance at least
// 2(k - t + 1). Selections with  M x = 1  are q-analog designs with
// lambda = 1.
#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "subcode/group.hpp"

namespace subcode {

enum class SystemMode { packing, design };

struct SystemParams {
    unsigned q = 0, v = 0, k = 0, t = 0;
};

struct CondensedSystem {
    SystemParams params;
    SystemMode mode = SystemMode::packing;
    std::vector<uint64_t> col_weights;  // orbit sizes: codewords gained per column
    // Sparse rows, each sorted by column: (column, count).
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows;
    // Column/row ordinal -> orbit ordinal in col_orbits/row_orbits. Identity
    // for freshly built systems; composed through reductions.
    std::vector<uint32_t> col_origin, row_origin;
    std::shared_ptr<const OrbitTable> row_orbits, col_orbits;  // null for parsed dumps

    size_t n_rows() const { return rows.size(); }
    size_t n_cols() const { return col_weights.size(); }
    uint32_t at(uint32_t i, uint32_t j) const;
    uint64_t nonzeros() const;
};

// Full identity-group system: rows are all t-subspaces, columns all
// k-subspaces, entry 1 iff contained. Built directly, no orbit machinery.
CondensedSystem build_full_system(const Field& F, unsigned v, unsigned k, unsigned t,
                                  SystemMode mode = SystemMode::packing,
                                  uint64_t cap = UINT64_C(4) << 20);

// Orbit-condensed system for the group generated by g.gens.
CondensedSystem condense(const Field& F, const GroupSpec& g, unsigned k, unsigned t,
                         SystemMode mode = SystemMode::packing,
                         uint64_t cap = UINT64_C(4) << 20);

struct ReductionLog {
    std::vector<uint32_t> dropped_cols;       // had an entry >= 2
    std::vector<uint32_t> dropped_zero_rows;  // empty after column removal
    std::vector<std::pair<uint32_t, uint32_t>> dropped_dup_rows;  // (dropped, kept)
    std::vector<uint32_t> col_map, row_map;   // reduced ordinal -> input ordinal
};

// Removes unusable columns (an entry >= 2 forces x_j = 0), then rows made
// all-zero, then duplicate rows. Ordinals in the log refer to the input
// system's numbering.
CondensedSystem reduce(const CondensedSystem& s, ReductionLog* log = nullptr);

// Plain text dump:
//   rows <r> cols <c> mode <packing|design>
//   w <c weights>
//   <r lines of c counts>
std::string write_system(const CondensedSystem& s);
CondensedSystem parse_system(const std::string& text);

// CPLEX LP text: maximize the weighted column sum subject to one <= 1
// (packing) or = 1 (design) constraint per nonempty row, all variables
// binary. Variables are x1..xn, constraints r1..rm by input row ordinal.
std::string export_lp(const CondensedSystem& s);
// Inverse of export_lp up to zero rows; origins are set to identity.
CondensedSystem parse_lp(const std::string& text);

}  // namespace subcode
