// Subspaces of GF(q)^v in a canonical form: the reduced row echelon basis.
// Two subspaces are equal iff their canonical keys are byte-identical, so
// keys serve directly as hash-map keys and as a total order on subspaces.
//
// Storage: for q = 2 each basis row is one uint64_t with column c at bit c
// (v <= 64); for q > 2 rows are base-q digit strings, row-major.
#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subcode/field.hpp"

namespace subcode {

using BigInt = boost::multiprecision::cpp_int;

// Number of k-dimensional subspaces of GF(q)^v, exact.
BigInt gaussian_binomial(unsigned v, unsigned k, unsigned q);

class SubspaceKey {
  public:
    SubspaceKey() = default;

    // Canonicalizes the spanned space of the given generator rows (row-major,
    // rows x v digits, entries < q). Dependent generators are allowed; the
    // stored dimension is the rank.
    SubspaceKey(const Field& F, unsigned v, const std::vector<uint8_t>& rows);

    unsigned v() const { return v_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    // Entry at basis row r, column c.
    uint8_t at(unsigned r, unsigned c) const;

    // Pivot column of basis row r (strictly increasing in r).
    unsigned pivot(unsigned r) const { return pivots_[r]; }

    // q = 2 only: basis row r as a bit word, column c at bit c.
    uint64_t word(unsigned r) const { return words_[r]; }

    bool operator==(const SubspaceKey& o) const;

    // Total order: digit-lexicographic on the canonical basis matrix read
    // row-major, columns left to right. Ties cannot occur between distinct
    // subspaces of equal shape.
    static bool less(const SubspaceKey& a, const SubspaceKey& b);

    // Dense copy of the canonical basis, row-major k*v digits.
    std::vector<uint8_t> dense() const;

    // Text form "v,k,q:row/row/..." with base-q digits 0-9a-z per row.
    std::string format() const;
    static SubspaceKey parse(const Field& F, const std::string& text);

    size_t hash() const;

  private:
    friend struct GroupElement;
    // q = 2 fast path: reduces the given words in place, no Field needed.
    static SubspaceKey from_words(unsigned v, std::vector<uint64_t> rows);
    uint16_t v_ = 0, k_ = 0, q_ = 0;
    std::vector<uint64_t> words_;   // q == 2
    std::vector<uint8_t> digits_;   // q > 2, row-major k_ * v_
    std::vector<uint16_t> pivots_;  // k_ entries
    void canonicalize(const Field& F, std::vector<uint8_t> rows, unsigned nrows);
};

struct KeyHash {
    size_t operator()(const SubspaceKey& k) const { return k.hash(); }
};
struct KeyLess {
    bool operator()(const SubspaceKey& a, const SubspaceKey& b) const {
        return SubspaceKey::less(a, b);
    }
};

// Rank of an nrows x v matrix given row-major.
unsigned matrix_rank(const Field& F, std::vector<uint8_t> rows, unsigned nrows, unsigned v);

// dim(span(V union W)) via elimination on the stacked bases.
unsigned join_dim(const Field& F, const SubspaceKey& a, const SubspaceKey& b);

// d_S(V, W) = dim V + dim W - 2 dim(V intersect W).
unsigned subspace_distance(const Field& F, const SubspaceKey& a, const SubspaceKey& b);

// Whether inner is contained in outer (dim inner <= dim outer assumed).
bool contains(const Field& F, const SubspaceKey& outer, const SubspaceKey& inner);

// All k-subspaces of GF(q)^v in canonical (SubspaceKey::less) order. Throws
// CapExceeded if the count would exceed cap.
std::vector<SubspaceKey> enumerate_subspaces(const Field& F, unsigned v, unsigned k,
                                             uint64_t cap = UINT64_C(4) << 20);

// All k-subspaces containing the given t-subspace, canonical order; the count
// equals gaussian_binomial(v - t, k - t, q).
std::vector<SubspaceKey> subspaces_through(const Field& F, const SubspaceKey& w, unsigned k,
                                           uint64_t cap = UINT64_C(4) << 20);

}  // namespace subcode
