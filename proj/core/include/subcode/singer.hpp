// Cyclic (Singer) specialization over GF(2): the generator permutes the
// N = 2^v - 1 nonzero vectors in one cycle, so a k-subspace becomes a set of
// 2^k - 1 exponents and the group acts by adding 1 mod N. An orbit of full
// length N whose pairwise circular exponent distances are all distinct meets
// every shifted copy of itself in at most one point; two such orbits with
// disjoint distance sets likewise mix cleanly. The system has one row per
// distance value 1..floor(N/2), one column per orbit, and entries counting
// how often the orbit's point set realizes the distance; packings of it are
// codes of subspace distance 2(k-1) collecting `length` codewords per
// selected column. Columns with a repeated distance (every short orbit has
// one, being a union of stabilizer cosets) carry an entry >= 2 and fall to
// the usual reduction.
#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "subcode/kramer_mesner.hpp"

namespace subcode {

struct PointLabeling {
    unsigned v = 0;
    uint64_t N = 0;                    // 2^v - 1
    std::vector<uint64_t> vec_of_exp;  // exponent -> nonzero vector word
    std::vector<uint64_t> exp_of_vec;  // vector word -> exponent (index 0 unused)
};

// Walks e_0 through the cycle of the generator; throws if the walk does not
// visit every nonzero vector exactly once.
PointLabeling label_points(const Field& F, const GroupElement& singer_gen);

// Sorted exponents of the 2^k - 1 nonzero vectors of the subspace (q = 2).
std::vector<uint64_t> kspace_points(const PointLabeling& L, const SubspaceKey& s);

// Sorted multiset of circular distances min(|a-b|, N-|a-b|) over all pairs.
std::vector<uint64_t> distance_distribution(const std::vector<uint64_t>& pts, uint64_t N);

struct PointSetOrbit {
    std::vector<uint64_t> pts;   // canonical member: lexicographically least shift
    uint64_t length = 0;         // orbit size under shifting, a divisor of N
    std::vector<uint64_t> dist;  // distance distribution of pts

    bool admissible(uint64_t N) const;  // full length and no repeated distance
};

// Canonical form of the shift-orbit of the given exponent set.
PointSetOrbit normalize_orbit(std::vector<uint64_t> pts, uint64_t N);

// Every orbit of k-subspaces under the cycle, each in canonical form, sorted
// by point set. Enumerates only the subspaces through the exponent-0 point
// and cross-checks the tally against the subspace count.
std::vector<PointSetOrbit> enumerate_singer_orbits(const Field& F, const PointLabeling& L,
                                                   unsigned k, uint64_t cap = UINT64_C(4) << 20);

struct SingerSystem {
    unsigned v = 0, k = 0;
    uint64_t N = 0;
    GroupSpec group;
    std::shared_ptr<const PointLabeling> labeling;
    std::vector<PointSetOrbit> all_orbits;  // every orbit, canonical order
    std::vector<uint32_t> admissible_cols;  // ordinals of the admissible orbits
    CondensedSystem sys;  // rows: distances 1..N/2 (row d-1); cols: all_orbits
};

// Builds the full pipeline for GF(2), dimension v, subspace dimension k.
SingerSystem build_singer_system(const Field& F, unsigned v, unsigned k,
                                 std::vector<uint8_t> poly = {},
                                 uint64_t cap = UINT64_C(4) << 20);

// Reconstructs the subspace spanned by the vectors behind the exponents.
SubspaceKey subspace_from_points(const Field& F, const PointLabeling& L,
                                 const std::vector<uint64_t>& pts);

// One line: "len=<l> pts=<a,b,..> dist=<d1,d2,..>"
std::string format_orbit(const PointSetOrbit& o);

}  // namespace subcode
