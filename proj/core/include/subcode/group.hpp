// Matrix groups acting on GF(q)^v from the right (row vectors), generator
// lists, and orbit tables on sets of subspaces.
#pragma once
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "subcode/subspace.hpp"

namespace subcode {

struct GroupElement {
    unsigned v = 0;
    std::vector<uint8_t> a;       // row-major v*v
    std::vector<uint64_t> rows2;  // q = 2 only: row i as a bit word

    static GroupElement identity(const Field& F, unsigned v);
    // Validates entries and invertibility.
    static GroupElement from_rows(const Field& F, unsigned v, std::vector<uint8_t> rows);

    uint8_t at(unsigned i, unsigned j) const { return a[size_t(i) * v + j]; }
    bool operator==(const GroupElement& o) const { return v == o.v && a == o.a; }

    // Image of a subspace under the right action x -> x * A.
    SubspaceKey image(const Field& F, const SubspaceKey& s) const;
};

GroupElement multiply(const Field& F, const GroupElement& x, const GroupElement& y);

// Multiplicative order; throws CapExceeded past cap iterations.
uint64_t element_order(const Field& F, const GroupElement& g, uint64_t cap = uint64_t(1) << 26);

struct GroupSpec {
    unsigned q = 0, v = 0;
    std::string name;    // "identity", "singer", or a caller-chosen label
    std::string sha256;  // fingerprint of the defining text
    std::vector<GroupElement> gens;
};

// The trivial group: no generators, all orbits are singletons.
GroupSpec identity_group(unsigned q, unsigned v);

// Cyclic group generated by the companion matrix of a primitive degree-v
// polynomial over GF(q), acting transitively on the nonzero vectors. With no
// polynomial given, uses a built-in table (q = 2, v <= 16). A supplied
// polynomial is coefficients c_0..c_v, monic, and is checked for primitivity.
GroupSpec singer_group(const Field& F, unsigned v, std::vector<uint8_t> poly = {});

// Built-in primitive polynomial over GF(2) of degree v (1 <= v <= 16),
// coefficients c_0..c_v.
const std::vector<uint8_t>& primitive_poly_gf2(unsigned v);

// Text form:
//   q <q> v <v>
//   gen
//   <v rows of v digits>
//   (more gen blocks)
std::string format_group(const GroupSpec& g);
// Strict parse; validates digits and invertibility, sets sha256 from text.
GroupSpec parse_group(const std::string& text, const std::string& name = "");

struct OrbitTable {
    std::vector<SubspaceKey> reps;  // minimal member of each orbit
    std::vector<uint64_t> sizes;
    std::unordered_map<SubspaceKey, uint32_t, KeyHash> index;  // member -> orbit ordinal
    size_t count() const { return reps.size(); }
};

// Partitions keys into orbits under the group generated by gens. The key set
// must be closed under the action (it is when it is all k-subspaces); a
// stray image throws Error. Orbit ordinals follow first appearance in keys,
// so sorted input yields orbits sorted by their minimal member.
OrbitTable compute_orbits(const Field& F, const std::vector<GroupElement>& gens,
                          const std::vector<SubspaceKey>& keys);

}  // namespace subcode
