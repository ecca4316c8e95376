// Certificates and independent verification. A certificate lists the
// codewords outright; the verifier recomputes every pairwise subspace
// distance from the listed basis matrices and nothing else, so a bug in the
// orbit or solver layers cannot hide here.
#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "subcode/clique.hpp"
#include "subcode/singer.hpp"

namespace subcode {

struct Provenance {
    std::string engine = "unknown";  // greedy | local | exact | external | unknown
    std::string group = "-";
    std::string group_sha256 = "-";
    uint64_t seed = 0;
    std::string orbits = "-";  // selected orbit ordinals, comma separated
};

struct CodeCertificate {
    unsigned q = 0, v = 0, k = 0;
    unsigned claimed_d = 0;  // claimed minimum subspace distance
    std::vector<SubspaceKey> words;
    Provenance prov;
};

// Full orbits behind the given orbit ordinals, as sorted codewords.
std::vector<SubspaceKey> expand_orbits(const Field& F, const OrbitTable& orbits,
                                       const std::vector<GroupElement>& gens,
                                       const std::vector<uint32_t>& orbit_ids);

// Codewords selected by system columns (mapped through col_origin).
std::vector<SubspaceKey> expand(const Field& F, const CondensedSystem& s,
                                const std::vector<GroupElement>& gens,
                                const std::vector<uint32_t>& cols);

// Codewords of the selected point orbits (ordinals into ss.all_orbits).
std::vector<SubspaceKey> expand(const Field& F, const SingerSystem& ss,
                                const std::vector<uint32_t>& cols);

struct VerifyReport {
    bool ok = false;
    unsigned true_min = 0;  // minimum distance found; 2k when fewer than 2 words
    uint64_t pairs_checked = 0;
    std::string failure;  // empty when ok
};

// Pairwise check of the claimed distance. Stops at the first violation
// unless full_scan, in which case the exact minimum is computed. threads
// only splits the pair loop; the verdict does not depend on it.
VerifyReport verify(const Field& F, const CodeCertificate& cert, unsigned threads = 1,
                    bool full_scan = false);

// Text form, fingerprinted:
//   subcode certificate v1
//   q .. v .. k .. claimed_d .. m ..
//   <m sorted codeword lines>
//   provenance
//   engine ..  /  group ..  /  group_sha256 ..  /  seed ..  /  orbits ..
//   end
//   sha256 <hex over everything through "end\n">
std::string write_certificate(const CodeCertificate& cert);
// Strict parse; a wrong sha256 line is reported as a warning, not an error.
CodeCertificate read_certificate(const std::string& text,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace subcode
