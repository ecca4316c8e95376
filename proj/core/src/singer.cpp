#include "subcode/singer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace subcode {

PointLabeling label_points(const Field& F, const GroupElement& singer_gen) {
    if (F.q() != 2) throw std::invalid_argument("point labeling requires q = 2");
    const unsigned v = singer_gen.v;
    if (v == 0 || v > 62) throw std::invalid_argument("v out of range for point labeling");
    PointLabeling L;
    L.v = v;
    L.N = (uint64_t(1) << v) - 1;
    L.vec_of_exp.assign(L.N, 0);
    L.exp_of_vec.assign(uint64_t(1) << v, UINT64_MAX);
    uint64_t x = 1;  // e_0
    for (uint64_t i = 0; i < L.N; ++i) {
        if (x == 0 || L.exp_of_vec[x] != UINT64_MAX)
            throw Error("generator does not act as a full cycle on nonzero vectors");
        L.vec_of_exp[i] = x;
        L.exp_of_vec[x] = i;
        uint64_t y = 0, b = x;
        while (b) {
            y ^= singer_gen.rows2[unsigned(std::countr_zero(b))];
            b &= b - 1;
        }
        x = y;
    }
    if (x != 1) throw Error("generator cycle does not close after 2^v - 1 steps");
    return L;
}

std::vector<uint64_t> kspace_points(const PointLabeling& L, const SubspaceKey& s) {
    if (s.q() != 2 || s.v() != L.v) throw std::invalid_argument("subspace does not match labeling");
    const unsigned k = s.k();
    std::vector<uint64_t> pts;
    pts.reserve((size_t(1) << k) - 1);
    for (uint64_t mask = 1; mask < (uint64_t(1) << k); ++mask) {
        uint64_t w = 0, m = mask;
        while (m) {
            w ^= s.word(unsigned(std::countr_zero(m)));
            m &= m - 1;
        }
        pts.push_back(L.exp_of_vec[w]);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<uint64_t> distance_distribution(const std::vector<uint64_t>& pts, uint64_t N) {
    std::vector<uint64_t> d;
    d.reserve(pts.size() * (pts.size() - 1) / 2);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            uint64_t diff = pts[j] - pts[i];
            d.push_back(std::min(diff, N - diff));
        }
    std::sort(d.begin(), d.end());
    return d;
}

bool PointSetOrbit::admissible(uint64_t N) const {
    if (length != N) return false;
    for (size_t i = 1; i < dist.size(); ++i)
        if (dist[i] == dist[i - 1]) return false;
    return true;
}

PointSetOrbit normalize_orbit(std::vector<uint64_t> pts, uint64_t N) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    std::sort(pts.begin(), pts.end());
    const size_t m = pts.size();
    // Any shift fixing the set maps pts[0] onto some member, so both the
    // least rotation and the stabilizer are found among the m shifts that
    // move one member to 0.
    std::vector<uint64_t> base(m), best, cand(m);
    for (size_t i = 0; i < m; ++i) base[i] = (pts[i] + N - pts[0]) % N;
    std::sort(base.begin(), base.end());
    uint64_t stab = 0;
    for (size_t a = 0; a < m; ++a) {
        for (size_t i = 0; i < m; ++i) cand[i] = (pts[i] + N - pts[a]) % N;
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
        if (cand == base) ++stab;
    }
    PointSetOrbit o;
    o.pts = std::move(best);
    o.length = N / stab;
    o.dist = distance_distribution(o.pts, N);
    return o;
}

std::vector<PointSetOrbit> enumerate_singer_orbits(const Field& F, const PointLabeling& L,
                                                   unsigned k, uint64_t cap) {
    const unsigned v = L.v;
    if (!(k >= 1 && k <= v)) throw std::invalid_argument("need 1 <= k <= v");
    std::vector<uint8_t> e0(v, 0);
    e0[0] = 1;
    SubspaceKey point(F, v, e0);
    auto through = subspaces_through(F, point, k, cap);

    struct VecHash {
        size_t operator()(const std::vector<uint64_t>& p) const {
            uint64_t h = 1469598103934665603ull;
            for (uint64_t x : p) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return size_t(h);
        }
    };
    std::unordered_set<std::vector<uint64_t>, VecHash> seen;
    std::vector<PointSetOrbit> orbits;
    uint64_t tally = 0;
    const uint64_t m = (uint64_t(1) << k) - 1;
    for (const auto& s : through) {
        auto o = normalize_orbit(kspace_points(L, s), L.N);
        if ((m * o.length) % L.N != 0) throw Error("orbit length does not divide the tally");
        if (seen.insert(o.pts).second) {
            tally += m * o.length / L.N;
            orbits.push_back(std::move(o));
        }
    }
    if (BigInt(tally) != gaussian_binomial(v - 1, k - 1, 2))
        throw Error("orbit tally mismatch: enumeration incomplete");
    std::sort(orbits.begin(), orbits.end(),
              [](const PointSetOrbit& a, const PointSetOrbit& b) { return a.pts < b.pts; });
    return orbits;
}

SubspaceKey subspace_from_points(const Field& F, const PointLabeling& L,
                                 const std::vector<uint64_t>& pts) {
    std::vector<uint8_t> rows;
    rows.reserve(pts.size() * L.v);
    for (uint64_t e : pts) {
        uint64_t w = L.vec_of_exp.at(e);
        for (unsigned c = 0; c < L.v; ++c) rows.push_back(uint8_t((w >> c) & 1));
    }
    return SubspaceKey(F, L.v, rows);
}

SingerSystem build_singer_system(const Field& F, unsigned v, unsigned k,
                                 std::vector<uint8_t> poly, uint64_t cap) {
    if (F.q() != 2) throw std::invalid_argument("cyclic point system requires q = 2");
    SingerSystem ss;
    ss.v = v;
    ss.k = k;
    ss.group = singer_group(F, v, std::move(poly));
    ss.labeling = std::make_shared<PointLabeling>(label_points(F, ss.group.gens[0]));
    ss.N = ss.labeling->N;
    ss.all_orbits = enumerate_singer_orbits(F, *ss.labeling, k, cap);

    const uint64_t half = ss.N / 2;
    CondensedSystem& sys = ss.sys;
    sys.params = {2, v, k, 2};  // packing: pairwise intersection dimension <= 1
    sys.mode = SystemMode::packing;
    sys.rows.resize(half);
    for (uint32_t j = 0; j < ss.all_orbits.size(); ++j) {
        const auto& o = ss.all_orbits[j];
        if (o.admissible(ss.N)) ss.admissible_cols.push_back(j);
        sys.col_weights.push_back(o.length);
        for (size_t a = 0; a < o.dist.size();) {
            size_t b = a;
            while (b < o.dist.size() && o.dist[b] == o.dist[a]) ++b;
            sys.rows[size_t(o.dist[a]) - 1].emplace_back(j, uint32_t(b - a));
            a = b;
        }
    }
    sys.col_origin.resize(sys.col_weights.size());
    for (size_t j = 0; j < sys.col_origin.size(); ++j) sys.col_origin[j] = uint32_t(j);
    sys.row_origin.resize(half);
    for (size_t i = 0; i < half; ++i) sys.row_origin[i] = uint32_t(i);
    return ss;
}

std::string format_orbit(const PointSetOrbit& o) {
    auto csv = [](const std::vector<uint64_t>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(xs[i]);
        }
        return s;
    };
    return "len=" + std::to_string(o.length) + " pts=" + csv(o.pts) + " dist=" + csv(o.dist);
}

}  // namespace subcode
