#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "subcode/singer.hpp"

using namespace subcode;

namespace {

std::vector<uint64_t> shifted(const std::vector<uint64_t>& pts, uint64_t s, uint64_t N) {
    std::vector<uint64_t> out;
    out.reserve(pts.size());
    for (uint64_t p : pts) out.push_back((p + s) % N);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("point labeling is a bijection anchored at e_0") {
    Field F(2);
    for (unsigned v : {3u, 5u, 8u}) {
        auto g = singer_group(F, v);
        auto L = label_points(F, g.gens[0]);
        CHECK(L.N == (uint64_t(1) << v) - 1);
        CHECK(L.vec_of_exp.size() == L.N);
        CHECK(L.exp_of_vec[1] == 0);  // e_0 carries exponent 0
        std::set<uint64_t> seen(L.vec_of_exp.begin(), L.vec_of_exp.end());
        CHECK(seen.size() == L.N);
        CHECK(seen.count(0) == 0);
        for (uint64_t e = 0; e < L.N; ++e) CHECK(L.exp_of_vec[L.vec_of_exp[e]] == e);
    }
}

TEST_CASE("the 2-space spanned by exponents 0 and 1 in GF(2)^5") {
    Field F(2);
    // The third point depends on the generator: x^5 + x^2 + 1 puts the sum of
    // the first two basis points at exponent 18, x^5 + x^3 + 1 at 14.
    struct {
        std::vector<uint8_t> poly;
        uint64_t third;
    } cases[] = {{{}, 18}, {{1, 0, 0, 1, 0, 1}, 14}};
    for (const auto& [poly, third] : cases) {
        auto g = singer_group(F, 5, poly);
        auto L = label_points(F, g.gens[0]);
        std::vector<uint8_t> rows(2 * 5);
        for (unsigned c = 0; c < 5; ++c) {
            rows[c] = uint8_t((L.vec_of_exp[0] >> c) & 1);
            rows[5 + c] = uint8_t((L.vec_of_exp[1] >> c) & 1);
        }
        SubspaceKey s(F, 5, rows);
        auto pts = kspace_points(L, s);
        CHECK(pts == std::vector<uint64_t>{0, 1, third});
        CHECK(distance_distribution(pts, 31) == std::vector<uint64_t>{1, 13, 14});
    }
}

TEST_CASE("distance distribution uses circular distances") {
    CHECK(distance_distribution({0, 1, 62}, 63) == std::vector<uint64_t>{1, 1, 2});
    CHECK(distance_distribution({0, 31}, 63) == std::vector<uint64_t>{31});
    CHECK(distance_distribution({0, 32}, 63) == std::vector<uint64_t>{31});
}

TEST_CASE("orbit normalization is shift invariant and canonical") {
    std::mt19937_64 rng(43);
    const uint64_t N = 31;
    for (int trial = 0; trial < 300; ++trial) {
        std::set<uint64_t> pick;
        while (pick.size() < size_t(3 + trial % 5)) pick.insert(rng() % N);
        std::vector<uint64_t> pts(pick.begin(), pick.end());
        auto o = normalize_orbit(pts, N);
        CHECK(o.pts[0] == 0);
        CHECK(N % o.length == 0);
        CHECK(o.dist == distance_distribution(o.pts, N));
        // Canonical member is the least among all N shifts.
        std::vector<uint64_t> least = shifted(pts, 0, N);
        uint64_t stab = 0;
        for (uint64_t s = 0; s < N; ++s) {
            auto cand = shifted(pts, s, N);
            if (cand < least) least = cand;
            if (cand == shifted(pts, 0, N)) ++stab;
        }
        CHECK(o.pts == least);
        CHECK(o.length == N / stab);
        // Shifting the input does not change the orbit.
        auto o2 = normalize_orbit(shifted(pts, 1 + rng() % (N - 1), N), N);
        CHECK(o2.pts == o.pts);
        CHECK(o2.length == o.length);
    }
}

TEST_CASE("short orbits report their stabilizer") {
    auto o = normalize_orbit({0, 9, 18, 27, 36, 45, 54}, 63);
    CHECK(o.length == 9);
    CHECK_FALSE(o.admissible(63));
    for (size_t i = 0; i + 1 < o.dist.size(); i += 7)
        CHECK(o.dist[i] == o.dist[i + 6]);  // each distance repeats 7 times
}

TEST_CASE("orbit inventory for v=6 k=3") {
    Field F(2);
    auto g = singer_group(F, 6);
    auto L = label_points(F, g.gens[0]);
    auto orbits = enumerate_singer_orbits(F, L, 3);
    REQUIRE(orbits.size() == 23);
    size_t full = 0, admissible = 0;
    uint64_t total = 0;
    std::set<std::vector<uint64_t>> dists;
    std::set<std::vector<uint64_t>> dists_full;
    for (const auto& o : orbits) {
        total += o.length;
        if (o.length == L.N) {
            ++full;
            dists_full.insert(o.dist);
        } else {
            CHECK(o.length == 9);
        }
        if (o.admissible(L.N)) ++admissible;
        dists.insert(o.dist);
    }
    CHECK(full == 22);
    CHECK(admissible == 8);
    CHECK(total == 1395);
    // Distinct distance distributions: 18 among the full orbits, 19 in all.
    CHECK(dists_full.size() == 18);
    CHECK(dists.size() == 19);
}

TEST_CASE("orbit inventory for v=7 and v=8") {
    Field F(2);
    {
        auto g = singer_group(F, 7);
        auto L = label_points(F, g.gens[0]);
        auto orbits = enumerate_singer_orbits(F, L, 3);
        CHECK(orbits.size() == 93);
        size_t adm = 0;
        for (const auto& o : orbits) {
            CHECK(o.length == 127);
            adm += o.admissible(L.N) ? 1 : 0;
        }
        CHECK(adm == 72);
    }
    {
        auto g = singer_group(F, 8);
        auto L = label_points(F, g.gens[0]);
        auto orbits = enumerate_singer_orbits(F, L, 3);
        CHECK(orbits.size() == 381);
        size_t adm = 0, full = 0;
        for (const auto& o : orbits) {
            full += o.length == 255 ? 1 : 0;
            adm += o.admissible(L.N) ? 1 : 0;
        }
        CHECK(full == 381);
        CHECK(adm == 320);
    }
}

TEST_CASE("point sets convert back to subspaces") {
    Field F(2);
    auto g = singer_group(F, 6);
    auto L = label_points(F, g.gens[0]);
    auto orbits = enumerate_singer_orbits(F, L, 3);
    for (const auto& o : orbits) {
        auto s = subspace_from_points(F, L, o.pts);
        CHECK(s.k() == 3);
        CHECK(kspace_points(L, s) == o.pts);
    }
}

TEST_CASE("cyclic system shape and column sums") {
    Field F(2);
    auto ss = build_singer_system(F, 6, 3);
    CHECK(ss.N == 63);
    CHECK(ss.sys.n_rows() == 31);
    CHECK(ss.sys.n_cols() == 23);
    CHECK(ss.admissible_cols.size() == 8);
    for (size_t j = 0; j < ss.sys.n_cols(); ++j) {
        CHECK(ss.sys.col_weights[j] == ss.all_orbits[j].length);
        uint64_t pairs = 0;
        for (size_t i = 0; i < ss.sys.n_rows(); ++i) pairs += ss.sys.at(uint32_t(i), uint32_t(j));
        CHECK(pairs == 21);  // 7 points give 21 pairs
    }
    auto r = reduce(ss.sys);
    CHECK(r.n_cols() == 8);
    for (auto w : r.col_weights) CHECK(w == 63);
    // Admissible orbits are exactly the surviving columns.
    std::vector<uint32_t> surviving(r.col_origin.begin(), r.col_origin.end());
    CHECK(surviving == ss.admissible_cols);
}

TEST_CASE("no packing exists for v=5 k=3") {
    Field F(2);
    auto ss = build_singer_system(F, 5, 3);
    CHECK(ss.sys.n_cols() == 5);
    CHECK(ss.admissible_cols.empty());  // 21 pairs cannot fit 15 distance values
    CHECK(reduce(ss.sys).n_cols() == 0);
}

TEST_CASE("system construction is deterministic") {
    Field F(2);
    auto a = build_singer_system(F, 7, 3);
    auto b = build_singer_system(F, 7, 3);
    CHECK(write_system(a.sys) == write_system(b.sys));
    REQUIRE(a.all_orbits.size() == b.all_orbits.size());
    for (size_t i = 0; i < a.all_orbits.size(); ++i) CHECK(a.all_orbits[i].pts == b.all_orbits[i].pts);
}

TEST_CASE("labeling rejects non-cyclic generators") {
    Field F(2);
    CHECK_THROWS_AS(label_points(F, GroupElement::identity(F, 4)), Error);
    Field F3(3);
    auto g3 = singer_group(F3, 2, {2, 1, 1});
    CHECK_THROWS_AS(label_points(F3, g3.gens[0]), std::invalid_argument);
}
