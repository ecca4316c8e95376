#include <doctest.h>

#include <random>
#include <vector>

#include "subcode/group.hpp"

using namespace subcode;

namespace {

const char* kG7 =
    "q 2 v 7\n"
    "gen\n"
    "1000000\n"
    "0000100\n"
    "0000010\n"
    "0000001\n"
    "0110110\n"
    "0011011\n"
    "0111011\n";

GroupElement random_invertible(const Field& F, unsigned v, std::mt19937_64& rng) {
    for (;;) {
        std::vector<uint8_t> rows(size_t(v) * v);
        for (auto& x : rows) x = uint8_t(rng() % F.q());
        if (matrix_rank(F, rows, v, v) == v) return GroupElement::from_rows(F, v, rows);
    }
}

SubspaceKey random_subspace(const Field& F, unsigned v, unsigned k, std::mt19937_64& rng) {
    for (;;) {
        std::vector<uint8_t> rows(size_t(k) * v);
        for (auto& x : rows) x = uint8_t(rng() % F.q());
        if (matrix_rank(F, rows, k, v) == k) return SubspaceKey(F, v, rows);
    }
}

}  // namespace

TEST_CASE("group file parses and the generator has order 21") {
    Field F(2);
    GroupSpec g = parse_group(kG7);
    REQUIRE(g.gens.size() == 1);
    CHECK(g.q == 2);
    CHECK(g.v == 7);
    CHECK(element_order(F, g.gens[0]) == 21);
    CHECK(g.sha256.size() == 64);
}

TEST_CASE("group text round trip") {
    GroupSpec g = parse_group(kG7, "g7");
    CHECK(g.name == "g7");
    GroupSpec h = parse_group(format_group(g));
    REQUIRE(h.gens.size() == 1);
    CHECK(h.gens[0] == g.gens[0]);
    CHECK(format_group(h) == format_group(g));
}

TEST_CASE("group parse rejects malformed input") {
    CHECK_THROWS_AS(parse_group("q 2 v 3\ngen\n100\n010\n"), ParseError);          // short block
    CHECK_THROWS_AS(parse_group("q 2 v 3\ngen\n100\n010\n012\n"), ParseError);     // digit >= q
    CHECK_THROWS_AS(parse_group("q 2 v 3\ngen\n100\n010\n110\n"), std::exception); // singular
    CHECK_THROWS_AS(parse_group("v 3 q 2\ngen\n100\n010\n001\n"), ParseError);     // bad header
    CHECK_THROWS_AS(parse_group(""), ParseError);
}

TEST_CASE("identity and inverse behavior of the action") {
    std::mt19937_64 rng(31);
    for (unsigned q : {2u, 3u}) {
        Field F(q);
        unsigned v = 5;
        GroupElement id = GroupElement::identity(F, v);
        for (int trial = 0; trial < 50; ++trial) {
            auto s = random_subspace(F, v, 1 + unsigned(rng() % 4), rng);
            CHECK(id.image(F, s) == s);
        }
    }
}

TEST_CASE("image matches the dense matrix product") {
    std::mt19937_64 rng(37);
    for (unsigned q : {2u, 3u, 4u}) {
        Field F(q);
        unsigned v = 4 + unsigned(rng() % 3);
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_invertible(F, v, rng);
            auto s = random_subspace(F, v, 1 + unsigned(rng() % (v - 1)), rng);
            std::vector<uint8_t> rows(size_t(s.k()) * v, 0);
            for (unsigned r = 0; r < s.k(); ++r)
                for (unsigned c = 0; c < v; ++c) {
                    uint8_t acc = 0;
                    for (unsigned m = 0; m < v; ++m)
                        acc = F.add(acc, F.mul(s.at(r, m), a.at(m, c)));
                    rows[size_t(r) * v + c] = acc;
                }
            CHECK(a.image(F, s) == SubspaceKey(F, v, rows));
        }
    }
}

TEST_CASE("multiplication composes with the right action") {
    std::mt19937_64 rng(41);
    Field F(3);
    unsigned v = 4;
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_invertible(F, v, rng);
        auto b = random_invertible(F, v, rng);
        auto s = random_subspace(F, v, 2, rng);
        CHECK(multiply(F, a, b).image(F, s) == b.image(F, a.image(F, s)));
    }
}

TEST_CASE("singer generators act with full multiplicative order") {
    Field F(2);
    for (unsigned v = 2; v <= 10; ++v) {
        GroupSpec g = singer_group(F, v);
        REQUIRE(g.gens.size() == 1);
        CHECK(element_order(F, g.gens[0]) == (uint64_t(1) << v) - 1);
    }
}

TEST_CASE("singer over GF(3) with an explicit primitive polynomial") {
    Field F(3);
    GroupSpec g = singer_group(F, 2, {2, 1, 1});  // x^2+x+2
    CHECK(element_order(F, g.gens[0]) == 8);
    // x^2+1 has order 4 < 8: irreducible but not primitive.
    CHECK_THROWS_AS(singer_group(F, 2, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("built-in primitive polynomials cover degrees 1 through 16") {
    Field F(2);
    for (unsigned v = 1; v <= 16; ++v) {
        const auto& poly = primitive_poly_gf2(v);
        REQUIRE(poly.size() == v + 1);
        CHECK(poly[v] == 1);
        CHECK(poly[0] == 1);
    }
    CHECK_THROWS_AS(primitive_poly_gf2(17), std::invalid_argument);
}

TEST_CASE("identity group orbits are singletons") {
    Field F(2);
    auto keys = enumerate_subspaces(F, 5, 2);
    REQUIRE(keys.size() == 155);
    GroupSpec g = identity_group(2, 5);
    OrbitTable t = compute_orbits(F, g.gens, keys);
    CHECK(t.count() == 155);
    for (size_t i = 0; i < t.count(); ++i) {
        CHECK(t.sizes[i] == 1);
        CHECK(t.reps[i] == keys[i]);
        CHECK(t.index.at(keys[i]) == i);
    }
}

TEST_CASE("singer orbits on 2-spaces of GF(2)^5") {
    Field F(2);
    auto keys = enumerate_subspaces(F, 5, 2);
    GroupSpec g = singer_group(F, 5);
    OrbitTable t = compute_orbits(F, g.gens, keys);
    CHECK(t.count() == 5);
    uint64_t total = 0;
    for (size_t i = 0; i < t.count(); ++i) {
        CHECK(t.sizes[i] == 31);
        total += t.sizes[i];
        // The representative is the orbit's minimal member.
        SubspaceKey cur = t.reps[i];
        for (int step = 0; step < 31; ++step) {
            cur = g.gens[0].image(F, cur);
            CHECK_FALSE(SubspaceKey::less(cur, t.reps[i]));
            CHECK(t.index.at(cur) == i);
        }
    }
    CHECK(total == 155);
}

TEST_CASE("prescribed group has 567 and 129 orbits") {
    Field F(2);
    GroupSpec g = parse_group(kG7);
    auto threes = compute_orbits(F, g.gens, enumerate_subspaces(F, 7, 3));
    auto twos = compute_orbits(F, g.gens, enumerate_subspaces(F, 7, 2));
    CHECK(threes.count() == 567);
    CHECK(twos.count() == 129);
    uint64_t t3 = 0, t2 = 0;
    for (auto s : threes.sizes) t3 += s;
    for (auto s : twos.sizes) t2 += s;
    CHECK(t3 == 11811);
    CHECK(t2 == 2667);
}

TEST_CASE("orbit computation rejects sets not closed under the action") {
    Field F(2);
    GroupSpec g = singer_group(F, 4);
    auto keys = enumerate_subspaces(F, 4, 2);
    keys.pop_back();
    CHECK_THROWS_AS(compute_orbits(F, g.gens, keys), Error);
}

TEST_CASE("from_rows validates shape and invertibility") {
    Field F(2);
    CHECK_THROWS_AS(GroupElement::from_rows(F, 3, {1, 0, 0, 0, 1, 0, 1, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GroupElement::from_rows(F, 3, {1, 0, 0, 0, 1}), std::invalid_argument);
    auto g = GroupElement::from_rows(F, 3, {0, 1, 0, 0, 0, 1, 1, 1, 0});
    CHECK(element_order(F, g) > 1);
}
