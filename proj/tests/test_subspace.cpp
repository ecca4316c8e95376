#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "subcode/subspace.hpp"

using namespace subcode;

namespace {

// Independent oracle: product formula evaluated with exact division.
BigInt gauss_product(unsigned v, unsigned k, unsigned q) {
    if (k > v) return 0;
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(BigInt(q), v - i) - 1;
        den *= boost::multiprecision::pow(BigInt(q), i + 1) - 1;
    }
    return num / den;
}

SubspaceKey random_subspace(const Field& F, unsigned v, unsigned k, std::mt19937_64& rng) {
    for (;;) {
        std::vector<uint8_t> rows(size_t(k) * v);
        for (auto& x : rows) x = uint8_t(rng() % F.q());
        if (matrix_rank(F, rows, k, v) == k) return SubspaceKey(F, v, rows);
    }
}

// Every vector of the subspace, as the full coefficient sweep.
std::set<std::vector<uint8_t>> span_vectors(const Field& F, const SubspaceKey& s) {
    std::set<std::vector<uint8_t>> out;
    const unsigned k = s.k(), v = s.v(), q = F.q();
    std::vector<uint8_t> coef(k, 0);
    for (;;) {
        std::vector<uint8_t> vec(v, 0);
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = 0; c < v; ++c)
                vec[c] = F.add(vec[c], F.mul(coef[r], s.at(r, c)));
        out.insert(vec);
        unsigned r = 0;
        while (r < k && coef[r] == q - 1) coef[r++] = 0;
        if (r == k) break;
        ++coef[r];
    }
    return out;
}

unsigned log_q(size_t n, unsigned q) {
    unsigned d = 0;
    size_t m = 1;
    while (m < n) m *= q, ++d;
    REQUIRE(m == n);
    return d;
}

unsigned oracle_distance(const Field& F, const SubspaceKey& a, const SubspaceKey& b) {
    auto va = span_vectors(F, a), vb = span_vectors(F, b);
    std::vector<std::vector<uint8_t>> meet;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(meet));
    unsigned dim_meet = log_q(meet.size(), F.q());
    return a.k() + b.k() - 2 * dim_meet;
}

}  // namespace

TEST_CASE("gaussian binomials match the product formula") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned v = 0; v <= 10; ++v)
            for (unsigned k = 0; k <= v + 1; ++k) {
                CAPTURE(q);
                CAPTURE(v);
                CAPTURE(k);
                CHECK(gaussian_binomial(v, k, q) == gauss_product(v, k, q));
            }
}

TEST_CASE("gaussian binomial pinned values") {
    CHECK(gaussian_binomial(7, 3, 2) == 11811);
    CHECK(gaussian_binomial(7, 2, 2) == 2667);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(6, 2, 2) == 651);
    CHECK(gaussian_binomial(5, 2, 2) == 155);
    CHECK(gaussian_binomial(5, 1, 2) == 31);
    CHECK(gaussian_binomial(13, 3, 2) == BigInt("3269560515"));
}

TEST_CASE("gaussian binomial symmetry and edges") {
    for (unsigned v = 0; v <= 9; ++v)
        for (unsigned k = 0; k <= v; ++k)
            CHECK(gaussian_binomial(v, k, 3) == gaussian_binomial(v, v - k, 3));
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(5, 6, 2) == 0);
}

TEST_CASE("canonical key is invariant under change of basis") {
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 4u}) {
        Field F(q);
        for (int trial = 0; trial < 100; ++trial) {
            unsigned v = 3 + unsigned(rng() % 4);
            unsigned k = 1 + unsigned(rng() % v);
            SubspaceKey s = random_subspace(F, v, k, rng);
            // Left-multiply the basis by a random invertible k x k matrix.
            std::vector<uint8_t> t(size_t(k) * k);
            do {
                for (auto& x : t) x = uint8_t(rng() % q);
            } while (matrix_rank(F, t, k, k) != k);
            std::vector<uint8_t> rows(size_t(k) * v, 0);
            for (unsigned r = 0; r < k; ++r)
                for (unsigned c = 0; c < v; ++c) {
                    uint8_t acc = 0;
                    for (unsigned m = 0; m < k; ++m)
                        acc = F.add(acc, F.mul(t[size_t(r) * k + m], s.at(m, c)));
                    rows[size_t(r) * v + c] = acc;
                }
            SubspaceKey s2(F, v, rows);
            CHECK(s == s2);
            CHECK(s.hash() == s2.hash());
        }
    }
}

TEST_CASE("canonical basis is reduced row echelon") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u}) {
        Field F(q);
        for (int trial = 0; trial < 50; ++trial) {
            unsigned v = 4 + unsigned(rng() % 3);
            unsigned k = 1 + unsigned(rng() % 4);
            if (k > v) k = v;
            SubspaceKey s = random_subspace(F, v, k, rng);
            for (unsigned r = 0; r < k; ++r) {
                if (r) CHECK(s.pivot(r) > s.pivot(r - 1));
                CHECK(s.at(r, s.pivot(r)) == 1);
                for (unsigned c = 0; c < s.pivot(r); ++c) CHECK(s.at(r, c) == 0);
                for (unsigned r2 = 0; r2 < k; ++r2)
                    if (r2 != r) CHECK(s.at(r2, s.pivot(r)) == 0);
            }
        }
    }
}

TEST_CASE("rank handles dependent generators") {
    Field F(2);
    std::vector<uint8_t> rows = {1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0};  // row3 = row1 + row2
    SubspaceKey s(F, 4, rows);
    CHECK(s.k() == 2);
    CHECK(matrix_rank(F, rows, 3, 4) == 2);
}

TEST_CASE("enumeration matches counts and ordering") {
    struct Case {
        unsigned q, v;
    } cases[] = {{2, 5}, {2, 6}, {3, 4}, {4, 3}};
    for (auto [q, v] : cases) {
        Field F(q);
        for (unsigned k = 0; k <= v; ++k) {
            CAPTURE(q);
            CAPTURE(v);
            CAPTURE(k);
            auto all = enumerate_subspaces(F, v, k);
            CHECK(BigInt(all.size()) == gauss_product(v, k, q));
            for (size_t i = 1; i < all.size(); ++i) CHECK(SubspaceKey::less(all[i - 1], all[i]));
        }
    }
}

TEST_CASE("enumeration cap throws") {
    Field F(2);
    CHECK_THROWS_AS(enumerate_subspaces(F, 9, 3, 1000), CapExceeded);
}

TEST_CASE("distance equals the exhaustive vector computation") {
    std::mt19937_64 rng(2026);
    int done = 0;
    while (done < 700) {
        Field F(2);
        unsigned v = 3 + unsigned(rng() % 3);
        unsigned ka = 1 + unsigned(rng() % (v - 1)), kb = 1 + unsigned(rng() % (v - 1));
        auto a = random_subspace(F, v, ka, rng), b = random_subspace(F, v, kb, rng);
        CHECK(subspace_distance(F, a, b) == oracle_distance(F, a, b));
        CHECK(subspace_distance(F, a, b) == subspace_distance(F, b, a));
        CHECK(subspace_distance(F, a, a) == 0);
        ++done;
    }
    while (done < 1000) {
        Field F(3);
        unsigned v = 3 + unsigned(rng() % 2);
        unsigned ka = 1 + unsigned(rng() % 2), kb = 1 + unsigned(rng() % 2);
        auto a = random_subspace(F, v, ka, rng), b = random_subspace(F, v, kb, rng);
        CHECK(subspace_distance(F, a, b) == oracle_distance(F, a, b));
        ++done;
    }
}

TEST_CASE("containment agrees with join dimension") {
    std::mt19937_64 rng(5);
    for (unsigned q : {2u, 3u}) {
        Field F(q);
        for (int trial = 0; trial < 200; ++trial) {
            unsigned v = 4 + unsigned(rng() % 2);
            unsigned ki = 1 + unsigned(rng() % 2);
            unsigned ko = ki + unsigned(rng() % (v - ki));
            auto inner = random_subspace(F, v, ki, rng);
            auto outer = random_subspace(F, v, ko, rng);
            bool c = contains(F, outer, inner);
            CHECK(c == (join_dim(F, outer, inner) == outer.k()));
            CHECK(c == (subspace_distance(F, outer, inner) == outer.k() - inner.k()));
        }
    }
}

TEST_CASE("subspaces through a fixed subspace") {
    for (unsigned q : {2u, 3u}) {
        Field F(q);
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            unsigned v = 4 + unsigned(rng() % 2);
            unsigned t = 1 + unsigned(rng() % 2);
            unsigned k = t + unsigned(rng() % (v - t));
            auto w = random_subspace(F, v, t, rng);
            auto through = subspaces_through(F, w, k);
            CHECK(BigInt(through.size()) == gauss_product(v - t, k - t, q));
            for (size_t i = 0; i < through.size(); ++i) {
                CHECK(through[i].k() == k);
                CHECK(contains(F, through[i], w));
                if (i) CHECK(SubspaceKey::less(through[i - 1], through[i]));
            }
            // Cross-check against the brute filter.
            auto all = enumerate_subspaces(F, v, k);
            size_t brute = 0;
            for (const auto& s : all) brute += contains(F, s, w) ? 1 : 0;
            CHECK(brute == through.size());
        }
    }
}

TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 3u, 9u, 27u}) {
        Field F(q);
        for (int trial = 0; trial < 50; ++trial) {
            unsigned v = 2 + unsigned(rng() % 5);
            unsigned k = 1 + unsigned(rng() % v);
            auto s = random_subspace(F, v, k, rng);
            auto r = SubspaceKey::parse(F, s.format());
            CHECK(s == r);
        }
    }
    Field F(2);
    CHECK(SubspaceKey::parse(F, "4,2,2:1001/0110").format() == "4,2,2:1001/0110");
    CHECK_THROWS_AS(SubspaceKey::parse(F, "4,2,2:1001"), ParseError);
    CHECK_THROWS_AS(SubspaceKey::parse(F, "4,2,2:1021/0110"), ParseError);
    CHECK_THROWS_AS(SubspaceKey::parse(F, "nonsense"), ParseError);
    CHECK_THROWS_AS(SubspaceKey::parse(F, "4,2,3:1001/0110"), ParseError);
}

TEST_CASE("distance satisfies the triangle inequality") {
    Field F(2);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned v = 5;
        auto a = random_subspace(F, v, 1 + unsigned(rng() % 4), rng);
        auto b = random_subspace(F, v, 1 + unsigned(rng() % 4), rng);
        auto c = random_subspace(F, v, 1 + unsigned(rng() % 4), rng);
        CHECK(subspace_distance(F, a, c) <=
              subspace_distance(F, a, b) + subspace_distance(F, b, c));
    }
}
