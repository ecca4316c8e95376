#include <doctest.h>

#include <stdexcept>

#include "subcode/field.hpp"

using namespace subcode;

TEST_CASE("prime detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(251));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("prime power factoring") {
    auto pp = factor_prime_power(8);
    CHECK(pp.p == 2);
    CHECK(pp.e == 3);
    pp = factor_prime_power(27);
    CHECK(pp.p == 3);
    CHECK(pp.e == 3);
    pp = factor_prime_power(13);
    CHECK(pp.p == 13);
    CHECK(pp.e == 1);
    CHECK(factor_prime_power(12).p == 0);
    CHECK(factor_prime_power(1).p == 0);
}

TEST_CASE("field axioms hold exhaustively on every built-in field") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u, 32u}) {
        CAPTURE(q);
        Field F(q);
        CHECK(F.q() == q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(F.add(uint8_t(a), 0) == a);
            CHECK(F.mul(uint8_t(a), 1) == a);
            CHECK(F.add(uint8_t(a), F.neg(uint8_t(a))) == 0);
            if (a) CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(F.add(uint8_t(a), uint8_t(b)) == F.add(uint8_t(b), uint8_t(a)));
                CHECK(F.mul(uint8_t(a), uint8_t(b)) == F.mul(uint8_t(b), uint8_t(a)));
                CHECK(F.sub(uint8_t(a), uint8_t(b)) == F.add(uint8_t(a), F.neg(uint8_t(b))));
                if (b) CHECK(F.div(F.mul(uint8_t(a), uint8_t(b)), uint8_t(b)) == a);
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                          F.add(uint8_t(a), F.add(uint8_t(b), uint8_t(c))));
                    CHECK(F.mul(F.mul(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                          F.mul(uint8_t(a), F.mul(uint8_t(b), uint8_t(c))));
                    CHECK(F.mul(uint8_t(a), F.add(uint8_t(b), uint8_t(c))) ==
                          F.add(F.mul(uint8_t(a), uint8_t(b)), F.mul(uint8_t(a), uint8_t(c))));
                }
            }
        }
    }
}

TEST_CASE("GF(4) multiplies in the polynomial basis") {
    Field F(4);
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.add(2, 3) == 1);
    CHECK(F.inv(2) == 3);
}

TEST_CASE("element orders divide q-1 and a primitive element exists") {
    for (unsigned q : {3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 32u}) {
        CAPTURE(q);
        Field F(q);
        unsigned best = 0;
        for (unsigned a = 1; a < q; ++a) {
            unsigned o = F.element_order(uint8_t(a));
            CHECK((q - 1) % o == 0);
            best = std::max(best, o);
        }
        CHECK(best == q - 1);
    }
}

TEST_CASE("explicit modulus builds GF(49)") {
    Field F(7, 2, {1, 0, 1});
    CHECK(F.q() == 49);
    CHECK(F.p() == 7);
    CHECK(F.e() == 2);
    for (unsigned a = 1; a < 49; ++a) {
        CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
        CHECK((48 % F.element_order(uint8_t(a))) == 0);
    }
    // x * x = x^2 = -1 = 6 in the packed basis: x is 7, 6 is 6.
    CHECK(F.mul(7, 7) == 6);
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field(3, 2, {2, 0, 1}), std::invalid_argument);  // x^2+2 has root 1
    CHECK_THROWS_AS(Field(2, 3, {1, 1, 1, 1}), std::invalid_argument);  // root 1
}

TEST_CASE("alternative irreducible moduli are accepted") {
    Field A(3, 2, {1, 0, 1});  // x^2+1: -1 is not a square mod 3
    CHECK(A.q() == 9);
    Field B(3, 2, {2, 2, 1});  // x^2+2x+2
    CHECK(B.q() == 9);
    for (unsigned a = 1; a < 9; ++a) {
        CHECK(A.mul(uint8_t(a), A.inv(uint8_t(a))) == 1);
        CHECK(B.mul(uint8_t(a), B.inv(uint8_t(a))) == 1);
    }
}

TEST_CASE("orders not prime powers or without built-in moduli are rejected") {
    CHECK_THROWS_AS(Field(12), std::invalid_argument);
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field(49), std::invalid_argument);
    CHECK_THROWS_AS(Field(64), std::invalid_argument);
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
}

TEST_CASE("inv(0) is a domain error") {
    Field F(5);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}
