// Finite field GF(q), q = p^e <= 256, with full multiplication/inverse tables.
// Elements are 0..q-1 in the polynomial basis: the value sum c_i p^i stands
// for the coset of sum c_i x^i modulo the defining polynomial.
#pragma once
#include <cstdint>
#include <vector>

#include "subcode/errors.hpp"

namespace subcode {

bool is_prime(unsigned n);

// Returns {p, e} with n = p^e, or {0, 0} if n is not a prime power.
struct PrimePower {
    unsigned p = 0;
    unsigned e = 0;
};
PrimePower factor_prime_power(unsigned n);

class Field {
  public:
    // Builds GF(q) from a built-in irreducible modulus. Available for every
    // prime q <= 256 and prime powers up to 32 (4, 8, 9, 16, 25, 27, 32).
    explicit Field(unsigned q);

    // Builds GF(p^e) from an explicit modulus, given as coefficient list
    // c_0..c_e of a degree-e monic polynomial over GF(p). Irreducibility is
    // checked; throws std::invalid_argument otherwise.
    Field(unsigned p, unsigned e, const std::vector<uint8_t>& modulus);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned e() const { return e_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return sub_[idx(a, b)]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }

    // Throws std::domain_error on inv(0).
    uint8_t inv(uint8_t a) const;

    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    // Multiplicative order of a nonzero element.
    unsigned element_order(uint8_t a) const;

    // The defining polynomial as coefficients c_0..c_e (c_e = 1); empty for
    // prime fields.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

  private:
    void build_tables();
    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

    unsigned q_ = 0, p_ = 0, e_ = 0;
    std::vector<uint8_t> modulus_;  // c_0..c_e over GF(p); empty when e == 1
    std::vector<uint8_t> add_, sub_, mul_, neg_;
    std::vector<uint8_t> inv_;
};

}  // namespace subcode
