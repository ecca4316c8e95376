#include "subcode/field.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace subcode {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower factor_prime_power(unsigned n) {
    if (n < 2) return {};
    unsigned p = n;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return {};
    return {p, e};
}

namespace {

// Irreducible (in fact primitive) moduli for the built-in extension fields,
// coefficients c_0..c_e.
const std::map<unsigned, std::vector<uint8_t>>& builtin_moduli() {
    static const std::map<unsigned, std::vector<uint8_t>> table = {
        {4, {1, 1, 1}},           // x^2 + x + 1
        {8, {1, 1, 0, 1}},        // x^3 + x + 1
        {9, {1, 0, 1}},           // x^2 + 1
        {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1
        {25, {1, 1, 1}},          // x^2 + x + 1 over GF(5): disc 1-4 = -3 = 2, non-square mod 5
        {27, {1, 2, 0, 1}},       // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}}  // x^5 + x^2 + 1
    };
    return table;
}

// Polynomials over GF(p) as digit vectors c_0..c_d, trailing zeros trimmed.
using Poly = std::vector<uint8_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, unsigned p) {
    // m monic of degree e
    const size_t e = m.size() - 1;
    trim(f);
    while (f.size() > e) {
        uint8_t lead = f.back();
        size_t shift = f.size() - 1 - e;
        for (size_t i = 0; i <= e; ++i) {
            unsigned v = f[shift + i] + (p - (lead * m[i]) % p);
            f[shift + i] = uint8_t(v % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint8_t((prod[i + j] + a[i] * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, unsigned long long n, const Poly& m, unsigned p) {
    Poly r = {1};
    while (n) {
        if (n & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        n >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    auto inv_mod_p = [p](unsigned x) {
        for (unsigned y = 1; y < p; ++y)
            if ((x * y) % p == 1) return y;
        throw std::logic_error("inv_mod_p");
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, reduce a mod b
        unsigned il = inv_mod_p(b.back());
        for (auto& c : b) c = uint8_t((c * il) % p);
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f of degree e over GF(p) is irreducible iff x^(p^e) == x
// (mod f) and gcd(x^(p^(e/r)) - x, f) == 1 for every prime r | e.
bool poly_irreducible(const Poly& f, unsigned p) {
    const size_t e = f.size() - 1;
    if (e == 0) return false;
    if (f.back() != 1) return false;  // callers pass monic polynomials
    auto pow_p = [p](size_t k) {
        unsigned long long r = 1;
        while (k--) r *= p;
        return r;
    };
    Poly x = {0, 1};
    std::vector<unsigned> primes;
    {
        size_t m = e;
        for (unsigned r = 2; r <= m; ++r)
            if (m % r == 0) {
                primes.push_back(r);
                while (m % r == 0) m /= r;
            }
    }
    for (unsigned r : primes) {
        Poly g = poly_powmod(x, pow_p(e / r), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = uint8_t((g[1] + p - 1) % p);
        trim(g);
        Poly d = poly_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    Poly g = poly_powmod(x, pow_p(e), f, p);
    if (g.size() < 2) g.resize(2, 0);
    g[1] = uint8_t((g[1] + p - 1) % p);
    trim(g);
    return g.empty();
}

}  // namespace

Field::Field(unsigned q) {
    auto pp = factor_prime_power(q);
    if (pp.p == 0 || q > 256)
        throw std::invalid_argument("field order must be a prime power <= 256, got " +
                                    std::to_string(q));
    p_ = pp.p;
    e_ = pp.e;
    q_ = q;
    if (e_ > 1) {
        auto it = builtin_moduli().find(q);
        if (it == builtin_moduli().end())
            throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(q) +
                                        "); supply one explicitly");
        modulus_ = it->second;
    }
    build_tables();
}

Field::Field(unsigned p, unsigned e, const std::vector<uint8_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (q > 256) throw std::invalid_argument("field order must be <= 256");
    p_ = p;
    e_ = e;
    q_ = unsigned(q);
    if (e > 1) {
        if (modulus.size() != e + 1 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree e");
        for (uint8_t c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (!poly_irreducible(modulus, p))
            throw std::invalid_argument("modulus is reducible over GF(p)");
        modulus_ = modulus;
    }
    build_tables();
}

void Field::build_tables() {
    const unsigned q = q_;
    add_.resize(size_t(q) * q);
    sub_.resize(size_t(q) * q);
    mul_.resize(size_t(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    auto digits = [this](unsigned a) {
        std::vector<uint8_t> d(e_);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = uint8_t(a % p_);
            a /= p_;
        }
        return d;
    };
    auto value = [this](const Poly& d) {
        unsigned a = 0;
        for (size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
        return uint8_t(a);
    };

    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a);
        for (unsigned b = 0; b < q; ++b) {
            auto db = digits(b);
            Poly s(e_), t(e_);
            for (unsigned i = 0; i < e_; ++i) {
                s[i] = uint8_t((da[i] + db[i]) % p_);
                t[i] = uint8_t((da[i] + p_ - db[i]) % p_);
            }
            add_[idx(uint8_t(a), uint8_t(b))] = value(s);
            sub_[idx(uint8_t(a), uint8_t(b))] = value(t);
            if (e_ == 1) {
                mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t((a * b) % p_);
            } else {
                Poly pa(da.begin(), da.end()), pb(db.begin(), db.end());
                trim(pa);
                trim(pb);
                Poly prod = poly_mulmod(pa, pb, modulus_, p_);
                prod.resize(e_, 0);
                mul_[idx(uint8_t(a), uint8_t(b))] = value(prod);
            }
        }
        neg_[a] = sub_[idx(0, uint8_t(a))];
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) {
                inv_[a] = uint8_t(b);
                break;
            }
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

unsigned Field::element_order(uint8_t a) const {
    if (a == 0) throw std::domain_error("order of zero");
    unsigned n = 1;
    uint8_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

}  // namespace subcode
