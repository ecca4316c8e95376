#include "subcode/group.hpp"

#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "subcode/sha256.hpp"

namespace subcode {

namespace {

void build_word_rows(GroupElement& g, unsigned q) {
    if (q != 2) return;
    g.rows2.assign(g.v, 0);
    for (unsigned i = 0; i < g.v; ++i) {
        uint64_t w = 0;
        for (unsigned j = 0; j < g.v; ++j)
            if (g.a[size_t(i) * g.v + j]) w |= uint64_t(1) << j;
        g.rows2[i] = w;
    }
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t n, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (n) {
        if (n & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        n >>= 1;
    }
    return r;
}

bool miller_rabin(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Distinct prime factors; throws if a cofactor cannot be certified prime.
std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p <= 1u << 20 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) {
        if (!miller_rabin(n)) throw Error("cannot factor group exponent " + std::to_string(n));
        out.push_back(n);
    }
    return out;
}

GroupElement power(const Field& F, GroupElement base, uint64_t n) {
    GroupElement r = GroupElement::identity(F, base.v);
    while (n) {
        if (n & 1) r = multiply(F, r, base);
        base = multiply(F, base, base);
        n >>= 1;
    }
    return r;
}

}  // namespace

GroupElement GroupElement::identity(const Field& F, unsigned v) {
    GroupElement g;
    g.v = v;
    g.a.assign(size_t(v) * v, 0);
    for (unsigned i = 0; i < v; ++i) g.a[size_t(i) * v + i] = 1;
    build_word_rows(g, F.q());
    return g;
}

GroupElement GroupElement::from_rows(const Field& F, unsigned v, std::vector<uint8_t> rows) {
    if (v == 0 || rows.size() != size_t(v) * v)
        throw std::invalid_argument("group element needs v*v entries");
    for (uint8_t d : rows)
        if (d >= F.q()) throw std::invalid_argument("matrix entry out of field range");
    if (matrix_rank(F, rows, v, v) != v) throw std::invalid_argument("matrix is singular");
    GroupElement g;
    g.v = v;
    g.a = std::move(rows);
    build_word_rows(g, F.q());
    return g;
}

SubspaceKey GroupElement::image(const Field& F, const SubspaceKey& s) const {
    if (s.v() != v) throw std::invalid_argument("dimension mismatch in group action");
    if (s.q() == 2) {
        std::vector<uint64_t> out(s.k());
        for (unsigned r = 0; r < s.k(); ++r) {
            uint64_t x = s.word(r), y = 0;
            while (x) {
                y ^= rows2[unsigned(std::countr_zero(x))];
                x &= x - 1;
            }
            out[r] = y;
        }
        return SubspaceKey::from_words(v, std::move(out));
    }
    std::vector<uint8_t> m(size_t(s.k()) * v, 0);
    for (unsigned r = 0; r < s.k(); ++r)
        for (unsigned c = 0; c < v; ++c) {
            uint8_t x = s.at(r, c);
            if (x == 0) continue;
            for (unsigned j = 0; j < v; ++j)
                m[size_t(r) * v + j] = F.add(m[size_t(r) * v + j], F.mul(x, at(c, j)));
        }
    return SubspaceKey(F, v, m);
}

GroupElement multiply(const Field& F, const GroupElement& x, const GroupElement& y) {
    if (x.v != y.v) throw std::invalid_argument("dimension mismatch in group multiply");
    const unsigned v = x.v;
    GroupElement g;
    g.v = v;
    g.a.assign(size_t(v) * v, 0);
    for (unsigned i = 0; i < v; ++i)
        for (unsigned k = 0; k < v; ++k) {
            uint8_t f = x.at(i, k);
            if (f == 0) continue;
            for (unsigned j = 0; j < v; ++j)
                g.a[size_t(i) * v + j] = F.add(g.a[size_t(i) * v + j], F.mul(f, y.at(k, j)));
        }
    build_word_rows(g, F.q());
    return g;
}

uint64_t element_order(const Field& F, const GroupElement& g, uint64_t cap) {
    GroupElement id = GroupElement::identity(F, g.v);
    GroupElement x = g;
    uint64_t n = 1;
    while (!(x == id)) {
        x = multiply(F, x, g);
        if (++n > cap) throw CapExceeded("element order exceeds cap");
    }
    return n;
}

GroupSpec identity_group(unsigned q, unsigned v) {
    GroupSpec g;
    g.q = q;
    g.v = v;
    g.name = "identity";
    g.sha256 = sha256_hex(format_group(g));
    return g;
}

const std::vector<uint8_t>& primitive_poly_gf2(unsigned v) {
    static const std::vector<std::vector<uint8_t>> table = {
        {},                                                  // v = 0 unused
        {1, 1},                                              // x + 1
        {1, 1, 1},                                           // x^2 + x + 1
        {1, 1, 0, 1},                                        // x^3 + x + 1
        {1, 1, 0, 0, 1},                                     // x^4 + x + 1
        {1, 0, 1, 0, 0, 1},                                  // x^5 + x^2 + 1
        {1, 1, 0, 0, 0, 0, 1},                               // x^6 + x + 1
        {1, 1, 0, 0, 0, 0, 0, 1},                            // x^7 + x + 1
        {1, 0, 1, 1, 1, 0, 0, 0, 1},                         // x^8 + x^4 + x^3 + x^2 + 1
        {1, 0, 0, 0, 1, 0, 0, 0, 0, 1},                      // x^9 + x^4 + 1
        {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},                   // x^10 + x^3 + 1
        {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},                // x^11 + x^2 + 1
        {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1},             // x^12 + x^6 + x^4 + x + 1
        {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},          // x^13 + x^4 + x^3 + x + 1
        {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},       // x^14 + x^10 + x^6 + x + 1
        {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},    // x^15 + x + 1
        {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}  // x^16 + x^12 + x^3 + x + 1
    };
    if (v < 1 || v >= table.size())
        throw std::invalid_argument("no built-in primitive polynomial for degree " +
                                    std::to_string(v));
    return table[v];
}

GroupSpec singer_group(const Field& F, unsigned v, std::vector<uint8_t> poly) {
    const unsigned q = F.q();
    if (poly.empty()) {
        if (q != 2)
            throw std::invalid_argument("built-in primitive polynomials cover q = 2 only");
        poly = primitive_poly_gf2(v);
    }
    if (poly.size() != size_t(v) + 1 || poly.back() != 1)
        throw std::invalid_argument("polynomial must be monic of degree v");
    for (uint8_t c : poly)
        if (c >= q) throw std::invalid_argument("polynomial coefficient out of field range");
    if (poly[0] == 0) throw std::invalid_argument("polynomial must have nonzero constant term");

    // x^v = -(c_0 + c_1 x + ... + c_{v-1} x^{v-1}) drives the companion matrix.
    std::vector<uint8_t> m(size_t(v) * v, 0);
    for (unsigned i = 0; i + 1 < v; ++i) m[size_t(i) * v + i + 1] = 1;
    for (unsigned j = 0; j < v; ++j) m[size_t(v - 1) * v + j] = F.neg(poly[j]);
    GroupElement A = GroupElement::from_rows(F, v, std::move(m));

    uint64_t N = 1;
    for (unsigned i = 0; i < v; ++i) {
        if (N > (uint64_t(1) << 62) / q) throw Error("q^v - 1 does not fit a 64-bit exponent");
        N *= q;
    }
    N -= 1;
    GroupElement id = GroupElement::identity(F, v);
    if (!(power(F, A, N) == id)) throw std::invalid_argument("polynomial is not primitive");
    for (uint64_t p : prime_factors(N))
        if (power(F, A, N / p) == id) throw std::invalid_argument("polynomial is not primitive");

    GroupSpec g;
    g.q = q;
    g.v = v;
    g.name = "singer";
    g.gens.push_back(std::move(A));
    g.sha256 = sha256_hex(format_group(g));
    return g;
}

std::string format_group(const GroupSpec& g) {
    std::string out = "q " + std::to_string(g.q) + " v " + std::to_string(g.v) + "\n";
    for (const auto& e : g.gens) {
        out += "gen\n";
        for (unsigned i = 0; i < g.v; ++i) {
            for (unsigned j = 0; j < g.v; ++j) {
                uint8_t d = e.at(i, j);
                out.push_back(char(d < 10 ? '0' + d : 'a' + (d - 10)));
            }
            out.push_back('\n');
        }
    }
    return out;
}

GroupSpec parse_group(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            line = line.substr(a, b - a + 1);
            if (line[0] == '#') continue;
            return true;
        }
        if (required) throw ParseError("group file: unexpected end of input");
        return false;
    };
    if (!next_line(true)) {}
    unsigned q = 0, v = 0;
    {
        std::istringstream h(line);
        std::string kq, kv;
        if (!(h >> kq >> q >> kv >> v) || kq != "q" || kv != "v")
            throw ParseError("group file: header must be 'q <q> v <v>', got '" + line + "'");
        std::string rest;
        if (h >> rest) throw ParseError("group file: trailing tokens in header");
    }
    if (factor_prime_power(q).p == 0 || q > 256)
        throw ParseError("group file: q must be a prime power <= 256");
    if (v == 0 || v > 64) throw ParseError("group file: v out of range");
    Field F(q);

    GroupSpec g;
    g.q = q;
    g.v = v;
    g.name = name.empty() ? "file" : name;
    while (next_line(false)) {
        if (line != "gen") throw ParseError("group file: expected 'gen', got '" + line + "'");
        std::vector<uint8_t> rows;
        rows.reserve(size_t(v) * v);
        for (unsigned i = 0; i < v; ++i) {
            if (!next_line(false)) throw ParseError("group file: truncated generator");
            if (line.size() != v)
                throw ParseError("group file: generator row must have v digits, got '" + line +
                                 "'");
            for (char ch : line) {
                int d = (ch >= '0' && ch <= '9')   ? ch - '0'
                        : (ch >= 'a' && ch <= 'z') ? ch - 'a' + 10
                                                   : -1;
                if (d < 0 || unsigned(d) >= q)
                    throw ParseError("group file: bad digit in generator row '" + line + "'");
                rows.push_back(uint8_t(d));
            }
        }
        try {
            g.gens.push_back(GroupElement::from_rows(F, v, std::move(rows)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("group file: ") + e.what());
        }
    }
    g.sha256 = sha256_hex(text);
    return g;
}

OrbitTable compute_orbits(const Field& F, const std::vector<GroupElement>& gens,
                          const std::vector<SubspaceKey>& keys) {
    OrbitTable t;
    t.index.reserve(keys.size() * 2);
    std::unordered_map<SubspaceKey, uint32_t, KeyHash> pos;
    pos.reserve(keys.size() * 2);
    for (size_t i = 0; i < keys.size(); ++i)
        if (!pos.emplace(keys[i], uint32_t(i)).second)
            throw std::invalid_argument("duplicate key in orbit computation");
    std::vector<char> seen(keys.size(), 0);
    std::deque<uint32_t> queue;
    for (size_t start = 0; start < keys.size(); ++start) {
        if (seen[start]) continue;
        uint32_t orbit = uint32_t(t.reps.size());
        const SubspaceKey* rep = &keys[start];
        uint64_t size = 0;
        seen[start] = 1;
        queue.push_back(uint32_t(start));
        while (!queue.empty()) {
            uint32_t cur = queue.front();
            queue.pop_front();
            ++size;
            t.index.emplace(keys[cur], orbit);
            if (SubspaceKey::less(keys[cur], *rep)) rep = &keys[cur];
            for (const auto& g : gens) {
                SubspaceKey img = g.image(F, keys[cur]);
                auto it = pos.find(img);
                if (it == pos.end()) throw Error("group action leaves the key set");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    queue.push_back(it->second);
                }
            }
        }
        t.reps.push_back(*rep);
        t.sizes.push_back(size);
    }
    return t;
}

}  // namespace subcode
