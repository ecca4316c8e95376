#include "subcode/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace subcode {

BigInt gaussian_binomial(unsigned v, unsigned k, unsigned q) {
    if (k > v) return 0;
    // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j]
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    std::vector<BigInt> qpow(k + 1);
    qpow[0] = 1;
    for (unsigned j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
    for (unsigned m = 1; m <= v; ++m)
        for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
    return row[k];
}

namespace {

uint64_t revbits(uint64_t x) {
    x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
    x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
    x = ((x & 0x0f0f0f0f0f0f0f0full) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0full);
    x = ((x & 0x00ff00ff00ff00ffull) << 8) | ((x >> 8) & 0x00ff00ff00ff00ffull);
    x = ((x & 0x0000ffff0000ffffull) << 16) | ((x >> 16) & 0x0000ffff0000ffffull);
    return (x << 32) | (x >> 32);
}

char digit_char(unsigned d) { return char(d < 10 ? '0' + d : 'a' + (d - 10)); }

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

unsigned rank2(std::vector<uint64_t> rows, unsigned v) {
    unsigned r = 0;
    for (unsigned c = 0; c < v && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

unsigned rank_digits(const Field& F, std::vector<uint8_t> m, unsigned nrows, unsigned v) {
    unsigned r = 0;
    for (unsigned c = 0; c < v && r < nrows; ++c) {
        unsigned sel = r;
        while (sel < nrows && m[size_t(sel) * v + c] == 0) ++sel;
        if (sel == nrows) continue;
        if (sel != r)
            for (unsigned j = 0; j < v; ++j) std::swap(m[size_t(r) * v + j], m[size_t(sel) * v + j]);
        uint8_t il = F.inv(m[size_t(r) * v + c]);
        if (il != 1)
            for (unsigned j = c; j < v; ++j) m[size_t(r) * v + j] = F.mul(m[size_t(r) * v + j], il);
        for (unsigned i = r + 1; i < nrows; ++i) {
            uint8_t f = m[size_t(i) * v + c];
            if (f == 0) continue;
            for (unsigned j = c; j < v; ++j)
                m[size_t(i) * v + j] = F.sub(m[size_t(i) * v + j], F.mul(f, m[size_t(r) * v + j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

unsigned matrix_rank(const Field& F, std::vector<uint8_t> rows, unsigned nrows, unsigned v) {
    return rank_digits(F, std::move(rows), nrows, v);
}

SubspaceKey SubspaceKey::from_words(unsigned v, std::vector<uint64_t> rows) {
    SubspaceKey k;
    k.v_ = uint16_t(v);
    k.q_ = 2;
    unsigned r = 0;
    for (unsigned c = 0; c < v && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        k.pivots_.push_back(uint16_t(c));
        ++r;
    }
    rows.resize(r);
    k.k_ = uint16_t(r);
    k.words_ = std::move(rows);
    return k;
}

SubspaceKey::SubspaceKey(const Field& F, unsigned v, const std::vector<uint8_t>& rows) {
    if (v == 0 || v > 4096) throw std::invalid_argument("ambient dimension out of range");
    if (F.q() == 2 && v > 64) throw std::invalid_argument("v > 64 unsupported for q = 2");
    if (rows.size() % v != 0) throw std::invalid_argument("generator list is not rows * v digits");
    for (uint8_t d : rows)
        if (d >= F.q()) throw std::invalid_argument("generator entry out of field range");
    v_ = uint16_t(v);
    q_ = uint16_t(F.q());
    canonicalize(F, rows, unsigned(rows.size() / v));
}

void SubspaceKey::canonicalize(const Field& F, std::vector<uint8_t> m, unsigned nrows) {
    const unsigned v = v_;
    unsigned r = 0;
    pivots_.clear();
    for (unsigned c = 0; c < v && r < nrows; ++c) {
        unsigned sel = r;
        while (sel < nrows && m[size_t(sel) * v + c] == 0) ++sel;
        if (sel == nrows) continue;
        if (sel != r)
            for (unsigned j = 0; j < v; ++j) std::swap(m[size_t(r) * v + j], m[size_t(sel) * v + j]);
        uint8_t il = F.inv(m[size_t(r) * v + c]);
        if (il != 1)
            for (unsigned j = c; j < v; ++j) m[size_t(r) * v + j] = F.mul(m[size_t(r) * v + j], il);
        for (unsigned i = 0; i < nrows; ++i) {
            if (i == r) continue;
            uint8_t f = m[size_t(i) * v + c];
            if (f == 0) continue;
            for (unsigned j = c; j < v; ++j)
                m[size_t(i) * v + j] = F.sub(m[size_t(i) * v + j], F.mul(f, m[size_t(r) * v + j]));
        }
        pivots_.push_back(uint16_t(c));
        ++r;
    }
    k_ = uint16_t(r);
    if (q_ == 2) {
        words_.assign(r, 0);
        for (unsigned i = 0; i < r; ++i) {
            uint64_t w = 0;
            for (unsigned j = 0; j < v; ++j)
                if (m[size_t(i) * v + j]) w |= uint64_t(1) << j;
            words_[i] = w;
        }
        digits_.clear();
    } else {
        digits_.assign(m.begin(), m.begin() + size_t(r) * v);
        words_.clear();
    }
}

uint8_t SubspaceKey::at(unsigned r, unsigned c) const {
    if (q_ == 2) return uint8_t((words_[r] >> c) & 1);
    return digits_[size_t(r) * v_ + c];
}

bool SubspaceKey::operator==(const SubspaceKey& o) const {
    return v_ == o.v_ && k_ == o.k_ && q_ == o.q_ && words_ == o.words_ && digits_ == o.digits_;
}

bool SubspaceKey::less(const SubspaceKey& a, const SubspaceKey& b) {
    if (a.v_ != b.v_) return a.v_ < b.v_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.q_ == 2) {
        for (unsigned r = 0; r < a.k_; ++r) {
            uint64_t x = revbits(a.words_[r]), y = revbits(b.words_[r]);
            if (x != y) return x < y;
        }
        return false;
    }
    return a.digits_ < b.digits_;
}

std::vector<uint8_t> SubspaceKey::dense() const {
    if (q_ != 2) return digits_;
    std::vector<uint8_t> out(size_t(k_) * v_);
    for (unsigned r = 0; r < k_; ++r)
        for (unsigned c = 0; c < v_; ++c) out[size_t(r) * v_ + c] = uint8_t((words_[r] >> c) & 1);
    return out;
}

std::string SubspaceKey::format() const {
    if (q_ > 36) throw Error("text form limited to q <= 36");
    std::string out = std::to_string(v_) + "," + std::to_string(k_) + "," + std::to_string(q_) + ":";
    for (unsigned r = 0; r < k_; ++r) {
        if (r) out.push_back('/');
        for (unsigned c = 0; c < v_; ++c) out.push_back(digit_char(at(r, c)));
    }
    return out;
}

SubspaceKey SubspaceKey::parse(const Field& F, const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad subspace literal '" + text + "': " + why);
    };
    size_t c1 = text.find(','), c2 = text.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    size_t colon = text.find(':');
    if (c1 == std::string::npos || c2 == std::string::npos || colon == std::string::npos ||
        !(c1 < c2 && c2 < colon))
        throw fail("expected 'v,k,q:rows'");
    unsigned v = 0, k = 0, q = 0;
    try {
        size_t pos = 0;
        v = unsigned(std::stoul(text.substr(0, c1), &pos));
        if (pos != c1) throw fail("bad v");
        k = unsigned(std::stoul(text.substr(c1 + 1, c2 - c1 - 1), &pos));
        if (pos != c2 - c1 - 1) throw fail("bad k");
        q = unsigned(std::stoul(text.substr(c2 + 1, colon - c2 - 1), &pos));
        if (pos != colon - c2 - 1) throw fail("bad q");
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw fail("bad header number");
    }
    if (q != F.q()) throw fail("field mismatch: literal has q=" + std::to_string(q));
    std::vector<uint8_t> rows;
    rows.reserve(size_t(k) * v);
    unsigned row_len = 0, nrows = (k == 0) ? 0 : 1;
    for (size_t i = colon + 1; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            if (row_len != v) throw fail("row has wrong length");
            row_len = 0;
            ++nrows;
            continue;
        }
        int d = digit_value(ch);
        if (d < 0 || unsigned(d) >= q) throw fail("bad digit");
        rows.push_back(uint8_t(d));
        ++row_len;
    }
    if (k == 0) {
        if (colon + 1 != text.size()) throw fail("dimension-0 literal must have no rows");
    } else if (row_len != v || nrows != k) {
        throw fail("expected " + std::to_string(k) + " rows of " + std::to_string(v) + " digits");
    }
    SubspaceKey key(F, v, rows);
    if (key.k() != k) throw fail("rows are dependent, rank " + std::to_string(key.k()));
    return key;
}

size_t SubspaceKey::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(uint64_t(v_) << 32 | uint64_t(k_) << 16 | q_);
    for (uint64_t w : words_) mix(w);
    for (size_t i = 0; i < digits_.size(); i += 8) {
        uint64_t w = 0;
        for (size_t j = i; j < std::min(i + 8, digits_.size()); ++j)
            w = w << 8 | digits_[j];
        mix(w);
    }
    return size_t(h);
}

unsigned join_dim(const Field& F, const SubspaceKey& a, const SubspaceKey& b) {
    if (a.v() != b.v() || a.q() != b.q()) throw std::invalid_argument("join of unlike ambients");
    const unsigned v = a.v();
    if (a.q() == 2) {
        std::vector<uint64_t> rows;
        rows.reserve(a.k() + b.k());
        for (unsigned r = 0; r < a.k(); ++r) rows.push_back(a.word(r));
        for (unsigned r = 0; r < b.k(); ++r) rows.push_back(b.word(r));
        return rank2(std::move(rows), v);
    }
    std::vector<uint8_t> m = a.dense();
    auto db = b.dense();
    m.insert(m.end(), db.begin(), db.end());
    return rank_digits(F, std::move(m), a.k() + b.k(), v);
}

unsigned subspace_distance(const Field& F, const SubspaceKey& a, const SubspaceKey& b) {
    return 2 * join_dim(F, a, b) - a.k() - b.k();
}

bool contains(const Field& F, const SubspaceKey& outer, const SubspaceKey& inner) {
    if (outer.v() != inner.v() || outer.q() != inner.q())
        throw std::invalid_argument("containment of unlike ambients");
    if (inner.k() > outer.k()) return false;
    if (outer.q() == 2) {
        for (unsigned r = 0; r < inner.k(); ++r) {
            uint64_t w = inner.word(r);
            for (unsigned i = 0; i < outer.k(); ++i)
                if ((w >> outer.pivot(i)) & 1) w ^= outer.word(i);
            if (w) return false;
        }
        return true;
    }
    const unsigned v = outer.v();
    std::vector<uint8_t> row(v);
    for (unsigned r = 0; r < inner.k(); ++r) {
        for (unsigned c = 0; c < v; ++c) row[c] = inner.at(r, c);
        for (unsigned i = 0; i < outer.k(); ++i) {
            uint8_t f = row[outer.pivot(i)];
            if (f == 0) continue;
            for (unsigned c = 0; c < v; ++c) row[c] = F.sub(row[c], F.mul(f, outer.at(i, c)));
        }
        for (unsigned c = 0; c < v; ++c)
            if (row[c]) return false;
    }
    return true;
}

std::vector<SubspaceKey> enumerate_subspaces(const Field& F, unsigned v, unsigned k,
                                             uint64_t cap) {
    if (v == 0 || v > 4096) throw std::invalid_argument("ambient dimension out of range");
    if (k > v) return {};
    BigInt count = gaussian_binomial(v, k, F.q());
    if (count > cap)
        throw CapExceeded("enumeration of " + count.str() + " subspaces exceeds cap " +
                          std::to_string(cap));
    std::vector<SubspaceKey> out;
    out.reserve(size_t(count));
    if (k == 0) {
        out.emplace_back(F, v, std::vector<uint8_t>{});
        return out;
    }
    const unsigned q = F.q();
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    std::vector<uint8_t> m(size_t(k) * v);
    for (;;) {
        // free positions: (row, col) with col > piv[row], col not a pivot
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        std::vector<bool> is_piv(v, false);
        for (unsigned c : piv) is_piv[c] = true;
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = piv[r] + 1; c < v; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);
        std::vector<uint8_t> vals(free_pos.size(), 0);
        for (;;) {
            std::fill(m.begin(), m.end(), 0);
            for (unsigned r = 0; r < k; ++r) m[size_t(r) * v + piv[r]] = 1;
            for (size_t i = 0; i < free_pos.size(); ++i)
                m[size_t(free_pos[i].first) * v + free_pos[i].second] = vals[i];
            out.emplace_back(F, v, m);
            // odometer increment
            size_t i = 0;
            while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
            if (i == vals.size()) break;
        }
        // next pivot combination in lex order
        int j = int(k) - 1;
        while (j >= 0 && piv[j] == v - k + j) --j;
        if (j < 0) break;
        ++piv[j];
        for (unsigned i = unsigned(j) + 1; i < k; ++i) piv[i] = piv[i - 1] + 1;
    }
    assert(BigInt(out.size()) == count);
    std::sort(out.begin(), out.end(), KeyLess{});
    return out;
}

std::vector<SubspaceKey> subspaces_through(const Field& F, const SubspaceKey& w, unsigned k,
                                           uint64_t cap) {
    const unsigned v = w.v(), t = w.k();
    if (k < t || k > v) return {};
    if (k == t) return {w};
    BigInt count = gaussian_binomial(v - t, k - t, F.q());
    if (count > cap)
        throw CapExceeded("enumeration of " + count.str() + " superspaces exceeds cap " +
                          std::to_string(cap));
    // Columns outside w's pivot set form a complement of w; k-spaces over w
    // correspond bijectively to (k-t)-subspaces of that complement.
    std::vector<unsigned> non_piv;
    std::vector<bool> is_piv(v, false);
    for (unsigned r = 0; r < t; ++r) is_piv[w.pivot(r)] = true;
    for (unsigned c = 0; c < v; ++c)
        if (!is_piv[c]) non_piv.push_back(c);
    auto quot = enumerate_subspaces(F, v - t, k - t, cap);
    std::vector<SubspaceKey> out;
    out.reserve(quot.size());
    std::vector<uint8_t> m(size_t(k) * v);
    auto wd = w.dense();
    for (const auto& u : quot) {
        std::fill(m.begin(), m.end(), 0);
        std::copy(wd.begin(), wd.end(), m.begin());
        for (unsigned r = 0; r < k - t; ++r)
            for (unsigned c = 0; c < v - t; ++c) m[size_t(t + r) * v + non_piv[c]] = u.at(r, c);
        out.emplace_back(F, v, m);
        assert(out.back().k() == k);
    }
    std::sort(out.begin(), out.end(), KeyLess{});
    return out;
}

}  // namespace subcode
