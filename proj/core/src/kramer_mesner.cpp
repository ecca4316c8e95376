#include "subcode/kramer_mesner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace subcode {

uint32_t CondensedSystem::at(uint32_t i, uint32_t j) const {
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, uint32_t c) { return e.first < c; });
    return (it != row.end() && it->first == j) ? it->second : 0;
}

uint64_t CondensedSystem::nonzeros() const {
    uint64_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
}

namespace {

void validate_kt(unsigned v, unsigned k, unsigned t) {
    if (!(t >= 1 && t <= k && k <= v))
        throw std::invalid_argument("need 1 <= t <= k <= v");
}

std::vector<uint32_t> iota_u32(size_t n) {
    std::vector<uint32_t> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = uint32_t(i);
    return v;
}

}  // namespace

CondensedSystem build_full_system(const Field& F, unsigned v, unsigned k, unsigned t,
                                  SystemMode mode, uint64_t cap) {
    validate_kt(v, k, t);
    auto tkeys = enumerate_subspaces(F, v, t, cap);
    auto kkeys = enumerate_subspaces(F, v, k, cap);

    auto trivial = [](std::vector<SubspaceKey> keys) {
        auto tab = std::make_shared<OrbitTable>();
        tab->sizes.assign(keys.size(), 1);
        tab->index.reserve(keys.size() * 2);
        for (size_t i = 0; i < keys.size(); ++i) tab->index.emplace(keys[i], uint32_t(i));
        tab->reps = std::move(keys);
        return tab;
    };

    CondensedSystem s;
    s.params = {F.q(), v, k, t};
    s.mode = mode;
    s.col_weights.assign(kkeys.size(), 1);
    s.rows.resize(tkeys.size());
    for (size_t i = 0; i < tkeys.size(); ++i) {
        auto through = subspaces_through(F, tkeys[i], k, cap);
        auto& row = s.rows[i];
        row.reserve(through.size());
        for (const auto& sup : through) {
            auto it = std::lower_bound(kkeys.begin(), kkeys.end(), sup, KeyLess{});
            if (it == kkeys.end() || !(*it == sup))
                throw Error("superspace missing from enumeration");
            row.emplace_back(uint32_t(it - kkeys.begin()), 1);
        }
        std::sort(row.begin(), row.end());
    }
    s.col_origin = iota_u32(kkeys.size());
    s.row_origin = iota_u32(tkeys.size());
    s.row_orbits = trivial(std::move(tkeys));
    s.col_orbits = trivial(std::move(kkeys));
    return s;
}

CondensedSystem condense(const Field& F, const GroupSpec& g, unsigned k, unsigned t,
                         SystemMode mode, uint64_t cap) {
    if (g.q != F.q()) throw std::invalid_argument("group and field disagree on q");
    const unsigned v = g.v;
    validate_kt(v, k, t);
    auto tkeys = enumerate_subspaces(F, v, t, cap);
    auto kkeys = enumerate_subspaces(F, v, k, cap);
    auto row_orbits = std::make_shared<OrbitTable>(compute_orbits(F, g.gens, tkeys));
    auto col_orbits = std::make_shared<OrbitTable>(compute_orbits(F, g.gens, kkeys));

    CondensedSystem s;
    s.params = {F.q(), v, k, t};
    s.mode = mode;
    s.col_weights = col_orbits->sizes;
    s.rows.resize(row_orbits->count());
    std::vector<uint32_t> acc(col_orbits->count(), 0);
    std::vector<uint32_t> touched;
    for (size_t i = 0; i < row_orbits->count(); ++i) {
        auto through = subspaces_through(F, row_orbits->reps[i], k, cap);
        for (const auto& sup : through) {
            uint32_t j = col_orbits->index.at(sup);
            if (acc[j]++ == 0) touched.push_back(j);
        }
        std::sort(touched.begin(), touched.end());
        auto& row = s.rows[i];
        row.reserve(touched.size());
        for (uint32_t j : touched) {
            row.emplace_back(j, acc[j]);
            acc[j] = 0;
        }
        touched.clear();
    }
    s.col_origin = iota_u32(col_orbits->count());
    s.row_origin = iota_u32(row_orbits->count());
    s.row_orbits = std::move(row_orbits);
    s.col_orbits = std::move(col_orbits);
    return s;
}

CondensedSystem reduce(const CondensedSystem& s, ReductionLog* log) {
    const size_t nc = s.n_cols(), nr = s.n_rows();
    std::vector<char> col_dead(nc, 0);
    for (const auto& row : s.rows)
        for (const auto& [j, cnt] : row)
            if (cnt >= 2) col_dead[j] = 1;

    std::vector<uint32_t> col_new(nc, UINT32_MAX);
    ReductionLog local;
    ReductionLog& L = log ? *log : local;
    L = ReductionLog{};
    for (size_t j = 0; j < nc; ++j) {
        if (col_dead[j]) {
            L.dropped_cols.push_back(uint32_t(j));
        } else {
            col_new[j] = uint32_t(L.col_map.size());
            L.col_map.push_back(uint32_t(j));
        }
    }

    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> kept_rows;
    std::unordered_map<std::string, uint32_t> seen;  // row content -> input row ordinal
    seen.reserve(nr * 2);
    for (size_t i = 0; i < nr; ++i) {
        std::vector<std::pair<uint32_t, uint32_t>> row;
        row.reserve(s.rows[i].size());
        for (const auto& [j, cnt] : s.rows[i])
            if (!col_dead[j]) row.emplace_back(col_new[j], cnt);
        if (row.empty()) {
            L.dropped_zero_rows.push_back(uint32_t(i));
            continue;
        }
        std::string sig;
        sig.reserve(row.size() * 8);
        for (const auto& [j, cnt] : row) {
            sig.append(reinterpret_cast<const char*>(&j), 4);
            sig.append(reinterpret_cast<const char*>(&cnt), 4);
        }
        auto [it, fresh] = seen.emplace(std::move(sig), uint32_t(i));
        if (!fresh) {
            L.dropped_dup_rows.emplace_back(uint32_t(i), it->second);
            continue;
        }
        L.row_map.push_back(uint32_t(i));
        kept_rows.push_back(std::move(row));
    }

    CondensedSystem out;
    out.params = s.params;
    out.mode = s.mode;
    out.rows = std::move(kept_rows);
    out.col_weights.reserve(L.col_map.size());
    out.col_origin.reserve(L.col_map.size());
    for (uint32_t j : L.col_map) {
        out.col_weights.push_back(s.col_weights[j]);
        out.col_origin.push_back(s.col_origin[j]);
    }
    out.row_origin.reserve(L.row_map.size());
    for (uint32_t i : L.row_map) out.row_origin.push_back(s.row_origin[i]);
    out.row_orbits = s.row_orbits;
    out.col_orbits = s.col_orbits;
    return out;
}

std::string write_system(const CondensedSystem& s) {
    std::string out = "rows " + std::to_string(s.n_rows()) + " cols " +
                      std::to_string(s.n_cols()) + " mode " +
                      (s.mode == SystemMode::packing ? "packing" : "design") + "\n";
    out += "w";
    for (uint64_t w : s.col_weights) out += " " + std::to_string(w);
    out += "\n";
    for (const auto& row : s.rows) {
        size_t next = 0;
        for (size_t j = 0; j < s.n_cols(); ++j) {
            if (j) out.push_back(' ');
            if (next < row.size() && row[next].first == j)
                out += std::to_string(row[next++].second);
            else
                out.push_back('0');
        }
        out.push_back('\n');
    }
    return out;
}

std::string export_lp(const CondensedSystem& s) {
    std::string out = "Maximize\n";
    std::string line = " obj:";
    auto flush = [&out, &line]() {
        out += line;
        out.push_back('\n');
        line = "  ";
    };
    auto emit = [&line, &flush](const std::string& piece) {
        if (line.size() + piece.size() > 72) flush();
        line += piece;
    };
    for (size_t j = 0; j < s.n_cols(); ++j) {
        std::string term = j ? " + " : " ";
        if (s.col_weights[j] != 1) term += std::to_string(s.col_weights[j]) + " ";
        term += "x" + std::to_string(j + 1);
        emit(term);
    }
    flush();
    out += "Subject To\n";
    const char* sense = s.mode == SystemMode::packing ? " <= 1" : " = 1";
    for (size_t i = 0; i < s.n_rows(); ++i) {
        if (s.rows[i].empty()) continue;
        line = " r" + std::to_string(i + 1) + ":";
        bool first = true;
        for (const auto& [j, cnt] : s.rows[i]) {
            std::string term = first ? " " : " + ";
            first = false;
            if (cnt != 1) term += std::to_string(cnt) + " ";
            term += "x" + std::to_string(j + 1);
            emit(term);
        }
        emit(sense);
        flush();
    }
    out += "Binary\n";
    for (size_t j = 0; j < s.n_cols(); ++j) out += " x" + std::to_string(j + 1) + "\n";
    out += "End\n";
    return out;
}

namespace {

// Variable token "x<1-based ordinal>", or 0 when the token is not one.
uint32_t lp_var(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'x') return 0;
    uint64_t n = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return 0;
        n = n * 10 + unsigned(tok[i] - '0');
        if (n > UINT32_MAX) return 0;
    }
    return uint32_t(n);
}

}  // namespace

CondensedSystem parse_lp(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    size_t pos = 0;
    auto need = [&](const std::string& what) -> const std::string& {
        if (pos >= toks.size()) throw ParseError("lp: unexpected end, wanted " + what);
        return toks[pos++];
    };
    auto peek = [&]() -> const std::string& {
        static const std::string empty;
        return pos < toks.size() ? toks[pos] : empty;
    };
    if (need("Maximize") != "Maximize") throw ParseError("lp: expected Maximize");
    if (need("obj:") != "obj:") throw ParseError("lp: expected obj:");

    struct Term {
        uint64_t coef;
        uint32_t var;
    };
    auto read_terms = [&](std::vector<Term>& terms) {
        bool expect_term = true;
        for (;;) {
            const std::string& tok = peek();
            if (tok.empty()) break;
            if (tok == "+") {
                if (expect_term) throw ParseError("lp: dangling +");
                ++pos;
                expect_term = true;
                continue;
            }
            uint64_t coef = 1;
            uint32_t var = lp_var(tok);
            if (var == 0) {
                bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
                if (!numeric || !expect_term) break;
                try {
                    coef = std::stoull(tok);
                } catch (const std::exception&) {
                    throw ParseError("lp: coefficient out of range");
                }
                ++pos;
                var = lp_var(need("variable"));
                if (var == 0) throw ParseError("lp: coefficient without variable");
            } else {
                if (!expect_term) break;
                ++pos;
            }
            terms.push_back({coef, var});
            expect_term = false;
        }
        if (expect_term && !terms.empty()) throw ParseError("lp: dangling +");
    };

    std::vector<Term> obj;
    read_terms(obj);
    if (need("Subject") != "Subject" || need("To") != "To")
        throw ParseError("lp: expected Subject To");

    std::vector<std::vector<Term>> cons;
    int mode_seen = -1;
    while (!peek().empty() && peek() != "Binary") {
        std::string label = need("row label");
        if (label.size() < 3 || label[0] != 'r' || label.back() != ':')
            throw ParseError("lp: bad row label '" + label + "'");
        std::vector<Term> terms;
        read_terms(terms);
        if (terms.empty()) throw ParseError("lp: empty constraint");
        std::string sense = need("sense");
        if (sense != "<=" && sense != "=") throw ParseError("lp: bad sense '" + sense + "'");
        int mode = sense == "<=" ? 0 : 1;
        if (mode_seen == -1) mode_seen = mode;
        if (mode_seen != mode) throw ParseError("lp: mixed constraint senses");
        if (need("rhs") != "1") throw ParseError("lp: right hand side must be 1");
        cons.push_back(std::move(terms));
    }
    if (need("Binary") != "Binary") throw ParseError("lp: expected Binary");
    uint32_t n = 0;
    while (!peek().empty() && peek() != "End") {
        uint32_t var = lp_var(need("binary variable"));
        if (var != n + 1) throw ParseError("lp: Binary section must list x1..xn in order");
        n = var;
    }
    if (need("End") != "End") throw ParseError("lp: expected End");
    if (pos != toks.size()) throw ParseError("lp: trailing tokens");

    CondensedSystem s;
    s.mode = mode_seen == 1 ? SystemMode::design : SystemMode::packing;
    s.col_weights.assign(n, 0);
    for (const auto& [coef, var] : obj) {
        if (var > n) throw ParseError("lp: objective variable out of range");
        s.col_weights[var - 1] = coef;
    }
    s.rows.resize(cons.size());
    for (size_t i = 0; i < cons.size(); ++i) {
        for (const auto& [coef, var] : cons[i]) {
            if (var > n) throw ParseError("lp: constraint variable out of range");
            if (coef > UINT32_MAX) throw ParseError("lp: coefficient out of range");
            s.rows[i].emplace_back(var - 1, uint32_t(coef));
        }
        std::sort(s.rows[i].begin(), s.rows[i].end());
        for (size_t a = 1; a < s.rows[i].size(); ++a)
            if (s.rows[i][a].first == s.rows[i][a - 1].first)
                throw ParseError("lp: repeated variable in constraint");
    }
    s.col_origin.resize(n);
    for (uint32_t j = 0; j < n; ++j) s.col_origin[j] = j;
    s.row_origin.resize(s.rows.size());
    for (size_t i = 0; i < s.rows.size(); ++i) s.row_origin[i] = uint32_t(i);
    return s;
}

CondensedSystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    size_t r = 0, c = 0;
    std::string mode;
    {
        std::string kr, kc, km;
        if (!(in >> kr >> r >> kc >> c >> km >> mode) || kr != "rows" || kc != "cols" ||
            km != "mode" || (mode != "packing" && mode != "design"))
            throw ParseError("system dump: bad header");
    }
    CondensedSystem s;
    s.mode = mode == "packing" ? SystemMode::packing : SystemMode::design;
    if (!(in >> tok) || tok != "w") throw ParseError("system dump: expected weight line");
    s.col_weights.resize(c);
    for (size_t j = 0; j < c; ++j)
        if (!(in >> s.col_weights[j])) throw ParseError("system dump: truncated weights");
    s.rows.resize(r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            long long x;
            if (!(in >> x) || x < 0) throw ParseError("system dump: bad matrix entry");
            if (x) s.rows[i].emplace_back(uint32_t(j), uint32_t(x));
        }
    if (in >> tok) throw ParseError("system dump: trailing tokens");
    s.col_origin.resize(c);
    for (size_t j = 0; j < c; ++j) s.col_origin[j] = uint32_t(j);
    s.row_origin.resize(r);
    for (size_t i = 0; i < r; ++i) s.row_origin[i] = uint32_t(i);
    return s;
}

}  // namespace subcode
