#include "subcode/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "subcode/sha256.hpp"

namespace subcode {

std::vector<SubspaceKey> expand_orbits(const Field& F, const OrbitTable& orbits,
                                       const std::vector<GroupElement>& gens,
                                       const std::vector<uint32_t>& orbit_ids) {
    std::vector<SubspaceKey> out;
    for (uint32_t id : orbit_ids) {
        if (id >= orbits.count()) throw std::invalid_argument("orbit ordinal out of range");
        std::vector<SubspaceKey> stack = {orbits.reps[id]};
        std::unordered_map<SubspaceKey, char, KeyHash> seen;
        seen.emplace(orbits.reps[id], 1);
        while (!stack.empty()) {
            SubspaceKey cur = std::move(stack.back());
            stack.pop_back();
            for (const auto& g : gens) {
                SubspaceKey img = g.image(F, cur);
                if (seen.emplace(img, 1).second) stack.push_back(img);
            }
            out.push_back(std::move(cur));
        }
        if (seen.size() != orbits.sizes[id]) throw Error("orbit closure size mismatch");
    }
    std::sort(out.begin(), out.end(), KeyLess{});
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw Error("selected orbits overlap");
    return out;
}

std::vector<SubspaceKey> expand(const Field& F, const CondensedSystem& s,
                                const std::vector<GroupElement>& gens,
                                const std::vector<uint32_t>& cols) {
    if (!s.col_orbits) throw std::invalid_argument("system carries no orbit table");
    std::vector<uint32_t> ids;
    ids.reserve(cols.size());
    for (uint32_t j : cols) {
        if (j >= s.n_cols()) throw std::invalid_argument("column ordinal out of range");
        ids.push_back(s.col_origin[j]);
    }
    return expand_orbits(F, *s.col_orbits, gens, ids);
}

std::vector<SubspaceKey> expand(const Field& F, const SingerSystem& ss,
                                const std::vector<uint32_t>& cols) {
    const GroupElement& gen = ss.group.gens.at(0);
    std::vector<SubspaceKey> out;
    for (uint32_t j : cols) {
        if (j >= ss.all_orbits.size())
            throw std::invalid_argument("column ordinal out of range");
        const PointSetOrbit& o = ss.all_orbits[j];
        SubspaceKey cur = subspace_from_points(F, *ss.labeling, o.pts);
        for (uint64_t s = 0; s < o.length; ++s) {
            out.push_back(cur);
            cur = gen.image(F, cur);
        }
        if (!(cur == subspace_from_points(F, *ss.labeling, o.pts)))
            throw Error("orbit does not close after its recorded length");
    }
    std::sort(out.begin(), out.end(), KeyLess{});
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw Error("selected orbits overlap");
    return out;
}

namespace {

// Rank of up to 128 stacked GF(2) rows, tallied into the pair distance.
unsigned pair_distance_gf2(const uint64_t* a, unsigned ka, const uint64_t* b, unsigned kb,
                           unsigned v) {
    uint64_t rows[128];
    unsigned n = ka + kb;
    std::copy(a, a + ka, rows);
    std::copy(b, b + kb, rows + ka);
    unsigned rank = 0;
    for (unsigned c = 0; c < v && rank < n; ++c) {
        unsigned sel = rank;
        while (sel < n && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == n) continue;
        std::swap(rows[rank], rows[sel]);
        for (unsigned i = rank + 1; i < n; ++i)
            if ((rows[i] >> c) & 1) rows[i] ^= rows[rank];
        ++rank;
    }
    return 2 * rank - ka - kb;
}

}  // namespace

VerifyReport verify(const Field& F, const CodeCertificate& cert, unsigned threads,
                    bool full_scan) {
    VerifyReport rep;
    const unsigned k = cert.k, v = cert.v;
    if (cert.q != F.q()) {
        rep.failure = "certificate field does not match";
        return rep;
    }
    if (!(k >= 1 && k <= v)) {
        rep.failure = "invalid dimensions";
        return rep;
    }
    for (const auto& w : cert.words)
        if (w.v() != v || w.k() != k || w.q() != cert.q) {
            rep.failure = "codeword with wrong shape: " + w.format();
            return rep;
        }
    const size_t m = cert.words.size();
    if (m < 2) {
        rep.true_min = 2 * k;
        rep.ok = cert.claimed_d <= 2 * k;
        if (!rep.ok) rep.failure = "claimed distance exceeds 2k";
        return rep;
    }
    {
        auto sorted = cert.words;
        std::sort(sorted.begin(), sorted.end(), KeyLess{});
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) {
                rep.failure = "duplicate codeword: " + sorted[i].format();
                return rep;
            }
    }

    const bool gf2 = cert.q == 2;
    std::vector<uint64_t> flat;
    if (gf2) {
        flat.resize(m * k);
        for (size_t i = 0; i < m; ++i)
            for (unsigned r = 0; r < k; ++r) flat[i * k + r] = cert.words[i].word(r);
    }
    unsigned nt = std::max(1u, threads);
    std::atomic<bool> stop{false};
    std::vector<unsigned> local_min(nt, 2 * k + 1);
    std::vector<uint64_t> local_pairs(nt, 0);
    auto work = [&](unsigned tid) {
        unsigned my_min = 2 * k + 1;
        uint64_t my_pairs = 0;
        for (size_t i = tid; i < m; i += nt) {
            if (!full_scan && stop.load(std::memory_order_relaxed)) break;
            for (size_t j = i + 1; j < m; ++j) {
                unsigned d;
                if (gf2)
                    d = pair_distance_gf2(&flat[i * k], k, &flat[j * k], k, v);
                else
                    d = subspace_distance(F, cert.words[i], cert.words[j]);
                ++my_pairs;
                if (d < my_min) {
                    my_min = d;
                    if (!full_scan && d < cert.claimed_d) {
                        stop.store(true, std::memory_order_relaxed);
                        break;
                    }
                }
            }
        }
        local_min[tid] = my_min;
        local_pairs[tid] = my_pairs;
    };
    if (nt == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    unsigned found = 2 * k + 1;
    for (unsigned t = 0; t < nt; ++t) {
        found = std::min(found, local_min[t]);
        rep.pairs_checked += local_pairs[t];
    }
    rep.true_min = std::min(found, 2 * k);
    rep.ok = rep.true_min >= cert.claimed_d;
    if (!rep.ok)
        rep.failure = "minimum distance " + std::to_string(rep.true_min) + " below claimed " +
                      std::to_string(cert.claimed_d);
    return rep;
}

std::string write_certificate(const CodeCertificate& cert) {
    auto words = cert.words;
    std::sort(words.begin(), words.end(), KeyLess{});
    std::string body = "subcode certificate v1\n";
    body += "q " + std::to_string(cert.q) + " v " + std::to_string(cert.v) + " k " +
            std::to_string(cert.k) + " claimed_d " + std::to_string(cert.claimed_d) + " m " +
            std::to_string(words.size()) + "\n";
    for (const auto& w : words) body += w.format() + "\n";
    body += "provenance\n";
    auto field = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    body += "engine " + field(cert.prov.engine) + "\n";
    body += "group " + field(cert.prov.group) + "\n";
    body += "group_sha256 " + field(cert.prov.group_sha256) + "\n";
    body += "seed " + std::to_string(cert.prov.seed) + "\n";
    body += "orbits " + field(cert.prov.orbits) + "\n";
    body += "end\n";
    return body + "sha256 " + sha256_hex(body) + "\n";
}

CodeCertificate read_certificate(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    auto next = [&]() -> std::string& {
        if (!std::getline(in, line)) throw ParseError("certificate: unexpected end of input");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };
    if (next() != "subcode certificate v1")
        throw ParseError("certificate: bad magic line '" + line + "'");
    CodeCertificate cert;
    size_t m = 0;
    {
        std::istringstream h(next());
        std::string kq, kv, kk, kd, km;
        if (!(h >> kq >> cert.q >> kv >> cert.v >> kk >> cert.k >> kd >> cert.claimed_d >> km >>
              m) ||
            kq != "q" || kv != "v" || kk != "k" || kd != "claimed_d" || km != "m")
            throw ParseError("certificate: bad header line '" + line + "'");
        std::string rest;
        if (h >> rest) throw ParseError("certificate: trailing tokens in header");
    }
    if (factor_prime_power(cert.q).p == 0 || cert.q > 256)
        throw ParseError("certificate: q is not a prime power <= 256");
    Field F(cert.q);
    cert.words.reserve(m);
    for (size_t i = 0; i < m; ++i) cert.words.push_back(SubspaceKey::parse(F, next()));
    if (next() != "provenance") throw ParseError("certificate: expected provenance");
    auto prov_line = [&](const char* key) {
        std::istringstream h(next());
        std::string k, val;
        if (!(h >> k >> val) || k != key)
            throw ParseError(std::string("certificate: expected '") + key + " <value>'");
        std::string rest;
        if (h >> rest) throw ParseError("certificate: trailing tokens after " + k);
        return val;
    };
    cert.prov.engine = prov_line("engine");
    cert.prov.group = prov_line("group");
    cert.prov.group_sha256 = prov_line("group_sha256");
    try {
        cert.prov.seed = std::stoull(prov_line("seed"));
    } catch (const std::exception&) {
        throw ParseError("certificate: bad seed");
    }
    cert.prov.orbits = prov_line("orbits");
    if (next() != "end") throw ParseError("certificate: expected end");
    size_t end_pos = text.find("\nend\n");
    if (end_pos == std::string::npos) throw ParseError("certificate: malformed end marker");
    std::string body = text.substr(0, end_pos + 5);
    std::string sha = prov_line("sha256");
    if (sha != sha256_hex(body) && warnings)
        warnings->push_back("certificate fingerprint mismatch (content may have been edited)");
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("certificate: trailing content after sha256");
    return cert;
}

}  // namespace subcode
