// Command line front end: orbit summaries, certified code search, system
// export, and certificate verification.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subcode/verify.hpp"

using nlohmann::json;
using namespace subcode;

namespace {

struct Config {
    unsigned q = 2, v = 0, k = 0, dist = 0;
    std::string group = "identity";
    std::string poly;
    std::string engine = "greedy";
    uint64_t seed = 1;
    uint64_t iters = 1000000;
    double time_limit = 0;
    uint64_t target = 0;
    uint64_t nodes = 0;
    uint64_t cap = UINT64_C(4) << 20;
    unsigned threads = 0;
    bool full_scan = false;
    bool apply_reduce = false;
    std::string mode = "packing";
    std::string kind = "lp";
    std::string format = "text";
    std::string out;
    std::string input;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error("short write to " + path);
}

[[noreturn]] void rethrow_tagged(const char* st) {
    auto tag = [st](const char* w) { return std::string(st) + ": " + w; };
    try {
        throw;
    } catch (const CapExceeded& e) {
        throw CapExceeded(tag(e.what()));
    } catch (const ParseError& e) {
        throw ParseError(tag(e.what()));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(tag(e.what()));
    } catch (const std::exception& e) {
        throw Error(tag(e.what()));
    }
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (...) {
        rethrow_tagged(name);
    }
}

std::vector<uint8_t> parse_poly(const std::string& s) {
    std::vector<uint8_t> c;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') continue;
        if (ch < '0' || ch > '9') throw std::invalid_argument("polynomial coefficients must be digits");
        c.push_back(uint8_t(ch - '0'));
    }
    return c;
}

GroupSpec load_group(const Field& F, unsigned v, const Config& cfg) {
    if (cfg.group == "identity") return identity_group(F.q(), v);
    if (cfg.group == "singer") return singer_group(F, v, parse_poly(cfg.poly));
    return parse_group(read_file(cfg.group), cfg.group);
}

void check_shape(const Config& cfg) {
    if (cfg.v < 1 || cfg.k < 1 || cfg.k > cfg.v)
        throw std::invalid_argument("need 1 <= k <= v");
}

unsigned resolve_dist(const Config& cfg) {
    unsigned d = cfg.dist ? cfg.dist : 2 * (cfg.k - 1);
    if (d < 2 || d % 2 || d > 2 * cfg.k)
        throw std::invalid_argument("dist must be even with 2 <= dist <= 2k");
    return d;
}

bool singer_fast_path(const Config& cfg, unsigned dist) {
    return cfg.group == "singer" && cfg.q == 2 && cfg.k >= 2 && dist == 2 * (cfg.k - 1);
}

unsigned thread_count(const Config& cfg) {
    if (cfg.threads) return cfg.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string csv(const std::vector<uint32_t>& xs) {
    if (xs.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(xs[i]);
    }
    return s;
}

std::map<uint64_t, uint64_t> tally(const std::vector<uint64_t>& xs) {
    std::map<uint64_t, uint64_t> h;
    for (uint64_t x : xs) ++h[x];
    return h;
}

std::string histogram(const std::map<uint64_t, uint64_t>& h, const char* noun) {
    if (h.size() == 1)
        return "all " + std::string(noun) + " " + std::to_string(h.begin()->first);
    std::string s;
    for (const auto& [x, n] : h) {
        if (!s.empty()) s += ", ";
        s += std::to_string(n) + " of " + noun + " " + std::to_string(x);
    }
    return s;
}

json histogram_json(const std::map<uint64_t, uint64_t>& h) {
    json j = json::object();
    for (const auto& [x, n] : h) j[std::to_string(x)] = n;
    return j;
}

struct BuiltSystem {
    unsigned dist = 0, t = 0;
    GroupSpec group;
    std::optional<SingerSystem> ss;
    CondensedSystem base;
};

BuiltSystem build_system(const Field& F, const Config& cfg, SystemMode mode) {
    BuiltSystem b;
    b.dist = resolve_dist(cfg);
    b.t = cfg.k - b.dist / 2 + 1;
    if (mode == SystemMode::packing && singer_fast_path(cfg, b.dist)) {
        b.ss = stage("build", [&] {
            return build_singer_system(F, cfg.v, cfg.k, parse_poly(cfg.poly), cfg.cap);
        });
        b.group = b.ss->group;
        b.base = b.ss->sys;
    } else {
        b.group = stage("group", [&] { return load_group(F, cfg.v, cfg); });
        b.base = stage("build", [&] {
            return b.group.gens.empty()
                       ? build_full_system(F, cfg.v, cfg.k, b.t, mode, cfg.cap)
                       : condense(F, b.group, cfg.k, b.t, mode, cfg.cap);
        });
    }
    return b;
}

int cmd_orbits(const Config& cfg) {
    check_shape(cfg);
    Field F(cfg.q);
    unsigned dist = resolve_dist(cfg);
    json j{{"q", cfg.q}, {"v", cfg.v}, {"k", cfg.k}, {"dist", dist}};
    std::string dump;
    if (cfg.group == "singer" && cfg.q == 2) {
        auto ss = stage("build", [&] {
            return build_singer_system(F, cfg.v, cfg.k, parse_poly(cfg.poly), cfg.cap);
        });
        std::vector<uint64_t> lens;
        lens.reserve(ss.all_orbits.size());
        for (const auto& o : ss.all_orbits) lens.push_back(o.length);
        auto h = tally(lens);
        if (cfg.format == "text") {
            std::printf("%zu orbits (%s)\n", ss.all_orbits.size(), histogram(h, "length").c_str());
            if (dist == 2 * (cfg.k - 1))
                std::printf("admissible: %zu\n", ss.admissible_cols.size());
        } else {
            j["group"] = "singer";
            j["N"] = ss.N;
            j["orbits"] = ss.all_orbits.size();
            j["lengths"] = histogram_json(h);
            j["admissible"] = ss.admissible_cols.size();
        }
        if (!cfg.out.empty())
            for (const auto& o : ss.all_orbits) dump += format_orbit(o) + "\n";
    } else {
        unsigned t = cfg.k - dist / 2 + 1;
        auto g = stage("group", [&] { return load_group(F, cfg.v, cfg); });
        auto kk = stage("enumerate", [&] { return enumerate_subspaces(F, cfg.v, cfg.k, cfg.cap); });
        auto ko = stage("orbits", [&] { return compute_orbits(F, g.gens, kk); });
        auto tk = stage("enumerate", [&] { return enumerate_subspaces(F, cfg.v, t, cfg.cap); });
        auto to = stage("orbits", [&] { return compute_orbits(F, g.gens, tk); });
        auto kh = tally(ko.sizes), th = tally(to.sizes);
        if (cfg.format == "text") {
            std::printf("%u-space orbits: %zu (%s)\n", cfg.k, ko.count(), histogram(kh, "size").c_str());
            std::printf("%u-space orbits: %zu (%s)\n", t, to.count(), histogram(th, "size").c_str());
            std::printf("%zu / %zu\n", ko.count(), to.count());
        } else {
            j["group"] = g.name;
            j["t"] = t;
            j["k_orbits"] = ko.count();
            j["t_orbits"] = to.count();
            j["k_sizes"] = histogram_json(kh);
            j["t_sizes"] = histogram_json(th);
        }
        if (!cfg.out.empty())
            for (size_t i = 0; i < ko.count(); ++i)
                dump += "size=" + std::to_string(ko.sizes[i]) + " rep=" + ko.reps[i].format() + "\n";
    }
    if (!cfg.out.empty()) write_file(cfg.out, dump);
    if (cfg.format != "text") std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

Solution run_engine(const ConflictGraph& g, const Config& cfg) {
    if (cfg.engine == "greedy") return solve_greedy(g);
    if (cfg.engine == "local") {
        LocalOpts o;
        o.seed = cfg.seed;
        o.max_iters = cfg.iters;
        o.time_limit = cfg.time_limit;
        o.target = cfg.target;
        return solve_local(g, o);
    }
    ExactOpts o;
    o.target = cfg.target;
    o.max_nodes = cfg.nodes;
    o.warm = solve_greedy(g).cols;
    return solve_exact(g, o);
}

int cmd_search(const Config& cfg) {
    check_shape(cfg);
    Field F(cfg.q);
    BuiltSystem b = build_system(F, cfg, SystemMode::packing);
    CondensedSystem red = stage("reduce", [&] { return reduce(b.base); });
    ConflictGraph graph = to_conflict_graph(red);
    Solution sol = stage("solve", [&] { return run_engine(graph, cfg); });

    std::vector<uint32_t> orbit_ids;
    orbit_ids.reserve(sol.cols.size());
    for (uint32_t c : sol.cols) orbit_ids.push_back(red.col_origin[c]);
    std::sort(orbit_ids.begin(), orbit_ids.end());

    std::vector<SubspaceKey> words = stage("expand", [&] {
        return b.ss ? expand(F, *b.ss, orbit_ids) : expand(F, red, b.group.gens, sol.cols);
    });

    CodeCertificate cert;
    cert.q = cfg.q;
    cert.v = cfg.v;
    cert.k = cfg.k;
    cert.claimed_d = b.dist;
    cert.words = std::move(words);
    cert.prov.engine = cfg.engine;
    cert.prov.group = b.group.name;
    cert.prov.group_sha256 = b.group.sha256;
    cert.prov.seed = cfg.engine == "local" ? cfg.seed : 0;
    cert.prov.orbits = csv(orbit_ids);

    VerifyReport rep = stage("verify", [&] { return verify(F, cert, thread_count(cfg), false); });
    if (!rep.ok) {
        std::fprintf(stderr, "verification failed: %s\n", rep.failure.c_str());
        return 1;
    }
    if (!cfg.out.empty()) stage("write", [&] { write_file(cfg.out, write_certificate(cert)); });

    if (cfg.format == "text") {
        std::printf("m=%zu d=%u optimal=%s\n", cert.words.size(), rep.true_min,
                    sol.optimal ? "yes" : "no");
        if (!cfg.out.empty()) std::printf("certificate: %s\n", cfg.out.c_str());
    } else {
        json j{{"q", cfg.q},
               {"v", cfg.v},
               {"k", cfg.k},
               {"claimed_d", b.dist},
               {"m", cert.words.size()},
               {"d", rep.true_min},
               {"optimal", sol.optimal},
               {"weight", sol.weight},
               {"engine", cfg.engine},
               {"seed", cert.prov.seed},
               {"iterations", sol.iterations},
               {"group", b.group.name},
               {"group_sha256", b.group.sha256},
               {"orbits", orbit_ids},
               {"pairs", rep.pairs_checked}};
        if (!cfg.out.empty()) j["certificate"] = cfg.out;
        std::printf("%s\n", j.dump(2).c_str());
    }
    return 0;
}

int cmd_export(const Config& cfg) {
    check_shape(cfg);
    Field F(cfg.q);
    SystemMode mode = cfg.mode == "design" ? SystemMode::design : SystemMode::packing;
    BuiltSystem b = build_system(F, cfg, mode);
    CondensedSystem red;
    const CondensedSystem* sys = &b.base;
    if (cfg.apply_reduce) {
        red = stage("reduce", [&] { return reduce(b.base); });
        sys = &red;
    }
    std::string text = cfg.kind == "lp" ? export_lp(*sys) : write_system(*sys);
    stage("write", [&] { write_file(cfg.out, text); });
    const char* rows = mode == SystemMode::design ? "equality rows" : "rows";
    if (cfg.format == "text") {
        std::printf("wrote %s: %zu vars, %zu %s, %llu nonzeros\n", cfg.out.c_str(), sys->n_cols(),
                    sys->n_rows(), rows, (unsigned long long)sys->nonzeros());
    } else {
        json j{{"path", cfg.out},      {"vars", sys->n_cols()},
               {"rows", sys->n_rows()}, {"nonzeros", sys->nonzeros()},
               {"mode", cfg.mode},      {"kind", cfg.kind},
               {"reduced", cfg.apply_reduce}};
        std::printf("%s\n", j.dump(2).c_str());
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    std::string text = read_file(cfg.input);
    std::vector<std::string> warnings;
    CodeCertificate cert = read_certificate(text, &warnings);
    if (cert.words.size() < 2)
        warnings.push_back("fewer than two codewords: the distance claim is vacuous");
    Field F(cert.q);
    VerifyReport rep = verify(F, cert, thread_count(cfg), cfg.full_scan);
    for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    if (cfg.format == "text") {
        std::printf("%s m=%zu claimed_d=%u min_d=%u pairs=%llu\n", rep.ok ? "pass" : "FAIL",
                    cert.words.size(), cert.claimed_d, rep.true_min,
                    (unsigned long long)rep.pairs_checked);
        if (!rep.ok) std::fprintf(stderr, "%s\n", rep.failure.c_str());
    } else {
        json j{{"ok", rep.ok},
               {"m", cert.words.size()},
               {"claimed_d", cert.claimed_d},
               {"min_d", rep.true_min},
               {"pairs", rep.pairs_checked},
               {"warnings", warnings}};
        if (!rep.ok) j["failure"] = rep.failure;
        std::printf("%s\n", j.dump(2).c_str());
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"constant dimension subspace codes from orbit-condensed packing systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    auto add_shape = [&](CLI::App* s) {
        s->add_option("--q", cfg.q, "field order (prime power)")->capture_default_str();
        s->add_option("--v", cfg.v, "ambient dimension")->required();
        s->add_option("--k", cfg.k, "codeword dimension")->required();
        s->add_option("--dist", cfg.dist, "minimum subspace distance (even; default 2(k-1))");
        s->add_option("--group", cfg.group, "group file path, or singer, or identity")
            ->capture_default_str();
        s->add_option("--singer-poly", cfg.poly,
                      "primitive polynomial digits c0..cv for the singer group");
        s->add_option("--cap", cfg.cap, "enumeration size cap")->capture_default_str();
    };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
    };

    CLI::App* orb = app.add_subcommand("orbits", "orbit counts for the chosen group");
    add_shape(orb);
    add_format(orb);
    orb->add_option("--out", cfg.out, "write an orbit dump to this path");

    CLI::App* sea = app.add_subcommand("search", "search for a code and certify it");
    add_shape(sea);
    add_format(sea);
    sea->add_option("--engine", cfg.engine, "greedy, local, or exact")
        ->check(CLI::IsMember({"greedy", "local", "exact"}))
        ->capture_default_str();
    sea->add_option("--seed", cfg.seed, "random seed (local engine)")->capture_default_str();
    sea->add_option("--iters", cfg.iters, "iteration budget (local engine)")
        ->capture_default_str();
    sea->add_option("--time", cfg.time_limit, "wall clock budget in seconds, 0 = none")
        ->capture_default_str();
    sea->add_option("--target", cfg.target, "stop once this many codewords are reached");
    sea->add_option("--nodes", cfg.nodes, "node cap for the exact engine, 0 = unlimited");
    sea->add_option("--threads", cfg.threads, "verifier threads (default: all cores)");
    sea->add_option("--out", cfg.out, "write the certificate to this path");

    CLI::App* exp = app.add_subcommand("export", "write the system as an LP or a matrix dump");
    add_shape(exp);
    add_format(exp);
    exp->add_option("--mode", cfg.mode, "packing (<= 1) or design (= 1) rows")
        ->check(CLI::IsMember({"packing", "design"}))
        ->capture_default_str();
    exp->add_option("--kind", cfg.kind, "lp or system")
        ->check(CLI::IsMember({"lp", "system"}))
        ->capture_default_str();
    exp->add_flag("--reduce", cfg.apply_reduce, "apply column and row reductions first");
    exp->add_option("--out", cfg.out, "output path")->required();

    CLI::App* ver = app.add_subcommand("verify", "re-check a code certificate");
    add_format(ver);
    ver->add_option("certificate", cfg.input, "certificate file")->required();
    ver->add_option("--threads", cfg.threads, "verifier threads (default: all cores)");
    ver->add_flag("--full", cfg.full_scan, "scan all pairs even after a violation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (orb->parsed()) return cmd_orbits(cfg);
        if (sea->parsed()) return cmd_search(cfg);
        if (exp->parsed()) return cmd_export(cfg);
        return cmd_verify(cfg);
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
