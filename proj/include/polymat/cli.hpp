#pragma once

/**
 * @file cli.hpp
 * @brief The polymat command line: census, walk and certificate subcommands
 *        with CSV/JSON output. run() is the whole program; main() only
 *        forwards argv, so tests drive it in-process.
 *
 * Exit codes: 0 ok, 2 validation error or bad usage, 3 capacity exceeded,
 * 1 internal error.
 */

#include "census.hpp"
#include "common.hpp"
#include "experiments.hpp"
#include "galois.hpp"
#include "matgrp.hpp"
#include "walks.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace polymat::cli {

using ojson = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string format = "auto";  // csv | json; auto = json for certify, csv otherwise
    std::uint64_t cap = default_cap;
    bool no_timestamp = false;
    ojson flags = ojson::object();
};

/// A run's result: CSV header + rows, or a JSON payload.
struct Output {
    std::vector<std::string> comments;  // extra "# key: value" lines for CSV
    std::string csv_header;
    std::vector<std::string> csv_rows;
    ojson json;
};

namespace detail {

inline std::string fmt(double v, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string quote(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

inline std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 0) throw validation_error("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw validation_error("expected comma-separated non-negative integers, got '" + s + "'");
        }
    }
    if (out.empty()) throw validation_error("empty list '" + s + "'");
    return out;
}

inline std::pair<int, long> parse_fix(const std::string& s) {
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("");
        std::size_t p1 = 0, p2 = 0;
        const std::string ks = s.substr(0, colon), as = s.substr(colon + 1);
        int k = std::stoi(ks, &p1);
        long a = std::stol(as, &p2);
        if (p1 != ks.size() || p2 != as.size()) throw std::invalid_argument("");
        return {k, a};
    } catch (const std::exception&) {
        throw validation_error("--fix expects k:a, got '" + s + "'");
    }
}

inline std::pair<std::uint64_t, std::uint64_t> parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument("");
        return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw validation_error("--lazy expects num/den, got '" + s + "'");
    }
}

inline WalkKind parse_walk(const std::string& s) {
    if (s == "bouquet") return WalkKind::BOUQUET;
    if (s == "nobacktrack" || s == "no_backtrack") return WalkKind::NO_BACKTRACK;
    throw validation_error("--walk must be bouquet or nobacktrack");
}

inline PrimeField field_of(std::uint64_t p) {
    if (!is_prime_u64(p) || p >= (1ULL << 31)) throw validation_error("--p must be a prime below 2^31");
    return PrimeField(p);
}

/// Matrices one per line ("a,b;c,d"), '#' comments. A list that already
/// contains each generator's inverse is paired as given; otherwise inverses
/// are appended.
inline GeneratorSet read_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot read generator file '" + path + "'");
    std::vector<IntMatrix> mats;
    std::string line;
    while (std::getline(in, line)) {
        line.erase(0, line.find_first_not_of(" \t"));
        if (line.empty() || line[0] == '#') continue;
        mats.push_back(IntMatrix::decode(line));
    }
    if (mats.empty()) throw validation_error("generator file '" + path + "' has no matrices");
    for (const auto& m : mats)
        if (m.n() != mats.front().n()) throw validation_error("generators must share one dimension");
    GeneratorSet s;
    s.mats = mats;
    for (const auto& m : mats) {
        IntMatrix inv = inverse_unimodular(m);
        auto it = std::find(mats.begin(), mats.end(), inv);
        if (it == mats.end()) return GeneratorSet::from_matrices(mats);
        s.inverse.push_back(static_cast<std::size_t>(it - mats.begin()));
    }
    for (std::size_t i = 0; i < s.inverse.size(); ++i)
        if (s.inverse[s.inverse[i]] != i) return GeneratorSet::from_matrices(mats);
    return s;
}

// Effective flag values of the chosen subcommand, defaults included.
inline ojson echo_options(const CLI::App* sub) {
    ojson j = ojson::object();
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "h") continue;
        if (opt->get_expected_max() == 0) {
            j[name] = opt->count() > 0;
        } else if (opt->count() > 0) {
            const auto& r = opt->results();
            std::string v;
            for (std::size_t i = 0; i < r.size(); ++i) v += (i ? " " : "") + r[i];
            j[name] = v;
        } else if (!opt->get_default_str().empty()) {
            j[name] = opt->get_default_str();
        }
    }
    return j;
}

inline void emit(std::ostream& out, const Config& cfg, const Output& o, const std::string& format) {
    ojson config;
    config["seed"] = cfg.seed;
    config["jobs"] = cfg.jobs;
    config["format"] = format;
    config["cap"] = cfg.cap;
    for (const auto& [k, v] : cfg.flags.items()) config[k] = v;
    if (format == "json") {
        ojson j;
        j["version"] = version_string;
        j["command"] = cfg.command;
        j["config"] = config;
        if (!cfg.no_timestamp) j["timestamp"] = now_utc();
        j["result"] = o.json;
        out << j.dump(2) << '\n';
        return;
    }
    out << "# " << version_string << '\n';
    out << "# command: " << cfg.command << '\n';
    out << "# config: " << config.dump() << '\n';
    if (!cfg.no_timestamp) out << "# timestamp: " << now_utc() << '\n';
    for (const auto& c : o.comments) out << "# " << c << '\n';
    out << o.csv_header << '\n';
    for (const auto& r : o.csv_rows) out << r << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string(version_string) + ": census, random products and certificates", "polymat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(version_string));

    Config cfg;
    app.add_option("--seed", cfg.seed, "master seed for sampling")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads (results do not depend on it)")
        ->capture_default_str()
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--format", cfg.format, "csv | json (auto: json for certify, csv otherwise)")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "csv", "json"}));
    app.add_option("--cap", cfg.cap, "maximum enumeration size")->capture_default_str();
    app.add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp from the header");

    // per-subcommand values
    int degree = 0, dim = 0;
    long height = 0;
    std::optional<long> constant_term;
    std::vector<std::string> fixes;
    std::uint64_t samples = 0, p = 0, steps = 200, budget = default_prime_budget;
    unsigned curve_d = 2, k_max = 6;
    std::string group = "SL", poly, matrix, walk = "bouquet", lazy = "1/2", trend_lazy = "0/1", lengths = "10,20,40",
                experiment = "irreducibility", generators;
    bool sn = false, pa = false, with_certs = false;
    std::optional<unsigned> power;
    std::uint64_t trend_samples = 2000;

    std::map<std::string, std::function<Output(const Config&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

    auto count_record = [&](Family fam) {
        CountQuery q;
        q.family = fam;
        q.degree = fam == Family::POLY_REDUCIBLE ? degree : dim;
        q.height = height;
        q.constant_term = constant_term;
        for (const auto& f : fixes) q.fixed.push_back(detail::parse_fix(f));
        q.samples = samples;
        q.seed = cfg.seed;
        q.cap = cfg.cap;
        q.jobs = cfg.jobs;
        return q;
    };
    auto z_family_output = [](const CountRecord& r) {
        Output o;
        if (!r.exact)
            o.comments.push_back("sampled: population=" + r.population.get_str() + " stderr=" + detail::fmt(r.std_error));
        o.csv_header = "family,dim_or_deg,height,total,hits,exact";
        o.csv_rows.push_back(std::string(to_string(r.query.family)) + "," + std::to_string(r.query.degree) + "," +
                             std::to_string(r.query.height) + "," + std::to_string(r.total) + "," +
                             std::to_string(r.hits) + "," + (r.exact ? "true" : "false"));
        o.json = r.to_json();
        return o;
    };

    auto* redpoly = sub("redpoly", "reducible monic polynomials with bounded coefficients");
    redpoly->add_option("--degree", degree, "degree d")->required();
    redpoly->add_option("--height", height, "coefficient bound B")->required();
    redpoly->add_option("--constant-term", constant_term, "fix the constant term");
    redpoly->add_option("--fix", fixes, "fix a coefficient, k:a (repeatable)");
    redpoly->add_option("--samples", samples, "sample instead of enumerating")->capture_default_str();
    handlers["redpoly"] = [&](const Config&) { return z_family_output(count_reducible_polys(count_record(Family::POLY_REDUCIBLE))); };

    for (auto [name, fam, help] : {std::tuple{"redmat", Family::MATRIX_REDUCIBLE, "matrices with reducible char poly"},
                                   std::tuple{"singmat", Family::MATRIX_SINGULAR, "singular matrices"}}) {
        auto* s = sub(name, help);
        s->add_option("--dim", dim, "dimension n")->required();
        s->add_option("--height", height, "entry bound B")->required();
        s->add_option("--samples", samples, "sample instead of enumerating")->capture_default_str();
        const Family f = fam;
        handlers[name] = [&, f](const Config&) {
            auto q = count_record(f);
            return z_family_output(f == Family::MATRIX_REDUCIBLE ? count_reducible_matrices(q) : count_singular_matrices(q));
        };
    }

    auto* groupred = sub("groupred", "reducible fraction of a finite classical group");
    groupred->add_option("--group", group, "SL | GL | SP")->capture_default_str();
    groupred->add_option("--dim", dim, "dimension n")->required();
    groupred->add_option("--q", p, "prime modulus")->required();
    handlers["groupred"] = [&](const Config& c) {
        CountQuery q;
        q.family = Family::GROUP_REDUCIBLE_MOD_Q;
        q.group = GroupId::parse_kind(group);
        q.degree = dim;
        q.modulus = p;
        q.cap = c.cap;
        q.jobs = c.jobs;
        auto r = group_reducible_fraction(q);
        Output o;
        o.csv_header = "group,dim,q,order,reducible,fraction";
        o.csv_rows.push_back(std::string(to_string(q.group)) + "," + std::to_string(dim) + "," + std::to_string(p) + "," +
                             std::to_string(r.count.total) + "," + std::to_string(r.count.hits) + "," +
                             detail::fmt(r.count.fraction()));
        o.json = r.count.to_json();
        o.json["group"] = r.group.name();
        o.json["expected_order"] = r.expected_order.get_str();
        return o;
    };

    auto* fiber = sub("fiber", "invertible matrices over F_p with a given char poly");
    fiber->add_option("--charpoly", poly, "monic polynomial, low-to-high coefficients")->required();
    fiber->add_option("--p", p, "prime")->required();
    handlers["fiber"] = [&](const Config& c) {
        auto r = fiber_count(ZPoly::decode(poly), detail::field_of(p), c.cap, c.jobs);
        Output o;
        o.csv_header = "charpoly,p,total,hits,lower,upper,pass";
        o.csv_rows.push_back(r.F.pretty() + "," + std::to_string(p) + "," + std::to_string(r.count.total) + "," +
                             std::to_string(r.count.hits) + "," + r.lower.get_str() + "," + r.upper.get_str() + "," +
                             (r.pass ? "true" : "false"));
        o.json = r.count.to_json();
        o.json["charpoly"] = r.F.encode();
        o.json["lower"] = r.lower.get_str();
        o.json["upper"] = r.upper.get_str();
        o.json["pass"] = r.pass;
        return o;
    };

    auto* curve = sub("curve", "affine points of y^d = f(x) over F_p against the Weil bound");
    curve->add_option("--f", poly, "polynomial, low-to-high coefficients")->required();
    curve->add_option("--d", curve_d, "exponent of y")->capture_default_str();
    curve->add_option("--p", p, "prime")->required();
    handlers["curve"] = [&](const Config&) {
        auto r = curve_point_count(mod_reduce(ZPoly::decode(poly), detail::field_of(p)), curve_d);
        Output o;
        o.csv_header = "f,d,p,affine_count,genus_bound,bound,pass";
        o.csv_rows.push_back(r.f.to_string() + "," + std::to_string(r.d) + "," + std::to_string(r.p) + "," +
                             std::to_string(r.affine_count) + "," + std::to_string(r.genus_bound) + "," +
                             std::to_string(r.bound) + "," + (r.pass ? "true" : "false"));
        o.json = r.to_json();
        return o;
    };

    auto* orbit = sub("orbit", "orbit of f under x -> ax + b over F_p");
    orbit->add_option("--f", poly, "polynomial, low-to-high coefficients")->required();
    orbit->add_option("--p", p, "prime")->required();
    handlers["orbit"] = [&](const Config&) {
        auto r = affine_orbit_size(mod_reduce(ZPoly::decode(poly), detail::field_of(p)));
        Output o;
        o.csv_header = "f,p,orbit,substitutions,stabilizer,predicted_free";
        o.csv_rows.push_back(r.f.to_string() + "," + std::to_string(p) + "," + std::to_string(r.count.hits) + "," +
                             std::to_string(r.count.total) + "," + std::to_string(r.stabilizer) + "," +
                             (r.predicted_free ? "true" : "false"));
        o.json = {{"f", r.f.to_string()}, {"p", p},           {"orbit", r.count.hits},
                  {"substitutions", r.count.total}, {"stabilizer", r.stabilizer}, {"predicted_free", r.predicted_free}};
        return o;
    };

    auto* splitdist = sub("splitdist", "splitting types with one fixed coefficient vs unrestricted");
    splitdist->add_option("--degree", degree, "degree d < p")->required();
    splitdist->add_option("--p", p, "prime")->required();
    splitdist->add_option("--constant-term", constant_term, "fix the constant term");
    splitdist->add_option("--fix", fixes, "fix a coefficient, k:a");
    handlers["splitdist"] = [&](const Config& c) {
        CountQuery q;
        q.family = Family::SPLIT_DIST;
        q.degree = degree;
        q.modulus = p;
        q.constant_term = constant_term;
        for (const auto& f : fixes) q.fixed.push_back(detail::parse_fix(f));
        q.cap = c.cap;
        q.jobs = c.jobs;
        auto r = restricted_splitting_distribution(q);
        Output o;
        o.comments.push_back("summary: restricted_total=" + std::to_string(r.restricted_total) +
                             " unrestricted_total=" + std::to_string(r.unrestricted_total) +
                             " max_diff=" + detail::fmt(r.max_diff) +
                             " coprime_factorial=" + (r.coprime_factorial ? "true" : "false") +
                             " coprime_linear=" + (r.coprime_linear ? "true" : "false"));
        o.csv_header = "type,restricted,unrestricted,restricted_fraction,unrestricted_fraction,abs_diff";
        auto types = ojson::array();
        for (const auto& [t, cnt] : r.counts) {
            const double a = static_cast<double>(cnt.first) / r.restricted_total;
            const double b = static_cast<double>(cnt.second) / r.unrestricted_total;
            o.csv_rows.push_back(detail::quote(t.to_string()) + "," + std::to_string(cnt.first) + "," +
                                 std::to_string(cnt.second) + "," + detail::fmt(a) + "," + detail::fmt(b) + "," +
                                 detail::fmt(r.diff(t)));
            types.push_back({{"type", t.parts}, {"restricted", cnt.first}, {"unrestricted", cnt.second}, {"abs_diff", r.diff(t)}});
        }
        o.json = {{"query", q.echo()},
                  {"restricted_total", r.restricted_total},
                  {"unrestricted_total", r.unrestricted_total},
                  {"types", types},
                  {"max_diff", r.max_diff},
                  {"coprime_factorial", r.coprime_factorial},
                  {"coprime_linear", r.coprime_linear}};
        return o;
    };

    auto* walkdist = sub("walkdist", "exact walk distribution on G(n, F_q): TV to uniform per step");
    walkdist->add_option("--group", group, "SL | GL | SP")->capture_default_str();
    walkdist->add_option("--dim", dim, "dimension n")->required();
    walkdist->add_option("--q", p, "prime modulus")->required();
    walkdist->add_option("--steps", steps, "number of steps")->capture_default_str();
    walkdist->add_option("--walk", walk, "bouquet | nobacktrack")->capture_default_str();
    walkdist->add_option("--lazy", lazy, "holding probability num/den")->capture_default_str();
    handlers["walkdist"] = [&](const Config& c) {
        GroupId id(GroupId::parse_kind(group), static_cast<std::size_t>(dim));
        auto gens = standard_generators(id);
        auto [num, den] = detail::parse_ratio(lazy);
        WalkGraph g = WalkGraph::over(gens, detail::parse_walk(walk), num, den);
        const PrimeField F = detail::field_of(p);
        WalkChain chain(g, gens, F, id, c.cap);
        std::vector<double> tv{tv_to_uniform(chain.distribution(), chain.order())};
        for (std::uint64_t s = 0; s < steps; ++s) {
            chain.step();
            tv.push_back(tv_to_uniform(chain.distribution(), chain.order()));
        }
        Output o;
        o.comments.push_back("group: " + id.name() + " q=" + std::to_string(p) + " order=" + std::to_string(chain.order()) +
                             " expected_order=" + chain.expected_order().get_str());
        o.csv_header = "step,tv";
        for (std::size_t s = 0; s < tv.size(); ++s) o.csv_rows.push_back(std::to_string(s) + "," + detail::fmt(tv[s], "%.12e"));
        o.json = {{"group", id.name()},
                  {"q", p},
                  {"order", chain.order()},
                  {"expected_order", chain.expected_order().get_str()},
                  {"generates_full_group", chain.generates_full_group()},
                  {"generator_fingerprint", gens.fingerprint()},
                  {"tv", tv}};
        return o;
    };

    auto* certify = sub("certify", "certificates for S_n Galois group, pseudo-Anosov, power irreducibility");
    auto* cp_opt = certify->add_option("--charpoly", poly, "monic polynomial, low-to-high coefficients");
    certify->add_option("--matrix", matrix, "integer matrix, rows separated by ';'")->excludes(cp_opt);
    certify->add_flag("--sn", sn, "S_n Galois group (default)");
    certify->add_flag("--pa", pa, "Casson-Bleiler pseudo-Anosov criterion");
    certify->add_option("--power", power, "irreducibility of all powers, direct check up to k");
    certify->add_option("--budget", budget, "primes to try for S_n")->capture_default_str();
    handlers["certify"] = [&](const Config&) {
        if (poly.empty() == matrix.empty()) throw validation_error("certify needs exactly one of --charpoly, --matrix");
        const ZPoly f = poly.empty() ? char_poly(IntMatrix::decode(matrix)) : ZPoly::decode(poly);
        if (int(sn) + int(pa) + int(power.has_value()) > 1) throw validation_error("choose one of --sn, --pa, --power");
        Certificate c = pa ? certify_pseudo_anosov(f) : power ? certify_power_irreducible(f, *power, budget)
                                                               : certify_sn(f, budget);
        Output o;
        o.csv_header = "claim,verdict,input";
        o.csv_rows.push_back(std::string(to_string(c.claim)) + "," + to_string(c.verdict) + "," + f.pretty());
        o.json = c.to_json();
        return o;
    };

    auto* trend = sub("trend", "trend experiments over random words in SL/GL/Sp(Z)");
    trend->add_option("--experiment", experiment, "irreducibility | pseudo_anosov | strong")
        ->capture_default_str()
        ->check(CLI::IsMember({"irreducibility", "pseudo_anosov", "strong"}));
    trend->add_option("--group", group, "SL | GL | SP (irreducibility only)")->capture_default_str();
    trend->add_option("--dim", dim, "dimension (2g for pseudo_anosov)")->required();
    trend->add_option("--lengths", lengths, "word lengths, comma-separated")->capture_default_str();
    trend->add_option("--samples", trend_samples, "samples per length")->capture_default_str();
    trend->add_option("--walk", walk, "bouquet | nobacktrack")->capture_default_str();
    trend->add_option("--lazy", trend_lazy, "holding probability num/den")->capture_default_str();
    trend->add_option("--k-max", k_max, "powers checked directly (strong)")->capture_default_str();
    trend->add_option("--generators", generators, "generator file: one matrix per line, '#' comments");
    trend->add_flag("--certificates", with_certs, "embed PROVED certificates in JSON output");
    handlers["trend"] = [&](const Config& c) {
        const auto L = detail::parse_list(lengths);
        const std::size_t n = static_cast<std::size_t>(dim);
        GroupId id = experiment == "pseudo_anosov" ? GroupId(GroupKind::SP, n)
                     : experiment == "strong"      ? GroupId(GroupKind::GL, n)
                                                   : GroupId(GroupId::parse_kind(group), n);
        GeneratorSet gens = generators.empty() ? standard_generators(id) : detail::read_generators(generators);
        auto [num, den] = detail::parse_ratio(trend_lazy);
        WalkGraph g = WalkGraph::over(gens, detail::parse_walk(walk), num, den);
        TrendReport r = experiment == "pseudo_anosov"
                            ? run_pseudo_anosov_trend(n, gens, g, L, trend_samples, c.seed, c.jobs)
                        : experiment == "strong"
                            ? run_strong_irreducibility_trend(n, gens, g, L, trend_samples, k_max, c.seed, c.jobs)
                            : run_irreducibility_trend(id, gens, g, L, trend_samples, c.seed, c.jobs);
        Output o;
        o.comments.push_back("experiment: " + r.experiment + " group=" + r.group.name() +
                             " generator_fingerprint=" + r.fingerprint +
                             " proved_certificates=" + std::to_string(r.certificates.size()));
        std::istringstream csv(r.to_csv());
        std::getline(csv, o.csv_header);
        for (std::string line; std::getline(csv, line);) o.csv_rows.push_back(line);
        o.json = r.to_json(with_certs);
        return o;
    };

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version_string << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    cfg.flags = detail::echo_options(chosen);
    try {
        const std::string format = cfg.format == "auto" ? (cfg.command == "certify" ? "json" : "csv") : cfg.format;
        Output o = handlers.at(cfg.command)(cfg);
        std::ostringstream buf;
        detail::emit(buf, cfg, o, format);
        out << buf.str();
        return 0;
    } catch (const not_absolutely_irreducible& e) {
        err << "error: NOT_ABSOLUTELY_IRREDUCIBLE: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const capacity_error& e) {
        err << "error: capacity: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace polymat::cli
