#pragma once

/**
 * @file experiments.hpp
 * @brief Trend experiments: sample random words in SL/Sp/GL over Z, take
 *        characteristic polynomials and tally how often they are reducible,
 *        pseudo-Anosov, S_n or strongly irreducible as the word grows.
 *
 * Sample i at length L uses seed derive_seed(derive_seed(seed, L), i), so a
 * report depends only on (seed, grid, generator set) and never on --jobs.
 */

#include "common.hpp"
#include "galois.hpp"
#include "matgrp.hpp"
#include "walks.hpp"
#include "zpoly.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace polymat {

struct TrendCell {
    std::size_t length = 0;
    std::string kind;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;

    double fraction() const { return samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0; }
    double std_error() const {
        if (!samples) return 0.0;
        const double f = fraction();
        return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
    }
};

struct TrendReport {
    std::string experiment;
    GroupId group{GroupKind::SL, 2};
    WalkKind walk = WalkKind::BOUQUET;
    std::uint64_t lazy_num = 0, lazy_den = 1;
    std::vector<std::size_t> lengths;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned k_max = 0;
    std::string fingerprint;
    std::vector<std::string> kinds;  // column order of `cells` within one length
    std::vector<TrendCell> cells;
    std::vector<Certificate> certificates;  // every PROVED certificate, in sample order

    const TrendCell& cell(std::size_t length, const std::string& kind) const {
        for (const auto& c : cells)
            if (c.length == length && c.kind == kind) return c;
        throw validation_error("no trend cell for length " + std::to_string(length) + " kind " + kind);
    }
    double fraction(std::size_t length, const std::string& kind) const { return cell(length, kind).fraction(); }

    nlohmann::ordered_json to_json(bool with_certificates = false) const {
        nlohmann::ordered_json j;
        j["experiment"] = experiment;
        j["group"] = group.name();
        j["walk"] = walk == WalkKind::BOUQUET ? "bouquet" : "no_backtrack";
        j["lazy"] = std::to_string(lazy_num) + "/" + std::to_string(lazy_den);
        j["lengths"] = lengths;
        j["samples"] = samples;
        j["seed"] = seed;
        if (k_max) j["k_max"] = k_max;
        j["generator_fingerprint"] = fingerprint;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : cells)
            arr.push_back({{"length", c.length}, {"kind", c.kind}, {"fraction", c.fraction()}, {"stderr", c.std_error()},
                           {"samples", c.samples}});
        j["cells"] = arr;
        j["proved_certificates"] = certificates.size();
        if (with_certificates) {
            auto cs = nlohmann::ordered_json::array();
            for (const auto& c : certificates) cs.push_back(c.to_json());
            j["certificates"] = cs;
        }
        return j;
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "length,kind,fraction,stderr,samples\n";
        char buf[64];
        for (const auto& c : cells) {
            os << c.length << ',' << c.kind << ',';
            std::snprintf(buf, sizeof buf, "%.6f,%.6f", c.fraction(), c.std_error());
            os << buf << ',' << c.samples << '\n';
        }
        return os.str();
    }
};

namespace detail {

struct SampleOutcome {
    std::vector<char> flags;  // one per report kind
    std::vector<Certificate> proved;
};

template <class Classify>
TrendReport run_trend(TrendReport rep, const GeneratorSet& gens, const WalkGraph& graph, unsigned jobs,
                      Classify classify) {
    graph.validate();
    if (graph.alphabet_size != gens.size()) throw validation_error("walk alphabet and generator count differ");
    if (rep.samples == 0) throw validation_error("trend needs at least one sample per length");
    rep.walk = graph.kind;
    rep.lazy_num = graph.lazy_num;
    rep.lazy_den = graph.lazy_den;
    rep.fingerprint = gens.fingerprint();
    for (std::size_t L : rep.lengths) {
        const std::uint64_t cell_seed = derive_seed(rep.seed, L);
        auto outcomes = parallel_map(rep.samples, jobs, [&](std::size_t i) {
            Word w = sample_word(graph, L, derive_seed(cell_seed, i));
            return classify(char_poly(evaluate_word(w, gens.mats)));
        });
        std::vector<TrendCell> row;
        for (const auto& k : rep.kinds) row.push_back({L, k, 0, rep.samples});
        for (auto& o : outcomes) {
            for (std::size_t k = 0; k < row.size(); ++k) row[k].hits += o.flags[k] ? 1 : 0;
            for (auto& c : o.proved) rep.certificates.push_back(std::move(c));
        }
        rep.cells.insert(rep.cells.end(), row.begin(), row.end());
    }
    return rep;
}

}  // namespace detail

/// Fraction of sampled words whose characteristic polynomial is reducible over Z.
inline TrendReport run_irreducibility_trend(const GroupId& group, const GeneratorSet& gens, const WalkGraph& graph,
                                            const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                            std::uint64_t seed, unsigned jobs = 1) {
    if (gens.dim() != group.n) throw validation_error("generator dimension does not match the group");
    TrendReport rep;
    rep.experiment = "irreducibility";
    rep.group = group;
    rep.lengths = lengths;
    rep.samples = samples;
    rep.seed = seed;
    rep.kinds = {"reducible"};
    return detail::run_trend(std::move(rep), gens, graph, jobs, [](const ZPoly& cp) {
        return detail::SampleOutcome{{static_cast<char>(is_reducible_over_Z(cp))}, {}};
    });
}

inline TrendReport run_irreducibility_trend(const GroupId& group, const WalkGraph& graph,
                                            const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                            std::uint64_t seed, unsigned jobs = 1) {
    return run_irreducibility_trend(group, standard_generators(group), graph, lengths, samples, seed, jobs);
}

/// Casson-Bleiler pass fraction in Sp(2g, Z) with the failure breakdown.
/// Kinds: pseudo_anosov, reducible, fail_cyclotomic, fail_power_form.
inline TrendReport run_pseudo_anosov_trend(std::size_t genus_times_2, const GeneratorSet& gens, const WalkGraph& graph,
                                           const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                           std::uint64_t seed, unsigned jobs = 1) {
    GroupId group(GroupKind::SP, genus_times_2);
    if (gens.dim() != group.n) throw validation_error("generator dimension does not match the group");
    TrendReport rep;
    rep.experiment = "pseudo_anosov";
    rep.group = group;
    rep.lengths = lengths;
    rep.samples = samples;
    rep.seed = seed;
    rep.kinds = {"pseudo_anosov", "reducible", "fail_cyclotomic", "fail_power_form"};
    return detail::run_trend(std::move(rep), gens, graph, jobs, [](const ZPoly& cp) {
        Certificate c = certify_pseudo_anosov(cp);
        auto failed = [&](const char* what) {
            for (const auto& s : c.failed_conditions)
                if (s == what) return char(1);
            return char(0);
        };
        detail::SampleOutcome o{{static_cast<char>(c.verdict == Verdict::PROVED), failed("reducible"),
                                 failed("cyclotomic"), failed("power_form")},
                                {}};
        if (c.verdict == Verdict::PROVED) o.proved.push_back(std::move(c));
        return o;
    });
}

inline TrendReport run_pseudo_anosov_trend(std::size_t genus_times_2, const WalkGraph& graph,
                                           const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                           std::uint64_t seed, unsigned jobs = 1) {
    return run_pseudo_anosov_trend(genus_times_2, standard_generators(GroupId(GroupKind::SP, genus_times_2)), graph,
                                   lengths, samples, seed, jobs);
}

/// GL(n, Z) words: S_n certified (kind sn) and no reducible power up to
/// k_max or a sieve proof for all powers (kind strongly_irreducible).
inline TrendReport run_strong_irreducibility_trend(std::size_t n, const GeneratorSet& gens, const WalkGraph& graph,
                                                   const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                                   unsigned k_max, std::uint64_t seed, unsigned jobs = 1) {
    if (n < 2) throw validation_error("strong irreducibility needs n >= 2");
    if (k_max < 1) throw validation_error("k_max must be >= 1");
    GroupId group(GroupKind::GL, n);
    if (gens.dim() != n) throw validation_error("generator dimension does not match the group");
    TrendReport rep;
    rep.experiment = "strong_irreducibility";
    rep.group = group;
    rep.lengths = lengths;
    rep.samples = samples;
    rep.seed = seed;
    rep.k_max = k_max;
    rep.kinds = {"sn", "strongly_irreducible"};
    return detail::run_trend(std::move(rep), gens, graph, jobs, [k_max](const ZPoly& cp) {
        detail::SampleOutcome o{{0, 0}, {}};
        if (discriminant(cp) != 0) {
            Certificate sn = certify_sn(cp);
            o.flags[0] = sn.verdict == Verdict::PROVED;
            if (sn.verdict == Verdict::PROVED) o.proved.push_back(std::move(sn));
        }
        Certificate pw = certify_power_irreducible(cp, k_max);
        o.flags[1] = pw.verdict == Verdict::PROVED || (pw.verdict == Verdict::INCONCLUSIVE && pw.k_checked == k_max);
        if (pw.verdict == Verdict::PROVED) o.proved.push_back(std::move(pw));
        return o;
    });
}

inline TrendReport run_strong_irreducibility_trend(std::size_t n, const WalkGraph& graph,
                                                   const std::vector<std::size_t>& lengths, std::uint64_t samples,
                                                   unsigned k_max, std::uint64_t seed, unsigned jobs = 1) {
    return run_strong_irreducibility_trend(n, standard_generators(GroupId(GroupKind::GL, n)), graph, lengths, samples,
                                           k_max, seed, jobs);
}

/// Non-increasing (or non-decreasing) across the grid, allowing each step a
/// slack of two standard errors of the difference.
inline bool trend_monotone(const TrendReport& rep, const std::string& kind, bool increasing) {
    for (std::size_t i = 1; i < rep.lengths.size(); ++i) {
        const auto& a = rep.cell(rep.lengths[i - 1], kind);
        const auto& b = rep.cell(rep.lengths[i], kind);
        const double diff = increasing ? a.fraction() - b.fraction() : b.fraction() - a.fraction();
        const double se = std::sqrt(a.std_error() * a.std_error() + b.std_error() * b.std_error());
        if (diff > 2.0 * se) return false;
    }
    return true;
}

}  // namespace polymat
