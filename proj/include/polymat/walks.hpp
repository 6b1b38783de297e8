#pragma once

/**
 * @file walks.hpp
 * @brief Random words over a generator alphabet (bouquet and non-backtracking
 *        walks), evaluation to integer matrices, and the exact step-by-step
 *        distribution of the induced walk on a finite quotient group.
 */

#include "common.hpp"
#include "ffpoly.hpp"
#include "matgrp.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace polymat {

enum class WalkKind { BOUQUET, NO_BACKTRACK };

struct WalkGraph {
    WalkKind kind = WalkKind::BOUQUET;
    std::size_t alphabet_size = 0;
    std::vector<std::size_t> inverse;  // label -> inverse label (an involution)
    std::uint64_t lazy_num = 0;
    std::uint64_t lazy_den = 1;

    WalkGraph() = default;
    WalkGraph(WalkKind k, std::vector<std::size_t> inv, std::uint64_t num = 0, std::uint64_t den = 1)
        : kind(k), alphabet_size(inv.size()), inverse(std::move(inv)), lazy_num(num), lazy_den(den) {
        validate();
    }

    /// Walk over a generator set, inverse labels taken from the set.
    static WalkGraph over(const GeneratorSet& gens, WalkKind k, std::uint64_t num = 0, std::uint64_t den = 1) {
        return WalkGraph(k, gens.inverse, num, den);
    }

    double lazy() const { return static_cast<double>(lazy_num) / static_cast<double>(lazy_den); }

    void validate() const {
        if (alphabet_size == 0) throw validation_error("walk alphabet must be nonempty");
        if (inverse.size() != alphabet_size) throw validation_error("inverse map must cover the alphabet");
        for (std::size_t i = 0; i < alphabet_size; ++i)
            if (inverse[i] >= alphabet_size || inverse[inverse[i]] != i)
                throw validation_error("inverse map must be an involution on the alphabet");
        if (lazy_den == 0 || lazy_num >= lazy_den) throw validation_error("holding probability must lie in [0, 1)");
    }
};

struct Word {
    std::vector<std::size_t> labels;
    std::size_t length() const { return labels.size(); }
    friend bool operator==(const Word&, const Word&) = default;
};

/// `length` walk steps from a pure (seed -> stream) generator. Holding steps
/// of a lazy graph add no letter, so the word is shorter than `length` then.
inline Word sample_word(const WalkGraph& g, std::size_t length, std::uint64_t seed) {
    g.validate();
    std::mt19937_64 rng(seed);
    Word w;
    w.labels.reserve(length);
    std::uniform_int_distribution<std::uint64_t> hold(0, g.lazy_den - 1);
    for (std::size_t step = 0; step < length; ++step) {
        if (g.lazy_num && hold(rng) < g.lazy_num) continue;
        if (g.kind == WalkKind::NO_BACKTRACK && !w.labels.empty()) {
            const std::size_t banned = g.inverse[w.labels.back()];
            if (g.alphabet_size == 1) throw validation_error("non-backtracking walk on a single self-inverse label");
            std::uniform_int_distribution<std::size_t> pick(0, g.alphabet_size - 2);
            std::size_t l = pick(rng);
            if (l >= banned) ++l;
            w.labels.push_back(l);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, g.alphabet_size - 1);
            w.labels.push_back(pick(rng));
        }
    }
    return w;
}

/// Left-to-right product of the labelled generators; identity for the empty word.
inline IntMatrix evaluate_word(const Word& w, const std::vector<IntMatrix>& gens) {
    if (gens.empty()) throw validation_error("evaluate_word needs at least one generator");
    const std::size_t n = gens.front().n();
    for (const auto& m : gens)
        if (m.n() != n) throw validation_error("generators differ in dimension");
    IntMatrix r = IntMatrix::identity(n);
    for (auto l : w.labels) {
        if (l >= gens.size()) throw validation_error("word label out of range");
        r = r * gens[l];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Exact distributions on the finite quotient
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t default_group_cap = 1'000'000ULL;

/// The walk pushed forward step by step on the group generated mod p.
/// Probabilities are doubles; accumulated rounding stays below steps * 1e-15.
class WalkChain {
public:
    WalkChain(const WalkGraph& g, const GeneratorSet& gens, const PrimeField& field, const GroupId& group,
              std::uint64_t cap = default_group_cap)
        : graph_(g), group_id_(group) {
        graph_.validate();
        if (gens.size() != g.alphabet_size) throw validation_error("walk alphabet and generator count differ");
        if (gens.dim() != group.n) throw validation_error("generator dimension does not match the group");
        group_ = enumerate_group(gens, field, cap);
        expected_order_ = expected_group_order(group, field.p());
        const std::size_t N = group_.order();
        const std::size_t states = g.kind == WalkKind::BOUQUET ? N : N * (g.alphabet_size + 1);
        if (states > cap) throw capacity_error("walk state space exceeds capacity " + std::to_string(cap));
        dist_.assign(states, 0.0);
        dist_[state(0, g.alphabet_size)] = 1.0;
    }

    const FiniteGroup& group() const { return group_; }
    std::size_t order() const { return group_.order(); }
    /// Order predicted by the classical formula for the named group.
    const BigInt& expected_order() const { return expected_order_; }
    bool generates_full_group() const { return BigInt(static_cast<unsigned long>(order())) == expected_order_; }
    std::size_t steps() const { return steps_; }

    void step() {
        const std::size_t N = group_.order(), k = graph_.alphabet_size;
        const double hold = graph_.lazy(), move = 1.0 - hold;
        std::vector<double> next(dist_.size(), 0.0);
        if (graph_.kind == WalkKind::BOUQUET) {
            for (std::size_t e = 0; e < N; ++e) {
                const double pe = dist_[e];
                if (pe == 0.0) continue;
                next[e] += hold * pe;
                const double share = move * pe / static_cast<double>(k);
                for (std::size_t l = 0; l < k; ++l) next[group_.right[l][e]] += share;
            }
        } else {
            for (std::size_t e = 0; e < N; ++e)
                for (std::size_t last = 0; last <= k; ++last) {
                    const double pe = dist_[state(e, last)];
                    if (pe == 0.0) continue;
                    next[state(e, last)] += hold * pe;
                    const bool fresh = last == k;
                    const std::size_t banned = fresh ? k : graph_.inverse[last];
                    const std::size_t choices = fresh ? k : k - 1;
                    if (choices == 0) throw validation_error("non-backtracking walk has no admissible step");
                    const double share = move * pe / static_cast<double>(choices);
                    for (std::size_t l = 0; l < k; ++l)
                        if (l != banned) next[state(group_.right[l][e], l)] += share;
                }
        }
        dist_ = std::move(next);
        ++steps_;
    }

    /// Probability of each group element (index into group().elements).
    std::vector<double> distribution() const {
        if (graph_.kind == WalkKind::BOUQUET) return dist_;
        const std::size_t N = group_.order(), k = graph_.alphabet_size;
        std::vector<double> out(N, 0.0);
        for (std::size_t e = 0; e < N; ++e)
            for (std::size_t last = 0; last <= k; ++last) out[e] += dist_[state(e, last)];
        return out;
    }

private:
    std::size_t state(std::size_t e, std::size_t last) const {
        return graph_.kind == WalkKind::BOUQUET ? e : e * (graph_.alphabet_size + 1) + last;
    }

    WalkGraph graph_;
    GroupId group_id_;
    FiniteGroup group_;
    BigInt expected_order_;
    std::vector<double> dist_;
    std::size_t steps_ = 0;
};

/// Step-`steps` distribution of the walk on the group generated mod p.
inline std::vector<double> exact_walk_distribution(const WalkGraph& g, const GeneratorSet& gens, const PrimeField& field,
                                                   const GroupId& group, std::size_t steps,
                                                   std::uint64_t cap = default_group_cap) {
    WalkChain chain(g, gens, field, group, cap);
    for (std::size_t s = 0; s < steps; ++s) chain.step();
    return chain.distribution();
}

/// (1/2) sum |p_i - 1/|G||; elements absent from `dist` count as probability 0.
inline double tv_to_uniform(const std::vector<double>& dist, std::uint64_t group_order) {
    if (group_order == 0 || dist.size() > group_order) throw validation_error("distribution longer than the group");
    double total = 0.0;
    for (double v : dist) {
        if (!(v >= -1e-12)) throw validation_error("negative probability in distribution");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) throw validation_error("probabilities do not sum to 1");
    const long double u = 1.0L / static_cast<long double>(group_order);
    long double s = 0.0L;
    for (double v : dist) s += std::fabs(static_cast<long double>(v) - u);
    s += static_cast<long double>(group_order - dist.size()) * u;
    return static_cast<double>(s / 2.0L);
}

/// TV distance to uniform after 0, 1, ..., steps steps.
inline std::vector<double> tv_curve(const WalkGraph& g, const GeneratorSet& gens, const PrimeField& field,
                                    const GroupId& group, std::size_t steps, std::uint64_t cap = default_group_cap) {
    WalkChain chain(g, gens, field, group, cap);
    std::vector<double> out;
    out.push_back(tv_to_uniform(chain.distribution(), chain.order()));
    for (std::size_t s = 0; s < steps; ++s) {
        chain.step();
        out.push_back(tv_to_uniform(chain.distribution(), chain.order()));
    }
    return out;
}

}  // namespace polymat
