#pragma once

/**
 * @file census.hpp
 * @brief Exhaustive (or sampled) counts behind the density claims: reducible
 *        polynomials and matrices, singular matrices, reducible elements of
 *        finite matrix groups, characteristic-polynomial fibers, curve point
 *        counts, affine orbits and restricted splitting distributions.
 *
 * Enumeration is lexicographic; parallel work splits the leading free
 * coordinate and merges by addition, so counts never depend on --jobs.
 */

#include "common.hpp"
#include "ffpoly.hpp"
#include "matgrp.hpp"
#include "zpoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polymat {

enum class Family {
    POLY_REDUCIBLE,
    MATRIX_REDUCIBLE,
    MATRIX_SINGULAR,
    GROUP_REDUCIBLE_MOD_Q,
    FIBER_COUNT,
    CURVE_POINTS,
    AFFINE_ORBIT,
    SPLIT_DIST
};

inline const char* to_string(Family f) {
    switch (f) {
        case Family::POLY_REDUCIBLE: return "POLY_REDUCIBLE";
        case Family::MATRIX_REDUCIBLE: return "MATRIX_REDUCIBLE";
        case Family::MATRIX_SINGULAR: return "MATRIX_SINGULAR";
        case Family::GROUP_REDUCIBLE_MOD_Q: return "GROUP_REDUCIBLE_MOD_Q";
        case Family::FIBER_COUNT: return "FIBER_COUNT";
        case Family::CURVE_POINTS: return "CURVE_POINTS";
        case Family::AFFINE_ORBIT: return "AFFINE_ORBIT";
        case Family::SPLIT_DIST: return "SPLIT_DIST";
    }
    return "?";
}

inline const char* to_string(GroupKind k) {
    switch (k) {
        case GroupKind::SL: return "SL";
        case GroupKind::GL: return "GL";
        case GroupKind::SP: return "SP";
    }
    return "?";
}

struct CountQuery {
    Family family = Family::POLY_REDUCIBLE;
    int degree = 0;  // degree or dimension
    long height = 0;
    std::uint64_t modulus = 0;
    std::optional<long> constant_term;
    std::vector<std::pair<int, long>> fixed;  // (k, a): coefficient of x^k is a
    GroupKind group = GroupKind::SL;
    std::uint64_t cap = default_cap;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;  // > 0 switches Z-families to sampling

    bool uses_height() const {
        return family == Family::POLY_REDUCIBLE || family == Family::MATRIX_REDUCIBLE ||
               family == Family::MATRIX_SINGULAR;
    }
    bool uses_modulus() const { return !uses_height(); }

    /// All coefficient constraints as (k, a), constant term included.
    std::vector<std::pair<int, long>> constraints() const {
        auto c = fixed;
        if (constant_term) c.emplace_back(0, *constant_term);
        std::sort(c.begin(), c.end());
        return c;
    }

    void validate() const {
        if (degree < 1) throw validation_error("degree/dimension must be >= 1");
        if (uses_height() && height < 1) throw validation_error("height must be >= 1");
        if (uses_modulus() && !is_prime_u64(modulus)) throw validation_error("modulus must be prime");
        if (modulus >= (1ULL << 31)) throw validation_error("modulus must be below 2^31");
        if (cap == 0) throw validation_error("cap must be positive");
        const bool coeff_family = family == Family::POLY_REDUCIBLE || family == Family::SPLIT_DIST;
        auto c = constraints();
        if (!coeff_family && !c.empty()) throw validation_error("coefficient constraints only apply to polynomial families");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].first < 0 || c[i].first >= degree)
                throw validation_error("fixed coefficient position must lie in [0, degree)");
            if (i && c[i].first == c[i - 1].first) throw validation_error("coefficient position fixed twice");
        }
        if (samples && !(family == Family::POLY_REDUCIBLE || family == Family::MATRIX_REDUCIBLE ||
                         family == Family::MATRIX_SINGULAR))
            throw validation_error("sampling only applies to the polynomial and matrix families");
    }

    nlohmann::ordered_json echo() const {
        nlohmann::ordered_json j;
        j["family"] = to_string(family);
        j["degree_or_dim"] = degree;
        if (uses_height()) j["height"] = height;
        if (uses_modulus()) j["modulus"] = modulus;
        if (constant_term) j["constant_term"] = *constant_term;
        if (!fixed.empty()) {
            auto arr = nlohmann::ordered_json::array();
            for (auto [k, a] : fixed) arr.push_back({k, a});
            j["fixed"] = arr;
        }
        if (family == Family::GROUP_REDUCIBLE_MOD_Q) j["group"] = to_string(group);
        j["cap"] = cap;
        if (samples) {
            j["samples"] = samples;
            j["seed"] = seed;
        }
        return j;
    }
};

struct CountRecord {
    CountQuery query;
    std::uint64_t total = 0;  // ambient count, or the sample size when sampled
    std::uint64_t hits = 0;
    bool exact = true;
    BigInt population;  // size of the ambient family (equals total when exact)
    double std_error = 0.0;

    double fraction() const { return total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["query"] = query.echo();
        j["total"] = total;
        j["hits"] = hits;
        j["exact"] = exact;
        j["fraction"] = fraction();
        if (!exact) {
            j["population"] = population.get_str();
            j["stderr"] = std_error;
        }
        return j;
    }
};

namespace detail {

inline BigInt ipow(std::uint64_t base, std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 63) throw capacity_error("count does not fit in 64 bits");
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v.get_mpz_t());
    return r;
}

inline double binomial_stderr(std::uint64_t hits, std::uint64_t n) {
    if (n == 0) return 0.0;
    const double f = static_cast<double>(hits) / static_cast<double>(n);
    return std::sqrt(f * (1.0 - f) / static_cast<double>(n));
}

inline void require_family(const CountQuery& q, Family f) {
    if (q.family != f) throw validation_error(std::string("query family must be ") + to_string(f));
    q.validate();
}

inline void check_cap(const BigInt& work, const CountQuery& q, const char* what) {
    if (work > BigInt(std::to_string(q.cap)))
        throw capacity_error(std::string(what) + ": " + work.get_str() + " items exceed cap " + std::to_string(q.cap) +
                             "; rerun with --samples");
}

// Counts points of a box [-B, B]^m where pred(tuple) holds; parallel over
// the first coordinate.
template <class Pred>
std::uint64_t count_box(std::size_t m, long B, unsigned jobs, Pred pred) {
    const std::size_t width = static_cast<std::size_t>(2 * B + 1);
    if (m == 0) return pred(std::vector<long>{}) ? 1 : 0;
    auto parts = parallel_map(width, jobs, [&](std::size_t lead) {
        std::vector<long> t(m, -B);
        t[0] = static_cast<long>(lead) - B;
        std::uint64_t hits = 0;
        while (true) {
            if (pred(t)) ++hits;
            std::size_t i = m - 1;
            while (i > 0 && t[i] == B) t[i--] = -B;
            if (i == 0) break;
            ++t[i];
        }
        return hits;
    });
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

template <class Pred>
std::uint64_t sample_box(std::size_t m, long B, const CountQuery& q, Pred pred) {
    auto flags = parallel_map(q.samples, q.jobs, [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(q.seed, i));
        std::uniform_int_distribution<long> d(-B, B);
        std::vector<long> t(m);
        for (auto& v : t) v = d(rng);
        return pred(t) ? 1 : 0;
    });
    return static_cast<std::uint64_t>(std::accumulate(flags.begin(), flags.end(), 0LL));
}

template <class Pred>
CountRecord box_record(const CountQuery& q, std::size_t m, Pred pred, const char* what) {
    CountRecord r;
    r.query = q;
    r.population = ipow(static_cast<std::uint64_t>(2 * q.height + 1), m);
    if (q.samples) {
        r.exact = false;
        r.total = q.samples;
        r.hits = sample_box(m, q.height, q, pred);
        r.std_error = binomial_stderr(r.hits, r.total);
        return r;
    }
    check_cap(r.population, q, what);
    r.total = to_u64(r.population);
    r.hits = count_box(m, q.height, q.jobs, pred);
    return r;
}

inline IntMatrix matrix_from(const std::vector<long>& t, std::size_t n) {
    std::vector<BigInt> e;
    e.reserve(t.size());
    for (long v : t) e.emplace_back(v);
    return IntMatrix(n, std::move(e));
}

// N(v) = #{(b, c) in [-B, B]^2 : b*c = v}, indexed by v + B^2.
inline std::vector<std::uint64_t> product_counts(long B) {
    std::vector<std::uint64_t> n(static_cast<std::size_t>(2 * B * B + 1), 0);
    for (long b = -B; b <= B; ++b)
        for (long c = -B; c <= B; ++c) ++n[static_cast<std::size_t>(b * c + B * B)];
    return n;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Z-families
// ---------------------------------------------------------------------------

/// Monic degree-d polynomials with |coeffs| <= B (constraints respected)
/// that are reducible over Z.
inline CountRecord count_reducible_polys(const CountQuery& q) {
    detail::require_family(q, Family::POLY_REDUCIBLE);
    const int d = q.degree;
    std::vector<std::optional<long>> fixed(d);
    for (auto [k, a] : q.constraints()) fixed[k] = a;
    std::vector<int> free;
    for (int k = d - 1; k >= 0; --k)
        if (!fixed[k]) free.push_back(k);  // leading coefficient first
    auto pred = [&](const std::vector<long>& t) {
        if (d == 1) return false;
        std::vector<BigInt> c(d + 1);
        c[d] = 1;
        for (int k = 0; k < d; ++k)
            if (fixed[k]) c[k] = *fixed[k];
        for (std::size_t i = 0; i < free.size(); ++i) c[free[i]] = t[i];
        return is_reducible_over_Z(ZPoly(std::move(c)));
    };
    return detail::box_record(q, free.size(), pred, "polynomial enumeration");
}

/// n x n integer matrices with |entries| <= B and reducible characteristic
/// polynomial. n = 2 counts (a - d, bc) classes: the char poly splits iff
/// (a - d)^2 + 4bc is a square.
inline CountRecord count_reducible_matrices(const CountQuery& q) {
    detail::require_family(q, Family::MATRIX_REDUCIBLE);
    const std::size_t n = static_cast<std::size_t>(q.degree);
    const long B = q.height;
    if (n == 2 && !q.samples) {
        CountRecord r;
        r.query = q;
        r.population = detail::ipow(static_cast<std::uint64_t>(2 * B + 1), 4);
        detail::check_cap(BigInt(static_cast<unsigned long>(4 * B + 1)) * (2 * B * B + 1), q, "2x2 class enumeration");
        r.total = detail::to_u64(r.population);
        const auto N = detail::product_counts(B);
        auto parts = parallel_map(static_cast<std::size_t>(4 * B + 1), q.jobs, [&](std::size_t i) {
            const long s = static_cast<long>(i) - 2 * B;
            std::uint64_t h = 0;
            for (long v = -B * B; v <= B * B; ++v) {
                const auto cnt = N[static_cast<std::size_t>(v + B * B)];
                if (cnt && is_perfect_square(s * s + 4 * v)) h += cnt;
            }
            return h * static_cast<std::uint64_t>(2 * B + 1 - std::labs(s));
        });
        r.hits = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
        return r;
    }
    auto pred = [&](const std::vector<long>& t) {
        if (n == 1) return false;
        return is_reducible_over_Z(char_poly(detail::matrix_from(t, n)));
    };
    return detail::box_record(q, n * n, pred, "matrix enumeration");
}

/// n x n integer matrices with |entries| <= B and determinant 0. n = 2 uses
/// #{ad = bc} = sum_v N(v)^2.
inline CountRecord count_singular_matrices(const CountQuery& q) {
    detail::require_family(q, Family::MATRIX_SINGULAR);
    const std::size_t n = static_cast<std::size_t>(q.degree);
    const long B = q.height;
    if (n == 2 && !q.samples) {
        CountRecord r;
        r.query = q;
        r.population = detail::ipow(static_cast<std::uint64_t>(2 * B + 1), 4);
        detail::check_cap(BigInt(static_cast<unsigned long>(2 * B + 1)) * (2 * B + 1), q, "2x2 product table");
        r.total = detail::to_u64(r.population);
        for (auto c : detail::product_counts(B)) r.hits += c * c;
        return r;
    }
    auto pred = [&](const std::vector<long>& t) {
        if (n == 1) return t[0] == 0;
        return det(detail::matrix_from(t, n)) == 0;
    };
    return detail::box_record(q, n * n, pred, "matrix enumeration");
}

// ---------------------------------------------------------------------------
// Finite-field families
// ---------------------------------------------------------------------------

struct GroupRecord {
    CountRecord count;  // total = group order, hits = reducible elements
    GroupId group{GroupKind::SL, 1};
    BigInt expected_order;
};

/// Fraction of elements of G(n, F_q) (closure of the standard generators)
/// whose characteristic polynomial is reducible over F_q.
inline GroupRecord group_reducible_fraction(const CountQuery& q) {
    detail::require_family(q, Family::GROUP_REDUCIBLE_MOD_Q);
    GroupId id(q.group, static_cast<std::size_t>(q.degree));
    PrimeField F(q.modulus);
    GroupRecord r{CountRecord{}, id, expected_group_order(id, q.modulus)};
    detail::check_cap(r.expected_order, q, "group order");
    FiniteGroup g = enumerate_group(standard_generators(id), F, q.cap);
    if (BigInt(static_cast<unsigned long>(g.order())) != r.expected_order)
        throw std::logic_error("closure of the generators has order " + std::to_string(g.order()) + ", formula gives " +
                               r.expected_order.get_str());
    auto flags = parallel_map(g.order(), q.jobs, [&](std::size_t e) {
        return is_irreducible_mod_p(char_poly_mod_p(g.elements[e], id.n, F)) ? 0 : 1;
    });
    r.count.query = q;
    r.count.total = g.order();
    r.count.population = r.expected_order;
    r.count.hits = static_cast<std::uint64_t>(std::accumulate(flags.begin(), flags.end(), 0LL));
    return r;
}

struct FiberRecord {
    CountRecord count;  // total = |GL(N, p)|, hits = #{M : char poly of M = F}
    ZPoly F;
    BigInt lower, upper;  // (p -+ 3)^(N^2 - N), lower clamped at 0
    bool pass = false;
};

/// Invertible N x N matrices over F_p with characteristic polynomial F.
inline FiberRecord fiber_count(const ZPoly& F, const PrimeField& field, std::uint64_t cap = default_cap,
                               unsigned jobs = 1) {
    const std::uint64_t p = field.p();
    if (!F.is_monic() || F.degree() < 1) throw validation_error("fiber_count needs a monic polynomial of degree >= 1");
    if (field.reduce(F.coeff(0)) == 0) throw validation_error("constant term must be nonzero mod p");
    const std::size_t N = static_cast<std::size_t>(F.degree());
    FiberRecord r;
    r.F = F;
    r.count.query.family = Family::FIBER_COUNT;
    r.count.query.degree = static_cast<int>(N);
    r.count.query.modulus = p;
    r.count.query.cap = cap;
    r.count.query.jobs = jobs;
    BigInt gl = 1;
    for (std::size_t i = 0; i < N; ++i) gl *= detail::ipow(p, N) - detail::ipow(p, i);
    r.count.population = gl;
    r.count.total = detail::to_u64(gl);
    const ModPoly target = mod_reduce(F, field);
    if (N == 1) {
        r.count.hits = 1;
    } else if (N == 2) {
        // x^2 - t x + n: a + d = t, bc = ad - n.
        const std::uint32_t n = target.coeff(0), t = field.neg(target.coeff(1));
        for (std::uint32_t a = 0; a < p; ++a) {
            const std::uint32_t d = field.sub(t, a);
            r.count.hits += field.sub(field.mul(a, d), n) == 0 ? 2 * p - 1 : p - 1;
        }
    } else {
        detail::check_cap(detail::ipow(p, N * N), r.count.query, "matrix enumeration over F_p");
        const std::size_t m = N * N;
        auto parts = parallel_map(static_cast<std::size_t>(p), jobs, [&](std::size_t lead) {
            std::vector<std::uint32_t> t(m, 0);
            t[0] = static_cast<std::uint32_t>(lead);
            std::uint64_t h = 0;
            while (true) {
                if (char_poly_mod_p(t, N, field) == target) ++h;
                std::size_t i = m - 1;
                while (i > 0 && t[i] == p - 1) t[i--] = 0;
                if (i == 0) break;
                ++t[i];
            }
            return h;
        });
        r.count.hits = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
    }
    const std::uint64_t e = N * N - N;
    r.lower = p > 3 ? detail::ipow(p - 3, e) : BigInt(0);
    r.upper = detail::ipow(p + 3, e);
    const BigInt h(std::to_string(r.count.hits));
    r.pass = r.lower <= h && h <= r.upper;
    return r;
}

struct WeilRecord {
    ModPoly f;
    unsigned d = 0;
    std::uint64_t p = 0;
    std::uint64_t affine_count = 0;
    std::uint64_t genus_bound = 0;
    std::uint64_t bound = 0;
    bool pass = false;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["f"] = f.to_string();
        j["d"] = d;
        j["p"] = p;
        j["affine_count"] = affine_count;
        j["genus_bound"] = genus_bound;
        j["bound"] = bound;
        j["pass"] = pass;
        return j;
    }
};

/// y^d - f(x) is absolutely irreducible iff f is not a q-th power over the
/// algebraic closure for any prime q | d (-4 w^4 is a 4th power there).
inline bool curve_absolutely_irreducible(const ModPoly& f, unsigned d) {
    if (f.degree() < 1) return false;
    const auto fs = factor_mod_p(f, 0);
    for (auto q : prime_divisors(d)) {
        bool all = true;
        for (const auto& fac : fs)
            if (fac.multiplicity % q) all = false;
        if (all) return false;
    }
    return true;
}

/// Affine points of y^d = f(x) over F_p, against 2 g sqrt(p) + d^2 with
/// g <= (D - 1)(D - 2), D = max(d, deg f).
inline WeilRecord curve_point_count(const ModPoly& f, unsigned d) {
    if (d < 2) throw validation_error("curve exponent d must be >= 2");
    if (!curve_absolutely_irreducible(f, d))
        throw not_absolutely_irreducible("y^" + std::to_string(d) + " = " + f.to_string() +
                                         " is not absolutely irreducible");
    const auto& F = f.field();
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> roots(p, 0);  // #{y : y^d = v}
    for (std::uint32_t y = 0; y < p; ++y) ++roots[F.pow(y, d)];
    WeilRecord r{f, d, p};
    for (std::uint32_t x = 0; x < p; ++x) r.affine_count += roots[f.eval(x)];
    const std::uint64_t D = std::max<std::uint64_t>(d, static_cast<std::uint64_t>(f.degree()));
    r.genus_bound = (D - 1) * (D - 2);
    r.bound = 2 * r.genus_bound * isqrt_u64(p) + std::uint64_t(d) * d;
    const std::uint64_t dev = r.affine_count > p ? r.affine_count - p : p - r.affine_count;
    r.pass = dev <= r.bound;
    return r;
}

struct OrbitRecord {
    CountRecord count;  // total = p(p - 1) substitutions, hits = orbit size
    ModPoly f;
    bool predicted_free = false;  // p > d and the x^(d-1) coefficient is nonzero
    std::uint64_t stabilizer = 0;
};

/// Orbit of the monic normalization of f under x -> ax + b, a != 0.
inline OrbitRecord affine_orbit_size(const ModPoly& f) {
    if (f.degree() < 1) throw validation_error("affine orbit needs degree >= 1");
    const auto& F = f.field();
    const std::uint64_t p = F.p();
    const ModPoly g = f.monic();
    const int d = g.degree();
    std::set<std::vector<std::uint32_t>> orbit;
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) orbit.insert(compose_affine(g, a, b).monic().coeffs());
    OrbitRecord r{CountRecord{}, g};
    r.count.query.family = Family::AFFINE_ORBIT;
    r.count.query.degree = d;
    r.count.query.modulus = p;
    r.count.total = p * (p - 1);
    r.count.population = r.count.total;
    r.count.hits = orbit.size();
    r.predicted_free = p > static_cast<std::uint64_t>(d) && g.coeff(d - 1) != 0;
    r.stabilizer = r.count.total / r.count.hits;
    return r;
}

struct SplitRecord {
    CountQuery query;
    std::uint64_t restricted_total = 0, unrestricted_total = 0;
    std::map<SplittingType, std::pair<std::uint64_t, std::uint64_t>> counts;  // type -> (restricted, unrestricted)
    double max_diff = 0.0;
    bool coprime_factorial = false;  // gcd(p, (d - k)!) = 1
    bool coprime_linear = false;     // gcd(p, d - k) = 1

    double diff(const SplittingType& t) const {
        const auto& [a, b] = counts.at(t);
        return std::fabs(static_cast<double>(a) / restricted_total - static_cast<double>(b) / unrestricted_total);
    }
};

/// Splitting types of monic degree-d polynomials over F_p with one fixed
/// coefficient versus all monic degree-d polynomials.
inline SplitRecord restricted_splitting_distribution(const CountQuery& q) {
    detail::require_family(q, Family::SPLIT_DIST);
    const auto cons = q.constraints();
    if (cons.size() != 1) throw validation_error("splitting distribution needs exactly one fixed coefficient");
    const int d = q.degree, k = cons[0].first;
    const std::uint64_t p = q.modulus;
    if (static_cast<std::uint64_t>(d) >= p) throw validation_error("splitting distribution needs degree < p");
    PrimeField F(p);
    detail::check_cap(detail::ipow(p, d), q, "splitting enumeration");
    const std::uint32_t a = F.reduce(static_cast<std::int64_t>(cons[0].second));

    using Tally = std::map<SplittingType, std::pair<std::uint64_t, std::uint64_t>>;
    const std::uint64_t rest = detail::to_u64(detail::ipow(p, d - 1));
    // chunk by the top coefficient (x^(d-1)); everything below is a counter
    auto parts = parallel_map(static_cast<std::size_t>(p), q.jobs, [&](std::size_t top) {
        Tally t;
        std::vector<std::uint32_t> c(d + 1, 0);
        c[d] = 1;
        c[d - 1] = static_cast<std::uint32_t>(top);
        for (std::uint64_t i = 0; i < rest; ++i) {
            std::uint64_t v = i;
            for (int j = 0; j < d - 1; ++j, v /= p) c[j] = static_cast<std::uint32_t>(v % p);
            auto& cell = t[splitting_type(ModPoly(F, c))];
            ++cell.second;
            if (c[k] == a) ++cell.first;
        }
        return t;
    });
    SplitRecord r;
    r.query = q;
    for (const auto& t : parts)
        for (const auto& [type, cnt] : t) {
            auto& cell = r.counts[type];
            cell.first += cnt.first;
            cell.second += cnt.second;
        }
    r.restricted_total = rest;
    r.unrestricted_total = rest * p;
    for (const auto& [type, cnt] : r.counts) r.max_diff = std::max(r.max_diff, r.diff(type));
    r.coprime_linear = std::gcd<std::uint64_t, std::uint64_t>(p, static_cast<std::uint64_t>(d - k)) == 1;
    r.coprime_factorial = p > static_cast<std::uint64_t>(d - k);
    return r;
}

}  // namespace polymat
