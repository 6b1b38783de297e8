#pragma once

/**
 * @file ffpoly.hpp
 * @brief Polynomials over prime fields F_p: arithmetic, complete
 *        factorization, splitting types, and the X^n - a criterion.
 *
 * Factorization runs squarefree decomposition, then distinct-degree
 * factorization, then randomized equal-degree splitting (Cantor-Zassenhaus for
 * odd p, the trace map for p = 2). The splitting randomness comes only from the
 * caller's seed.
 */

#include "common.hpp"
#include "zpoly_core.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace polymat {

/// F_p for a prime p < 2^31, so a product of residues fits in 64 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p))
            throw validation_error("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t reduce(const BigInt& v) const {
        return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        return static_cast<std::uint32_t>(pow_mod(a, e, p_));
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw validation_error("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    /// a != 0 is a q-th power in F_p iff a^((p-1)/gcd(q,p-1)) = 1.
    bool is_power(std::uint32_t a, std::uint64_t q) const {
        if (a == 0) return true;
        std::uint64_t g = std::gcd<std::uint64_t>(q, p_ - 1);
        return pow(a, (p_ - 1) / g) == 1;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

// ---------------------------------------------------------------------------

class ModPoly {
public:
    explicit ModPoly(PrimeField field) : f_(field) {}
    ModPoly(PrimeField field, std::vector<std::uint32_t> coeffs) : f_(field), c_(std::move(coeffs)) {
        for (auto v : c_)
            if (v >= f_.p()) throw validation_error("residue " + std::to_string(v) + " not reduced mod " + std::to_string(f_.p()));
        trim();
    }
    /// Coefficients given as signed integers, reduced into [0, p).
    static ModPoly from_ints(PrimeField field, const std::vector<std::int64_t>& coeffs) {
        std::vector<std::uint32_t> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(field.reduce(v));
        return ModPoly(field, std::move(c));
    }
    static ModPoly constant(PrimeField field, std::uint32_t v) { return ModPoly(field, {v % field.p()}); }
    static ModPoly x(PrimeField field) { return ModPoly(field, {0, 1}); }

    const PrimeField& field() const { return f_; }
    std::uint32_t p() const { return f_.p(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

    ModPoly monic() const {
        if (c_.empty()) return *this;
        std::uint32_t li = f_.inv(lead());
        return scale(li);
    }
    ModPoly scale(std::uint32_t s) const {
        std::vector<std::uint32_t> r(c_);
        for (auto& v : r) v = f_.mul(v, s);
        return ModPoly(f_, std::move(r));
    }

    ModPoly derivative() const {
        if (c_.size() <= 1) return ModPoly(f_);
        std::vector<std::uint32_t> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(c_[i], f_.reduce(static_cast<std::int64_t>(i)));
        return ModPoly(f_, std::move(r));
    }

    std::uint32_t eval(std::uint32_t x) const {
        std::uint32_t r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_.add(f_.mul(r, x), *it);
        return r;
    }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    /// Degree first, then coefficients from the top; a total order for canonical sorting.
    friend std::strong_ordering operator<=>(const ModPoly& a, const ModPoly& b) {
        if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        const auto& F = a.f_;
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
        return ModPoly(F, std::move(r));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        const auto& F = a.f_;
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
        return ModPoly(F, std::move(r));
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        if (a.is_zero() || b.is_zero()) return ModPoly(a.f_);
        const std::uint64_t p = a.p();
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
        }
        std::vector<std::uint32_t> r(acc.begin(), acc.end());
        return ModPoly(a.f_, std::move(r));
    }

    /// Quotient and remainder; b must be nonzero.
    static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
        if (b.is_zero()) throw validation_error("polynomial division by zero");
        const auto& F = a.f_;
        if (a.degree() < b.degree()) return {ModPoly(F), a};
        std::vector<std::uint32_t> rem(a.c_);
        std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        std::uint32_t li = F.inv(b.lead());
        const int db = b.degree();
        for (int i = a.degree() - db; i >= 0; --i) {
            std::uint32_t t = F.mul(rem[static_cast<std::size_t>(i + db)], li);
            q[static_cast<std::size_t>(i)] = t;
            if (!t) continue;
            for (int j = 0; j <= db; ++j) {
                auto& slot = rem[static_cast<std::size_t>(i + j)];
                slot = F.sub(slot, F.mul(t, b.c_[static_cast<std::size_t>(j)]));
            }
        }
        rem.resize(static_cast<std::size_t>(db));
        return {ModPoly(F, std::move(q)), ModPoly(F, std::move(rem))};
    }
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

    /// Space-free text form, e.g. "x^2+4x+1".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            std::uint32_t v = c_[static_cast<std::size_t>(i)];
            if (!v) continue;
            if (!s.empty()) s += '+';
            if (v != 1 || i == 0) s += std::to_string(v);
            if (i >= 1) s += 'x';
            if (i >= 2) s += '^' + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField f_;
    std::vector<std::uint32_t> c_;
};

struct ModFactor {
    ModPoly factor;
    int multiplicity;
    friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

// ---------------------------------------------------------------------------

/// Degrees of the irreducible factors, with multiplicity, in non-increasing order.
struct SplittingType {
    std::vector<unsigned> parts;

    SplittingType() = default;
    explicit SplittingType(std::vector<unsigned> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }
    unsigned degree() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

    /// "{2,1}".
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + "}";
    }

    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

// ---------------------------------------------------------------------------

inline ModPoly mod_reduce(const ZPoly& f, const PrimeField& field) {
    std::vector<std::uint32_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(field.reduce(v));
    return ModPoly(field, std::move(c));
}

/// Monic gcd. Both-zero input is rejected.
inline ModPoly poly_gcd(ModPoly a, ModPoly b) {
    if (a.is_zero() && b.is_zero()) throw validation_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m.
inline ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m) {
    ModPoly r = ModPoly::constant(m.field(), 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return r;
}

/// f(a*x + b).
inline ModPoly compose_affine(const ModPoly& f, std::uint32_t a, std::uint32_t b) {
    const auto& F = f.field();
    ModPoly lin(F, {b, a});
    ModPoly r(F);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * lin + ModPoly::constant(F, *it);
    return r;
}

namespace detail {

// g with g(x)^p = f(x); requires f' = 0.
inline ModPoly pth_root(const ModPoly& f) {
    const std::size_t p = f.p();
    std::vector<std::uint32_t> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
    return ModPoly(f.field(), std::move(r));
}

inline void squarefree_rec(const ModPoly& f, int mult, std::vector<ModFactor>& out) {
    if (f.degree() <= 0) return;
    ModPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_rec(pth_root(f), mult * static_cast<int>(f.p()), out);
        return;
    }
    ModPoly c = poly_gcd(f, fp);
    ModPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = poly_gcd(w, c);
        ModPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_rec(pth_root(c), mult * static_cast<int>(f.p()), out);
}

}  // namespace detail

/// Squarefree decomposition of a monic f: pairwise coprime squarefree monic
/// parts s_i with f = prod s_i^m_i.
inline std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
    if (f.degree() < 1) throw validation_error("squarefree decomposition needs degree >= 1");
    std::vector<ModFactor> out;
    detail::squarefree_rec(f.monic(), 1, out);
    return out;
}

/// Distinct-degree factorization of a monic squarefree f: pairs (g_d, d) where
/// g_d is the product of all irreducible factors of degree d.
inline std::vector<std::pair<ModPoly, int>> distinct_degree_factorization(const ModPoly& f) {
    const auto& F = f.field();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rest = f.monic();
    ModPoly x = ModPoly::x(F);
    ModPoly h = x % rest;
    int d = 0;
    while (rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, F.p(), rest);
        ModPoly g = poly_gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

/// Splits a monic product of distinct irreducibles, all of degree d.
inline void equal_degree_split(const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (g.degree() <= d) {
        out.push_back(g);
        return;
    }
    const auto& F = g.field();
    const std::uint32_t p = F.p();
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    while (true) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = coeff(rng);
        ModPoly a(F, std::move(c));
        if (a.degree() < 1) continue;
        ModPoly t(F);
        if (p == 2) {
            // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
            ModPoly term = a % g;
            t = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                t = t + term;
            }
        } else {
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
            ModPoly frob = a % g, norm = a % g;
            for (int i = 1; i < d; ++i) {
                frob = powmod(frob, p, g);
                norm = (norm * frob) % g;
            }
            t = powmod(norm, (p - 1) / 2, g) - ModPoly::constant(F, 1);
        }
        if (t.is_zero()) continue;
        ModPoly h = poly_gcd(t, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// canonically sorted. f = lead(f) * prod factor^multiplicity.
inline std::vector<ModFactor> factor_mod_p(const ModPoly& f, std::uint64_t rng_seed) {
    if (f.degree() < 1) throw validation_error("factor_mod_p needs a polynomial of degree >= 1");
    std::mt19937_64 rng(rng_seed);
    std::vector<ModFactor> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [g, d] : distinct_degree_factorization(part)) {
            std::vector<ModPoly> pieces;
            equal_degree_split(g, d, rng, pieces);
            for (auto& q : pieces) out.push_back({std::move(q), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

/// Irreducible-factor degrees with multiplicity: (x-1)^2 has type {1,1}.
inline SplittingType splitting_type(const ModPoly& f) {
    if (f.degree() < 1) throw validation_error("splitting_type needs a polynomial of degree >= 1");
    std::vector<unsigned> parts;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const auto& [g, d] : distinct_degree_factorization(part))
            for (int k = 0; k < (g.degree() / d) * mult; ++k) parts.push_back(static_cast<unsigned>(d));
    return SplittingType(std::move(parts));
}

inline bool is_squarefree(const ModPoly& f) {
    if (f.degree() < 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Ben-Or: f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= n/2.
inline bool is_irreducible_mod_p(const ModPoly& f) {
    if (f.degree() < 1) throw validation_error("is_irreducible_mod_p needs degree >= 1");
    if (f.degree() == 1) return true;
    const auto& F = f.field();
    ModPoly m = f.monic();
    ModPoly x = ModPoly::x(F);
    ModPoly h = x;
    for (int i = 1; i <= m.degree() / 2; ++i) {
        h = powmod(h, F.p(), m);
        if (poly_gcd(h - x, m).degree() > 0) return false;
    }
    return true;
}

/// X^n - a is irreducible over F_p iff a is not a q-th power for every prime
/// q | n and, when 4 | n, a is not in -4 F_p^4.
inline bool xn_minus_a_irreducible(std::uint64_t n, std::int64_t a, const PrimeField& field) {
    if (n < 2) throw validation_error("X^n - a criterion needs n >= 2");
    std::uint32_t r = field.reduce(a);
    if (r == 0) throw validation_error("X^n - a criterion needs a != 0");
    for (auto q : prime_divisors(n))
        if (field.is_power(r, q)) return false;
    if (n % 4 == 0 && field.p() != 2) {
        std::uint32_t scaled = field.mul(r, field.inv(field.neg(field.reduce(4))));
        if (field.is_power(scaled, 4)) return false;
    }
    return true;
}

}  // namespace polymat
