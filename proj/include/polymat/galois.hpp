#pragma once

/**
 * @file galois.hpp
 * @brief Certificates with re-verifiable witnesses: Galois group S_n from
 *        Frobenius splitting types, irreducibility of all powers, and the
 *        Casson-Bleiler pseudo-Anosov criterion; plus resultants,
 *        discriminants and the characteristic polynomial of a k-th power.
 */

#include "bareiss.hpp"
#include "common.hpp"
#include "ffpoly.hpp"
#include "zpoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polymat {

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

namespace detail {

// Sylvester matrix of a (deg m) and b (deg n) with entries in T, given the
// coefficient lists from the constant term upward.
template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
    std::vector<std::vector<T>> s(N, std::vector<T>(N, zero));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
    return s;
}

inline BigInt bigint_divexact(const BigInt& x, const BigInt& y) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

}  // namespace detail

/// Res(a, b) = det Sylvester(a, b).
inline BigInt resultant(const ZPoly& a, const ZPoly& b) {
    if (a.degree() < 1 && b.degree() < 1) throw validation_error("resultant needs a nonconstant argument");
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0 || b.degree() == 0) {
        // Res(c, b) = c^deg b
        const BigInt& c = a.degree() == 0 ? a.lead() : b.lead();
        const int e = a.degree() == 0 ? b.degree() : a.degree();
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }
    auto s = detail::sylvester(a.coeffs(), b.coeffs(), BigInt(0));
    return bareiss_determinant<BigInt>(
        std::move(s), BigInt(0), BigInt(1), [](const BigInt& v) { return v == 0; }, detail::bigint_divexact);
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline BigInt discriminant(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("discriminant needs degree >= 1");
    const int n = f.degree();
    if (n == 1) return 1;
    BigInt r = detail::bigint_divexact(resultant(f, f.derivative()), f.lead());
    return (n * (n - 1) / 2) % 2 ? BigInt(-r) : r;
}

/// The monic polynomial whose roots are the k-th powers of the roots of
/// monic f: Res_y(f(y), x - y^k), a Sylvester determinant over Z[x].
inline ZPoly power_char_poly(const ZPoly& f, unsigned k) {
    if (!f.is_monic()) throw validation_error("power_char_poly needs a monic polynomial");
    if (k == 0) throw validation_error("power_char_poly needs k >= 1");
    if (f.degree() < 1) throw validation_error("power_char_poly needs degree >= 1");
    if (k == 1) return f;
    std::vector<ZPoly> a;
    for (const auto& c : f.coeffs()) a.push_back(ZPoly::constant(c));
    std::vector<ZPoly> b(k + 1);
    b[0] = ZPoly::x();
    b[k] = ZPoly::constant(-1);
    auto s = detail::sylvester(a, b, ZPoly());
    ZPoly r = bareiss_determinant<ZPoly>(
        std::move(s), ZPoly(), ZPoly::constant(1), [](const ZPoly& v) { return v.is_zero(); },
        [](const ZPoly& x, const ZPoly& y) { return x.exact_div(y); });
    if (r.lead() == -1) r = -r;
    if (!r.is_monic() || r.degree() != f.degree()) throw std::logic_error("power_char_poly: resultant not monic of degree n");
    return r;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class Claim { SN_GALOIS, PSEUDO_ANOSOV, POWER_IRREDUCIBLE };
enum class Verdict { PROVED, REFUTED, INCONCLUSIVE };

inline const char* to_string(Claim c) {
    switch (c) {
        case Claim::SN_GALOIS: return "SN_GALOIS";
        case Claim::PSEUDO_ANOSOV: return "PSEUDO_ANOSOV";
        case Claim::POWER_IRREDUCIBLE: return "POWER_IRREDUCIBLE";
    }
    return "?";
}
inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::PROVED: return "PROVED";
        case Verdict::REFUTED: return "REFUTED";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

struct SplitWitness {
    std::uint64_t prime;
    SplittingType type;
    friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

/// Factor-type evidence. `kind` is one of
///  "factor"          a proper factor of the input,
///  "cyclotomic"      a cyclotomic divisor Phi_m (m recorded),
///  "power_form"      f = h(x^k), k recorded,
///  "reducible_power" the k-th power has the recorded proper factor,
///  "irreducible_mod" a prime (in k) where the input stays irreducible.
struct FactorWitness {
    std::string kind;
    std::uint64_t k = 0;
    ZPoly factor;
    friend bool operator==(const FactorWitness&, const FactorWitness&) = default;
};

struct Certificate {
    Claim claim = Claim::SN_GALOIS;
    Verdict verdict = Verdict::INCONCLUSIVE;
    ZPoly input;
    std::vector<SplitWitness> split_witnesses;
    std::vector<FactorWitness> factor_witnesses;
    std::vector<std::string> failed_conditions;
    std::uint64_t primes_tried = 0;
    std::uint64_t k_checked = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["claim"] = to_string(claim);
        j["verdict"] = to_string(verdict);
        j["input"] = input.encode();
        auto w = nlohmann::ordered_json::array();
        for (const auto& s : split_witnesses) w.push_back({{"prime", s.prime}, {"type", s.type.parts}});
        for (const auto& f : factor_witnesses) {
            nlohmann::ordered_json e;
            e["kind"] = f.kind;
            e["k"] = f.k;
            e["factor"] = f.factor.encode();
            w.push_back(e);
        }
        j["witnesses"] = w;
        if (claim == Claim::PSEUDO_ANOSOV) j["failed_conditions"] = failed_conditions;
        if (claim != Claim::PSEUDO_ANOSOV) j["primes_tried"] = primes_tried;
        if (claim == Claim::POWER_IRREDUCIBLE) j["k_checked"] = k_checked;
        return j;
    }

    static Certificate from_json(const nlohmann::ordered_json& j) {
        Certificate c;
        try {
            const std::string claim = j.at("claim"), verdict = j.at("verdict");
            if (claim == "SN_GALOIS") c.claim = Claim::SN_GALOIS;
            else if (claim == "PSEUDO_ANOSOV") c.claim = Claim::PSEUDO_ANOSOV;
            else if (claim == "POWER_IRREDUCIBLE") c.claim = Claim::POWER_IRREDUCIBLE;
            else throw validation_error("unknown claim '" + claim + "'");
            if (verdict == "PROVED") c.verdict = Verdict::PROVED;
            else if (verdict == "REFUTED") c.verdict = Verdict::REFUTED;
            else if (verdict == "INCONCLUSIVE") c.verdict = Verdict::INCONCLUSIVE;
            else throw validation_error("unknown verdict '" + verdict + "'");
            c.input = ZPoly::decode(j.at("input").get<std::string>());
            for (const auto& w : j.at("witnesses")) {
                if (w.contains("prime")) {
                    c.split_witnesses.push_back({w.at("prime").get<std::uint64_t>(),
                                                 SplittingType(w.at("type").get<std::vector<unsigned>>())});
                } else {
                    c.factor_witnesses.push_back({w.at("kind").get<std::string>(), w.at("k").get<std::uint64_t>(),
                                                  ZPoly::decode(w.at("factor").get<std::string>())});
                }
            }
            if (j.contains("failed_conditions")) c.failed_conditions = j.at("failed_conditions").get<std::vector<std::string>>();
            if (j.contains("primes_tried")) c.primes_tried = j.at("primes_tried").get<std::uint64_t>();
            if (j.contains("k_checked")) c.k_checked = j.at("k_checked").get<std::uint64_t>();
        } catch (const nlohmann::json::exception& e) {
            throw validation_error(std::string("malformed certificate: ") + e.what());
        }
        return c;
    }
};

inline constexpr std::uint64_t default_prime_budget = 100;

namespace detail {

// Types that together force S_n: {n}, {n-1,1}, {2,1^(n-2)}; for n = 2 only {2}.
inline std::vector<SplittingType> sn_required_types(unsigned n) {
    std::vector<SplittingType> req;
    req.emplace_back(std::vector<unsigned>{n});
    if (n >= 3) {
        req.emplace_back(std::vector<unsigned>{n - 1, 1});
        std::vector<unsigned> tr(n - 1, 1);
        tr[0] = 2;
        SplittingType t(tr);
        if (t != req.back()) req.push_back(t);
    }
    return req;
}

inline bool divides_properly(const ZPoly& factor, const ZPoly& f) {
    if (factor.degree() < 1 || factor.degree() >= f.degree()) return false;
    ZPoly q;
    return f.try_divide(factor, q);
}

inline ZPoly first_proper_factor(const ZPoly& f) {
    auto fz = factor_over_Z(f);
    return fz.factors.front().factor;
}

// Smallest m with Phi_m | f, 0 if none (phi(m) <= deg f).
inline std::uint64_t cyclotomic_divisor(const ZPoly& f) {
    const auto n = static_cast<std::size_t>(f.degree());
    const auto table = cyclotomic_table(2 * n * n, n);
    for (std::size_t m = 1; m < table.size(); ++m) {
        if (table[m].is_zero()) continue;
        ZPoly q;
        if (f.try_divide(table[m], q)) return m;
    }
    return 0;
}

inline bool sieve_witnesses_hold(const ZPoly& f, const std::vector<SplitWitness>& ws) {
    const BigInt disc = discriminant(f);
    if (disc == 0) return false;
    for (const auto& w : ws) {
        if (w.prime >= (1ULL << 31) || !is_prime_u64(w.prime)) return false;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(w.prime))) return false;
        if (splitting_type(mod_reduce(f, PrimeField(w.prime))) != w.type) return false;
    }
    for (const auto& t : sn_required_types(static_cast<unsigned>(f.degree()))) {
        bool seen = false;
        for (const auto& w : ws) seen = seen || w.type == t;
        if (!seen) return false;
    }
    return true;
}

}  // namespace detail

/// Galois group S_n via the classical triple: an n-cycle, an (n-1)-cycle and
/// a transposition among Frobenius types at primes not dividing disc(f),
/// scanning the first `prime_budget` such primes from 2 upward.
inline Certificate certify_sn(const ZPoly& f, std::uint64_t prime_budget = default_prime_budget) {
    if (f.degree() < 2) throw validation_error("certify_sn needs degree >= 2");
    if (!f.is_monic()) throw validation_error("certify_sn needs a monic polynomial");
    const BigInt disc = discriminant(f);
    if (disc == 0) throw validation_error("certify_sn needs a squarefree polynomial");
    Certificate c;
    c.claim = Claim::SN_GALOIS;
    c.input = f;
    if (is_reducible_over_Z(f)) {
        c.verdict = Verdict::REFUTED;
        c.factor_witnesses.push_back({"factor", 0, detail::first_proper_factor(f)});
        return c;
    }
    const auto n = static_cast<unsigned>(f.degree());
    auto required = detail::sn_required_types(n);
    std::vector<bool> found(required.size(), false);
    std::size_t missing = required.size();
    for (std::uint64_t p = 2; c.primes_tried < prime_budget && missing > 0; p = next_prime(p + 1)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ++c.primes_tried;
        SplittingType t = splitting_type(mod_reduce(f, PrimeField(p)));
        for (std::size_t i = 0; i < required.size(); ++i)
            if (!found[i] && t == required[i]) {
                found[i] = true;
                --missing;
                c.split_witnesses.push_back({p, t});
            }
    }
    c.verdict = missing == 0 ? Verdict::PROVED : Verdict::INCONCLUSIVE;
    return c;
}

/// Irreducibility of every power: the sieve route (S_n with n >= 3, f not
/// cyclotomic, |f(0)| = 1, so no two roots differ by a root of unity) and the
/// direct route (power_char_poly(f, k) irreducible for k = 1..k_max).
inline Certificate certify_power_irreducible(const ZPoly& f, unsigned k_max,
                                             std::uint64_t prime_budget = default_prime_budget) {
    if (f.degree() < 2) throw validation_error("certify_power_irreducible needs degree >= 2");
    if (!f.is_monic()) throw validation_error("certify_power_irreducible needs a monic polynomial");
    Certificate c;
    c.claim = Claim::POWER_IRREDUCIBLE;
    c.input = f;

    bool sieve = false;
    if (f.degree() >= 3 && abs(f.coeffs()[0]) == 1 && discriminant(f) != 0) {
        Certificate sn = certify_sn(f, prime_budget);
        c.primes_tried = sn.primes_tried;
        if (sn.verdict == Verdict::PROVED && !is_cyclotomic_product(f)) {
            sieve = true;
            c.split_witnesses = sn.split_witnesses;
        }
    }

    std::optional<FactorWitness> refuted;
    for (unsigned k = 1; k <= k_max && !refuted; ++k) {
        ZPoly pk = power_char_poly(f, k);
        c.k_checked = k;
        if (is_reducible_over_Z(pk)) refuted = FactorWitness{"reducible_power", k, detail::first_proper_factor(pk)};
    }
    if (refuted) {
        if (sieve) throw std::logic_error("certify_power_irreducible: sieve and direct routes disagree on " + f.encode());
        c.split_witnesses.clear();
        c.factor_witnesses.push_back(*refuted);
        c.verdict = Verdict::REFUTED;
    } else {
        c.verdict = sieve ? Verdict::PROVED : Verdict::INCONCLUSIVE;
    }
    return c;
}

/// Casson-Bleiler: irreducible, not cyclotomic, not of the form h(x^k).
/// Every violated condition is listed with its witness.
inline Certificate certify_pseudo_anosov(const ZPoly& f) {
    if (!f.is_monic()) throw validation_error("certify_pseudo_anosov needs a monic polynomial");
    if (f.degree() < 2 || f.degree() % 2 != 0) throw validation_error("certify_pseudo_anosov needs even degree >= 2");
    Certificate c;
    c.claim = Claim::PSEUDO_ANOSOV;
    c.input = f;
    if (is_reducible_over_Z(f)) {
        c.failed_conditions.push_back("reducible");
        c.factor_witnesses.push_back({"factor", 0, detail::first_proper_factor(f)});
    }
    if (is_cyclotomic_product(f)) {
        c.failed_conditions.push_back("cyclotomic");
        std::uint64_t m = detail::cyclotomic_divisor(f);
        c.factor_witnesses.push_back({"cyclotomic", m, cyclotomic(m)});
    }
    if (unsigned k = h_of_xk_order(f); k > 1) {
        c.failed_conditions.push_back("power_form");
        c.factor_witnesses.push_back({"power_form", k, ZPoly()});
    }
    if (c.failed_conditions.empty()) {
        c.verdict = Verdict::PROVED;
        // an irreducibility witness when one exists among small good primes
        for (std::uint64_t p = 2, tried = 0; tried < 30; p = next_prime(p + 1)) {
            ++tried;
            if (is_irreducible_mod_p(mod_reduce(f, PrimeField(p))) && mod_reduce(f, PrimeField(p)).degree() == f.degree()) {
                c.factor_witnesses.push_back({"irreducible_mod", p, ZPoly()});
                break;
            }
        }
    } else {
        c.verdict = Verdict::REFUTED;
    }
    return c;
}

/// Re-checks a certificate from its serialized witnesses. INCONCLUSIVE
/// certificates assert nothing and re-verify trivially.
inline bool reverify(const Certificate& c) {
    const ZPoly& f = c.input;
    if (f.degree() < 2 || !f.is_monic()) return false;
    if (c.verdict == Verdict::INCONCLUSIVE) return true;
    switch (c.claim) {
        case Claim::SN_GALOIS:
            if (c.verdict == Verdict::PROVED) return detail::sieve_witnesses_hold(f, c.split_witnesses);
            return !c.factor_witnesses.empty() && detail::divides_properly(c.factor_witnesses[0].factor, f);
        case Claim::POWER_IRREDUCIBLE:
            if (c.verdict == Verdict::PROVED)
                return f.degree() >= 3 && abs(f.coeffs()[0]) == 1 && !is_cyclotomic_product(f) &&
                       detail::sieve_witnesses_hold(f, c.split_witnesses);
            for (const auto& w : c.factor_witnesses)
                if (w.kind == "reducible_power" && w.k >= 1 &&
                    detail::divides_properly(w.factor, power_char_poly(f, static_cast<unsigned>(w.k))))
                    return true;
            return false;
        case Claim::PSEUDO_ANOSOV: {
            if (f.degree() % 2 != 0) return false;
            if (c.verdict == Verdict::PROVED) {
                bool irreducible = false;
                for (const auto& w : c.factor_witnesses)
                    if (w.kind == "irreducible_mod" && w.k < (1ULL << 31) && is_prime_u64(w.k)) {
                        ModPoly r = mod_reduce(f, PrimeField(w.k));
                        irreducible = r.degree() == f.degree() && is_irreducible_mod_p(r);
                    }
                if (!irreducible) irreducible = factor_over_Z(f).factor_count() == 1;
                return irreducible && !is_cyclotomic_product(f) && h_of_xk_order(f) == 1;
            }
            if (c.failed_conditions.empty()) return false;
            for (const auto& w : c.factor_witnesses) {
                if (w.kind == "factor" && !detail::divides_properly(w.factor, f)) return false;
                if (w.kind == "cyclotomic" && (w.k == 0 || w.factor != cyclotomic(w.k) || !is_cyclotomic_product(f)))
                    return false;
                if (w.kind == "power_form" && (w.k < 2 || h_of_xk_order(f) % w.k != 0)) return false;
            }
            return true;
        }
    }
    return false;
}

inline bool reverify(const nlohmann::ordered_json& j) { return reverify(Certificate::from_json(j)); }

}  // namespace polymat
