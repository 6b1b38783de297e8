#pragma once

/**
 * @file zpoly.hpp
 * @brief Operations on integer polynomials: factorization over Z, reducibility,
 *        cyclotomic detection, h(x^k) detection, reciprocal polynomials and the
 *        y = x + 1/x trace reduction.
 *
 * Factorization is Zassenhaus: squarefree decomposition over Z, factorization
 * modulo a small good prime, linear Hensel lifting past twice the Mignotte
 * bound, and recombination by subset search.
 */

#include "common.hpp"
#include "ffpoly.hpp"
#include "zpoly_core.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace polymat {

struct ZFactor {
    ZPoly factor;
    int multiplicity;
    friend bool operator==(const ZFactor&, const ZFactor&) = default;
};

/// f = content * prod factor^multiplicity; factors primitive, irreducible,
/// with positive leading coefficient.
struct ZFactorization {
    BigInt content;
    std::vector<ZFactor> factors;

    ZPoly expand() const {
        ZPoly r = ZPoly::constant(content);
        for (const auto& [g, m] : factors) r *= g.pow(static_cast<unsigned>(m));
        return r;
    }
    int factor_count() const {
        int n = 0;
        for (const auto& f : factors) n += f.multiplicity;
        return n;
    }
};

/// Lift of a residue polynomial with coefficients in [0, p).
inline ZPoly lift(const ModPoly& f) {
    std::vector<BigInt> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
    return ZPoly(std::move(c));
}

/// Primitive gcd over Z[x] with positive leading coefficient (content ignored).
inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = a.pseudo_rem(b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    return a.primitive_part();
}

/// Yun's algorithm on a primitive f with positive leading coefficient:
/// pairwise coprime squarefree parts with multiplicities.
inline std::vector<ZFactor> squarefree_decomposition_z(const ZPoly& f) {
    std::vector<ZFactor> out;
    if (f.degree() < 1) return out;
    ZPoly fp = f.derivative();
    ZPoly b = zpoly_gcd(f, fp);
    ZPoly c = f.exact_div(b);
    ZPoly d = fp.exact_div(b) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        ZPoly a = zpoly_gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derivative();
        ++i;
    }
    return out;
}

namespace detail {

inline BigInt symmetric_mod(const BigInt& v, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

inline ZPoly reduce_coeffs(const ZPoly& f, const BigInt& m, bool symmetric) {
    std::vector<BigInt> c(f.coeffs());
    for (auto& v : c) {
        if (symmetric) {
            v = symmetric_mod(v, m);
        } else {
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        }
    }
    return ZPoly(std::move(c));
}

/// (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
    const auto& F = a.field();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(F, 1), s1(F);
    ModPoly t0(F), t1 = ModPoly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r] = ModPoly::divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    std::uint32_t li = F.inv(r0.lead());
    return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

/// Given monic F ≡ g*h (mod p) with g, h coprime monic, returns (G, H) monic
/// with F ≡ G*H (mod p^m) and G ≡ g, H ≡ h (mod p).
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& target, const ModPoly& g, const ModPoly& h,
                                                unsigned long p, unsigned m) {
    const auto& F = g.field();
    auto [one, s, t] = xgcd(g, h);
    if (!one.is_one()) throw std::logic_error("hensel_lift_pair: factors not coprime mod p");
    ZPoly G = lift(g), H = lift(h);
    BigInt pk = p;
    for (unsigned k = 1; k < m; ++k) {
        ZPoly E = (target - G * H).divexact(pk);
        ModPoly e = mod_reduce(E, F);
        auto [q, sigma] = ModPoly::divmod(t * e, g);
        ModPoly tau = (s * e + q * h);
        G += pk * lift(sigma);
        H += pk * lift(tau);
        pk *= p;
    }
    return {G, H};
}

/// Irreducible factors of a primitive squarefree h, deg >= 2, h(0) != 0,
/// positive leading coefficient.
inline std::vector<ZPoly> zassenhaus(const ZPoly& h) {
    const int n = h.degree();
    const BigInt lc = h.lead();

    // Pick the good prime with the fewest modular factors among the first few.
    std::vector<ModFactor> best;
    unsigned long best_p = 0;
    int good_seen = 0;
    for (unsigned long p = 3; good_seen < 5; p = next_prime(p + 1)) {
        if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
        PrimeField F(p);
        ModPoly hb = mod_reduce(h, F);
        if (!is_squarefree(hb)) continue;
        ++good_seen;
        auto facs = factor_mod_p(hb, p);
        if (facs.size() == 1) return {h};
        if (best_p == 0 || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = p;
        }
    }
    const unsigned long p = best_p;
    PrimeField F(p);

    // Lift beyond 2 * |lc| * 2^n * ||h||_2.
    BigInt norm2 = 0;
    for (const auto& v : h.coeffs()) norm2 += v * v;
    BigInt norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    BigInt bound = 2 * abs(lc) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    unsigned m = 1;
    BigInt pm = p;
    while (pm <= bound) {
        pm *= p;
        ++m;
    }

    BigInt lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pm.get_mpz_t());
    ZPoly target = reduce_coeffs(lc_inv * h, pm, false);

    std::vector<ZPoly> lifted;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        ModPoly rest = ModPoly::constant(F, 1);
        for (std::size_t j = i + 1; j < best.size(); ++j) rest = rest * best[j].factor;
        auto [G, H] = hensel_lift_pair(target, best[i].factor, rest, p, m);
        lifted.push_back(reduce_coeffs(G, pm, false));
        target = reduce_coeffs(H, pm, false);
    }
    lifted.push_back(target);

    std::vector<ZPoly> out;
    ZPoly cur = h;
    std::vector<ZPoly> pool = std::move(lifted);
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly G = ZPoly::constant(cur.lead());
            for (auto i : idx) G = reduce_coeffs(G * pool[i], pm, false);
            G = reduce_coeffs(G, pm, true).primitive_part();
            ZPoly q;
            if (G.degree() > 0 && cur.try_divide(G, q)) {
                out.push_back(G);
                cur = q;
                std::vector<ZPoly> kept;
                for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    kept.push_back(std::move(pool[i]));
                }
                pool = std::move(kept);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == pool.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (cur.degree() > 0) out.push_back(cur.primitive_part());
    return out;
}

inline bool factor_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.coeffs()[static_cast<std::size_t>(i)];
        const auto& y = b.coeffs()[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace detail

/// Complete factorization over Z; factors sorted by degree then coefficients.
inline ZFactorization factor_over_Z(const ZPoly& f) {
    if (f.is_zero()) throw validation_error("factor_over_Z: zero polynomial");
    if (f.degree() < 1) throw validation_error("factor_over_Z needs degree >= 1");
    ZFactorization out;
    out.content = f.content();
    if (f.lead() < 0) out.content = -out.content;
    ZPoly g = f.primitive_part();

    std::size_t low = 0;
    while (g.coeffs()[low] == 0) ++low;
    if (low > 0) {
        out.factors.push_back({ZPoly::x(), static_cast<int>(low)});
        g = ZPoly(std::vector<BigInt>(g.coeffs().begin() + static_cast<std::ptrdiff_t>(low), g.coeffs().end()));
    }
    for (const auto& [part, mult] : squarefree_decomposition_z(g)) {
        if (part.degree() == 1) {
            out.factors.push_back({part, mult});
            continue;
        }
        for (auto& q : detail::zassenhaus(part)) out.factors.push_back({std::move(q), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const ZFactor& a, const ZFactor& b) {
        if (a.factor != b.factor) return detail::factor_less(a.factor, b.factor);
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

/// True iff f is a product of two factors of positive degree over Z.
inline bool is_reducible_over_Z(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("is_reducible_over_Z needs degree >= 1");
    if (f.degree() == 1) return false;
    if (f.coeffs()[0] == 0) return true;
    ZPoly g = f.primitive_part();
    int tried = 0;
    for (unsigned long p = 2; tried < 8; p = next_prime(p + 1)) {
        if (mpz_divisible_ui_p(g.lead().get_mpz_t(), p)) continue;
        ++tried;
        if (is_irreducible_mod_p(mod_reduce(g, PrimeField(p)))) return false;
    }
    return factor_over_Z(g).factor_count() >= 2;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// Phi_m for m <= max_m with phi(m) <= max_phi (other slots stay zero), each
/// obtained by dividing x^m - 1 by Phi_d over the proper divisors d of m.
inline std::vector<ZPoly> cyclotomic_table(std::size_t max_m, std::uint64_t max_phi) {
    std::vector<ZPoly> phi(max_m + 1);
    for (std::size_t m = 1; m <= max_m; ++m) {
        if (euler_phi(m) > max_phi) continue;
        ZPoly q = ZPoly::monomial(1, m) - ZPoly::constant(1);
        for (std::size_t d = 1; d < m; ++d)
            if (m % d == 0) q = q.exact_div(phi[d]);
        phi[m] = q;
    }
    return phi;
}

inline ZPoly cyclotomic(std::size_t m) {
    if (m == 0) throw validation_error("cyclotomic index must be >= 1");
    return cyclotomic_table(m, euler_phi(m))[m];
}

/// True iff monic f is a product of cyclotomic polynomials.
inline bool is_cyclotomic_product(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("is_cyclotomic_product needs degree >= 1");
    if (!f.is_monic()) throw validation_error("is_cyclotomic_product needs a monic polynomial");
    if (abs(f.coeffs()[0]) != 1) return false;
    const auto n = static_cast<std::size_t>(f.degree());
    const auto table = cyclotomic_table(2 * n * n, n);
    ZPoly cur = f;
    for (std::size_t m = 1; m < table.size() && cur.degree() > 0; ++m) {
        if (table[m].is_zero() || table[m].degree() > cur.degree()) continue;
        ZPoly q;
        while (cur.degree() > 0 && cur.try_divide(table[m], q)) cur = q;
    }
    return cur == ZPoly::constant(1);
}

/// Largest k with f(x) = h(x^k): gcd of the exponents carrying nonzero coefficients.
inline unsigned h_of_xk_order(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("h_of_xk_order needs degree >= 1");
    unsigned g = 0;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
    return g;
}

// ---------------------------------------------------------------------------
// Reciprocal polynomials
// ---------------------------------------------------------------------------

inline bool is_reciprocal(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("is_reciprocal needs degree >= 1");
    const auto& c = f.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
        if (c[i] != c[j]) return false;
    return true;
}

/// x^n * g(x + 1/x) for g of degree n.
inline ZPoly from_trace_polynomial(const ZPoly& g) {
    if (g.is_zero()) return {};
    const auto n = static_cast<std::size_t>(g.degree());
    const ZPoly sq1{1, 0, 1};
    ZPoly r;
    ZPoly pw = ZPoly::constant(1);  // (x^2 + 1)^j
    for (std::size_t j = 0; j <= n; ++j) {
        r += g.coeffs()[j] * (ZPoly::monomial(1, n - j) * pw);
        pw *= sq1;
    }
    return r;
}

/// The monic g of degree n with x^n g(x + 1/x) = f, for monic reciprocal f of
/// degree 2n. Peels off the top symmetric power one degree at a time.
inline ZPoly trace_polynomial(const ZPoly& f) {
    if (f.degree() < 1 || f.degree() % 2 != 0)
        throw validation_error("trace_polynomial needs even degree >= 2");
    if (!f.is_monic()) throw validation_error("trace_polynomial needs a monic polynomial");
    if (!is_reciprocal(f)) throw validation_error("trace_polynomial needs a reciprocal polynomial");
    const auto n = static_cast<std::size_t>(f.degree() / 2);
    const ZPoly sq1{1, 0, 1};
    std::vector<BigInt> g(n + 1);
    ZPoly rest = f;
    for (std::size_t j = n + 1; j-- > 0;) {
        BigInt c = rest.coeff(n + j);
        g[j] = c;
        if (c != 0) rest -= c * (ZPoly::monomial(1, n - j) * sq1.pow(static_cast<unsigned>(j)));
    }
    if (!rest.is_zero()) throw std::logic_error("trace_polynomial: nonzero remainder");
    return ZPoly(std::move(g));
}

}  // namespace polymat
