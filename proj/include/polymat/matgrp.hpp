#pragma once

/**
 * @file matgrp.hpp
 * @brief Integer matrices, exact characteristic polynomials, companion and
 *        symplectic realizations, classical generating sets of SL/GL/Sp over Z,
 *        and reduction modulo p including finite-group closure.
 *
 * Symplectic form: J = [[0, I], [-I, 0]] in g x g blocks.
 * Companion convention: subdiagonal ones, last column -(a_0, ..., a_{n-1}).
 */

#include "bareiss.hpp"
#include "common.hpp"
#include "ffpoly.hpp"
#include "zpoly.hpp"
#include "zpoly_core.hpp"

#include <cstdio>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polymat {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw validation_error("matrix dimension must be >= 1");
    }
    IntMatrix(std::size_t n, std::vector<BigInt> entries) : n_(n), e_(std::move(entries)) {
        if (n == 0) throw validation_error("matrix dimension must be >= 1");
        if (e_.size() != n * n) throw validation_error("matrix entry count does not match dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
        for (const auto& r : rows) {
            if (r.size() != n_) throw validation_error("matrix must be square");
            for (long v : r) e_.emplace_back(v);
        }
        if (n_ == 0) throw validation_error("matrix dimension must be >= 1");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t n() const { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const std::vector<BigInt>& entries() const { return e_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_) throw validation_error("matrix dimension mismatch");
        IntMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const BigInt& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_) throw validation_error("matrix dimension mismatch");
        IntMatrix r(a.n_);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    BigInt trace() const {
        BigInt t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    BigInt height() const {
        BigInt h = 0;
        for (const auto& v : e_)
            if (abs(v) > h) h = abs(v);
        return h;
    }

    /// Rows separated by ';', entries by ',': "2,1;1,1".
    std::string encode() const {
        std::string s;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ';';
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ',';
                s += (*this)(i, j).get_str();
            }
        }
        return s;
    }

    static IntMatrix decode(std::string_view text) {
        std::vector<std::vector<BigInt>> rows;
        std::size_t pos = 0;
        while (true) {
            std::size_t semi = text.find(';', pos);
            std::string_view row = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
            ZPoly parsed;
            std::vector<BigInt> vals;
            std::size_t q = 0;
            while (true) {
                std::size_t comma = row.find(',', q);
                std::string tok(row.substr(q, comma == std::string_view::npos ? std::string_view::npos : comma - q));
                if (tok.empty()) throw validation_error("empty matrix entry");
                BigInt v;
                if (v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
                    throw validation_error("malformed matrix entry '" + tok + "'");
                vals.push_back(v);
                if (comma == std::string_view::npos) break;
                q = comma + 1;
            }
            rows.push_back(std::move(vals));
            if (semi == std::string_view::npos) break;
            pos = semi + 1;
        }
        const std::size_t n = rows.size();
        std::vector<BigInt> e;
        for (auto& r : rows) {
            if (r.size() != n) throw validation_error("matrix must be square");
            for (auto& v : r) e.push_back(std::move(v));
        }
        return IntMatrix(n, std::move(e));
    }

private:
    std::size_t n_ = 0;
    std::vector<BigInt> e_;
};

// ---------------------------------------------------------------------------

/// det(xI - M) by Faddeev-LeVerrier; every division by k is exact over Z.
inline ZPoly char_poly(const IntMatrix& a) {
    const std::size_t n = a.n();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = std::move(next);
        BigInt t = (a * m).trace();
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -t;
    }
    return ZPoly(std::move(c));
}

inline BigInt det(const IntMatrix& a) {
    std::vector<std::vector<BigInt>> rows(a.n(), std::vector<BigInt>(a.n()));
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) rows[i][j] = a(i, j);
    return bareiss_determinant<BigInt>(
        std::move(rows), BigInt(0), BigInt(1), [](const BigInt& v) { return v == 0; },
        [](const BigInt& x, const BigInt& y) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            return q;
        });
}

inline IntMatrix companion(const ZPoly& f) {
    if (f.degree() < 1) throw validation_error("companion needs degree >= 1");
    if (!f.is_monic()) throw validation_error("companion needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    IntMatrix c(n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeffs()[i];
    return c;
}

/// Entrywise reduction into [0, p).
inline IntMatrix mat_mod_p(const IntMatrix& m, const PrimeField& field) {
    std::vector<BigInt> e;
    e.reserve(m.entries().size());
    for (const auto& v : m.entries()) e.emplace_back(static_cast<unsigned long>(field.reduce(v)));
    return IntMatrix(m.n(), std::move(e));
}

/// Characteristic polynomial over F_p of a matrix given by its residues
/// (row-major, n x n), via Hessenberg reduction. Works for every p.
inline ModPoly char_poly_mod_p(std::vector<std::uint32_t> h, std::size_t n, const PrimeField& F) {
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return h[i * n + j]; };
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
        }
        std::uint32_t inv = F.inv(at(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            std::uint32_t u = F.mul(at(i, j), inv);
            if (!u) continue;
            for (std::size_t c = 0; c < n; ++c) at(i, c) = F.sub(at(i, c), F.mul(u, at(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = F.add(at(r, j + 1), F.mul(u, at(r, i)));
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} * prod_{k=m-i+1..m} h_{k,k-1} * p_{m-i-1}
    std::vector<ModPoly> poly;
    poly.push_back(ModPoly::constant(F, 1));
    const ModPoly x = ModPoly::x(F);
    for (std::size_t m = 1; m <= n; ++m) {
        ModPoly pm = (x - ModPoly::constant(F, at(m - 1, m - 1))) * poly[m - 1];
        std::uint32_t t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = F.mul(t, at(m - i, m - i - 1));
            std::uint32_t coef = F.mul(at(m - i - 1, m - 1), t);
            if (coef) pm = pm - poly[m - i - 1].scale(coef);
        }
        poly.push_back(std::move(pm));
    }
    return poly[n];
}

inline ModPoly char_poly_mod_p(const IntMatrix& m, const PrimeField& F) {
    std::vector<std::uint32_t> h;
    h.reserve(m.entries().size());
    for (const auto& v : m.entries()) h.push_back(F.reduce(v));
    return char_poly_mod_p(std::move(h), m.n(), F);
}

/// Inverse of a unimodular integer matrix; throws if det != +-1.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
    const std::size_t n = a.n();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw validation_error("matrix is singular");
        std::swap(m[piv], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& v = m[i][n + j];
            if (v.get_den() != 1) throw validation_error("matrix is not unimodular");
            out(i, j) = v.get_num();
        }
    return out;
}

// ---------------------------------------------------------------------------
// Groups and generating sets
// ---------------------------------------------------------------------------

enum class GroupKind { SL, GL, SP };

struct GroupId {
    GroupKind kind;
    std::size_t n;

    GroupId(GroupKind k, std::size_t dim) : kind(k), n(dim) {
        if (dim == 0) throw validation_error("group dimension must be >= 1");
        if (k == GroupKind::SP && dim % 2 != 0) throw validation_error("Sp dimension must be even");
    }

    std::string name() const {
        const char* k = kind == GroupKind::SL ? "SL" : kind == GroupKind::GL ? "GL" : "SP";
        return std::string(k) + "(" + std::to_string(n) + ")";
    }

    static GroupKind parse_kind(std::string_view s) {
        if (s == "SL" || s == "sl") return GroupKind::SL;
        if (s == "GL" || s == "gl") return GroupKind::GL;
        if (s == "SP" || s == "sp" || s == "Sp") return GroupKind::SP;
        throw validation_error("unknown group kind '" + std::string(s) + "' (expected SL, GL or SP)");
    }

    friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Generators with an explicit inverse involution: mats[inverse[i]] = mats[i]^-1.
struct GeneratorSet {
    std::vector<IntMatrix> mats;
    std::vector<std::size_t> inverse;

    std::size_t size() const { return mats.size(); }
    std::size_t dim() const { return mats.empty() ? 0 : mats.front().n(); }

    void add_with_inverse(IntMatrix g) {
        IntMatrix gi = inverse_unimodular(g);
        const std::size_t i = mats.size();
        if (gi == g) {
            mats.push_back(std::move(g));
            inverse.push_back(i);
        } else {
            mats.push_back(std::move(g));
            mats.push_back(std::move(gi));
            inverse.push_back(i + 1);
            inverse.push_back(i);
        }
    }

    /// User-supplied matrices; inverses are appended next to each generator.
    static GeneratorSet from_matrices(const std::vector<IntMatrix>& gens) {
        GeneratorSet s;
        for (const auto& g : gens) {
            if (!s.mats.empty() && g.n() != s.dim()) throw validation_error("generators must share one dimension");
            s.add_with_inverse(g);
        }
        return s;
    }

    /// Canonical text: generators joined by '|'.
    std::string encode() const {
        std::string s;
        for (std::size_t i = 0; i < mats.size(); ++i) {
            if (i) s += '|';
            s += mats[i].encode();
        }
        return s;
    }

    std::string fingerprint() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(encode())));
        return buf;
    }
};

namespace detail {
inline IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, long v) {
    IntMatrix m = IntMatrix::identity(n);
    m(i, j) += v;
    return m;
}
}  // namespace detail

/// Classical generating sets, each generator followed by its inverse:
///  SL(n): transvections I + E_ij, i != j;
///  GL(n): SL(n) plus diag(-1, 1, ..., 1);
///  SP(2g): [[I, S], [0, I]] and [[I, 0], [S, I]] for S in {E_ii} and
///          {E_ij + E_ji, i < j}, then [[I + E_ij, 0], [0, I - E_ji]], i != j.
inline GeneratorSet standard_generators(const GroupId& g) {
    GeneratorSet s;
    const std::size_t n = g.n;
    if (g.kind == GroupKind::SL || g.kind == GroupKind::GL) {
        if (n == 1 && g.kind == GroupKind::SL) {
            s.add_with_inverse(IntMatrix::identity(1));
            return s;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s.add_with_inverse(detail::elementary(n, i, j, 1));
        if (g.kind == GroupKind::GL) {
            IntMatrix d = IntMatrix::identity(n);
            d(0, 0) = -1;
            s.add_with_inverse(d);
        }
        return s;
    }
    const std::size_t h = n / 2;
    std::vector<std::pair<std::size_t, std::size_t>> sym;
    for (std::size_t i = 0; i < h; ++i) sym.emplace_back(i, i);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) sym.emplace_back(i, j);
    for (int lower = 0; lower < 2; ++lower) {
        for (auto [i, j] : sym) {
            IntMatrix m = IntMatrix::identity(n);
            std::size_t r0 = lower ? h : 0, c0 = lower ? 0 : h;
            m(r0 + i, c0 + j) = 1;
            m(r0 + j, c0 + i) = 1;
            s.add_with_inverse(m);
        }
    }
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            if (i == j) continue;
            IntMatrix m = IntMatrix::identity(n);
            m(i, j) = 1;
            m(h + j, h + i) = -1;
            s.add_with_inverse(m);
        }
    return s;
}

inline IntMatrix symplectic_form(std::size_t n) {
    if (n % 2 != 0) throw validation_error("symplectic form needs even dimension");
    IntMatrix j(n);
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
    }
    return j;
}

/// M^T J M = J.
inline bool is_symplectic(const IntMatrix& m) {
    if (m.n() % 2 != 0) throw validation_error("is_symplectic needs even dimension");
    IntMatrix j = symplectic_form(m.n());
    return m.transpose() * j * m == j;
}

inline bool in_group(const IntMatrix& m, const GroupId& g) {
    if (m.n() != g.n) return false;
    switch (g.kind) {
        case GroupKind::SL: return det(m) == 1;
        case GroupKind::GL: return abs(det(m)) == 1;
        case GroupKind::SP: return is_symplectic(m);
    }
    return false;
}

/// A symplectic integer matrix with characteristic polynomial f, for f monic
/// reciprocal of even degree 2n. With g the trace polynomial of f, C its
/// companion matrix and K the unimodular Hankel matrix making K*C symmetric,
/// M = [[0, -K^-1], [K, K C K^-1]]; char poly x^n g(x + 1/x) = f.
inline IntMatrix symplectic_realization(const ZPoly& f) {
    ZPoly g = trace_polynomial(f);
    const auto n = static_cast<std::size_t>(g.degree());
    IntMatrix c = companion(g);
    // h_0..h_{n-2} = 0, h_{n-1} = 1, h_{n+i} = -sum_l g_l h_{i+l}.
    std::vector<BigInt> hs(2 * n - 1);
    hs[n - 1] = 1;
    for (std::size_t i = 0; i + n < hs.size(); ++i) {
        BigInt v = 0;
        for (std::size_t l = 0; l < n; ++l) v -= g.coeffs()[l] * hs[i + l];
        hs[n + i] = v;
    }
    IntMatrix k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = hs[i + j];
    IntMatrix ki = inverse_unimodular(k);
    IntMatrix kck = k * c * ki;
    IntMatrix m(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, n + j) = -ki(i, j);
            m(n + i, j) = k(i, j);
            m(n + i, n + j) = kck(i, j);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Finite quotient groups
// ---------------------------------------------------------------------------

/// |SL(n,p)|, |Sp(n,p)|, or for GL the order of the det = +-1 subgroup that
/// the integral GL(n,Z) generators reach mod p.
inline BigInt expected_group_order(const GroupId& g, std::uint64_t p) {
    BigInt P = static_cast<unsigned long>(p);
    BigInt order = 1;
    if (g.kind == GroupKind::SP) {
        const std::size_t h = g.n / 2;
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(h * h));
        order = pw;
        for (std::size_t i = 1; i <= h; ++i) {
            mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(2 * i));
            order *= pw - 1;
        }
        return order;
    }
    const std::size_t n = g.n;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(n * (n - 1) / 2));
    order = pw;
    for (std::size_t i = 2; i <= n; ++i) {
        mpz_pow_ui(pw.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(i));
        order *= pw - 1;
    }
    if (g.kind == GroupKind::GL && p != 2) order *= 2;
    return order;
}

/// A finite matrix group over F_p enumerated by breadth-first closure.
/// elements[0] is the identity; right[k][e] indexes elements[e] * gen_k.
struct FiniteGroup {
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::vector<std::vector<std::uint32_t>> elements;
    std::vector<std::vector<std::uint32_t>> right;

    std::size_t order() const { return elements.size(); }
};

namespace detail {
struct ResidueVecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }
};

inline std::vector<std::uint32_t> mul_mod_matrix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                                 std::size_t n, std::uint64_t p) {
    std::vector<std::uint32_t> r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += std::uint64_t(a[i * n + k]) * b[k * n + j] % p;
            r[i * n + j] = static_cast<std::uint32_t>(s % p);
        }
    return r;
}
}  // namespace detail

inline FiniteGroup enumerate_group(const GeneratorSet& gens, const PrimeField& field, std::uint64_t cap) {
    FiniteGroup g;
    g.n = gens.dim();
    g.p = field.p();
    const std::size_t n = g.n;
    std::vector<std::vector<std::uint32_t>> gm;
    for (const auto& m : gens.mats) {
        std::vector<std::uint32_t> r;
        for (const auto& v : m.entries()) r.push_back(field.reduce(v));
        gm.push_back(std::move(r));
    }
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::ResidueVecHash> index;
    std::vector<std::uint32_t> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1 % field.p();
    index.emplace(id, 0);
    g.elements.push_back(id);
    g.right.assign(gm.size(), {});
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (std::size_t k = 0; k < gm.size(); ++k) {
            auto prod = detail::mul_mod_matrix(g.elements[head], gm[k], n, field.p());
            auto [it, inserted] = index.try_emplace(prod, static_cast<std::uint32_t>(g.elements.size()));
            if (inserted) {
                if (g.elements.size() >= cap)
                    throw capacity_error("group closure exceeds capacity " + std::to_string(cap));
                g.elements.push_back(std::move(prod));
            }
            g.right[k].push_back(it->second);
        }
    }
    return g;
}

}  // namespace polymat
