#pragma once

/**
 * @file zpoly_core.hpp
 * @brief ZPoly: dense univariate polynomials with arbitrary-precision integer
 *        coefficients, stored lowest degree first.
 *
 * Canonical text encoding: comma-separated coefficients from the constant term
 * upward, no whitespace, leading coefficient last and nonzero ("1,-3,1" is
 * x^2 - 3x + 1). The zero polynomial encodes as "0".
 */

#include "common.hpp"

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polymat {

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static ZPoly constant(const BigInt& v) { return ZPoly(std::vector<BigInt>{v}); }
    static ZPoly monomial(const BigInt& v, std::size_t k) {
        std::vector<BigInt> c(k + 1);
        c[k] = v;
        return ZPoly(std::move(c));
    }
    static ZPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& lead() const {
        if (c_.empty()) throw validation_error("lead() of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    BigInt height() const {
        BigInt h = 0;
        for (const auto& v : c_) {
            BigInt a = abs(v);
            if (a > h) h = a;
        }
        return h;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    /// Content removed and leading coefficient made positive.
    ZPoly primitive_part() const {
        if (is_zero()) return *this;
        BigInt g = content();
        if (lead() < 0) g = -g;
        std::vector<BigInt> r(c_);
        for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        return ZPoly(std::move(r));
    }

    ZPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return ZPoly(std::move(r));
    }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return ZPoly(std::move(r));
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return ZPoly(std::move(r));
    }
    friend ZPoly operator-(const ZPoly& a) {
        std::vector<BigInt> r(a.c_);
        for (auto& v : r) v = -v;
        return ZPoly(std::move(r));
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return ZPoly(std::move(r));
    }
    friend ZPoly operator*(const BigInt& s, const ZPoly& a) {
        std::vector<BigInt> r(a.c_);
        for (auto& v : r) v *= s;
        return ZPoly(std::move(r));
    }
    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    ZPoly pow(unsigned k) const {
        ZPoly r = constant(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    /// Divides every coefficient by s; throws if any division is inexact.
    ZPoly divexact(const BigInt& s) const {
        std::vector<BigInt> r(c_);
        for (auto& v : r) {
            if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) throw std::logic_error("ZPoly::divexact: inexact");
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
        }
        return ZPoly(std::move(r));
    }

    /// True iff d divides *this in Z[x]; the quotient is written on success.
    bool try_divide(const ZPoly& d, ZPoly& quotient) const {
        if (d.is_zero()) throw validation_error("division by zero polynomial");
        if (is_zero()) {
            quotient = {};
            return true;
        }
        if (degree() < d.degree()) return false;
        std::vector<BigInt> rem(c_);
        std::vector<BigInt> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        const BigInt& dl = d.lead();
        for (int i = degree() - d.degree(); i >= 0; --i) {
            BigInt& top = rem[static_cast<std::size_t>(i + d.degree())];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), dl.get_mpz_t())) return false;
            BigInt t;
            mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), dl.get_mpz_t());
            q[static_cast<std::size_t>(i)] = t;
            for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(i + j)] -= t * d.c_[static_cast<std::size_t>(j)];
        }
        for (const auto& v : rem)
            if (v != 0) return false;
        quotient = ZPoly(std::move(q));
        return true;
    }

    /// Exact quotient *this / d; throws std::logic_error if d does not divide.
    ZPoly exact_div(const ZPoly& d) const {
        ZPoly q;
        if (!try_divide(d, q)) throw std::logic_error("ZPoly::exact_div: not divisible");
        return q;
    }

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d.
    ZPoly pseudo_rem(const ZPoly& d) const {
        if (d.is_zero()) throw validation_error("pseudo_rem by zero polynomial");
        std::vector<BigInt> r(c_);
        int dd = d.degree();
        const BigInt& lc = d.lead();
        for (int i = degree(); i >= dd; --i) {
            BigInt top = r[static_cast<std::size_t>(i)];
            for (auto& v : r) v *= lc;
            if (top != 0)
                for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= top * d.c_[static_cast<std::size_t>(j)];
            r.resize(static_cast<std::size_t>(i));
        }
        return ZPoly(std::move(r));
    }

    /// f(x^k).
    ZPoly inflate(unsigned k) const {
        if (is_zero()) return {};
        std::vector<BigInt> r(static_cast<std::size_t>(degree()) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return ZPoly(std::move(r));
    }

    /// Canonical encoding, e.g. "1,-3,1".
    std::string encode() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += c_[i].get_str();
        }
        return s;
    }

    static ZPoly decode(std::string_view text) {
        if (text.empty()) throw validation_error("empty polynomial encoding");
        std::vector<BigInt> c;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (tok.empty()) throw validation_error("empty coefficient in polynomial encoding");
            std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
            if (start == tok.size()) throw validation_error("malformed coefficient '" + std::string(tok) + "'");
            for (std::size_t i = start; i < tok.size(); ++i)
                if (tok[i] < '0' || tok[i] > '9') throw validation_error("malformed coefficient '" + std::string(tok) + "'");
            c.emplace_back(std::string(tok[0] == '+' ? tok.substr(1) : tok), 10);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (c.size() > 1 && c.back() == 0) throw validation_error("leading coefficient must be nonzero");
        return ZPoly(std::move(c));
    }

    /// Human-readable form in variable `var`, e.g. "x^2 - 3*x + 1".
    std::string pretty(char var = 'x') const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            BigInt a = abs(v);
            if (first) {
                if (v < 0) os << '-';
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || a != 1) {
                os << a;
                if (i > 0) os << '*';
            }
            if (i >= 1) os << var;
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ZPoly& p) { return os << p.pretty(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

}  // namespace polymat
