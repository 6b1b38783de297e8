#include <polymat/zpoly.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"

using namespace polymat;
using namespace oracle;

namespace {

}  // namespace

TEST(ZPolyCore, EncodeDecode) {
    EXPECT_EQ(ZPoly::decode("1,-3,1"), (ZPoly{1, -3, 1}));
    EXPECT_EQ((ZPoly{1, -3, 1}).encode(), "1,-3,1");
    EXPECT_EQ(ZPoly().encode(), "0");
    EXPECT_EQ((ZPoly{1, -3, 1}).pretty(), "x^2 - 3*x + 1");
    EXPECT_THROW(ZPoly::decode("1,,1"), validation_error);
    EXPECT_THROW(ZPoly::decode("1, 2"), validation_error);
    EXPECT_THROW(ZPoly::decode("1,2,0"), validation_error);
    EXPECT_THROW(ZPoly::decode(""), validation_error);
    EXPECT_EQ(ZPoly::decode("123456789012345678901234567890").coeffs()[0],
              BigInt("123456789012345678901234567890"));
}

TEST(ZPolyCore, Arithmetic) {
    ZPoly a{1, 1}, b{-1, 1};
    EXPECT_EQ(a * b, (ZPoly{-1, 0, 1}));
    EXPECT_EQ((a * b).exact_div(a), b);
    EXPECT_EQ((ZPoly{0, 3, 6}).content(), 3);
    EXPECT_EQ((ZPoly{0, -3, -6}).primitive_part(), (ZPoly{0, 1, 2}));
    EXPECT_EQ((ZPoly{1, 2}).inflate(3), (ZPoly{1, 0, 0, 2}));
    EXPECT_EQ((ZPoly{5, -7, 2}).height(), 7);
}

TEST(FactorOverZ, KnownValues) {
    auto f1 = factor_over_Z(ZPoly{-1, 0, 1});
    ASSERT_EQ(f1.factors.size(), 2u);
    EXPECT_EQ(f1.factors[0].factor, (ZPoly{-1, 1}));
    EXPECT_EQ(f1.factors[1].factor, (ZPoly{1, 1}));

    auto f2 = factor_over_Z(ZPoly{1, 0, 0, 0, 1});
    ASSERT_EQ(f2.factors.size(), 1u);
    EXPECT_EQ(f2.factors[0].factor, (ZPoly{1, 0, 0, 0, 1}));

    auto f3 = factor_over_Z(ZPoly{0, -2, 1, 1});
    ASSERT_EQ(f3.factors.size(), 3u);
    EXPECT_EQ(f3.factors[0].factor, (ZPoly{-1, 1}));
    EXPECT_EQ(f3.factors[1].factor, ZPoly::x());
    EXPECT_EQ(f3.factors[2].factor, (ZPoly{2, 1}));
    EXPECT_EQ(f3.expand(), (ZPoly{0, -2, 1, 1}));

    EXPECT_THROW(factor_over_Z(ZPoly{}), validation_error);
}

TEST(FactorOverZ, ContentAndSign) {
    // -6 (x - 1)^2 (2x + 3)
    ZPoly f = BigInt(-6) * (ZPoly{-1, 1}.pow(2) * ZPoly{3, 2});
    auto fz = factor_over_Z(f);
    EXPECT_EQ(fz.content, -6);
    EXPECT_EQ(fz.expand(), f);
    ASSERT_EQ(fz.factors.size(), 2u);
    EXPECT_EQ(fz.factors[0].multiplicity, 2);
}

TEST(FactorOverZ, HarderCases) {
    // Swinnerton-Dyer style: (x^4 - 10x^2 + 1) splits mod every prime.
    ZPoly sd{1, 0, -10, 0, 1};
    EXPECT_EQ(factor_over_Z(sd).factors.size(), 1u);
    EXPECT_FALSE(is_reducible_over_Z(sd));
    // product of several irreducibles of degree 3 and 4
    ZPoly a{-1, -1, 0, 1}, b{1, 0, 0, 0, 1}, c{2, 0, 1};
    ZPoly f = a * b * c * a;
    auto fz = factor_over_Z(f);
    EXPECT_EQ(fz.expand(), f);
    EXPECT_EQ(fz.factor_count(), 4);
    // x^12 - 1 = prod of Phi_d over d | 12: six factors
    EXPECT_EQ(factor_over_Z(ZPoly::monomial(1, 12) - ZPoly::constant(1)).factor_count(), 6);
    // large coefficients
    ZPoly big = ZPoly{-1000003, 1} * ZPoly{999983, 0, 1};
    auto fb = factor_over_Z(big);
    ASSERT_EQ(fb.factors.size(), 2u);
    EXPECT_EQ(fb.expand(), big);
}

// Mignotte-bounded brute-force oracle for deg <= 4, height <= 3 (monic).
TEST(FactorOverZ, OracleDegreeAtMost4HeightAtMost3) {
    std::size_t checked = 0;
    for (int d = 1; d <= 4; ++d)
        for_each_monic(d, 3, [&](const IVec& f) {
            ZPoly zf = to_z(f);
            auto fz = factor_over_Z(zf);
            ASSERT_EQ(fz.expand(), zf);
            std::map<IVec, int> got;
            for (const auto& [g, m] : fz.factors) got[to_i(g)] += m;
            ASSERT_EQ(got, brute_force_factor(f)) << zf;
            ASSERT_EQ(is_reducible_over_Z(zf), fz.factor_count() >= 2) << zf;
            ++checked;
        });
    EXPECT_EQ(checked, 7u + 49u + 343u + 2401u);
}

TEST(IsReducible, KnownValues) {
    EXPECT_FALSE(is_reducible_over_Z(ZPoly{1, 1, 1}));
    EXPECT_TRUE(is_reducible_over_Z(ZPoly{-1, 1, -1, 1}));
    EXPECT_FALSE(is_reducible_over_Z(ZPoly{1, 0, 0, 0, 1}));
    EXPECT_FALSE(is_reducible_over_Z(ZPoly{3, 6}));
    EXPECT_FALSE(is_reducible_over_Z(ZPoly{2, 0, 4}));  // 2(2x^2 + 1)
    EXPECT_TRUE(is_reducible_over_Z(ZPoly{0, 0, 1}));
}

TEST(Cyclotomic, KnownValues) {
    EXPECT_TRUE(is_cyclotomic_product(ZPoly{1, 1, 1}));
    EXPECT_FALSE(is_cyclotomic_product(ZPoly{1, -3, 1}));
    EXPECT_FALSE(is_cyclotomic_product(ZPoly{1, 0, 3, 0, 1}));
    EXPECT_THROW(is_cyclotomic_product(ZPoly{1, 2}), validation_error);
}

TEST(Cyclotomic, AllPhiUpTo30) {
    for (std::size_t m = 1; m <= 30; ++m) {
        ZPoly phi = cyclotomic(m);
        EXPECT_EQ(phi.degree(), static_cast<int>(euler_phi(m)));
        EXPECT_TRUE(is_cyclotomic_product(phi)) << m;
    }
    EXPECT_EQ(cyclotomic(12), (ZPoly{1, 0, -1, 0, 1}));
    EXPECT_TRUE(is_cyclotomic_product(cyclotomic(7) * cyclotomic(1).pow(2) * cyclotomic(10)));
    EXPECT_FALSE(is_cyclotomic_product(cyclotomic(7) * ZPoly{-2, 1}));
}

TEST(HOfXk, KnownValues) {
    EXPECT_EQ(h_of_xk_order(ZPoly{1, 0, 3, 0, 1}), 2u);
    EXPECT_EQ(h_of_xk_order(ZPoly{1, 0, 0, 1, 1}), 1u);
    EXPECT_EQ(h_of_xk_order(ZPoly{5, 0, 0, 0, 0, 0, 1}), 6u);
}

TEST(HOfXk, InflationMultiplies) {
    for (int d = 1; d <= 3; ++d)
        for_each_monic(d, 2, [&](const IVec& f) {
            for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(h_of_xk_order(to_z(f).inflate(k)) % k, 0u);
        });
}

TEST(Reciprocal, KnownValues) {
    EXPECT_TRUE(is_reciprocal(ZPoly{1, 1, 1, 1, 1}));
    EXPECT_TRUE(is_reciprocal(ZPoly{1, -3, 1}));
    EXPECT_FALSE(is_reciprocal(ZPoly{-1, 1, 1}));
}

TEST(TracePolynomial, KnownValues) {
    EXPECT_EQ(trace_polynomial(ZPoly{1, 1, 1, 1, 1}), (ZPoly{-1, 1, 1}));
    EXPECT_EQ(trace_polynomial(ZPoly{1, -3, 1}), (ZPoly{-3, 1}));
    EXPECT_EQ(trace_polynomial(ZPoly{1, 2, 1}), (ZPoly{2, 1}));
    EXPECT_THROW(trace_polynomial(ZPoly{1, 1, 1, 1}), validation_error);
    EXPECT_THROW(trace_polynomial(ZPoly{-1, 1, 1}), validation_error);
}

TEST(TracePolynomial, RoundTrip) {
    for (int d = 1; d <= 4; ++d)
        for_each_monic(d, 3, [&](const IVec& g) {
            ZPoly f = from_trace_polynomial(to_z(g));
            ASSERT_EQ(f.degree(), 2 * d);
            ASSERT_TRUE(is_reciprocal(f));
            ASSERT_EQ(trace_polynomial(f), to_z(g));
        });
}

// Reducible reciprocal f forces a reducible trace polynomial, except when f
// is p(x) times its reversal: x^4 - 3x^2 + 1 = (x^2 + x - 1)(x^2 - x - 1) has
// g = y^2 - 5. That is the only exception at this height.
TEST(TracePolynomial, ReducibilityDescends) {
    std::size_t reducible = 0;
    std::vector<ZPoly> exceptions;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            ZPoly f{1, a, b, a, 1};
            if (!is_reducible_over_Z(f)) continue;
            ++reducible;
            if (!is_reducible_over_Z(trace_polynomial(f))) exceptions.push_back(f);
        }
    EXPECT_GT(reducible, 0u);
    ASSERT_EQ(exceptions.size(), 1u);
    EXPECT_EQ(exceptions[0], (ZPoly{1, 0, -3, 0, 1}));
    auto fz = factor_over_Z(exceptions[0]);
    ASSERT_EQ(fz.factors.size(), 2u);
    EXPECT_FALSE(is_reciprocal(fz.factors[0].factor));
    EXPECT_EQ(trace_polynomial(exceptions[0]), (ZPoly{-5, 0, 1}));
}
