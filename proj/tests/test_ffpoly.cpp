#include <polymat/ffpoly.hpp>

#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"

using namespace polymat;
using namespace oracle;

namespace {

ModPoly mp(std::uint32_t p, std::vector<std::int64_t> c) { return ModPoly::from_ints(PrimeField(p), c); }

}  // namespace

TEST(PrimeField, RejectsComposites) {
    EXPECT_THROW(PrimeField(1), validation_error);
    EXPECT_THROW(PrimeField(9), validation_error);
    EXPECT_THROW(PrimeField(1ULL << 31), validation_error);
    EXPECT_NO_THROW(PrimeField(2147483647ULL));
}

TEST(ModPoly, RejectsUnreducedResidues) {
    EXPECT_THROW(ModPoly(PrimeField(5), {1, 5}), validation_error);
}

TEST(ModReduce, KnownValues) {
    PrimeField F3(3), F5(5), F2(2);
    EXPECT_EQ(mod_reduce(ZPoly{1, -3, 1}, F3), mp(3, {1, 0, 1}));
    EXPECT_EQ(mod_reduce(ZPoly{1, 0, 5}, F5), mp(5, {1}));
    EXPECT_EQ(mod_reduce(ZPoly{-1, -1, 0, 1}, F2), mp(2, {1, 1, 0, 1}));
}

TEST(PolyGcd, KnownValues) {
    EXPECT_EQ(poly_gcd(mp(5, {-1, 0, 1}), mp(5, {-1, 1})), mp(5, {4, 1}));
    EXPECT_EQ(poly_gcd(mp(7, {3, 1, 4}), mp(7, {1})), mp(7, {1}));
    EXPECT_EQ(poly_gcd(mp(3, {1, 0, 1}), mp(3, {1, 0, 1})), mp(3, {1, 0, 1}));
    EXPECT_THROW(poly_gcd(ModPoly(PrimeField(3)), ModPoly(PrimeField(3))), validation_error);
}

TEST(FactorModP, KnownValues) {
    auto f = factor_mod_p(mp(5, {1, 0, 1}), 1);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].factor, mp(5, {2, 1}));
    EXPECT_EQ(f[1].factor, mp(5, {3, 1}));
    EXPECT_EQ(factor_mod_p(mp(3, {1, 0, 1}), 1).size(), 1u);
    auto phi5 = factor_mod_p(mp(2, {1, 1, 1, 1, 1}), 7);
    ASSERT_EQ(phi5.size(), 1u);
    EXPECT_EQ(phi5[0].multiplicity, 1);
    EXPECT_THROW(factor_mod_p(mp(5, {3}), 1), validation_error);
    EXPECT_THROW(factor_mod_p(ModPoly(PrimeField(5)), 1), validation_error);
}

TEST(FactorModP, DeterministicGivenSeed) {
    auto f = mp(7, {1, 2, 3, 4, 5, 6, 1, 1, 0, 1});
    EXPECT_EQ(factor_mod_p(f, 42), factor_mod_p(f, 42));
}

TEST(FactorModP, NonMonicLeadingCoefficient) {
    // 3(x+1)^2 (x+2) over F_7 = 3x^3 + 12x^2 + 15x + 6.
    auto f = mp(7, {6, 15, 12, 3});
    auto fs = factor_mod_p(f, 3);
    ModPoly prod = ModPoly::constant(f.field(), f.lead());
    for (const auto& [g, m] : fs)
        for (int i = 0; i < m; ++i) prod = prod * g;
    EXPECT_EQ(prod, f);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].factor, mp(7, {1, 1}));
    EXPECT_EQ(fs[0].multiplicity, 2);
}

// Refactoring identity and trial-division oracle for all monic f, deg <= 5.
TEST(FactorModP, OracleAllMonicUpToDegree5) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        std::size_t checked = 0;
        for (int d = 1; d <= 5; ++d) {
            for (const auto& f : monic_polys(F, d)) {
                auto fs = factor_mod_p(f, 1000 + checked);
                ModPoly prod = ModPoly::constant(F, 1);
                std::map<ModPoly, int> got;
                for (const auto& [g, m] : fs) {
                    ASSERT_TRUE(is_irreducible_mod_p(g));
                    ASSERT_EQ(g.lead(), 1u);
                    for (int i = 0; i < m; ++i) prod = prod * g;
                    got[g] += m;
                }
                ASSERT_EQ(prod, f) << f.to_string();
                ASSERT_EQ(got, trial_division(f)) << f.to_string() << " mod " << p;
                ++checked;
            }
        }
        EXPECT_GT(checked, 0u);
    }
}

TEST(SplittingType, KnownValues) {
    EXPECT_EQ(splitting_type(mp(5, {1, 0, 1})).to_string(), "{1,1}");
    EXPECT_EQ(splitting_type(mp(5, {0, -1, 0, 1})).to_string(), "{1,1,1}");
    EXPECT_EQ(splitting_type(mp(5, {-1, -1, 0, 1})).to_string(), "{2,1}");
    // non-squarefree convention: (x-1)^2 -> {1,1}
    EXPECT_EQ(splitting_type(mp(7, {1, -2, 1})).to_string(), "{1,1}");
    EXPECT_THROW(splitting_type(mp(5, {2})), validation_error);
}

TEST(SplittingType, MatchesFactorDegreesAndSums) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (int d = 1; d <= 5; ++d)
            for (const auto& f : monic_polys(F, d)) {
                auto t = splitting_type(f);
                ASSERT_EQ(t.degree(), static_cast<unsigned>(d));
                std::vector<unsigned> parts;
                for (const auto& [g, m] : factor_mod_p(f, 5))
                    for (int i = 0; i < m; ++i) parts.push_back(static_cast<unsigned>(g.degree()));
                ASSERT_EQ(t, SplittingType(parts)) << f.to_string();
            }
    }
}

TEST(IsIrreducible, KnownValues) {
    EXPECT_TRUE(is_irreducible_mod_p(mp(2, {-1, -1, 0, 1})));
    EXPECT_FALSE(is_irreducible_mod_p(mp(7, {-1, 0, 1})));
    EXPECT_TRUE(is_irreducible_mod_p(mp(11, {4, 3})));
}

// Gauss's count (1/d) sum_{e|d} mu(e) p^(d/e).
TEST(IsIrreducible, IrreducibleCountCensus) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        for (int d = 1; d <= 4; ++d) {
            long long expected = 0;
            for (int e = 1; e <= d; ++e) {
                if (d % e) continue;
                long long pw = 1;
                for (int i = 0; i < d / e; ++i) pw *= p;
                expected += moebius(static_cast<std::uint64_t>(e)) * pw;
            }
            expected /= d;
            long long got = 0;
            for (const auto& f : monic_polys(F, d)) got += is_irreducible_mod_p(f);
            EXPECT_EQ(got, expected) << "p=" << p << " d=" << d;
        }
    }
}

TEST(XnMinusA, KnownValues) {
    EXPECT_TRUE(xn_minus_a_irreducible(2, 2, PrimeField(5)));
    EXPECT_FALSE(xn_minus_a_irreducible(2, 4, PrimeField(7)));
    for (std::uint32_t p : {3u, 5u, 13u}) EXPECT_FALSE(xn_minus_a_irreducible(4, 1, PrimeField(p)));
    EXPECT_THROW(xn_minus_a_irreducible(3, 0, PrimeField(5)), validation_error);
    EXPECT_THROW(xn_minus_a_irreducible(3, 10, PrimeField(5)), validation_error);
}

TEST(XnMinusA, AgreesWithIrreducibilityTest) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        PrimeField F(p);
        for (std::uint64_t n : {2u, 3u, 4u, 6u})
            for (std::uint32_t a = 1; a < p; ++a) {
                std::vector<std::uint32_t> c(n + 1, 0);
                c[0] = F.neg(a);
                c[n] = 1;
                ASSERT_EQ(xn_minus_a_irreducible(n, a, F), is_irreducible_mod_p(ModPoly(F, c)))
                    << "n=" << n << " a=" << a << " p=" << p;
            }
    }
}

TEST(Squarefree, DecompositionReassembles) {
    // (x+1)^3 (x^2+1) x^2 over F_3: exercises the p-th root branch.
    PrimeField F(3);
    ModPoly f = mp(3, {1, 1}) * mp(3, {1, 1}) * mp(3, {1, 1}) * mp(3, {1, 0, 1}) * mp(3, {0, 0, 1});
    ModPoly prod = ModPoly::constant(F, 1);
    for (const auto& [g, m] : squarefree_decomposition(f)) {
        EXPECT_TRUE(is_squarefree(g));
        for (int i = 0; i < m; ++i) prod = prod * g;
    }
    EXPECT_EQ(prod, f);
}

TEST(ComposeAffine, Basic) {
    // (x+1)^2 at 2x+3 over F_7 = (2x+4)^2 = 4x^2+16x+16.
    EXPECT_EQ(compose_affine(mp(7, {1, 2, 1}), 2, 3), mp(7, {16, 16, 4}));
}
