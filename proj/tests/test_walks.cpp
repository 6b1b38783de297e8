#include <polymat/walks.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace polymat;

namespace {
const GroupId SL2(GroupKind::SL, 2);
const GroupId SP4(GroupKind::SP, 4);
}  // namespace

TEST(WalkGraph, Validation) {
    EXPECT_THROW(WalkGraph(WalkKind::BOUQUET, {}), validation_error);
    EXPECT_THROW(WalkGraph(WalkKind::BOUQUET, {1, 2, 0}), validation_error);
    EXPECT_THROW(WalkGraph(WalkKind::BOUQUET, {1, 0}, 1, 1), validation_error);
    EXPECT_NO_THROW(WalkGraph(WalkKind::BOUQUET, {0}, 1, 2));
}

TEST(SampleWord, KnownValues) {
    auto gens = standard_generators(SL2);
    auto bq = WalkGraph::over(gens, WalkKind::BOUQUET);
    EXPECT_EQ(sample_word(bq, 0, 9).length(), 0u);
    auto nb = WalkGraph::over(gens, WalkKind::NO_BACKTRACK);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Word w = sample_word(nb, 50, seed);
        ASSERT_EQ(w.length(), 50u);
        for (std::size_t i = 1; i < w.length(); ++i) ASSERT_NE(w.labels[i], nb.inverse[w.labels[i - 1]]);
    }
}

TEST(SampleWord, UniformFirstLetter) {
    auto bq = WalkGraph::over(standard_generators(SL2), WalkKind::BOUQUET);
    std::vector<int> counts(4, 0);
    const int draws = 10000;
    for (int s = 0; s < draws; ++s) ++counts[sample_word(bq, 1, derive_seed(77, s)).labels[0]];
    const double mean = draws / 4.0, sd = std::sqrt(draws * 0.25 * 0.75);
    for (int c : counts) EXPECT_LT(std::abs(c - mean), 5 * sd);
}

TEST(SampleWord, Deterministic) {
    auto g = WalkGraph::over(standard_generators(SP4), WalkKind::NO_BACKTRACK);
    EXPECT_EQ(sample_word(g, 40, 123), sample_word(g, 40, 123));
    EXPECT_NE(sample_word(g, 40, 123), sample_word(g, 40, 124));
    // identical across thread counts
    auto one = parallel_map(64, 1, [&](std::size_t i) { return sample_word(g, 30, derive_seed(5, i)); });
    auto many = parallel_map(64, 7, [&](std::size_t i) { return sample_word(g, 30, derive_seed(5, i)); });
    EXPECT_EQ(one, many);
}

TEST(SampleWord, LazyHoldsDropLetters) {
    auto g = WalkGraph(WalkKind::BOUQUET, {1, 0}, 1, 2);
    std::size_t total = 0;
    for (std::uint64_t s = 0; s < 400; ++s) total += sample_word(g, 100, s).length();
    EXPECT_NEAR(total / 400.0, 50.0, 2.0);
}

TEST(EvaluateWord, KnownValues) {
    IntMatrix a{{1, 1}, {0, 1}}, b{{1, 0}, {1, 1}};
    EXPECT_EQ(evaluate_word(Word{}, {a}), IntMatrix::identity(2));
    EXPECT_EQ(evaluate_word(Word{{0, 0}}, {a}), (IntMatrix{{1, 2}, {0, 1}}));
    EXPECT_EQ(evaluate_word(Word{{0, 1}}, {a, b}), (IntMatrix{{2, 1}, {1, 1}}));
    EXPECT_THROW(evaluate_word(Word{{0}}, {a, IntMatrix::identity(3)}), validation_error);
    EXPECT_THROW(evaluate_word(Word{{2}}, {a, b}), validation_error);
}

TEST(EvaluateWord, GroupClosure) {
    for (GroupId g : {SL2, GroupId(GroupKind::SL, 3), SP4, GroupId(GroupKind::SP, 6)}) {
        auto gens = standard_generators(g);
        auto wg = WalkGraph::over(gens, WalkKind::BOUQUET);
        for (std::uint64_t s = 0; s < 250; ++s) {
            IntMatrix m = evaluate_word(sample_word(wg, s % 31, s), gens.mats);
            ASSERT_TRUE(in_group(m, g)) << g.name();
        }
    }
}

TEST(EvaluateWord, EntryGrowth) {
    auto gens = standard_generators(SL2);
    auto wg = WalkGraph::over(gens, WalkKind::NO_BACKTRACK);
    auto mean_bits = [&](std::size_t len) {
        double s = 0;
        for (std::uint64_t i = 0; i < 200; ++i)
            s += static_cast<double>(mpz_sizeinbase(evaluate_word(sample_word(wg, len, i), gens.mats).height().get_mpz_t(), 2));
        return s / 200;
    };
    double b10 = mean_bits(10), b40 = mean_bits(40), b160 = mean_bits(160);
    EXPECT_LT(b10, b40);
    EXPECT_LT(b40, b160);
    EXPECT_GT(b160, 40.0);
}

// Reduction mod p1*p2 agrees with the pair of reductions mod p1 and p2.
TEST(EvaluateWord, CrtConsistency) {
    auto gens = standard_generators(SP4);
    auto wg = WalkGraph::over(gens, WalkKind::BOUQUET);
    for (auto [p1, p2] : {std::pair{3u, 5u}, std::pair{5u, 7u}}) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            IntMatrix m = evaluate_word(sample_word(wg, 25, s), gens.mats);
            const BigInt K = p1 * p2;
            for (std::size_t i = 0; i < m.entries().size(); ++i) {
                BigInt r;
                mpz_fdiv_r(r.get_mpz_t(), m.entries()[i].get_mpz_t(), K.get_mpz_t());
                ASSERT_EQ(PrimeField(p1).reduce(r), PrimeField(p1).reduce(m.entries()[i]));
                ASSERT_EQ(PrimeField(p2).reduce(r), PrimeField(p2).reduce(m.entries()[i]));
            }
        }
    }
}

TEST(ExactWalk, PointMassAtZeroSteps) {
    auto gens = standard_generators(SL2);
    auto d = exact_walk_distribution(WalkGraph::over(gens, WalkKind::BOUQUET, 1, 2), gens, PrimeField(5), SL2, 0);
    ASSERT_EQ(d.size(), 120u);
    EXPECT_EQ(d[0], 1.0);
    EXPECT_NEAR(tv_to_uniform(d, 120), 119.0 / 120.0, 1e-14);
}

TEST(ExactWalk, LazySl25MonotoneAndMixes) {
    auto gens = standard_generators(SL2);
    WalkChain chain(WalkGraph::over(gens, WalkKind::BOUQUET, 1, 2), gens, PrimeField(5), SL2);
    EXPECT_EQ(chain.order(), 120u);
    EXPECT_TRUE(chain.generates_full_group());
    auto tv = tv_curve(WalkGraph::over(gens, WalkKind::BOUQUET, 1, 2), gens, PrimeField(5), SL2, 100);
    for (std::size_t s = 1; s < tv.size(); ++s) ASSERT_LE(tv[s], tv[s - 1] + 1e-12) << s;
    EXPECT_LT(tv[100], 0.01);
    double sum = 0;
    for (double v : exact_walk_distribution(WalkGraph::over(gens, WalkKind::BOUQUET, 1, 2), gens, PrimeField(5), SL2, 37))
        sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(ExactWalk, NonBacktrackingMarginal) {
    auto gens = standard_generators(SL2);
    auto g = WalkGraph::over(gens, WalkKind::NO_BACKTRACK, 1, 2);
    auto tv = tv_curve(g, gens, PrimeField(5), SL2, 200);
    EXPECT_LT(tv.back(), 0.01);
    // one step: uniform over the four generators
    auto d1 = exact_walk_distribution(g, gens, PrimeField(5), SL2, 1);
    EXPECT_NEAR(d1[0], 0.5, 1e-14);
}

TEST(ExactWalk, CapacityError) {
    auto gens = standard_generators(SP4);
    EXPECT_THROW(WalkChain(WalkGraph::over(gens, WalkKind::BOUQUET), gens, PrimeField(5), SP4, 10000), capacity_error);
}

TEST(TvToUniform, KnownValues) {
    std::vector<double> uni(120, 1.0 / 120);
    EXPECT_NEAR(tv_to_uniform(uni, 120), 0.0, 1e-14);
    std::vector<double> pm(120, 0.0);
    pm[7] = 1;
    EXPECT_NEAR(tv_to_uniform(pm, 120), 119.0 / 120, 1e-14);
    std::vector<double> mix(120);
    for (std::size_t i = 0; i < 120; ++i) mix[i] = (uni[i] + pm[i]) / 2;
    EXPECT_NEAR(tv_to_uniform(mix, 120), 119.0 / 240, 1e-14);
    EXPECT_THROW(tv_to_uniform({0.5, 0.2}, 2), validation_error);
    EXPECT_THROW(tv_to_uniform({1.5, -0.5}, 2), validation_error);
}
