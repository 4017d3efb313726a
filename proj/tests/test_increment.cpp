#include <gtest/gtest.h>

#include <random>

#include "rothlab/increment.hpp"
#include "rothlab/oracle.hpp"

using namespace rothlab;

namespace {

std::vector<Int> members(const DenseSet& a) { return {a.members().begin(), a.members().end()}; }

struct SmallSet : ::testing::Test {
    DenseSet a{5, {0, 1, 3, 4}};
    ModContext ctx = choose_modulus(5);
    BalancedProfile p = balanced_profile(a, ctx);
    CorrelationProfile c = autocorrelation(p);
    EnergyValue e = energy(c);
};

void expect_certificates(const IncrementResult& r) {
    for (const auto& cert : r.certificates) EXPECT_TRUE(cert.holds) << cert.name;
}

} // namespace

TEST(IncrementConfig, Validation) {
    IncrementConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.c_K = Rational(1, 5);
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.c_ell = Rational(0);
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.c_ell = Rational(3, 2);
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.min_len = 0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST_F(SmallSet, ChooseWindow) {
    IncrementConfig cfg;
    EXPECT_EQ(choose_window(p, e, cfg), 1);  // 580 / (25 * 529 * 16) / 64 < 1
    cfg.ell_override = 2;
    EXPECT_EQ(choose_window(p, e, cfg), 2);
    cfg.ell_override = 12;
    EXPECT_THROW(choose_window(p, e, cfg), InvalidArgument);
    try {
        choose_window(p, EnergyValue{0}, IncrementConfig{});
        FAIL() << "expected ZeroEnergy";
    } catch (const IncrementFailure& f) {
        EXPECT_EQ(f.kind(), IncrementFailureKind::ZeroEnergy);
    }
}

TEST(ChooseWindow, ClampsAtUpperEnd) {
    // Hand-built energy far above the natural range forces the upper clamp.
    const auto ctx = choose_modulus(5);
    const auto p = balanced_profile(DenseSet(5, {0, 1, 3, 4}), ctx);
    IncrementConfig cfg;
    cfg.c_ell = 1;
    EXPECT_EQ(choose_window(p, EnergyValue{Wide{1} << 100}, cfg), 11);
}

TEST(ChooseWindow, BehrendMeasuredRatio) {
    const auto a = behrend(2000);
    const auto ctx = choose_modulus(2000);
    const auto p = balanced_profile(a, ctx);
    const auto e = energy(autocorrelation(p));
    // beta_hat m / alpha^2 = E~ / (N^2 m^2 |A|^2); recompute the floor independently.
    const BigInt den = to_big(Int{2000} * 2000) * to_big(ctx.m * ctx.m) * to_big(static_cast<Int>(a.size() * a.size()));
    const BigInt ratio_floor = to_big(e.evalue) / den;
    IncrementConfig cfg;
    const Int ell = choose_window(p, e, cfg);
    EXPECT_GE(ell, 1);
    EXPECT_LT(2 * ell, ctx.m);
    cfg.c_ell = 1;
    const Int full = choose_window(p, e, cfg);
    EXPECT_EQ(BigInt(static_cast<long>(full)), ratio_floor < 1 ? BigInt(1) : ratio_floor);
}

TEST(BestStep, Examples) {
    std::vector<Wide> single(23, 0);
    single[0] = 100;
    single[3] = 5;
    EXPECT_EQ(best_step(single), 3);

    std::vector<Wide> tie(23, 0);
    tie[4] = 9;
    tie[19] = 9;
    EXPECT_EQ(best_step(tie), 4);

    std::vector<Wide> zero(23, 0);
    zero[0] = 50;
    EXPECT_THROW(best_step(zero), IncrementFailure);
}

TEST_F(SmallSet, BestStepPigeonholeChain) {
    const auto v = v_profile(c, 2);
    const Int d = best_step(v);
    Wide total = 0, squares = 0;
    for (Int k = 0; k < 23; ++k) {
        total += v[static_cast<std::size_t>(k)];
        if (k != 0) squares += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
        if (k != 0) EXPECT_LE(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(d)]);
    }
    EXPECT_GE(v[static_cast<std::size_t>(d)] * total, squares);
}

TEST_F(SmallSet, BestStart) {
    const auto s = best_start(p, 1, 2);
    EXPECT_EQ(s.x, 0);
    EXPECT_EQ(s.value, 2);
    EXPECT_THROW(best_start(p, 0, 2), InvalidArgument);
    const auto zero = balanced_profile(DenseSet(5, {}), ctx);
    EXPECT_EQ(best_start(zero, 1, 2).value, 0);
}

TEST(BestStart, MeetsPositiveMassBound) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = greedy_free(40 + static_cast<Int>(seed) * 5);
        const auto ctx = choose_modulus(a.n());
        const auto p = balanced_profile(a, ctx);
        const auto c = autocorrelation(p);
        const Int ell = 2 + static_cast<Int>(seed % 6);
        const auto v = v_profile(c, ell);
        const Int d = best_step(v);
        const auto s = best_start(p, d, ell);
        ASSERT_GE(static_cast<Wide>(2 * ell * ctx.N * ctx.m) * s.value, v[static_cast<std::size_t>(d)]);
    }
}

TEST(SmallStep, Examples) {
    const ModContext ctx{5, 23};
    const auto s = small_step(7, ctx, 9);
    EXPECT_EQ(s.q, 3);
    EXPECT_EQ(s.s, -2);
    for (Int ell : {1, 2, 3}) {
        const auto t = small_step(15, ctx, ell);
        EXPECT_EQ(t.q, 1);
        EXPECT_EQ(t.s, centered_rep(15, 23));
    }
    for (Int ell : {1, 4, 10, 11}) {
        const auto one = small_step(1, ctx, ell);
        EXPECT_EQ(one.q, 1);
        EXPECT_EQ(one.s, 1);
    }
    EXPECT_THROW(small_step(0, ctx, 4), InvalidArgument);
}

TEST(SmallStep, PigeonholeBound) {
    for (Int m : {23, 101, 997}) {
        const ModContext ctx{m / 5, m};
        for (Int d = 1; d < m; ++d) {
            for (Int ell : {1, 4, 9, 30, 49}) {
                if (2 * ell >= m) continue;
                const auto s = small_step(d, ctx, ell);
                const Int root = static_cast<Int>(std::sqrt(static_cast<double>(ell)));
                ASSERT_NE(s.s, 0);
                ASSERT_LE(std::abs(s.s) * root, m);
                ASSERT_EQ(mod_reduce(s.s - s.q * d, m), 0);
            }
        }
    }
}

TEST(BlockLength, FloorOfConstantTimesRoot) {
    EXPECT_EQ(block_length(1, Rational(1, 20)), 1);
    EXPECT_EQ(block_length(400, Rational(1, 20)), 1);
    EXPECT_EQ(block_length(1600, Rational(1, 20)), 2);
    EXPECT_EQ(block_length(1599, Rational(1, 20)), 1);
    EXPECT_EQ(block_length(10000, Rational(1, 10)), 10);
}

TEST_F(SmallSet, SingleTermWindowIsOneBlock) {
    const IncrementConfig cfg;
    const auto blocks = split_window(p, 0, 1, 1, {1, 1}, cfg);
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0], (ModularBlock{0, 1, 1, 1}));
}

TEST(SplitWindow, PartitionsWindowAndRespectsTravel) {
    const auto a = greedy_free(300);
    const auto ctx = choose_modulus(300);
    const auto p = balanced_profile(a, ctx);
    IncrementConfig cfg;
    cfg.c_K = Rational(1, 10);
    for (Int d : {1, 7, 100, 555}) {
        for (Int ell : {16, 100, 400}) {
            const auto step = small_step(d, ctx, ell);
            const auto blocks = split_window(p, 3, d, ell, step, cfg);
            Int total_len = 0, total_sum = 0;
            for (const auto& b : blocks) {
                total_len += b.length;
                total_sum += b.sum;
                ASSERT_LT(10 * std::abs(b.step) * (b.length - 1), ctx.m);
            }
            ASSERT_EQ(total_len, ell);
            ASSERT_EQ(total_sum, window_sums(p, d, ell).svals[3]);
        }
    }
}

TEST(ExtractBlock, AveragingGuarantee) {
    IncrementConfig cfg;
    cfg.c_K = Rational(1, 10);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = random_subset(400, 0.3, seed);
        const auto ctx = choose_modulus(400);
        const auto p = balanced_profile(a, ctx);
        const Int d = 1 + static_cast<Int>(seed * 37 % static_cast<std::uint64_t>(ctx.m - 1));
        const Int ell = 100 + static_cast<Int>(seed) * 11;
        const auto start = best_start(p, d, ell);
        const auto step = small_step(d, ctx, ell);
        const auto block = extract_block(p, start.x, d, ell, step, cfg);
        // block mean >= window mean
        ASSERT_GE(static_cast<Wide>(block.sum) * ell, static_cast<Wide>(start.value) * block.length) << seed;
        for (const auto& other : split_window(p, start.x, d, ell, step, cfg))
            ASSERT_GE(static_cast<Wide>(block.sum) * other.length, static_cast<Wide>(other.sum) * block.length);
    }
}

TEST(Rectify, Examples) {
    const ModContext ctx{20, 83};
    const ModularBlock inside{3, 2, 5, 0};
    EXPECT_EQ(rectify(inside, ctx), (IntegerProgression{3, 2, 5}));

    const ModularBlock edge{18, 1, 4, 0};
    EXPECT_EQ(rectify(edge, ctx), (IntegerProgression{18, 1, 2}));

    const ModularBlock wrapped{81, 1, 4, 0};  // 81, 82, 0, 1
    EXPECT_EQ(rectify(wrapped, ctx), (IntegerProgression{0, 1, 2}));

    const ModularBlock downward{2, -1, 4, 0};  // 2, 1, 0, 82
    EXPECT_EQ(rectify(downward, ctx), (IntegerProgression{2, -1, 3}));

    EXPECT_THROW(rectify(ModularBlock{40, 1, 3, 0}, ctx), IncrementFailure);
    EXPECT_THROW(rectify(ModularBlock{0, 5, 3, 0}, ctx), InvalidArgument);  // travels 10 >= 83/10
}

TEST(DensityIncrement, GreedyOnStanleySet) {
    const auto a = greedy_free(243);
    IncrementConfig cfg;
    cfg.mode = IncrementMode::Greedy;
    const auto r = density_increment(a, choose_modulus(243), cfg);
    EXPECT_GT(r.new_density, a.density());
    EXPECT_EQ(r.new_density, a.density() + r.eta);
    expect_certificates(r);
    const auto rescaled = rescale(a, r.P);
    EXPECT_EQ(rescaled.density(), r.new_density);
}

TEST(DensityIncrement, FullIntervalHasZeroEnergy) {
    for (auto mode : {IncrementMode::Certified, IncrementMode::Greedy}) {
        IncrementConfig cfg;
        cfg.mode = mode;
        try {
            density_increment(DenseSet::interval(30), choose_modulus(30), cfg);
            FAIL() << "expected ZeroEnergy";
        } catch (const IncrementFailure& f) {
            EXPECT_EQ(f.kind(), IncrementFailureKind::ZeroEnergy);
        }
    }
}

TEST(DensityIncrement, CertifiedChainOnCorpus) {
    for (const auto& a : {greedy_free(243), behrend(500), greedy_free(100)}) {
        for (std::optional<Int> ell : {std::optional<Int>{}, std::optional<Int>{16}, std::optional<Int>{64}}) {
            IncrementConfig cfg;
            cfg.ell_override = ell;
            const auto r = density_increment(a, choose_modulus(a.n()), cfg);
            EXPECT_GT(r.eta, 0);
            expect_certificates(r);
            EXPECT_EQ(r.certificates.size(), 8u);
        }
    }
}

TEST(DensityIncrement, BoundedByExhaustiveOracle) {
    const auto a = random_subset(500, 0.5, 3);
    const auto ctx = choose_modulus(500);
    for (Int min_len : {1, 3, 10}) {
        const auto best = oracle::best_progression_exhaustive(a, min_len);
        for (auto mode : {IncrementMode::Certified, IncrementMode::Greedy}) {
            for (std::optional<Int> ell : {std::optional<Int>{}, std::optional<Int>{25}, std::optional<Int>{200}}) {
                IncrementConfig cfg;
                cfg.mode = mode;
                cfg.min_len = min_len;
                cfg.ell_override = ell;
                try {
                    const auto r = density_increment(a, ctx, cfg);
                    EXPECT_LE(r.new_density, best.density);
                    EXPECT_GE(r.P.L, min_len);
                    expect_certificates(r);
                } catch (const IncrementFailure& f) {
                    EXPECT_EQ(f.kind(), IncrementFailureKind::TooShort);
                }
            }
        }
    }
}

TEST(DensityIncrement, GreedyDominatesCertified) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto a = seed % 2 ? greedy_free(200 + static_cast<Int>(seed) * 40) : random_subset(300, 0.2, seed);
        const auto ctx = choose_modulus(a.n());
        for (Int ell : {4, 30, 90}) {
            IncrementConfig cfg;
            cfg.ell_override = ell;
            const auto certified = density_increment(a, ctx, cfg);
            cfg.mode = IncrementMode::Greedy;
            const auto greedy = density_increment(a, ctx, cfg);
            ASSERT_GE(greedy.new_density, certified.new_density) << seed << " " << ell;
        }
    }
}

TEST(DensityIncrement, ThreadCountDoesNotChangeResult) {
    const auto a = behrend(1000);
    IncrementConfig cfg;
    cfg.mode = IncrementMode::Greedy;
    cfg.ell_override = 40;
    const auto one = density_increment(a, choose_modulus(1000), cfg);
    cfg.threads = 4;
    const auto four = density_increment(a, choose_modulus(1000), cfg);
    EXPECT_EQ(one.P, four.P);
    EXPECT_EQ(one.d, four.d);
    EXPECT_EQ(one.new_density, four.new_density);
}

TEST(DensityIncrement, SampledGreedyIsSeeded) {
    const auto a = greedy_free(729);
    IncrementConfig cfg;
    cfg.mode = IncrementMode::Greedy;
    cfg.ell_override = 30;
    cfg.greedy_full_scan_limit = 100;
    cfg.greedy_samples = 50;
    cfg.seed = 9;
    const auto first = density_increment(a, choose_modulus(729), cfg);
    const auto second = density_increment(a, choose_modulus(729), cfg);
    EXPECT_EQ(first.P, second.P);
    EXPECT_EQ(first.d, second.d);
    cfg.mode = IncrementMode::Certified;
    const auto certified = density_increment(a, choose_modulus(729), cfg);
    EXPECT_GE(first.new_density, certified.new_density);
}

TEST(DensityIncrement, TooShortIsReported) {
    const auto a = greedy_free(243);
    IncrementConfig cfg;
    cfg.min_len = 200;
    try {
        density_increment(a, choose_modulus(243), cfg);
        FAIL() << "expected TooShort";
    } catch (const IncrementFailure& f) {
        EXPECT_EQ(f.kind(), IncrementFailureKind::TooShort);
    }
}

TEST(Rescale, Examples) {
    const DenseSet a{5, {0, 1, 3, 4}};
    EXPECT_EQ(members(rescale(a, {0, 3, 2})), (std::vector<Int>{0, 1}));
    EXPECT_EQ(rescale(a, {0, 1, 5}), a);
    EXPECT_EQ(members(rescale(a, {4, -1, 5})), (std::vector<Int>{0, 1, 3, 4}));
    EXPECT_THROW(rescale(a, {3, 1, 3}), InvalidArgument);
    EXPECT_THROW(rescale(a, {0, 0, 2}), InvalidArgument);
}

TEST(Rescale, PreservesFreeness) {
    std::mt19937_64 rng(4);
    int pairs = 0;
    for (Int n : {50, 81, 120, 243, 500}) {
        for (const auto& a : {greedy_free(n), behrend(n)}) {
            for (int i = 0; i < 20; ++i, ++pairs) {
                const Int s = 1 + static_cast<Int>(rng() % 10);
                const Int start = static_cast<Int>(rng() % static_cast<std::uint64_t>(n));
                const Int max_len = (n - 1 - start) / s + 1;
                const Int len = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(max_len));
                const IntegerProgression P = (i % 2) ? IntegerProgression{start, s, len}
                                                     : IntegerProgression{start + (len - 1) * s, -s, len};
                const auto r = rescale(a, P);
                ASSERT_TRUE(is_3ap_free(r).free);
                Int hits = 0;
                for (Int k = 0; k < len; ++k) hits += a.contains(P.term(k));
                ASSERT_EQ(static_cast<Int>(r.size()), hits);
            }
        }
    }
    EXPECT_EQ(pairs, 200);
}
