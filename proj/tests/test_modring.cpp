#include <gtest/gtest.h>

#include "rothlab/modring.hpp"
#include "rothlab/oracle.hpp"

using namespace rothlab;

TEST(ChooseModulus, SmallExamples) {
    EXPECT_EQ(choose_modulus(1).m, 5);
    EXPECT_EQ(choose_modulus(5).m, 23);
    EXPECT_EQ(choose_modulus(10).m, 41);
}

TEST(ChooseModulus, AgreesWithTrialDivisionScan) {
    for (Int N = 1; N <= 10000; ++N) {
        const ModContext ctx = choose_modulus(N);
        ASSERT_EQ(ctx.N, N);
        ASSERT_GT(ctx.m, 4 * N);
        ASSERT_LT(ctx.m, 8 * N);
        if (N <= 2000) ASSERT_EQ(ctx.m, oracle::smallest_prime_trial(4 * N, 8 * N)) << N;
    }
}

TEST(ChooseModulus, RejectsNonPositive) {
    EXPECT_THROW(choose_modulus(0), InvalidArgument);
    EXPECT_THROW(choose_modulus(-3), InvalidArgument);
}

TEST(IsPrime, MatchesTrialDivision) {
    for (Int n = 0; n < 20000; ++n) {
        const bool expected = n >= 2 && oracle::smallest_prime_trial(n - 1, n + 1) == n;
        ASSERT_EQ(is_prime(static_cast<std::uint64_t>(n)), expected) << n;
    }
}

TEST(IsPrime, LargeKnownValues) {
    EXPECT_TRUE(is_prime(2305843009213693951ULL));   // 2^61 - 1
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
}

TEST(CenteredRep, Examples) {
    EXPECT_EQ(centered_rep(7, 23), 7);
    EXPECT_EQ(centered_rep(21, 23), -2);
    EXPECT_EQ(centered_rep(12, 23), -11);
    EXPECT_EQ(centered_rep(11, 23), 11);
    EXPECT_EQ(centered_rep(5, 10), 5);  // m/2 itself stays positive
}

TEST(CenteredRep, CongruentAndSmall) {
    for (Int m : {2, 3, 5, 10, 23, 97, 1000}) {
        for (Int x = 0; x < m; ++x) {
            const Int s = centered_rep(x, m);
            ASSERT_EQ(mod_reduce(s - x, m), 0);
            ASSERT_LE(2 * std::abs(s), m);
            ASSERT_GT(2 * s, -m);
        }
    }
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(1, 23), 1);
    EXPECT_EQ(mod_inverse(2, 23), 12);
    EXPECT_EQ(mod_inverse(7, 23), 10);
}

TEST(ModInverse, RoundTripForPrimesUpTo1000) {
    for (Int m = 2; m <= 1000; ++m) {
        if (!is_prime(static_cast<std::uint64_t>(m))) continue;
        for (Int a = 1; a < m; ++a) ASSERT_EQ(mul_mod(a, mod_inverse(a, m), m), 1) << a << " mod " << m;
    }
}

TEST(ModInverse, RejectsZero) {
    EXPECT_THROW(mod_inverse(0, 23), InvalidArgument);
    EXPECT_THROW(mod_inverse(46, 23), InvalidArgument);
}
