#pragma once

// Brute-force reference implementations. Nothing here calls into the
// correlation, certify or increment code paths; everything is computed from
// the defining sums on plain vectors.

#include <vector>

#include "rothlab/arith.hpp"
#include "rothlab/sets.hpp"

namespace rothlab::oracle {

/// Pairs (x, r), r over all integers including 0, with x, x+r, x+2r in A.
Int count_3aps_integer(const DenseSet& a);

/// N * (1_A - alpha 1_[N]) laid out on Z_m.
std::vector<Int> balanced_values(const DenseSet& a, Int m);

/// sum_x F(x) F(x + t) over Z_m.
BigInt r_naive(const std::vector<Int>& values, Int t);

/// sum_x (sum_{i<ell} F(x + i d))^2.
BigInt v_naive(const std::vector<Int>& values, Int d, Int ell);

/// Triple loop over (x, r) in Z_m^2 on integer-valued inputs.
BigInt trilinear_naive(const std::vector<Int>& g1, const std::vector<Int>& g2, const std::vector<Int>& g3);

struct Progression {
    Int start = 0;
    Int step = 1;
    Int length = 0;

    friend bool operator==(const Progression&, const Progression&) = default;
};

struct BestProgression {
    Progression p;
    Rational density;
};

inline constexpr Int kExhaustiveBudget = 600;

/// max |A n P| / |P| over integer progressions P in [n] with |P| >= min_len.
/// Ties: longer P, then smaller start, then smaller step.
BestProgression best_progression_exhaustive(const DenseSet& a, Int min_len);

/// Maximum 3AP-free subset size of [n] by plain subset enumeration (n <= 24).
Int r3_enumerate(Int n);

/// Smallest prime in (lo, hi) by trial division; 0 when none.
Int smallest_prime_trial(Int lo, Int hi);

} // namespace rothlab::oracle
