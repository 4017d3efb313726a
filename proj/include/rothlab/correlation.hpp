#pragma once

// Scaled-integer versions of the balanced function and its correlation data.
//
//   F(x)   = N * f(x),       f = 1_A - alpha 1_[N] on Z_m
//   R~(t)  = N^2 * R(t),     R(t) = sum_x f(x) f(x+t)
//   E~     = N^4 * E(f),     E(f) = sum_t R(t)^2
//   S~_d(x) = N * S_d(x),    S_d(x) = sum_{i<l} f(x + i d)
//   V~_d   = N^2 * V_d,      V_d = sum_x S_d(x)^2
//
// Every identity between these quantities is an exact integer equality.

#include <vector>

#include "rothlab/modring.hpp"
#include "rothlab/sets.hpp"

namespace rothlab {

/// A rational-valued function on Z_m: g(x) = num[x] / den, den > 0.
struct ScaledFunction {
    std::vector<Int> num;
    Int den = 1;

    Int modulus() const { return static_cast<Int>(num.size()); }
    /// max |g| <= 1
    bool bounded_by_one() const;

    static ScaledFunction indicator(const DenseSet& a, Int m);
};

struct BalancedProfile {
    ModContext ctx;
    std::vector<Int> values;  // F(x) for x in Z_m
    Int set_size = 0;         // |A|

    Int scale() const { return ctx.N; }
    ScaledFunction as_function() const { return {values, ctx.N}; }
};

struct CorrelationProfile {
    ModContext ctx;
    std::vector<Int> rvals;  // R~(t), scale N^2

    Int at(Int t) const { return rvals[static_cast<std::size_t>(mod_reduce(t, ctx.m))]; }
};

struct EnergyValue {
    Wide evalue = 0;  // E~, scale N^4
};

struct WindowProfile {
    Int d = 0;
    Int ell = 0;
    std::vector<Int> svals;  // S~_d(x), scale N
    Wide vvalue = 0;         // V~_d, scale N^2
};

enum class AutocorrKernel {
    Reference,  // O(m * N): every shift t against the support [N]
    Fast,       // O(N^2 / 2): nonzero lags |t| < N only, mirrored
};

BalancedProfile balanced_profile(const DenseSet& a, const ModContext& ctx);

/// Both kernels return identical integers; `threads` splits the lag range.
CorrelationProfile autocorrelation(const BalancedProfile& p, AutocorrKernel kernel = AutocorrKernel::Fast,
                                   int threads = 1);

EnergyValue energy(const CorrelationProfile& c);

/// Lambda(g1, g2, g3) = sum_{x, r in Z_m} g1(x) g2(x + r) g3(x + 2r), exact.
Rational trilinear(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3);

/// Numerator of trilinear over den1*den2*den3.
Wide trilinear_scaled(const ScaledFunction& g1, const ScaledFunction& g2, const ScaledFunction& g3);

/// E(g) for an arbitrary scaled function, exact.
Rational function_energy(const ScaledFunction& g);

/// Sliding window along the cycle x, x+d, x+2d, ...; requires 1 <= ell < m/2.
WindowProfile window_sums(const BalancedProfile& p, Int d, Int ell);

/// V~_d for every d in Z_m from V~_d = sum_{|h|<l} (l - |h|) R~(h d).
std::vector<Wide> v_profile(const CorrelationProfile& c, Int ell, int threads = 1);

/// Throws InvalidArgument unless 1 <= ell < m/2.
void require_window_length(Int ell, Int m);

} // namespace rothlab
