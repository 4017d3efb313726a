#pragma once

// One density-increment step: a long modular progression on which f has
// positive mean, shortened to a block whose step is a small integer, then
// intersected with [N] to give a genuine integer progression.

#include <optional>
#include <span>
#include <vector>

#include "rothlab/certify.hpp"

namespace rothlab {

enum class IncrementMode { Certified, Greedy };

struct IncrementConfig {
    IncrementMode mode = IncrementMode::Certified;
    Rational c_ell{1, 64};   // window length constant
    Rational c_K{1, 20};     // block length constant
    std::optional<Int> ell_override;
    Int min_len = 1;         // minimum |P|
    int threads = 1;
    std::uint64_t seed = 0;  // greedy d-sampling
    Int greedy_full_scan_limit = 40000;  // scan every d when m is at most this
    Int greedy_samples = 4096;

    /// 0 < c_ell <= 1, 0 < c_K <= 1/10, min_len >= 1.
    void validate() const;
};

enum class IncrementFailureKind { NoIncrement, TooShort, ZeroEnergy };

class IncrementFailure : public Error {
public:
    IncrementFailure(IncrementFailureKind kind, const std::string& what) : Error(what), kind_(kind) {}
    IncrementFailureKind kind() const { return kind_; }

private:
    IncrementFailureKind kind_;
};

/// Terms start + i*step (mod m), i < length; `step` is the integer representative.
struct ModularBlock {
    Int start = 0;
    Int step = 0;
    Int length = 0;
    Int sum = 0;  // sum of F over the block

    friend bool operator==(const ModularBlock&, const ModularBlock&) = default;
};

/// Terms a + i*s, i < L, all inside [0, N).
struct IntegerProgression {
    Int a = 0;
    Int s = 1;
    Int L = 0;

    Int term(Int i) const { return a + i * s; }
    friend bool operator==(const IntegerProgression&, const IntegerProgression&) = default;
};

struct IncrementResult {
    IncrementMode mode = IncrementMode::Certified;
    Int d = 0;
    Int x = 0;
    Int ell = 0;
    Int q = 0;
    Int s = 0;
    Int window_sum = 0;  // S~_d(x)
    ModularBlock block;
    IntegerProgression P;
    Rational eta;          // mean of f on P
    Rational new_density;  // |A n P| / |P|
    std::vector<InequalityReport> certificates;

    bool certificates_hold() const;
};

Int choose_window(const BalancedProfile& p, const EnergyValue& e, const IncrementConfig& cfg);

/// Nonzero d maximizing V~_d, smallest on ties.
Int best_step(std::span<const Wide> v);

struct StartChoice {
    Int x = 0;
    Int value = 0;  // S~_d(x)
};

/// x maximizing S~_d(x), smallest on ties.
StartChoice best_start(const BalancedProfile& p, Int d, Int ell);

struct SmallStep {
    Int q = 1;
    Int s = 0;
};

/// q in [1, floor(sqrt(ell))] minimizing |centered_rep(q d)|.
SmallStep small_step(Int d, const ModContext& ctx, Int ell);

/// Block length before the travel constraint: max(1, floor(c_K sqrt(ell))).
Int block_length(Int ell, const Rational& c_K);

/// Splits the window into q interleaved progressions of step s and those into
/// consecutive blocks (short tail merged into its predecessor). Every block
/// travels less than m/10.
std::vector<ModularBlock> split_window(const BalancedProfile& p, Int x, Int d, Int ell, SmallStep step,
                                       const IncrementConfig& cfg);

/// Block of maximum mean (earliest on ties).
ModularBlock extract_block(const BalancedProfile& p, Int x, Int d, Int ell, SmallStep step,
                           const IncrementConfig& cfg);

/// The terms of the block inside [N] as an integer progression.
IntegerProgression rectify(const ModularBlock& block, const ModContext& ctx);

IncrementResult density_increment(const DenseSet& a, const ModContext& ctx, const IncrementConfig& cfg = {});

/// A' subset of [L] with i in A' iff a + i s in A.
DenseSet rescale(const DenseSet& a, const IntegerProgression& P);

const char* to_string(IncrementMode mode);
const char* to_string(IncrementFailureKind kind);

} // namespace rothlab
