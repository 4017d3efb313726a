#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "rothlab/arith.hpp"

namespace rothlab {

/// A subset of [n] = {0, ..., n-1}, stored as its sorted members.
class DenseSet {
public:
    DenseSet() = default;

    /// Validates that members are strictly increasing and inside [0, n).
    DenseSet(Int n, std::vector<Int> members);

    /// Sorts and deduplicates before validating range.
    static DenseSet from_unsorted(Int n, std::vector<Int> members);

    /// The full interval [n].
    static DenseSet interval(Int n);

    Int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Int> members() const { return members_; }

    bool contains(Int x) const;

    /// Exact |A| / n.
    Rational density() const;

    /// 0/1 indicator of length n.
    std::vector<std::uint8_t> indicator() const;

    friend bool operator==(const DenseSet&, const DenseSet&) = default;

private:
    Int n_ = 0;
    std::vector<Int> members_;
};

struct FreenessReport {
    bool free = true;
    /// (x, x+r, x+2r) with r > 0, all members.
    std::optional<std::array<Int, 3>> witness;
};

/// Exhaustive pair scan; witness is the lexicographically first 3AP.
FreenessReport is_3ap_free(const DenseSet& a);

/// Lexicographically greedy 3AP-free subset of [n].
DenseSet greedy_free(Int n);

struct BehrendParams {
    int k = 0;  // digit count
    Int base = 0;
    Int radius_sq = 0;
};

/// Digit/sphere construction; parameters used are written to `params` when
/// the construction (not the greedy fallback) produced the set.
DenseSet behrend(Int n, BehrendParams* params = nullptr);

/// Keeps each element independently with probability alpha (seeded, reproducible).
DenseSet random_subset(Int n, double alpha, std::uint64_t seed);

struct ExtremalResult {
    Int size = 0;
    DenseSet extremal;
};

inline constexpr Int kR3DefaultCeiling = 40;

/// Maximum 3AP-free subset of [n] by branch and bound. The witness is the
/// lexicographically smallest optimal member list. Throws BudgetExceeded
/// above `ceiling` (hard limit 63).
ExtremalResult r3_exact(Int n, Int ceiling = kR3DefaultCeiling);

} // namespace rothlab
