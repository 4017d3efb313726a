#include "rothlab/sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

namespace rothlab {

DenseSet::DenseSet(Int n, std::vector<Int> members) : n_(n), members_(std::move(members)) {
    if (n_ < 0) throw InvalidArgument("set length must be non-negative");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0 || members_[i] >= n_) throw InvalidArgument("set element out of range [0, n)");
        if (i > 0 && members_[i] <= members_[i - 1]) throw InvalidArgument("set elements must be strictly increasing");
    }
}

DenseSet DenseSet::from_unsorted(Int n, std::vector<Int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return DenseSet(n, std::move(members));
}

DenseSet DenseSet::interval(Int n) {
    std::vector<Int> all(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return DenseSet(n, std::move(all));
}

bool DenseSet::contains(Int x) const { return std::binary_search(members_.begin(), members_.end(), x); }

Rational DenseSet::density() const {
    if (n_ == 0) return Rational(0);
    return make_rational(static_cast<Int>(members_.size()), n_);
}

std::vector<std::uint8_t> DenseSet::indicator() const {
    std::vector<std::uint8_t> ind(static_cast<std::size_t>(n_), 0);
    for (Int x : members_) ind[static_cast<std::size_t>(x)] = 1;
    return ind;
}

FreenessReport is_3ap_free(const DenseSet& a) {
    const auto ind = a.indicator();
    const auto mem = a.members();
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            const Int third = 2 * mem[j] - mem[i];
            if (third >= a.n()) break;
            if (ind[static_cast<std::size_t>(third)]) return {false, std::array<Int, 3>{mem[i], mem[j], third}};
        }
    }
    return {true, std::nullopt};
}

DenseSet greedy_free(Int n) {
    if (n < 1) throw InvalidArgument("greedy_free: n must be positive");
    std::vector<std::uint8_t> kept(static_cast<std::size_t>(n), 0);
    std::vector<Int> members;
    for (Int x = 0; x < n; ++x) {
        bool ok = true;
        // x would be the largest term: need y kept with 2y - x kept.
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
            const Int lower = 2 * *it - x;
            if (lower < 0) break;
            if (kept[static_cast<std::size_t>(lower)]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            kept[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
    }
    return DenseSet(n, std::move(members));
}

namespace {

// Below this many points on the chosen sphere the construction is not worth
// using and the greedy set is returned instead.
constexpr std::size_t kBehrendMinShell = 4;

} // namespace

DenseSet behrend(Int n, BehrendParams* params) {
    if (n < 2) throw InvalidArgument("behrend: n must be at least 2");
    const int k = std::max(1, static_cast<int>(std::lround(std::sqrt(std::log2(static_cast<double>(n))))));
    Int base = static_cast<Int>(std::floor(std::pow(static_cast<double>(n), 1.0 / k)));
    auto pow_k = [k](Int b) {
        Int p = 1;
        for (int i = 0; i < k; ++i) p *= b;
        return p;
    };
    while (base > 1 && pow_k(base) > n) --base;
    while (pow_k(base + 1) <= n) ++base;
    if (k < 2 || base < 3) return greedy_free(n);

    const Int digits = (base + 1) / 2;  // digit values with 2a < base
    std::map<Int, std::vector<Int>> shells;
    std::vector<Int> digit(static_cast<std::size_t>(k), 0);
    while (true) {
        Int value = 0, radius_sq = 0;
        for (int i = k - 1; i >= 0; --i) {
            value = value * base + digit[static_cast<std::size_t>(i)];
            radius_sq += digit[static_cast<std::size_t>(i)] * digit[static_cast<std::size_t>(i)];
        }
        shells[radius_sq].push_back(value);
        int pos = 0;
        while (pos < k && ++digit[static_cast<std::size_t>(pos)] == digits) digit[static_cast<std::size_t>(pos++)] = 0;
        if (pos == k) break;
    }
    // Most popular sphere; smallest radius on ties.
    auto best = shells.begin();
    for (auto it = shells.begin(); it != shells.end(); ++it) {
        if (it->second.size() > best->second.size()) best = it;
    }
    if (best->second.size() < kBehrendMinShell) return greedy_free(n);

    DenseSet out = DenseSet::from_unsorted(n, best->second);
    if (!is_3ap_free(out).free) throw InvariantViolation("behrend construction produced a 3AP");
    if (params) *params = {k, base, best->first};
    return out;
}

DenseSet random_subset(Int n, double alpha, std::uint64_t seed) {
    if (n < 0) throw InvalidArgument("random_subset: n must be non-negative");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("random_subset: alpha must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Int> members;
    for (Int x = 0; x < n; ++x) {
        // 53-bit uniform in [0, 1); fixed formula keeps output portable across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < alpha) members.push_back(x);
    }
    return DenseSet(n, std::move(members));
}

namespace {

using Mask = std::uint64_t;

// Searches [0, n) for a 3AP-free set of exactly `target` elements; include-first
// DFS so the first hit is the lexicographically smallest member list.
class ExtremalSearch {
public:
    ExtremalSearch(Int n, const std::vector<Int>& r3_prefix) : n_(n), r3_(r3_prefix) {}

    std::optional<Mask> find(Int target) {
        target_ = target;
        found_.reset();
        dfs(0, 0, 0);
        return found_;
    }

private:
    bool extendable(Mask mask, Int x) const {
        Mask rest = mask;
        while (rest) {
            const Int y = std::countr_zero(rest);
            rest &= rest - 1;
            const Int lower = 2 * y - x;
            if (lower >= 0 && (mask >> lower & 1)) return false;
        }
        return true;
    }

    bool dfs(Int pos, Mask mask, Int count) {
        if (count == target_) {
            found_ = mask;
            return true;
        }
        if (pos == n_) return false;
        // At most r3(n - pos) more elements fit in [pos, n).
        if (count + r3_[static_cast<std::size_t>(n_ - pos)] < target_) return false;
        if (extendable(mask, pos) && dfs(pos + 1, mask | (Mask{1} << pos), count + 1)) return true;
        return dfs(pos + 1, mask, count);
    }

    Int n_;
    const std::vector<Int>& r3_;
    Int target_ = 0;
    std::optional<Mask> found_;
};

DenseSet mask_to_set(Int n, Mask mask) {
    std::vector<Int> members;
    for (Int x = 0; x < n; ++x) {
        if (mask >> x & 1) members.push_back(x);
    }
    return DenseSet(n, std::move(members));
}

} // namespace

ExtremalResult r3_exact(Int n, Int ceiling) {
    if (n < 1) throw InvalidArgument("r3_exact: n must be positive");
    if (n > std::min<Int>(ceiling, 63)) throw BudgetExceeded("r3_exact: n above configured ceiling");
    // r3[k] for k = 0..n; r3[n] is provisionally r3[n-1] + 1 (an upper bound).
    std::vector<Int> r3(static_cast<std::size_t>(n) + 1, 0);
    Mask witness = 0;
    for (Int len = 1; len <= n; ++len) {
        const Int prev = r3[static_cast<std::size_t>(len - 1)];
        r3[static_cast<std::size_t>(len)] = prev + 1;
        ExtremalSearch search(len, r3);
        if (auto hit = search.find(prev + 1)) {
            witness = *hit;
        } else {
            r3[static_cast<std::size_t>(len)] = prev;
            if (len == n) witness = *search.find(prev);
        }
    }
    return {r3[static_cast<std::size_t>(n)], mask_to_set(n, witness)};
}

} // namespace rothlab
