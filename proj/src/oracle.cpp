#include "rothlab/oracle.hpp"

#include <bit>

namespace rothlab::oracle {
namespace {

Int wrap(Int x, Int m) { return ((x % m) + m) % m; }

} // namespace

Int count_3aps_integer(const DenseSet& a) {
    const auto ind = a.indicator();
    const Int n = a.n();
    auto in = [&](Int v) { return v >= 0 && v < n && ind[static_cast<std::size_t>(v)]; };
    Int count = 0;
    for (Int x = 0; x < n; ++x) {
        for (Int r = -n; r <= n; ++r) {
            if (in(x) && in(x + r) && in(x + 2 * r)) ++count;
        }
    }
    return count;
}

std::vector<Int> balanced_values(const DenseSet& a, Int m) {
    std::vector<Int> out(static_cast<std::size_t>(m), 0);
    const Int size = static_cast<Int>(a.size());
    for (Int x = 0; x < a.n(); ++x) out[static_cast<std::size_t>(x)] = (a.contains(x) ? a.n() : 0) - size;
    return out;
}

BigInt r_naive(const std::vector<Int>& values, Int t) {
    const Int m = static_cast<Int>(values.size());
    BigInt total = 0;
    for (Int x = 0; x < m; ++x)
        total += BigInt(static_cast<long>(values[static_cast<std::size_t>(x)])) *
                 static_cast<long>(values[static_cast<std::size_t>(wrap(x + t, m))]);
    return total;
}

BigInt v_naive(const std::vector<Int>& values, Int d, Int ell) {
    const Int m = static_cast<Int>(values.size());
    BigInt total = 0;
    for (Int x = 0; x < m; ++x) {
        BigInt s = 0;
        for (Int i = 0; i < ell; ++i) s += static_cast<long>(values[static_cast<std::size_t>(wrap(x + i * d, m))]);
        total += s * s;
    }
    return total;
}

BigInt trilinear_naive(const std::vector<Int>& g1, const std::vector<Int>& g2, const std::vector<Int>& g3) {
    const Int m = static_cast<Int>(g1.size());
    BigInt total = 0;
    for (Int x = 0; x < m; ++x) {
        for (Int r = 0; r < m; ++r) {
            total += BigInt(static_cast<long>(g1[static_cast<std::size_t>(x)])) *
                     static_cast<long>(g2[static_cast<std::size_t>(wrap(x + r, m))]) *
                     static_cast<long>(g3[static_cast<std::size_t>(wrap(x + 2 * r, m))]);
        }
    }
    return total;
}

BestProgression best_progression_exhaustive(const DenseSet& a, Int min_len) {
    const Int n = a.n();
    if (n > kExhaustiveBudget) throw BudgetExceeded("best_progression_exhaustive: n above budget");
    if (min_len < 1) min_len = 1;
    if (min_len > n) throw InvalidArgument("best_progression_exhaustive: no progression of the required length");
    const auto ind = a.indicator();
    Progression best_p{0, 1, 0};
    Int best_hits = -1;
    auto better = [&](Int hits, const Progression& p) {
        if (best_hits < 0) return true;
        // hits / len vs best_hits / best_len
        const Int lhs = hits * best_p.length;
        const Int rhs = best_hits * p.length;
        if (lhs != rhs) return lhs > rhs;
        if (p.length != best_p.length) return p.length > best_p.length;
        if (p.start != best_p.start) return p.start < best_p.start;
        return p.step < best_p.step;
    };
    for (Int start = 0; start < n; ++start) {
        // A one-term progression is the same for every step; report step 1.
        const Int max_step = std::max<Int>(1, n - 1 - start);
        for (Int step = 1; step <= max_step; ++step) {
            Int hits = 0;
            for (Int len = 1; start + (len - 1) * step < n; ++len) {
                hits += ind[static_cast<std::size_t>(start + (len - 1) * step)];
                if (len > 1 || step == 1) {
                    const Progression p{start, step, len};
                    if (len >= min_len && better(hits, p)) {
                        best_p = p;
                        best_hits = hits;
                    }
                }
            }
        }
    }
    return {best_p, make_rational(best_hits, best_p.length)};
}

Int r3_enumerate(Int n) {
    if (n < 0 || n > 24) throw BudgetExceeded("r3_enumerate: n must be in [0, 24]");
    Int best = 0;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const Int size = std::popcount(mask);
        if (size <= best) continue;
        bool free = true;
        for (Int x = 0; x < n && free; ++x) {
            if (!(mask >> x & 1)) continue;
            for (Int r = 1; x + 2 * r < n; ++r) {
                if ((mask >> (x + r) & 1) && (mask >> (x + 2 * r) & 1)) {
                    free = false;
                    break;
                }
            }
        }
        if (free) best = size;
    }
    return best;
}

Int smallest_prime_trial(Int lo, Int hi) {
    for (Int c = lo + 1; c < hi; ++c) {
        if (c < 2) continue;
        bool prime = true;
        for (Int p = 2; p * p <= c; ++p) {
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) return c;
    }
    return 0;
}

} // namespace rothlab::oracle
