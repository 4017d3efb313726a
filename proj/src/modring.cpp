#include "rothlab/modring.hpp"

#include <array>

namespace rothlab {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u64 result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % mod);
        base = static_cast<u64>(static_cast<u128>(base) * base % mod);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    // These twelve bases are a proven witness set for all n < 3.3e24.
    constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : bases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<u64>(static_cast<u128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ModContext choose_modulus(Int N) {
    if (N < 1) throw InvalidArgument("choose_modulus: N must be positive");
    if (N > (Int{1} << 59)) throw CapacityError("choose_modulus: N too large for 64-bit modulus search");
    for (Int m = 4 * N + 1; m < 8 * N; ++m) {
        if (is_prime(static_cast<std::uint64_t>(m))) return {N, m};
    }
    // Unreachable by Bertrand's postulate.
    throw InvariantViolation("no prime in (4N, 8N)");
}

Int mod_inverse(Int a, Int m) {
    if (m < 2) throw InvalidArgument("mod_inverse: modulus must be at least 2");
    a = mod_reduce(a, m);
    if (a == 0) throw InvalidArgument("mod_inverse: zero has no inverse");
    // Extended Euclid on (a, m).
    Int old_r = a, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw InvalidArgument("mod_inverse: argument not invertible");
    return mod_reduce(old_s, m);
}

} // namespace rothlab
