#pragma once

#include "rothlab/arith.hpp"

namespace rothlab {

/// Ambient interval length N together with a prime modulus 4N < m < 8N.
/// [N] = {0, ..., N-1} embeds in Z_m without wraparound of 3APs since m > 2N.
struct ModContext {
    Int N = 0;
    Int m = 0;

    friend bool operator==(const ModContext&, const ModContext&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Smallest prime m with 4N < m < 8N.
ModContext choose_modulus(Int N);

/// Reduces any integer into [0, m).
constexpr Int mod_reduce(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

/// Unique s congruent to x with -m/2 < s <= m/2.
constexpr Int centered_rep(Int x, Int m) {
    const Int r = mod_reduce(x, m);
    return 2 * r > m ? r - m : r;
}

/// Multiplicative inverse modulo a prime; rejects a = 0 (mod m).
Int mod_inverse(Int a, Int m);

/// (a * b) mod m without overflow for any 63-bit operands.
constexpr Int mul_mod(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<Wide>(mod_reduce(a, m)) * mod_reduce(b, m) % m);
}

} // namespace rothlab
