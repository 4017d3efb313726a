#pragma once

// Integer and rational types shared by every module, plus checked
// arithmetic for the scaled-integer kernels.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rothlab {

using Int = std::int64_t;
using Wide = __int128;
using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A scaled integer would not fit the kernel's accumulator width.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An asserted internal invariant failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline Wide checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw CapacityError("128-bit accumulator overflow");
    return r;
}

inline Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("128-bit product overflow");
    return r;
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw CapacityError("64-bit accumulator overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("64-bit product overflow");
    return r;
}

std::string to_string(Wide v);
BigInt to_big(Wide v);
inline BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }

/// Exact rational a/b from 64-bit parts, canonicalized.
Rational make_rational(Int num, Int den);
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q" (always with denominator, "0/1" for zero).
std::string to_fraction_string(const Rational& q);

/// Parses "p/q" or "p"; throws InvalidArgument on malformed text.
Rational parse_fraction(const std::string& text);

} // namespace rothlab
