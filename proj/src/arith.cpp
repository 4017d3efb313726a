#include "rothlab/arith.hpp"

#include <algorithm>

namespace rothlab {

std::string to_string(Wide v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    // Work on the unsigned magnitude so the minimum value is representable.
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string out;
    while (mag > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt to_big(Wide v) { return BigInt(to_string(v)); }

Rational make_rational(Int num, Int den) { return make_rational(to_big(num), to_big(den)); }

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(text), BigInt(1));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("malformed rational: '" + text + "'");
    }
}

} // namespace rothlab
