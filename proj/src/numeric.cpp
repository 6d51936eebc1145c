#include "hypermatch/numeric.hpp"

#include "hypermatch/errors.hpp"

namespace hypermatch {

BigInt binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt ipow(const BigInt& x, unsigned e) {
    BigInt result = 1;
    BigInt base = x;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Rat rat_num_den(const BigInt& num, const BigInt& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    return Rat(num, den);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return rat_num_den(num, den);
    } catch (const std::exception&) {
        throw input_error("malformed rational: '" + s + "'");
    }
}

std::string format_rat(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hypermatch
