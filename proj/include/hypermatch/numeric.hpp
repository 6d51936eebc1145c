#ifndef HYPERMATCH_NUMERIC_HPP
#define HYPERMATCH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hypermatch {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the usual convention C(a,b) = 0 for a < b or b < 0.
BigInt binomial(long long a, long long b);

/// x^e for e >= 0.
BigInt ipow(const BigInt& x, unsigned e);

Rat rat_num_den(const BigInt& num, const BigInt& den);

/// "p/q" (or "p" when q == 1); inverse of format_rat.
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);

}  // namespace hypermatch

#endif  // HYPERMATCH_NUMERIC_HPP
