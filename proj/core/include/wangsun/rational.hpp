#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wangsun {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision reduced fraction. cpp_rational keeps the canonical
/// form (gcd(|num|, den) = 1, den >= 1, zero is 0/1) after every operation.
using BigRational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" in lowest terms with q > 0, or "p" when q = 1.
/// This is the bit-exact format used by the CLI and the results cache.
std::string format_rational(const BigRational& r);

/// Inverse of format_rational. Rejects anything that is not in canonical
/// form ("3/6", "4/-2", "1/0", empty, trailing junk).
BigRational parse_rational(std::string_view text);

double rational_to_double(const BigRational& r);

}  // namespace wangsun
