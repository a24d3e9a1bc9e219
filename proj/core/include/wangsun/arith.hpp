#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wangsun/rational.hpp"

namespace wangsun {

/// gcd of |a| and |b|; gcd(0, 0) = 0.
long long gcd(long long a, long long b);

/// Euler's totient.
long long euler_phi(long long n);

/// Ascending residues 0 <= v < n with gcd(v, n) = 1. Rejects n < 1.
std::vector<long long> units(long long n);

/// Inverse of a modulo n; requires gcd(a, n) = 1.
long long mod_inverse(long long a, long long n);

/// (prime, exponent) pairs of n in ascending prime order, by trial division.
std::vector<std::pair<long long, int>> factorize(long long n);

/// d divides n with gcd(d, n/d) = 1.
bool is_unitary_divisor(long long d, long long n);

/// Ascending unitary divisors of n; 2^omega(n) of them.
std::vector<long long> unitary_divisors(long long n);

/// Sum of unitary divisors, evaluated multiplicatively as
/// prod (1 + p^a) over prime powers p^a exactly dividing n.
long long unitary_sigma(long long n);

/// Sum of the even unitary divisors of k: 0 for odd k, and equal to
/// unitary_sigma(2k) - unitary_sigma(k) for even k.
long long even_unitary_divisor_sum(long long k);

/// m!!, with 0!! = (-1)!! = 1.
BigInt double_factorial(long long m);

/// Number of derangements of an m-element set.
BigInt derangement_count(long long m);

}  // namespace wangsun
