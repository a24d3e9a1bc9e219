#include "wangsun/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wangsun {

long long gcd(long long a, long long b) {
  return std::gcd(a, b);
}

long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  long long result = n;
  for (const auto& [p, e] : factorize(n)) result -= result / p;
  return result;
}

std::vector<long long> units(long long n) {
  if (n < 1) throw std::invalid_argument("units: n must be >= 1");
  std::vector<long long> out;
  for (long long v = 0; v < n; ++v)
    if (std::gcd(v, n) == 1) out.push_back(v);
  return out;
}

long long mod_inverse(long long a, long long n) {
  if (n < 1) throw std::invalid_argument("mod_inverse: n must be >= 1");
  a %= n;
  if (a < 0) a += n;
  // extended Euclid on (a, n)
  long long r0 = a, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: argument is not a unit");
  s0 %= n;
  if (s0 < 0) s0 += n;
  return s0;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

bool is_unitary_divisor(long long d, long long n) {
  if (d < 1 || n < 1) throw std::invalid_argument("is_unitary_divisor: arguments must be >= 1");
  return n % d == 0 && std::gcd(d, n / d) == 1;
}

std::vector<long long> unitary_divisors(long long n) {
  if (n < 1) throw std::invalid_argument("unitary_divisors: n must be >= 1");
  std::vector<long long> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pe);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long long unitary_sigma(long long n) {
  if (n < 1) throw std::invalid_argument("unitary_sigma: n must be >= 1");
  long long sum = 1;
  for (const auto& [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    sum *= 1 + pe;
  }
  return sum;
}

long long even_unitary_divisor_sum(long long k) {
  if (k < 1) throw std::invalid_argument("even_unitary_divisor_sum: k must be >= 1");
  long long sum = 0;
  for (long long d : unitary_divisors(k))
    if (d % 2 == 0) sum += d;
  return sum;
}

BigInt double_factorial(long long m) {
  if (m < -1) throw std::invalid_argument("double_factorial: m must be >= -1");
  BigInt result = 1;
  for (long long i = m; i >= 2; i -= 2) result *= i;
  return result;
}

BigInt derangement_count(long long m) {
  if (m < 0) throw std::invalid_argument("derangement_count: m must be >= 0");
  // D(0) = 1, D(m) = m*D(m-1) + (-1)^m
  BigInt d = 1;
  for (long long i = 1; i <= m; ++i) d = d * i + (i % 2 == 0 ? 1 : -1);
  return d;
}

}  // namespace wangsun
