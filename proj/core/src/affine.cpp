#include "wangsun/affine.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wangsun/arith.hpp"
#include "wangsun/errors.hpp"

namespace wangsun {

namespace {

long long mod_reduce(long long x, int n) {
  x %= n;
  return x < 0 ? x + n : x;
}

void require_even_modulus(int n, const char* who) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": modulus must be even and >= 2");
}

}  // namespace

AffineMap make_affine(long long u, long long v, int n) {
  require_even_modulus(n, "make_affine");
  const long long vr = mod_reduce(v, n);
  if (std::gcd(vr, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("make_affine: v = " + std::to_string(vr) +
                                " is not a unit mod " + std::to_string(n));
  return AffineMap{n, static_cast<int>(mod_reduce(u, n)), static_cast<int>(vr)};
}

int apply(const AffineMap& f, int x) {
  if (x < 0 || x >= f.n) throw std::invalid_argument("apply: x out of range");
  return static_cast<int>((static_cast<long long>(f.v) * x + f.u) % f.n);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  if (f.n != g.n) throw std::invalid_argument("compose: modulus mismatch");
  // f(g(x)) = (vf*vg)x + (vf*ug + uf)
  return make_affine(static_cast<long long>(f.v) * g.u + f.u,
                     static_cast<long long>(f.v) * g.v, f.n);
}

AffineMap inverse(const AffineMap& f) {
  const long long w = mod_inverse(f.v, f.n);
  return make_affine(-w * f.u, w, f.n);
}

AffineMap identity_map(int n) { return make_affine(0, 1, n); }

std::string to_string(const AffineMap& f) {
  return "e^" + std::to_string(f.u) + "." + std::to_string(f.v);
}

std::ostream& operator<<(std::ostream& os, const AffineMap& f) {
  return os << to_string(f);
}

std::pair<long long, long long> sigma_tau(long long v, int n) {
  require_even_modulus(n, "sigma_tau");
  v = mod_reduce(v, n);
  if (std::gcd(v, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("sigma_tau: v is not a unit");
  return {std::gcd(v - 1, static_cast<long long>(n)),
          std::gcd(v + 1, static_cast<long long>(n))};
}

bool is_involution(const AffineMap& f) {
  return (static_cast<long long>(f.v) * f.v) % f.n == 1 &&
         (static_cast<long long>(f.u) * (f.v + 1)) % f.n == 0;
}

bool is_derangement(const AffineMap& f) {
  for (int x = 0; x < f.n; ++x)
    if (apply(f, x) == x) return false;
  return true;
}

bool is_derangement_arith(const AffineMap& f) {
  const auto [sigma, tau] = sigma_tau(f.v, f.n);
  return f.u % sigma != 0;
}

bool hits_tritone(const AffineMap& f) {
  const int k = f.n / 2;
  for (int j = 0; j < f.n; ++j)
    if (mod_reduce(j - apply(f, j), f.n) == k) return true;
  return false;
}

bool hits_tritone_arith(const AffineMap& f) {
  const int k = f.n / 2;
  const long long g = std::gcd(static_cast<long long>(1 - f.v), static_cast<long long>(f.n));
  return (k + f.u) % g == 0;
}

std::vector<AffineMap> enumerate_affine_group(int n) {
  require_even_modulus(n, "enumerate_affine_group");
  std::vector<AffineMap> maps;
  for (long long v : units(n))
    for (int u = 0; u < n; ++u)
      maps.push_back(AffineMap{n, u, static_cast<int>(v)});
  return maps;
}

std::vector<AffineMap> enumerate_affine_derangements(int n) {
  std::vector<AffineMap> maps = enumerate_affine_group(n);
  std::erase_if(maps, [](const AffineMap& f) { return !is_derangement(f); });
  return maps;
}

std::vector<AffineMap> enumerate_quasipolarities_bruteforce(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_quasipolarities_bruteforce: k must be >= 1");
  std::vector<AffineMap> maps = enumerate_affine_group(2 * k);
  std::erase_if(maps, [](const AffineMap& f) {
    return !(is_involution(f) && is_derangement(f));
  });
  return maps;
}

std::vector<AffineMap> quasipolarities_by_characterization(int k) {
  if (k < 1) throw std::invalid_argument("quasipolarities_by_characterization: k must be >= 1");
  const int n = 2 * k;
  std::vector<AffineMap> maps;
  for (long long v : units(n)) {
    if ((v * v) % n != 1) continue;
    const auto [sigma, tau] = sigma_tau(v, n);
    // Only linear parts with sigma*tau = 4k carry quasipolarities (the
    // other square roots of 1 force sigma | u, i.e. a fixed point).
    if (sigma * tau != 2LL * n) continue;
    // u = sigma*q + n/tau; q = 0 .. n/sigma - 1 emits each residue once
    for (long long q = 0; q < n / sigma; ++q) {
      const long long u = mod_reduce(sigma * q + n / tau, n);
      maps.push_back(AffineMap{n, static_cast<int>(u), static_cast<int>(v)});
    }
  }
  std::sort(maps.begin(), maps.end(), [](const AffineMap& a, const AffineMap& b) {
    return std::tie(a.v, a.u) < std::tie(b.v, b.u);
  });

  const std::vector<AffineMap> reference = enumerate_quasipolarities_bruteforce(k);
  if (maps != reference)
    throw CharacterizationMismatchError(
        "quasipolarities_by_characterization: set differs from brute force at k = " +
        std::to_string(k));
  return maps;
}

std::pair<long long, long long> involution_divisor_pair(long long v, int k) {
  if (k < 1) throw std::invalid_argument("involution_divisor_pair: k must be >= 1");
  const int n = 2 * k;
  v = mod_reduce(v, n);
  if (std::gcd(v, static_cast<long long>(n)) != 1 || (v * v) % n != 1)
    throw std::invalid_argument(
        "involution_divisor_pair: v is not an involution linear part mod " + std::to_string(n));
  const auto [sigma, tau] = sigma_tau(v, n);
  // v odd (a unit mod 2k), so both gcds are even
  const long long i1 = sigma / 2;
  const long long i2 = tau / 2;
  if (std::gcd(i1, i2) != 1 || 2 * i1 * i2 != n)
    throw InvariantError("involution_divisor_pair: sigma*tau != 4k or parts not coprime for v = " +
                         std::to_string(v) + ", k = " + std::to_string(k));
  return {i1, i2};
}

Permutation permutation_of(const AffineMap& f) {
  Permutation p;
  p.images.resize(f.n);
  for (int j = 0; j < f.n; ++j) p.images[j] = apply(f, j);
  return p;
}

int sign_of(const Permutation& p) {
  const int n = static_cast<int>(p.images.size());
  std::vector<char> seen(n, 0);
  for (int img : p.images)
    if (img < 0 || img >= n || seen[img]++)
      throw std::invalid_argument("sign_of: images are not a bijection");

  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int j = start; !seen[j]; j = p.images[j]) seen[j] = 1;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

}  // namespace wangsun
