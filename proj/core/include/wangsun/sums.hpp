#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "wangsun/affine.hpp"
#include "wangsun/cyclotomic.hpp"
#include "wangsun/rational.hpp"

namespace wangsun {

enum class SumKind { qsum, dsum, classical };

const char* to_string(SumKind kind);

/// A computed sum with its provenance. `value` is exact and independent of
/// the root exponent; `shadow` is the complex-double mirror of the same
/// computation, kept as a sanity oracle.
struct SumResult {
  SumKind kind = SumKind::qsum;
  int parameter = 0;  // k for qsum/dsum, n for classical
  int root_exponent = 1;
  BigRational value;
  std::uint64_t summand_count = 0;
  std::chrono::nanoseconds elapsed{0};
  std::complex<double> shadow{0.0, 0.0};
  bool beyond_paper = false;

  /// |shadow - value| / max(1, |value|).
  double shadow_relative_error() const;
};

/// prod over j = 0..2k-1 of (1 + zeta^(j - f(j))) / (1 - zeta^(j - f(j))).
/// Rejects non-derangements (some factor would divide by zero).
CycloNumber quasipolarity_summand(const CycloField& field, const AffineMap& f);

/// Unsigned sum of quasipolarity summands over Q_k (sign dropped: all
/// quasipolarities share one sign). Exact, rational, root-independent.
SumResult qsum(int k, int root_exponent = 1, int jobs = 1);

/// #{f in Q_k : no j has j - f(j) = k (mod 2k)}. Equals qsum(k).
long long qsum_combinatorial(int k);

/// 0 for odd k, unitary_sigma(2k) - unitary_sigma(k) for even k; equals
/// the sum of the even unitary divisors of k.
long long qsum_closed_form(int k);

/// The shared permutation sign of the quasipolarities in Q_k. Throws
/// InvariantError if the sign is not constant over Q_k.
int common_sign(int k);

/// Signed sum over all affine derangements Delta_k of Z/2kZ:
/// sum of sign(f) * prod_j ratio(j - f(j)).
SumResult dsum(int k, int root_exponent = 1, int jobs = 1);

/// The classical Wang-Sun sum over the derangements of S_(n-1) acting on
/// {1, ..., n-1}, zeta a primitive n-th root; n odd, n >= 3. Derangements
/// are streamed in lexicographic order with fixed-point pruning, never
/// materialized.
SumResult classical_sum(int n, int root_exponent = 1, int jobs = 1);

/// (-1)^((n-1)/2) * ((n-2)!!)^2 / n, exact; n odd, n >= 3.
BigRational classical_closed_form(int n);

/// Streams the derangements of {0, ..., m-1} in lexicographic order,
/// pruning every prefix that contains a fixed point.
void for_each_derangement(int m, const std::function<void(std::span<const int>)>& fn);

}  // namespace wangsun
