#pragma once

#include <string>
#include <vector>

namespace wangsun {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // expected/actual on failure, terse value echo on pass
};

/// qsum == closed form == combinatorial count == even unitary divisor sum;
/// every summand is exactly 0 or 1; a summand is nonzero iff the map misses
/// the tritone iff (k even and tau(v)/2 even); the sum is rational and its
/// float shadow agrees to 1e-9.
std::vector<CheckResult> verify_qsum(int k_min, int k_max);

/// |Q_k| == s1*(k) by brute force; the characterization-based enumeration
/// equals brute force as a set.
std::vector<CheckResult> verify_census(int k_min, int k_max);

/// qsum and dsum values are identical across every admissible root
/// exponent.
std::vector<CheckResult> verify_galois(int k_min, int k_max);

/// classical_sum(n) == (-1)^((n-1)/2) ((n-2)!!)^2 / n for odd n <= n_max,
/// with the summand count equal to D(n-1).
std::vector<CheckResult> verify_classical(int n_max);

/// common_sign(k) is well-defined and the signed quasipolarity sum equals
/// common_sign(k) * qsum(k).
std::vector<CheckResult> verify_sign(int k_min, int k_max);

/// Derangement predicates: pointwise fixed-point scan vs the sigma(v) | u
/// criterion, and pointwise tritone hit vs the gcd(1-v, 2k) | (k+u)
/// criterion, over the whole group for each even n = 2k.
std::vector<CheckResult> verify_predicates(int k_min, int k_max);

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

/// Runs the named suite ("qsum", "census", "galois", "classical", "sign",
/// "predicates" or "all").
VerifyReport run_verify(const std::string& suite, int k_min, int k_max, int n_max);

}  // namespace wangsun
