#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wangsun {

/// An element e^u.v of the affine general linear group on Z/nZ (n = 2k
/// even): x |-> v*x + u with v a unit. u and v are kept reduced in [0, n),
/// so field-wise equality identifies group elements.
struct AffineMap {
  int n = 2;
  int u = 0;
  int v = 1;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Canonical constructor; rejects odd or non-positive n and non-unit v.
AffineMap make_affine(long long u, long long v, int n);

/// (v*x + u) mod n for 0 <= x < n.
int apply(const AffineMap& f, int x);

/// compose(f, g)(x) = f(g(x)); moduli must match.
AffineMap compose(const AffineMap& f, const AffineMap& g);

AffineMap inverse(const AffineMap& f);

AffineMap identity_map(int n);

/// "e^u.v"
std::string to_string(const AffineMap& f);
std::ostream& operator<<(std::ostream& os, const AffineMap& f);

/// (gcd(v-1, n), gcd(v+1, n)) for a unit v mod n.
std::pair<long long, long long> sigma_tau(long long v, int n);

/// f composed with itself is the identity: v^2 = 1 and u(v+1) = 0 mod n.
bool is_involution(const AffineMap& f);

/// No fixed point, checked pointwise over Z/nZ.
bool is_derangement(const AffineMap& f);

/// The arithmetic form of the same predicate: sigma(v) does not divide u.
bool is_derangement_arith(const AffineMap& f);

/// Some j has j - f(j) = k (mod 2k), checked pointwise.
bool hits_tritone(const AffineMap& f);

/// The arithmetic form: gcd(1-v, 2k) divides k + u.
bool hits_tritone_arith(const AffineMap& f);

/// All n*phi(n) group elements, ordered by (v, u) ascending.
std::vector<AffineMap> enumerate_affine_group(int n);

/// The derangements Delta_k within the group on Z/nZ, same ordering.
std::vector<AffineMap> enumerate_affine_derangements(int n);

/// The quasipolarities Q_k (involutive affine derangements of Z/2kZ),
/// found by filtering the full group. This enumeration is ground truth.
std::vector<AffineMap> enumerate_quasipolarities_bruteforce(int k);

/// Q_k built from u = sigma(v)*q + 2k/tau(v) over the square roots of 1.
/// Validated against the brute-force set; a difference throws
/// CharacterizationMismatchError.
std::vector<AffineMap> quasipolarities_by_characterization(int k);

/// (I1, I2) = (sigma(v)/2, tau(v)/2) for an involution linear part v
/// (v^2 = 1 mod 2k). Checks that I1, I2 are coprime with I1*I2 = k and
/// rejects v otherwise.
std::pair<long long, long long> involution_divisor_pair(long long v, int k);

/// Image array of a bijection on {0, ..., n-1}.
struct Permutation {
  std::vector<int> images;
};

Permutation permutation_of(const AffineMap& f);

/// +1 or -1: (-1)^(n - number of cycles). Rejects non-bijections.
int sign_of(const Permutation& p);

}  // namespace wangsun
