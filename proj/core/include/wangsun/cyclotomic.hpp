#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wangsun/rational.hpp"

namespace wangsun {

/// Coefficients of the n-th cyclotomic polynomial, low degree first,
/// monic of degree phi(n). Built by exact division of x^n - 1 by the
/// lower-order cyclotomic polynomials.
std::vector<BigInt> cyclotomic_polynomial(int n);

class CycloField;

/// An element of Q(zeta_n), stored as phi(n) rational coefficients on the
/// power basis 1, g, ..., g^(phi-1) of the abstract root g (minimal
/// polynomial Phi_n). Always canonically reduced, so coefficient-wise
/// equality is field equality. Values are immutable and must not outlive
/// their CycloField.
class CycloNumber {
 public:
  CycloNumber() = default;

  const CycloField& field() const { return *field_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// The constant coefficient if every other coefficient is exactly zero.
  std::optional<BigRational> as_rational() const;

  /// Multiplicative inverse via the extended Euclidean algorithm on the
  /// coefficient polynomial and Phi_n over Q (Phi_n is irreducible, so
  /// every nonzero element is invertible). Throws DivisionByZeroError on 0.
  CycloNumber inv() const;

  /// Floating-point shadow: the value at the numeric basis root
  /// e^(2*pi*i/n). Sanity oracle only; exact arithmetic is authoritative.
  std::complex<double> eval() const;

  CycloNumber operator-() const;
  friend CycloNumber operator+(const CycloNumber& x, const CycloNumber& y);
  friend CycloNumber operator-(const CycloNumber& x, const CycloNumber& y);
  friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y);
  friend bool operator==(const CycloNumber& x, const CycloNumber& y);

 private:
  friend class CycloField;
  friend CycloNumber galois_twist(const CycloNumber& x, long long a);

  CycloNumber(const CycloField* field, std::vector<BigRational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  const CycloField* field_ = nullptr;
  std::vector<BigRational> coeffs_;
};

/// The cyclotomic field Q(zeta_n) with a chosen primitive root: zeta
/// denotes g^root_exponent, gcd(root_exponent, n) = 1. Precomputes the
/// canonical powers of g and the full Wang-Sun ratio table
/// r_m = (1 + zeta^m) / (1 - zeta^m), m = 1..n-1, plus an integer-scaled
/// copy of the table for high-volume product loops. Immutable after
/// construction and shareable across threads.
class CycloField {
 public:
  explicit CycloField(int n, int root_exponent = 1);

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

  int n() const { return n_; }
  int phi() const { return phi_; }
  int root_exponent() const { return root_exponent_; }
  const std::vector<BigInt>& min_poly() const { return min_poly_; }

  CycloNumber zero() const;
  CycloNumber one() const;
  CycloNumber from_rational(BigRational r) const;

  /// Canonical representation of zeta^m (m any integer, reduced mod n).
  CycloNumber root_power(long long m) const;

  /// Table lookup of (1 + zeta^m) / (1 - zeta^m); m = 0 mod n is rejected
  /// with ZeroDenominatorError (the denominator 1 - zeta^0 vanishes).
  const CycloNumber& ratio(long long m) const;

  /// e^(2*pi*i*root_exponent/n), the numeric value of zeta.
  std::complex<double> numeric_zeta() const;

  /// Integer-scaled ratio table: scaled_ratio(m) = ratio_denominator() *
  /// ratio(m) with integer coefficients. A product of t table entries
  /// accumulated with mul_reduce_int is ratio_denominator()^t times the
  /// exact product; from_scaled converts back.
  const std::vector<BigInt>& scaled_ratio(long long m) const;
  const BigInt& ratio_denominator() const { return ratio_den_; }

  /// dest := a * factor mod Phi_n, integer coefficient vectors of length
  /// phi; dest may alias a. scratch must have length 2*phi - 1 and is
  /// clobbered.
  void mul_reduce_int(const std::vector<BigInt>& a, const std::vector<BigInt>& factor,
                      std::vector<BigInt>& dest, std::vector<BigInt>& scratch) const;

  CycloNumber from_scaled(const std::vector<BigInt>& coeffs, const BigInt& denominator) const;

 private:
  friend class CycloNumber;
  friend CycloNumber galois_twist(const CycloNumber& x, long long a);
  friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y);

  void reduce(std::vector<BigRational>& p) const;
  CycloNumber make(std::vector<BigRational> coeffs) const;

  int n_;
  int root_exponent_;
  int phi_;
  std::vector<BigInt> min_poly_;
  std::vector<std::vector<BigInt>> basis_power_;  // g^e mod Phi_n, e in [0, n)
  std::vector<CycloNumber> ratio_;                // index m = 1..n-1
  std::vector<std::vector<BigInt>> scaled_ratio_;
  BigInt ratio_den_;
};

/// Image of x under the field automorphism g -> g^a, gcd(a, n) = 1.
/// Fixes rationals and respects + and *.
CycloNumber galois_twist(const CycloNumber& x, long long a);

}  // namespace wangsun
