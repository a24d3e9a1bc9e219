#include "wangsun/cyclotomic.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "wangsun/errors.hpp"

namespace wangsun {

namespace {

// ---- integer polynomial helpers (coefficients low -> high) ----

int degree_of(const std::vector<BigInt>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const int dn = degree_of(num);
  const int dd = degree_of(den);
  if (dd < 0 || den[dd] != 1) throw std::logic_error("divide_exact: divisor must be monic");
  if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
  std::vector<BigInt> quot(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    const BigInt c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

// ---- rational polynomial helpers for the extended Euclid in Q[x] ----

using QPoly = std::vector<BigRational>;

int degree_of(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Division step: r := r mod b in place, returns the quotient.
QPoly divmod(QPoly& r, const QPoly& b) {
  const int db = degree_of(b);
  int dr = degree_of(r);
  QPoly q(dr >= db ? dr - db + 1 : 0);
  while (dr >= db && db >= 0) {
    const BigRational c = r[dr] / b[db];
    q[dr - db] = c;
    for (int t = 0; t <= db; ++t) r[dr - db + t] -= c * b[t];
    dr = degree_of(r);
  }
  return q;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d, built
  // for every divisor d of n in ascending order.
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  std::vector<std::vector<BigInt>> phi_of(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const int d = divisors[i];
    std::vector<BigInt> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (d % divisors[j] == 0) p = divide_exact(std::move(p), phi_of[j]);
    phi_of[i] = std::move(p);
  }
  return phi_of.back();
}

// ---- CycloNumber ----

namespace {

const CycloField& common_field(const CycloNumber& x, const CycloNumber& y) {
  if (&x.field() != &y.field() && x.field().n() != y.field().n())
    throw FieldMismatchError("CycloNumber: operands belong to different fields");
  return x.field();
}

}  // namespace

bool CycloNumber::is_zero() const {
  for (const BigRational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<BigRational> CycloNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? BigRational(0) : coeffs_[0];
}

CycloNumber CycloNumber::inv() const {
  if (is_zero()) throw DivisionByZeroError("CycloNumber::inv: division by zero");
  // Extended Euclid on (Phi_n, this) over Q[x], tracking the cofactor of
  // `this`: the invariant is r_i = t_i*Phi_n + s_i*this. Phi_n is
  // irreducible, so the chain ends in a nonzero constant.
  QPoly r0(field_->min_poly_.begin(), field_->min_poly_.end());
  QPoly r1 = coeffs_;
  QPoly s0{BigRational(0)};
  QPoly s1{BigRational(1)};
  while (degree_of(r1) > 0) {
    const QPoly q = divmod(r0, r1);  // r0 is now the remainder
    std::swap(r0, r1);
    QPoly qs1 = poly_mul(q, s1);
    if (qs1.size() < s0.size()) qs1.resize(s0.size());
    for (std::size_t t = 0; t < s0.size(); ++t) qs1[t] = s0[t] - qs1[t];
    for (std::size_t t = s0.size(); t < qs1.size(); ++t) qs1[t] = -qs1[t];
    s0 = std::move(s1);
    s1 = std::move(qs1);
  }
  const int d = degree_of(r1);
  if (d != 0)
    throw InvariantError("CycloNumber::inv: gcd with the minimal polynomial is not constant");
  const BigRational c = r1[0];
  for (BigRational& t : s1) t /= c;
  field_->reduce(s1);
  return CycloNumber(field_, std::move(s1));
}

std::complex<double> CycloNumber::eval() const {
  const std::complex<double> g =
      std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(field_->n_));
  std::complex<double> acc{0.0, 0.0};
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    acc = acc * g + rational_to_double(coeffs_[i]);
  return acc;
}

CycloNumber CycloNumber::operator-() const {
  std::vector<BigRational> out = coeffs_;
  for (BigRational& c : out) c = -c;
  return CycloNumber(field_, std::move(out));
}

CycloNumber operator+(const CycloNumber& x, const CycloNumber& y) {
  const CycloField& f = common_field(x, y);
  std::vector<BigRational> out = x.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs_[i];
  return CycloNumber(&f, std::move(out));
}

CycloNumber operator-(const CycloNumber& x, const CycloNumber& y) {
  const CycloField& f = common_field(x, y);
  std::vector<BigRational> out = x.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.coeffs_[i];
  return CycloNumber(&f, std::move(out));
}

CycloNumber operator*(const CycloNumber& x, const CycloNumber& y) {
  const CycloField& f = common_field(x, y);
  std::vector<BigRational> out(2 * f.phi() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  f.reduce(out);
  return CycloNumber(&f, std::move(out));
}

bool operator==(const CycloNumber& x, const CycloNumber& y) {
  common_field(x, y);
  return x.coeffs_ == y.coeffs_;
}

// ---- CycloField ----

CycloField::CycloField(int n, int root_exponent) : n_(n) {
  if (n < 1) throw std::invalid_argument("CycloField: n must be >= 1");
  long long a = root_exponent % n;
  if (a < 0) a += n;
  if (std::gcd(a, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("CycloField: root exponent " + std::to_string(root_exponent) +
                                " is not coprime to " + std::to_string(n));
  root_exponent_ = static_cast<int>(a);

  min_poly_ = cyclotomic_polynomial(n);
  phi_ = static_cast<int>(min_poly_.size()) - 1;

  // canonical representations of g^e, e = 0..n-1
  basis_power_.resize(n);
  std::vector<BigInt> cur(phi_);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    basis_power_[e] = cur;
    // cur := cur * x mod Phi_n
    BigInt top = cur[phi_ - 1];
    for (int t = phi_ - 1; t > 0; --t) cur[t] = std::move(cur[t - 1]);
    cur[0] = 0;
    if (top != 0)
      for (int t = 0; t < phi_; ++t)
        if (min_poly_[t] != 0) cur[t] -= top * min_poly_[t];
  }

  // Wang-Sun ratio table r_m = (1 + zeta^m) / (1 - zeta^m), m = 1..n-1
  ratio_.resize(n);
  const CycloNumber unity = one();
  for (int m = 1; m < n; ++m) {
    const CycloNumber zm = root_power(m);
    ratio_[m] = (unity + zm) * (unity - zm).inv();
  }

  // integer-scaled copy under one common denominator
  ratio_den_ = 1;
  for (int m = 1; m < n; ++m)
    for (const BigRational& c : ratio_[m].coeffs())
      ratio_den_ = lcm(ratio_den_, denominator(c));
  scaled_ratio_.resize(n);
  for (int m = 1; m < n; ++m) {
    scaled_ratio_[m].resize(phi_);
    for (int t = 0; t < phi_; ++t) {
      const BigRational& c = ratio_[m].coeffs()[t];
      scaled_ratio_[m][t] = numerator(c) * (ratio_den_ / denominator(c));
    }
  }
}

void CycloField::reduce(std::vector<BigRational>& p) const {
  for (int i = static_cast<int>(p.size()) - 1; i >= phi_; --i) {
    if (p[i] == 0) continue;
    const BigRational c = std::move(p[i]);
    p[i] = 0;
    for (int t = 0; t < phi_; ++t)
      if (min_poly_[t] != 0) p[i - phi_ + t] -= c * min_poly_[t];
  }
  p.resize(phi_);
}

CycloNumber CycloField::make(std::vector<BigRational> coeffs) const {
  reduce(coeffs);
  return CycloNumber(this, std::move(coeffs));
}

CycloNumber CycloField::zero() const {
  return CycloNumber(this, std::vector<BigRational>(phi_));
}

CycloNumber CycloField::one() const { return from_rational(BigRational(1)); }

CycloNumber CycloField::from_rational(BigRational r) const {
  std::vector<BigRational> c(phi_);
  c[0] = std::move(r);
  return CycloNumber(this, std::move(c));
}

CycloNumber CycloField::root_power(long long m) const {
  long long mm = m % n_;
  if (mm < 0) mm += n_;
  const long long e = (static_cast<long long>(root_exponent_) * mm) % n_;
  const std::vector<BigInt>& row = basis_power_[e];
  std::vector<BigRational> c(phi_);
  for (int t = 0; t < phi_; ++t) c[t] = row[t];
  return CycloNumber(this, std::move(c));
}

const CycloNumber& CycloField::ratio(long long m) const {
  long long mm = m % n_;
  if (mm < 0) mm += n_;
  if (mm == 0)
    throw ZeroDenominatorError("ratio: m = 0 mod n makes the denominator 1 - zeta^0 vanish");
  return ratio_[mm];
}

std::complex<double> CycloField::numeric_zeta() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * root_exponent_ / static_cast<double>(n_));
}

const std::vector<BigInt>& CycloField::scaled_ratio(long long m) const {
  long long mm = m % n_;
  if (mm < 0) mm += n_;
  if (mm == 0)
    throw ZeroDenominatorError("scaled_ratio: m = 0 mod n makes the denominator vanish");
  return scaled_ratio_[mm];
}

void CycloField::mul_reduce_int(const std::vector<BigInt>& a, const std::vector<BigInt>& factor,
                                std::vector<BigInt>& dest, std::vector<BigInt>& scratch) const {
  for (BigInt& c : scratch) c = 0;
  for (int i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < phi_; ++j) {
      if (factor[j] == 0) continue;
      scratch[i + j] += a[i] * factor[j];
    }
  }
  for (int i = 2 * phi_ - 2; i >= phi_; --i) {
    if (scratch[i] == 0) continue;
    const BigInt c = std::move(scratch[i]);
    scratch[i] = 0;
    for (int t = 0; t < phi_; ++t)
      if (min_poly_[t] != 0) scratch[i - phi_ + t] -= c * min_poly_[t];
  }
  for (int t = 0; t < phi_; ++t) dest[t] = std::move(scratch[t]);
}

CycloNumber CycloField::from_scaled(const std::vector<BigInt>& coeffs,
                                    const BigInt& denominator) const {
  if (denominator == 0) throw DivisionByZeroError("from_scaled: zero denominator");
  std::vector<BigRational> c(phi_);
  for (int t = 0; t < phi_; ++t) c[t] = BigRational(coeffs[t], denominator);
  return CycloNumber(this, std::move(c));
}

CycloNumber galois_twist(const CycloNumber& x, long long a) {
  const CycloField& f = x.field();
  const int n = f.n();
  long long aa = a % n;
  if (aa < 0) aa += n;
  if (std::gcd(aa, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("galois_twist: exponent not coprime to n");
  std::vector<BigRational> out(f.phi());
  for (int i = 0; i < f.phi(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    const std::vector<BigInt>& row = f.basis_power_[(i * aa) % n];
    for (int t = 0; t < f.phi(); ++t)
      if (row[t] != 0) out[t] += x.coeffs()[i] * row[t];
  }
  return CycloNumber(&f, std::move(out));
}

}  // namespace wangsun
