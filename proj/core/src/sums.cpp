#include "wangsun/sums.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "wangsun/arith.hpp"
#include "wangsun/errors.hpp"

namespace wangsun {

namespace {

using Clock = std::chrono::steady_clock;

int clamp_jobs(int jobs, std::size_t work_items) {
  if (jobs < 1) jobs = 1;
  return static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(work_items, 1)));
}

// Numeric mirror of the ratio table: (1 + w^m) / (1 - w^m), w = zeta as a
// complex double. Index 0 unused.
std::vector<std::complex<double>> numeric_ratio_table(const CycloField& field) {
  const int n = field.n();
  const std::complex<double> w = field.numeric_zeta();
  std::vector<std::complex<double>> table(n);
  std::complex<double> wm{1.0, 0.0};
  for (int m = 1; m < n; ++m) {
    wm *= w;
    table[m] = (1.0 + wm) / (1.0 - wm);
  }
  return table;
}

std::complex<double> numeric_affine_summand(const std::vector<std::complex<double>>& table,
                                            const AffineMap& f) {
  std::complex<double> p{1.0, 0.0};
  for (int j = 0; j < f.n; ++j) {
    int e = (j - apply(f, j)) % f.n;
    if (e < 0) e += f.n;
    p *= table[e];
  }
  return p;
}

struct PartialSum {
  CycloNumber exact;
  std::complex<double> shadow{0.0, 0.0};
};

// Folds summands over a slice of the group enumeration. Exact rational
// addition commutes, so any partition reduces to the same value.
PartialSum accumulate_affine(const CycloField& field, std::span<const AffineMap> maps,
                             bool with_sign,
                             const std::vector<std::complex<double>>& numeric_table) {
  PartialSum out;
  out.exact = field.zero();
  for (const AffineMap& f : maps) {
    CycloNumber term = quasipolarity_summand(field, f);
    std::complex<double> cterm = numeric_affine_summand(numeric_table, f);
    if (with_sign && sign_of(permutation_of(f)) < 0) {
      term = -term;
      cterm = -cterm;
    }
    out.exact = out.exact + term;
    out.shadow += cterm;
  }
  return out;
}

SumResult affine_sum(SumKind kind, int k, int root_exponent, int jobs, bool with_sign) {
  if (k < 1) throw std::invalid_argument("sum: k must be >= 1");
  const auto start = Clock::now();
  const int n = 2 * k;
  const CycloField field(n, root_exponent);
  const std::vector<AffineMap> maps = with_sign ? enumerate_affine_derangements(n)
                                                : enumerate_quasipolarities_bruteforce(k);
  const std::vector<std::complex<double>> numeric_table = numeric_ratio_table(field);

  const int workers = clamp_jobs(jobs, maps.size());
  std::vector<PartialSum> partials(workers);
  if (workers == 1) {
    partials[0] = accumulate_affine(field, maps, with_sign, numeric_table);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (maps.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t lo = std::min(maps.size(), w * chunk);
          const std::size_t hi = std::min(maps.size(), lo + chunk);
          partials[w] = accumulate_affine(
              field, std::span<const AffineMap>(maps.data() + lo, hi - lo), with_sign,
              numeric_table);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CycloNumber total = field.zero();
  std::complex<double> shadow{0.0, 0.0};
  for (PartialSum& p : partials) {
    total = total + p.exact;
    shadow += p.shadow;
  }

  const std::optional<BigRational> value = total.as_rational();
  if (!value)
    throw InvariantError(std::string(to_string(kind)) +
                         ": sum is not rational (arithmetic bug): k = " + std::to_string(k));

  SumResult result;
  result.kind = kind;
  result.parameter = k;
  result.root_exponent = field.root_exponent();
  result.value = *value;
  result.summand_count = maps.size();
  result.shadow = shadow;
  result.beyond_paper = kind == SumKind::dsum && k > 9;
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

int sign_from_images(const std::vector<int>& images, int m) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen & (1u << s)) continue;
    ++cycles;
    for (int j = s; !(seen & (1u << j)); j = images[j]) seen |= 1u << j;
  }
  return (m - cycles) % 2 == 0 ? 1 : -1;
}

struct ClassicalBranch {
  std::vector<BigInt> acc;  // scaled exact sum over this branch's leaves
  std::complex<double> shadow{0.0, 0.0};
  std::uint64_t leaves = 0;
};

// Workspace for one worker: per-depth partial products so each DFS edge
// costs exactly one multiply-reduce.
struct ClassicalWorkspace {
  explicit ClassicalWorkspace(const CycloField& field, int m)
      : images(m),
        partial(m + 1, std::vector<BigInt>(field.phi())),
        cpartial(m + 1),
        scratch(2 * field.phi() - 1) {
    partial[0][0] = 1;
    cpartial[0] = {1.0, 0.0};
  }
  std::vector<int> images;
  std::vector<std::vector<BigInt>> partial;
  std::vector<std::complex<double>> cpartial;
  std::vector<BigInt> scratch;
};

void classical_dfs(const CycloField& field, int m, int depth, std::uint32_t used,
                   const std::vector<std::complex<double>>& numeric_table,
                   ClassicalWorkspace& ws, ClassicalBranch& out) {
  const int n = field.n();
  for (int y = 0; y < m; ++y) {
    if (y == depth || (used & (1u << y))) continue;
    int e = (depth - y) % n;
    if (e < 0) e += n;
    field.mul_reduce_int(ws.partial[depth], field.scaled_ratio(e), ws.partial[depth + 1],
                         ws.scratch);
    ws.cpartial[depth + 1] = ws.cpartial[depth] * numeric_table[e];
    ws.images[depth] = y;
    if (depth + 1 == m) {
      const int sg = sign_from_images(ws.images, m);
      const std::vector<BigInt>& p = ws.partial[m];
      for (int t = 0; t < field.phi(); ++t)
        if (sg > 0) out.acc[t] += p[t]; else out.acc[t] -= p[t];
      out.shadow += static_cast<double>(sg) * ws.cpartial[m];
      ++out.leaves;
    } else {
      classical_dfs(field, m, depth + 1, used | (1u << y), numeric_table, ws, out);
    }
  }
}

}  // namespace

const char* to_string(SumKind kind) {
  switch (kind) {
    case SumKind::qsum: return "qsum";
    case SumKind::dsum: return "dsum";
    case SumKind::classical: return "classical";
  }
  return "?";
}

double SumResult::shadow_relative_error() const {
  const double v = rational_to_double(value);
  return std::abs(shadow - std::complex<double>(v, 0.0)) / std::max(1.0, std::fabs(v));
}

CycloNumber quasipolarity_summand(const CycloField& field, const AffineMap& f) {
  if (field.n() != f.n)
    throw FieldMismatchError("quasipolarity_summand: field modulus differs from map modulus");
  if (!is_derangement(f))
    throw std::invalid_argument("quasipolarity_summand: " + to_string(f) +
                                " has a fixed point (zero denominator)");
  CycloNumber p = field.one();
  for (int j = 0; j < f.n; ++j) {
    int e = (j - apply(f, j)) % f.n;
    if (e < 0) e += f.n;
    p = p * field.ratio(e);
    if (p.is_zero()) break;  // a tritone factor kills the product
  }
  return p;
}

SumResult qsum(int k, int root_exponent, int jobs) {
  return affine_sum(SumKind::qsum, k, root_exponent, jobs, /*with_sign=*/false);
}

long long qsum_combinatorial(int k) {
  long long count = 0;
  for (const AffineMap& f : enumerate_quasipolarities_bruteforce(k))
    if (!hits_tritone(f)) ++count;
  return count;
}

long long qsum_closed_form(int k) {
  if (k < 1) throw std::invalid_argument("qsum_closed_form: k must be >= 1");
  if (k % 2 != 0) return 0;
  return unitary_sigma(2LL * k) - unitary_sigma(k);
}

int common_sign(int k) {
  const std::vector<AffineMap> maps = enumerate_quasipolarities_bruteforce(k);
  int sign = 0;
  for (const AffineMap& f : maps) {
    const int s = sign_of(permutation_of(f));
    if (sign == 0) sign = s;
    if (s != sign)
      throw InvariantError("common_sign: quasipolarity signs are not constant at k = " +
                           std::to_string(k));
  }
  return sign;
}

SumResult dsum(int k, int root_exponent, int jobs) {
  return affine_sum(SumKind::dsum, k, root_exponent, jobs, /*with_sign=*/true);
}

SumResult classical_sum(int n, int root_exponent, int jobs) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("classical_sum: n must be odd and >= 3");
  const auto start = Clock::now();
  const int m = n - 1;  // permutations of {0, ..., m-1} stand in for {1, ..., n-1}
  const CycloField field(n, root_exponent);
  const std::vector<std::complex<double>> numeric_table = numeric_ratio_table(field);

  // One branch per image of position 0; branches run independently and
  // merge in index order.
  std::vector<int> branch_images;
  for (int y = 1; y < m; ++y) branch_images.push_back(y);

  std::vector<ClassicalBranch> branches(branch_images.size());
  for (ClassicalBranch& b : branches) b.acc.assign(field.phi(), BigInt(0));

  const int workers = clamp_jobs(jobs, branch_images.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);

  const auto run_worker = [&](int widx) {
    try {
      ClassicalWorkspace ws(field, m);
      while (true) {
        const std::size_t b = next.fetch_add(1);
        if (b >= branch_images.size()) break;
        const int y0 = branch_images[b];
        int e = (0 - y0) % n;
        if (e < 0) e += n;
        ws.partial[1] = field.scaled_ratio(e);
        ws.cpartial[1] = numeric_table[e];
        ws.images[0] = y0;
        classical_dfs(field, m, 1, 1u << y0, numeric_table, ws, branches[b]);
      }
    } catch (...) {
      errors[widx] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<BigInt> acc(field.phi());
  std::complex<double> shadow{0.0, 0.0};
  std::uint64_t leaves = 0;
  for (const ClassicalBranch& b : branches) {
    for (int t = 0; t < field.phi(); ++t) acc[t] += b.acc[t];
    shadow += b.shadow;
    leaves += b.leaves;
  }

  BigInt den = 1;
  for (int j = 0; j < m; ++j) den *= field.ratio_denominator();
  const std::optional<BigRational> value = field.from_scaled(acc, den).as_rational();
  if (!value)
    throw InvariantError("classical_sum: sum is not rational (arithmetic bug): n = " +
                         std::to_string(n));

  SumResult result;
  result.kind = SumKind::classical;
  result.parameter = n;
  result.root_exponent = field.root_exponent();
  result.value = *value;
  result.summand_count = leaves;
  result.shadow = shadow;
  result.beyond_paper = false;
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

BigRational classical_closed_form(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("classical_closed_form: n must be odd and >= 3");
  const BigInt df = double_factorial(n - 2);
  BigRational v(df * df, n);
  if ((n - 1) / 2 % 2 != 0) v = -v;
  return v;
}

namespace {

void derangement_dfs(int m, int depth, std::uint32_t used, std::vector<int>& images,
                     const std::function<void(std::span<const int>)>& fn) {
  if (depth == m) {
    fn(std::span<const int>(images.data(), images.size()));
    return;
  }
  for (int y = 0; y < m; ++y) {
    if (y == depth || (used & (1u << y))) continue;
    images[depth] = y;
    derangement_dfs(m, depth + 1, used | (1u << y), images, fn);
  }
}

}  // namespace

void for_each_derangement(int m, const std::function<void(std::span<const int>)>& fn) {
  if (m < 0) throw std::invalid_argument("for_each_derangement: m must be >= 0");
  if (m > 20) throw std::invalid_argument("for_each_derangement: m too large to enumerate");
  std::vector<int> images(m);
  derangement_dfs(m, 0, 0, images, fn);
}

}  // namespace wangsun
