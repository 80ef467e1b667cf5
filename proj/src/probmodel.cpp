#include "simonls/probmodel.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <shared_mutex>

#include "simonls/error.hpp"
#include "simonls/gf2.hpp"
#include "simonls/rng.hpp"

namespace simonls {

namespace {

constexpr unsigned kDirectMaxN = 8;
constexpr unsigned kDirectMaxI = 12;

// q(n, i) for n in [1, rows], i in [0, cols).
class QMemo {
 public:
  long double get(unsigned n, unsigned i) {
    {
      std::shared_lock lock(mutex_);
      if (n <= rows_ && i < cols_) return table_[(n - 1) * cols_ + i];
    }
    std::unique_lock lock(mutex_);
    if (n > rows_ || i >= cols_) rebuild(std::max(n, rows_), std::max(i + 1, cols_));
    return table_[(n - 1) * cols_ + i];
  }

 private:
  void rebuild(unsigned rows, unsigned cols) {
    std::vector<long double> t(static_cast<size_t>(rows) * cols);
    for (unsigned i = 0; i < cols; ++i) t[i] = 2.0L - std::ldexp(1.0L, -static_cast<int>(i));
    for (unsigned n = 2; n <= rows; ++n) {
      const long double* prev = &t[(n - 2) * cols];
      long double* cur = &t[(n - 1) * cols];
      // q(n, i) = q(n, i-1) + 2^{-i} q(n-1, i)
      long double acc = 0;
      for (unsigned i = 0; i < cols; ++i) {
        acc += std::ldexp(prev[i], -static_cast<int>(i));
        cur[i] = acc;
      }
    }
    table_ = std::move(t);
    rows_ = rows;
    cols_ = cols;
  }

  std::shared_mutex mutex_;
  std::vector<long double> table_;
  unsigned rows_ = 0;
  unsigned cols_ = 0;
};

QMemo& memo() {
  static QMemo m;
  return m;
}

Dyadic dyadic_pow2(int neg_exp) {
  Dyadic d;
  d.num = 1;
  d.exp = static_cast<unsigned>(neg_exp);
  return d;
}

Dyadic scaled(Dyadic d, unsigned extra_exp) {
  d.exp += extra_exp;
  return d;
}

void check_direct_caps(unsigned n, unsigned i) {
  if (n == 0 || n > kDirectMaxN || i > kDirectMaxI) {
    fail(ErrorCode::kCapExceeded, "q_direct: requires 1 <= n <= 8 and i <= 12");
  }
}

// Visits every composition of `remaining` over x_j..x_{n-1} (x_n takes the
// rest) and reports the exponent sum_j (n - j) x_j.
template <class Visit>
void for_each_composition(unsigned n, unsigned j, unsigned remaining, unsigned exponent, Visit& visit) {
  if (j == n) {
    visit(exponent);
    return;
  }
  for (unsigned x = 0; x <= remaining; ++x) {
    for_each_composition(n, j + 1, remaining - x, exponent + (n - j) * x, visit);
  }
}

}  // namespace

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.exp > exp) {
    num <<= (other.exp - exp);
    exp = other.exp;
    num += other.num;
  } else {
    num += other.num << (exp - other.exp);
  }
  return *this;
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  // Compare after normalizing away common factors of two.
  auto norm = [](Dyadic d) {
    while (d.exp > 0 && (d.num & 1) == 0 && d.num != 0) {
      d.num >>= 1;
      --d.exp;
    }
    if (d.num == 0) d.exp = 0;
    return d;
  };
  const Dyadic x = norm(a);
  const Dyadic y = norm(b);
  return x.num == y.num && x.exp == y.exp;
}

long double Dyadic::value() const {
  const auto hi = static_cast<uint64_t>(num >> 64);
  const auto lo = static_cast<uint64_t>(num);
  return std::ldexp(std::ldexp(static_cast<long double>(hi), 64) + static_cast<long double>(lo),
                    -static_cast<int>(exp));
}

long double p_full(unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "p_full: n must be at least 1");
  long double p = 1.0L;
  for (unsigned i = 1; i <= n; ++i) p *= 1.0L - std::ldexp(1.0L, -static_cast<int>(i));
  return p;
}

long double q(unsigned n, unsigned i) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "q: n must be at least 1");
  return memo().get(n, i);
}

long double q_direct(unsigned n, unsigned i) {
  check_direct_caps(n, i);
  long double sum = 0;
  auto visit = [&](unsigned exponent) { sum += std::ldexp(1.0L, -static_cast<int>(exponent)); };
  for_each_composition(n, 0, i, 0, visit);
  return sum;
}

Dyadic q_exact(unsigned n, unsigned i) {
  check_direct_caps(n, i);
  // Same recurrence as q(), carried out in exact dyadic arithmetic.
  std::vector<Dyadic> prev(i + 1);
  for (unsigned m = 0; m <= i; ++m) {
    Dyadic d;
    d.num = (static_cast<unsigned __int128>(1) << (m + 1)) - 1;  // 2 - 2^{-m} = (2^{m+1} - 1) / 2^m
    d.exp = m;
    prev[m] = d;
  }
  for (unsigned row = 2; row <= n; ++row) {
    std::vector<Dyadic> cur(i + 1);
    Dyadic acc;
    for (unsigned m = 0; m <= i; ++m) {
      acc += scaled(prev[m], m);
      cur[m] = acc;
    }
    prev = std::move(cur);
  }
  return prev[i];
}

Dyadic q_direct_exact(unsigned n, unsigned i) {
  check_direct_caps(n, i);
  Dyadic sum;
  auto visit = [&](unsigned exponent) { sum += dyadic_pow2(static_cast<int>(exponent)); };
  for_each_composition(n, 0, i, 0, visit);
  return sum;
}

std::string ProbTable::to_csv() const {
  std::string out = "# schema=1\nn,k,s,h\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%u,%u,%.17Lg,%.17Lg\n", n, r.k, r.s, r.h);
    out += line;
  }
  return out;
}

ProbTable prob_table(unsigned n, unsigned k_max) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "prob_table: n must be at least 1");
  if (k_max < n) fail(ErrorCode::kInvalidArgument, "prob_table: k_max must be at least n");
  ProbTable t{n, {}};
  const long double pn = p_full(n);
  for (unsigned k = n; k <= k_max; ++k) {
    const long double s = pn * q(n, k - n);
    t.rows.push_back(ProbRow{k, s, std::log2(1.0L - s)});
  }
  return t;
}

long double pseudo_confirm_prob(unsigned n, uint64_t r, uint64_t l, uint64_t p) {
  if (n == 0 || n > 62) fail(ErrorCode::kInvalidArgument, "pseudo_confirm_prob: n out of range");
  if (r > (uint64_t{1} << n)) fail(ErrorCode::kInvalidArgument, "pseudo_confirm_prob: r exceeds 2^n");
  if (l == 0 || p == 0) fail(ErrorCode::kInvalidArgument, "pseudo_confirm_prob: l and p must be at least 1");
  const long double rho = std::ldexp(static_cast<long double>(r), -static_cast<int>(n));
  return std::pow(1.0L - rho, static_cast<long double>((l + 1) * p));
}

TrialBound required_trials(unsigned n, uint64_t r, uint64_t l, double beta) {
  if (n == 0 || n > 62) fail(ErrorCode::kInvalidArgument, "required_trials: n out of range");
  if (r == 0 || r >= (uint64_t{1} << (n - 1))) {
    fail(ErrorCode::kInvalidArgument, "required_trials: requires 0 < r < 2^(n-1)");
  }
  const long double rho = std::ldexp(static_cast<long double>(r), -static_cast<int>(n));
  const long double scale = static_cast<long double>(beta) * n / static_cast<long double>(l + 1);
  TrialBound b;
  b.exact = scale / -std::log2(1.0L - rho);
  b.upper = scale * std::log(2.0L) / rho;
  b.lower = b.upper / 2;
  return b;
}

double rank_success_rate(unsigned n, unsigned k, uint64_t trials, uint64_t seed) {
  if (trials == 0) fail(ErrorCode::kInvalidArgument, "rank_success_rate: trials must be at least 1");
  Rng rng(seed);
  uint64_t hits = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    Subspace span(n);
    for (unsigned j = 0; j < k; ++j) span.insert_bits(rng.bits(n));
    hits += span.dim() == n;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace simonls
