#pragma once

// Success probability of collecting n linearly independent uniform vectors in
// k draws, and the confirmation/error probabilities of sampled verification
// against pseudo structures.

#include <cstdint>
#include <string>
#include <vector>

namespace simonls {

// Exact dyadic rational num / 2^exp, for small-case validation.
struct Dyadic {
  unsigned __int128 num = 0;
  unsigned exp = 0;

  Dyadic& operator+=(const Dyadic& other);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  long double value() const;
};

// prod_{i=1}^{n} (1 - 2^{-i}).
long double p_full(unsigned n);
// Recurrence q(n,i) = sum_{m=0}^{i} 2^{-m} q(n-1,m), q(1,i) = 2 - 2^{-i}. Memoized.
long double q(unsigned n, unsigned i);
// Direct sum over compositions x_0 + ... + x_n = i of 2^{-(n x_0 + (n-1) x_1 + ... + x_{n-1})}.
// n <= 8, i <= 12.
long double q_direct(unsigned n, unsigned i);
// Exact forms of the two routes above (same caps for q_direct_exact).
Dyadic q_exact(unsigned n, unsigned i);
Dyadic q_direct_exact(unsigned n, unsigned i);

struct ProbRow {
  unsigned k;
  long double s;  // P_n q(n, k-n)
  long double h;  // log2(1 - s)
};

struct ProbTable {
  unsigned n;
  std::vector<ProbRow> rows;

  // "# schema=1" comment row, then header "n,k,s,h".
  std::string to_csv() const;
};

ProbTable prob_table(unsigned n, unsigned k_max);

// (1 - r/2^n)^{(l+1) p}.
long double pseudo_confirm_prob(unsigned n, uint64_t r, uint64_t l, uint64_t p);

struct TrialBound {
  long double exact;  // beta n / ((l+1) (-log2(1 - r/2^n)))
  long double lower;  // (beta n ln2 / (l+1)) (2^n / r) / 2
  long double upper;  // (beta n ln2 / (l+1)) (2^n / r)
};

// Requires 0 < r < 2^{n-1}.
TrialBound required_trials(unsigned n, uint64_t r, uint64_t l, double beta);

// Fraction of `trials` experiments in which k uniform vectors of F_2^n have rank n.
double rank_success_rate(unsigned n, unsigned k, uint64_t trials, uint64_t seed);

}  // namespace simonls
