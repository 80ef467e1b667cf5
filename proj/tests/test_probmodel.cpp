#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "simonls/error.hpp"
#include "simonls/probmodel.hpp"

using namespace simonls;

TEST_CASE("p_full examples") {
  CHECK(p_full(1) == 0.5L);
  CHECK(p_full(2) == 0.375L);
  CHECK(std::abs(p_full(30) - 0.288788L) < 1e-6L);
  CHECK_THROWS_AS(p_full(0), Error);
}

TEST_CASE("q examples") {
  CHECK(q(1, 2) == 1.75L);
  for (unsigned n = 1; n <= 20; ++n) CHECK(q(n, 0) == 1.0L);
  CHECK(q(2, 1) == 1.75L);
  CHECK(q_direct(1, 2) == 1.75L);
  CHECK(q_direct(2, 1) == 1.75L);
  for (unsigned n = 1; n <= 8; ++n) CHECK(q_direct(n, 0) == 1.0L);
  CHECK_THROWS_AS(q_direct(9, 1), Error);
  CHECK_THROWS_AS(q_direct(2, 13), Error);
  CHECK_THROWS_AS(q(0, 1), Error);
}

TEST_CASE("q(1, i) = 2 - 2^-i exactly") {
  for (unsigned i = 0; i <= 30; ++i) CHECK(q(1, i) == 2.0L - std::ldexp(1.0L, -static_cast<int>(i)));
}

TEST_CASE("property: recurrence, direct sum and composition oracle agree") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned i = 0; i <= 12; ++i) {
      const long double want = ref::q_compositions(n, i);
      CHECK(std::abs(q(n, i) - want) < 1e-12L);
      CHECK(std::abs(q_direct(n, i) - want) < 1e-12L);
      CHECK(q_exact(n, i) == q_direct_exact(n, i));
    }
  }
}

TEST_CASE("s(n, k) is the full-rank probability") {
  for (unsigned n = 1; n <= 12; ++n) {
    const ProbTable t = prob_table(n, n + 20);
    for (const ProbRow& row : t.rows) CHECK(std::abs(row.s - ref::full_rank_prob(n, row.k)) < 1e-15L);
  }
}

TEST_CASE("prob_table examples and shape") {
  const ProbTable t = prob_table(2, 3);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].s == 0.375L);
  CHECK(t.rows[1].s == 21.0L / 32.0L);
  for (unsigned n = 1; n <= 16; ++n) CHECK(prob_table(n, n).rows[0].s == p_full(n));
  const ProbTable e = prob_table(8, 40);
  for (size_t i = 1; i < e.rows.size(); ++i) {
    CHECK(e.rows[i].s > e.rows[i - 1].s);
    CHECK(e.rows[i].h < e.rows[i - 1].h);
    CHECK(e.rows[i].s < 1.0L);
  }
  CHECK_THROWS_AS(prob_table(5, 4), Error);
  CHECK(t.to_csv().rfind("# schema=1\nn,k,s,h\n2,2,0.375,", 0) == 0);
}

TEST_CASE("p_full decreases toward its limit") {
  for (unsigned n = 1; n < 40; ++n) {
    CHECK(p_full(n) >= p_full(n + 1));
    CHECK(p_full(n + 1) >= 0.288788L);
  }
}

TEST_CASE("pseudo_confirm_prob examples") {
  CHECK(pseudo_confirm_prob(10, 0, 3, 7) == 1.0L);
  // (1023/1024)^55
  CHECK(std::abs(pseudo_confirm_prob(10, 1, 10, 5) - std::pow(1023.0L / 1024.0L, 55.0L)) < 1e-15L);
  CHECK(std::abs(pseudo_confirm_prob(10, 1, 10, 5) - 0.947681L) < 1e-6L);
  CHECK(pseudo_confirm_prob(10, 1024, 10, 5) == 0.0L);
  CHECK_THROWS_AS(pseudo_confirm_prob(10, 1025, 1, 1), Error);
  CHECK_THROWS_AS(pseudo_confirm_prob(10, 1, 0, 1), Error);
}

TEST_CASE("required_trials sandwich and substitution") {
  Rng rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng.below(30));
    const uint64_t r = 1 + rng.below((uint64_t{1} << (n - 1)) - 1);
    const uint64_t l = 1 + rng.below(40);
    const double beta = 0.1 + 4 * rng.uniform01();
    const TrialBound b = required_trials(n, r, l, beta);
    CHECK(b.lower <= b.exact);
    CHECK(b.exact <= b.upper);
    const uint64_t p = static_cast<uint64_t>(std::ceil(static_cast<double>(b.exact)));
    CHECK(pseudo_confirm_prob(n, r, l, p) <= std::pow(2.0L, -beta * n) * (1 + 1e-9L));
  }
  CHECK_THROWS_AS(required_trials(10, 512, 3, 1.0), Error);
  CHECK_THROWS_AS(required_trials(10, 0, 3, 1.0), Error);
}

TEST_CASE("Monte-Carlo rank experiment tracks s(n, k)") {
  constexpr uint64_t kTrials = 10000;
  for (unsigned n : {4u, 8u}) {
    for (unsigned k = n; k <= n + 8; ++k) {
      const long double s = prob_table(n, k).rows.back().s;
      const double rate = rank_success_rate(n, k, kTrials, split_seed(72, n * 64 + k));
      const double se = std::sqrt(static_cast<double>(s * (1 - s)) / kTrials);
      CHECK(std::abs(rate - static_cast<double>(s)) <= 3 * se + 1e-12);
    }
  }
  CHECK_THROWS_AS(rank_success_rate(4, 4, 0, 1), Error);
}
