#include "simonls/anf_props.hpp"

#include <bit>
#include <map>
#include <unordered_set>

#include "simonls/error.hpp"

namespace simonls {

namespace {

uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool ClassifierVerdict::admits(uint64_t s) const {
  if (s == 0) return true;
  switch (kind) {
    case ForcedKind::kZero:
      return false;
    case ForcedKind::kVector:
    case ForcedKind::kAllOnes:
      return s == forced;
    case ForcedKind::kUndetermined:
      return true;
  }
  return true;
}

Anf g_anf(const Anf& f, const BitVector& s) {
  if (s.dim() != f.n()) fail(ErrorCode::kDimensionMismatch, "g_anf: direction dimension differs from ANF");
  // (x ^ s)_T = sum over W subset of T with W inside s of x_{T \ W}; W = {} cancels f(x).
  std::unordered_set<uint64_t> terms;
  for (uint64_t t : f.monomials()) {
    const uint64_t active = t & s.bits();
    for (uint64_t w = active; w != 0; w = (w - 1) & active) {
      const uint64_t u = t ^ w;
      if (!terms.erase(u)) terms.insert(u);
    }
  }
  std::vector<uint64_t> list(terms.begin(), terms.end());
  return Anf(f.n(), list);
}

std::vector<SymbolicCondition> theorem2_system(const Anf& f) {
  // Coefficient of x_U in g is sum over T strictly containing U of a_T s_{T \ U}.
  std::map<uint64_t, std::vector<uint64_t>> by_x;
  for (uint64_t t : f.monomials()) {
    for (uint64_t w = t; w != 0; w = (w - 1) & t) by_x[t ^ w].push_back(w);
  }
  std::vector<SymbolicCondition> out;
  out.reserve(by_x.size());
  for (auto& [u, s_terms] : by_x) out.push_back(SymbolicCondition{u, Anf(f.n(), s_terms)});
  return out;
}

std::vector<uint64_t> solve_system(const std::vector<SymbolicCondition>& system, unsigned n) {
  if (n > 24) fail(ErrorCode::kCapExceeded, "solve_system: n too large to enumerate");
  std::vector<uint64_t> out;
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
    bool ok = true;
    for (const auto& c : system) {
      if (c.polynomial.evaluate(s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

ClassifierVerdict classify_top(const Anf& f) {
  const unsigned n = f.n();
  const uint64_t all = low_mask(n);
  ClassifierVerdict v;
  if (f.contains(all)) {
    v.property = 1;
    v.kind = ForcedKind::kZero;
    return v;
  }
  uint64_t a_prime = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (f.contains(all ^ (uint64_t{1} << i))) a_prime |= uint64_t{1} << i;
  }
  if (a_prime != 0) {
    // Pair equations a'_j s_i + a'_i s_j = 0 leave only {0, a'}.
    v.property = 2;
    v.m = 1;
    v.kind = ForcedKind::kVector;
    v.forced = a_prime;
    return v;
  }
  const int d = f.degree();
  if (d < 2) return v;
  uint64_t top_count = 0;
  for (uint64_t t : f.monomials()) top_count += std::popcount(t) == d;
  if (top_count != binomial(n, static_cast<unsigned>(d))) return v;
  const unsigned gap = n - static_cast<unsigned>(d);
  if (gap % 2 == 0) {
    // Every (gap+1)-subset of coordinates sums to zero; with n > gap+1 this forces s = 0.
    v.m = gap / 2;
    v.property = v.m == 1 ? 3 : 4;
    v.kind = ForcedKind::kZero;
  } else {
    // Every gap-subset sums to zero: all coordinates equal.
    v.m = (gap + 1) / 2;
    v.property = 5;
    v.kind = ForcedKind::kAllOnes;
    v.forced = all;
  }
  return v;
}

bool lemma1_check(const Anf& p, unsigned k) {
  if (k > 20) fail(ErrorCode::kCapExceeded, "lemma1_check: k must be at most 20");
  for (uint64_t m : p.monomials()) {
    if ((m & ~low_mask(k)) != 0) fail(ErrorCode::kDimensionMismatch, "lemma1_check: polynomial uses a variable above k");
  }
  bool vanishes = true;
  for (uint64_t s = 0; s < (uint64_t{1} << k) && vanishes; ++s) vanishes = !p.evaluate(s);
  return vanishes == p.empty();
}

}  // namespace simonls
