#pragma once

// Coefficient-level reasoning about U_f^(0) from the algebraic normal form:
// the symbolic derivative, the complete coefficient-vanishing system in the
// unknown direction s, and the top-degree pattern classifiers.

#include <cstdint>
#include <vector>

#include "simonls/boolfn.hpp"
#include "simonls/gf2.hpp"

namespace simonls {

// The coefficient of one x-monomial of g(x) = f(x ^ s) + f(x), written as a
// multilinear polynomial in s_1..s_n (an Anf whose variables are the s_i).
struct SymbolicCondition {
  uint64_t x_monomial;
  Anf polynomial;
};

enum class ForcedKind {
  kUndetermined,
  kZero,     // U_f^(0) = {0}
  kVector,   // any nonzero member equals `forced`
  kAllOnes,  // any nonzero member is (1, ..., 1)
};

struct ClassifierVerdict {
  int property = 0;  // 1..5, or 0 when no pattern applies
  unsigned m = 0;    // the m of the degree n-2m / n-2m+1 patterns
  ForcedKind kind = ForcedKind::kUndetermined;
  uint64_t forced = 0;

  // Whether a nonzero s is still allowed by the verdict.
  bool admits(uint64_t s) const;
};

// ANF of f(x ^ s) + f(x) for a concrete s.
Anf g_anf(const Anf& f, const BitVector& s);

// One condition per x-monomial whose coefficient is not identically zero,
// ordered by x-monomial. s lies in U_f^(0) iff every polynomial vanishes at s.
std::vector<SymbolicCondition> theorem2_system(const Anf& f);
// All s in F_2^n satisfying every condition, ascending.
std::vector<uint64_t> solve_system(const std::vector<SymbolicCondition>& system, unsigned n);

ClassifierVerdict classify_top(const Anf& f);

// p vanishes on all of {0,1}^k  <=>  p has no monomials. k <= 20.
bool lemma1_check(const Anf& p, unsigned k);

}  // namespace simonls
