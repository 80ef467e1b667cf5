#pragma once

// 3SAT as product equations over s, a desk-scale decision procedure, and
// machine checks of the coefficient-pattern identities that produce such
// equations from the derivative conditions of an ANF.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simonls/gf2.hpp"

namespace simonls {

struct Literal {
  unsigned var;  // 1-based
  bool negated;
};

struct Cnf3 {
  unsigned n = 0;
  std::vector<std::array<Literal, 3>> clauses;

  // DIMACS-like text: "p cnf <n> <m>", then clauses of three signed integers
  // terminated by 0. Lines starting with 'c' are comments.
  static Cnf3 parse(std::string_view text);
  std::string to_dimacs() const;
  // Literal semantics: some literal of every clause is true.
  bool satisfied_by(uint64_t assignment) const;
};

// (s_i + r) with r in {0,1}.
struct ProductFactor {
  unsigned var;  // 1-based
  bool r;
};

struct ProductEquationSystem {
  unsigned n = 0;
  std::vector<std::array<ProductFactor, 3>> equations;  // each product must be 0

  bool solved_by(uint64_t s) const;
  // One line per equation: "(s1+1)(s2+1)(s3+0)=0".
  std::string to_string() const;
};

// Positive literal x_i -> (s_i + 1), negated -> (s_i + 0).
ProductEquationSystem reduce(const Cnf3& c);
// Smallest s (as an integer) solving every equation. n <= 24.
std::optional<BitVector> solve_brute(const ProductEquationSystem& sys);
// Brute-force satisfiability of c agrees with solvability of reduce(c). n <= 20.
bool equisat_check(const Cnf3& c);

enum class Theorem4Case { k1, k2a, k2b, k2c };

struct Theorem4Params {
  unsigned n;
  std::vector<unsigned> indices;     // i_1..i_k, distinct, 1-based
  std::vector<uint64_t> extra_terms; // further ANF monomials not containing the probed x-monomial
};

// Builds the coefficient pattern of the chosen case, takes the derivative
// condition attached to x_{i_1}...x_{i_{k-4}} (case 1) or x_{i_1}...x_{i_{k-3}}
// (case 2), and compares it with the expanded product form.
bool theorem4_verify(Theorem4Case which, unsigned k, const Theorem4Params& params);
Theorem4Case parse_theorem4_case(std::string_view name);

}  // namespace simonls
