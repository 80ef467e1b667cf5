#pragma once

// Boolean function representations: packed truth tables, multi-output tables
// and sparse algebraic normal form, plus planted-instance generators.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simonls/gf2.hpp"

namespace simonls {

// f: F_2^n -> F_2 as 2^n packed bits; entry i is f(x) for the word x = i.
class TruthTable {
 public:
  explicit TruthTable(unsigned n);

  // 2^n characters '0'/'1' in index order.
  static TruthTable from_bits(std::string_view bits);
  static TruthTable constant(unsigned n, bool value);
  // File form: "n=<k>" line followed by the bit line.
  static TruthTable parse(std::string_view text);
  std::string to_file_string() const;
  std::string to_bit_string() const;

  unsigned n() const noexcept { return n_; }
  uint64_t size() const noexcept { return uint64_t{1} << n_; }

  bool at(uint64_t index) const noexcept { return (words_[index >> 6] >> (index & 63)) & 1; }
  void set(uint64_t index, bool value) noexcept {
    const uint64_t m = uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= m;
    } else {
      words_[index >> 6] &= ~m;
    }
  }
  void flip(uint64_t index) noexcept { words_[index >> 6] ^= uint64_t{1} << (index & 63); }

  std::span<const uint64_t> words() const noexcept { return words_; }
  std::span<uint64_t> words() noexcept { return words_; }
  uint64_t count_ones() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_;
  std::vector<uint64_t> words_;
};

// F: F_2^n -> F_2^m_out, one m_out-bit word per input.
class MultiTruthTable {
 public:
  MultiTruthTable(unsigned n, unsigned m_out);
  MultiTruthTable(unsigned n, unsigned m_out, std::vector<uint32_t> values);

  // File form: "n=<k> m=<m>" line, then 2^k lines each holding an m-bit string
  // (output bit 1 first).
  static MultiTruthTable parse(std::string_view text);
  std::string to_file_string() const;

  unsigned n() const noexcept { return n_; }
  unsigned m_out() const noexcept { return m_out_; }
  uint64_t size() const noexcept { return uint64_t{1} << n_; }
  uint32_t at(uint64_t index) const { return values_.at(index); }
  std::span<const uint32_t> values() const noexcept { return values_; }

  friend bool operator==(const MultiTruthTable&, const MultiTruthTable&) = default;

 private:
  unsigned n_;
  unsigned m_out_;
  std::vector<uint32_t> values_;
};

// Sparse ANF: a set of monomials, each a bitmask over variables (bit i-1 is x_i).
// The empty mask is the constant term.
class Anf {
 public:
  explicit Anf(unsigned n);
  // Terms are summed over F_2: a monomial listed twice cancels.
  Anf(unsigned n, std::span<const uint64_t> terms);

  // "x1*x2 + x3 + 1"; "0" for the zero polynomial. With n == 0 the variable
  // count is the largest index that appears (at least 1).
  static Anf parse(std::string_view text, unsigned n = 0);
  // `var` names the variables ('x' for functions, 's' for conditions on s).
  std::string to_string(char var = 'x') const;

  unsigned n() const noexcept { return n_; }
  std::span<const uint64_t> monomials() const noexcept { return monomials_; }
  size_t size() const noexcept { return monomials_.size(); }
  bool empty() const noexcept { return monomials_.empty(); }
  bool contains(uint64_t monomial) const;
  // -1 for the zero polynomial.
  int degree() const;
  bool evaluate(uint64_t x) const;

  // Adds (xors) a single monomial.
  void toggle(uint64_t monomial);

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  unsigned n_;
  std::vector<uint64_t> monomials_;  // sorted, unique
};

struct PlantSpec {
  unsigned n;
  Subspace structure_basis;
  uint64_t seed;
};

inline constexpr int kPlantRetryCap = 64;

bool eval(const TruthTable& f, const BitVector& x);
Anf anf_of(const TruthTable& f);
TruthTable tt_of(const Anf& a);

// g(x) = f(x ^ s) ^ f(x).
TruthTable derivative(const TruthTable& f, const BitVector& s);
// x -> f(x ^ shift), word-parallel.
TruthTable xor_shift(const TruthTable& f, uint64_t shift);

// f constant on every coset of the basis span, with brute-force U_f^(0) equal to
// that span exactly.
TruthTable plant_structure(const PlantSpec& spec);
// Flips f on r distinct uniformly chosen inputs.
TruthTable plant_r_type(const TruthTable& f, uint64_t r, uint64_t seed);
// F with m_out = n-1, constant on cosets of span(basis) and injective across
// cosets, so its period set is exactly span(basis).
MultiTruthTable plant_periods(unsigned n, const Subspace& basis, uint64_t seed);

// Period set {b : F(x) = F(x ^ b) for all x} by exhaustive scan.
Subspace brute_periods(const MultiTruthTable& F);

}  // namespace simonls
