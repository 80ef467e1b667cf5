#pragma once

// Packed vectors, matrices and subspaces over F_2.
//
// Coordinate convention used everywhere in the library: x_1 is the least
// significant bit of the packed word. Text form writes x_1 first, so the
// string "110" is the word 0b011.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simonls {

inline constexpr unsigned kHardDimensionLimit = 64;

// Default cap on n; tables elsewhere hold 2^n entries.
unsigned dimension_cap() noexcept;
// Clamped to [1, 64]. Returns the previous value.
unsigned set_dimension_cap(unsigned cap) noexcept;

constexpr uint64_t low_mask(unsigned n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

class BitVector {
 public:
  BitVector(unsigned n, uint64_t bits);

  static BitVector zero(unsigned n) { return BitVector(n, 0); }
  // Parses '0'/'1' characters, x_1 first.
  static BitVector parse(std::string_view text);

  unsigned dim() const noexcept { return n_; }
  uint64_t bits() const noexcept { return bits_; }
  // Coordinate x_{i+1}.
  bool get(unsigned i) const noexcept { return (bits_ >> i) & 1; }
  bool is_zero() const noexcept { return bits_ == 0; }
  unsigned weight() const noexcept;

  std::string to_string() const;

  BitVector operator^(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other);

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  unsigned n_;
  uint64_t bits_;
};

// Inner product over F_2.
bool dot(const BitVector& a, const BitVector& b);
inline bool dot_bits(uint64_t a, uint64_t b) { return __builtin_parityll(a & b) != 0; }

class BitMatrix {
 public:
  explicit BitMatrix(unsigned n) : n_(checked_dim(n)) {}
  BitMatrix(unsigned n, std::vector<uint64_t> rows);
  // All rows must share dimension n.
  static BitMatrix from_rows(unsigned n, std::span<const BitVector> rows);
  // One vector per line; blank lines ignored.
  static BitMatrix parse(std::string_view text);

  unsigned dim() const noexcept { return n_; }
  size_t rows() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  BitVector row(size_t i) const { return BitVector(n_, rows_.at(i)); }
  std::span<const uint64_t> words() const noexcept { return rows_; }

  void push_back(const BitVector& v);
  void push_back_bits(uint64_t bits);

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  static unsigned checked_dim(unsigned n);

  unsigned n_;
  std::vector<uint64_t> rows_;
};

// A subspace of F_2^n held as a basis in reduced row echelon form: each row's
// pivot is its lowest set bit, pivots ascend with the row index, and every pivot
// column is zero in all other rows. The form is unique for a given span.
class Subspace {
 public:
  explicit Subspace(unsigned n);

  static Subspace span_of(const BitMatrix& m);
  static Subspace full(unsigned n);
  static Subspace trivial(unsigned n) { return Subspace(n); }

  unsigned ambient_dim() const noexcept { return n_; }
  unsigned dim() const noexcept { return static_cast<unsigned>(basis_.size()); }
  BitMatrix basis() const { return BitMatrix(n_, basis_); }
  std::span<const uint64_t> basis_words() const noexcept { return basis_; }
  // Bitmask of pivot coordinates.
  uint64_t pivot_mask() const noexcept { return pivots_; }

  // Adds v to the spanning set; returns true if the dimension grew.
  bool insert(const BitVector& v);
  bool insert_bits(uint64_t v);

  // v with every pivot coordinate eliminated; zero iff v lies in the span.
  uint64_t reduce(uint64_t v) const noexcept;
  bool contains_bits(uint64_t v) const noexcept { return reduce(v) == 0; }

  // All 2^dim members, in the order of their coefficient vectors. dim <= 24.
  std::vector<uint64_t> elements() const;
  // Member with coefficient vector `coeffs` over the basis rows.
  uint64_t combine(uint64_t coeffs) const noexcept;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  unsigned n_;
  uint64_t pivots_ = 0;
  std::vector<uint64_t> basis_;
};

size_t rank(const BitMatrix& m);
// Canonical basis of {s : row . s = 0 for every row}.
Subspace null_space_basis(const BitMatrix& m);
bool span_equal(const Subspace& a, const Subspace& b);
bool in_span(const BitVector& v, const Subspace& s);
// Orthogonal complement {y : y . b = 0 for all b in s}.
Subspace orthogonal_complement(const Subspace& s);

}  // namespace simonls
