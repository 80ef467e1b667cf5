#include "simonls/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "simonls/error.hpp"

namespace simonls {

namespace {

std::atomic<unsigned> g_dimension_cap{24};

void require_dim(unsigned n) {
  if (n == 0 || n > dimension_cap()) {
    fail(ErrorCode::kCapExceeded,
         "dimension " + std::to_string(n) + " outside [1, " + std::to_string(dimension_cap()) + "]");
  }
}

void require_same(unsigned a, unsigned b, const char* what) {
  if (a != b) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

unsigned dimension_cap() noexcept { return g_dimension_cap.load(std::memory_order_relaxed); }

unsigned set_dimension_cap(unsigned cap) noexcept {
  cap = std::clamp(cap, 1u, kHardDimensionLimit);
  return g_dimension_cap.exchange(cap, std::memory_order_relaxed);
}

BitVector::BitVector(unsigned n, uint64_t bits) : n_(n), bits_(bits) {
  require_dim(n);
  if ((bits & ~low_mask(n)) != 0) {
    fail(ErrorCode::kInvalidArgument, "bits set above coordinate " + std::to_string(n));
  }
}

BitVector BitVector::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::kParse, "empty bit string");
  if (text.size() > kHardDimensionLimit) fail(ErrorCode::kCapExceeded, "bit string too long");
  uint64_t bits = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= uint64_t{1} << i;
    } else if (text[i] != '0') {
      fail(ErrorCode::kParse, "bad character in bit string '" + std::string(text) + "'");
    }
  }
  return BitVector(static_cast<unsigned>(text.size()), bits);
}

unsigned BitVector::weight() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (unsigned i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVector BitVector::operator^(const BitVector& other) const {
  BitVector r = *this;
  r ^= other;
  return r;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same(n_, other.n_, "xor");
  bits_ ^= other.bits_;
  return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
  require_same(a.dim(), b.dim(), "dot");
  return dot_bits(a.bits(), b.bits());
}

unsigned BitMatrix::checked_dim(unsigned n) {
  require_dim(n);
  return n;
}

BitMatrix::BitMatrix(unsigned n, std::vector<uint64_t> rows) : n_(checked_dim(n)), rows_(std::move(rows)) {
  for (uint64_t r : rows_) {
    if ((r & ~low_mask(n_)) != 0) fail(ErrorCode::kDimensionMismatch, "matrix row wider than n");
  }
}

BitMatrix BitMatrix::from_rows(unsigned n, std::span<const BitVector> rows) {
  BitMatrix m(n);
  for (const auto& r : rows) m.push_back(r);
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<BitVector> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) rows.push_back(BitVector::parse(line));
    pos = end + 1;
  }
  if (rows.empty()) fail(ErrorCode::kParse, "matrix text has no rows (dimension unknown)");
  return from_rows(rows.front().dim(), rows);
}

void BitMatrix::push_back(const BitVector& v) {
  require_same(n_, v.dim(), "matrix row");
  rows_.push_back(v.bits());
}

void BitMatrix::push_back_bits(uint64_t bits) { push_back(BitVector(n_, bits)); }

std::string BitMatrix::to_string() const {
  std::string out;
  for (uint64_t r : rows_) {
    out += BitVector(n_, r).to_string();
    out += '\n';
  }
  return out;
}

Subspace::Subspace(unsigned n) : n_(n) { require_dim(n); }

Subspace Subspace::span_of(const BitMatrix& m) {
  Subspace s(m.dim());
  for (uint64_t r : m.words()) s.insert_bits(r);
  return s;
}

Subspace Subspace::full(unsigned n) {
  Subspace s(n);
  for (unsigned i = 0; i < n; ++i) s.insert_bits(uint64_t{1} << i);
  return s;
}

bool Subspace::insert(const BitVector& v) {
  require_same(n_, v.dim(), "subspace insert");
  return insert_bits(v.bits());
}

bool Subspace::insert_bits(uint64_t v) {
  if ((v & ~low_mask(n_)) != 0) fail(ErrorCode::kDimensionMismatch, "vector wider than subspace");
  v = reduce(v);
  if (v == 0) return false;
  const uint64_t pivot = v & (~v + 1);
  for (uint64_t& row : basis_) {
    if (row & pivot) row ^= v;
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), pivot,
                              [](uint64_t row, uint64_t p) { return (row & (~row + 1)) < p; });
  basis_.insert(pos, v);
  pivots_ |= pivot;
  return true;
}

uint64_t Subspace::reduce(uint64_t v) const noexcept {
  for (uint64_t row : basis_) {
    if (v & row & (~row + 1)) v ^= row;
  }
  return v;
}

uint64_t Subspace::combine(uint64_t coeffs) const noexcept {
  uint64_t v = 0;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if ((coeffs >> i) & 1) v ^= basis_[i];
  }
  return v;
}

std::vector<uint64_t> Subspace::elements() const {
  if (dim() > 24) fail(ErrorCode::kCapExceeded, "subspace too large to enumerate");
  std::vector<uint64_t> out(size_t{1} << dim());
  // Gray-code walk: one xor per element.
  uint64_t v = 0;
  out[0] = 0;
  for (uint64_t i = 1; i < out.size(); ++i) {
    v ^= basis_[std::countr_zero(i)];
    out[i ^ (i >> 1)] = v;
  }
  return out;
}

size_t rank(const BitMatrix& m) { return Subspace::span_of(m).dim(); }

Subspace null_space_basis(const BitMatrix& m) {
  const Subspace rows = Subspace::span_of(m);
  const unsigned n = m.dim();
  Subspace out(n);
  for (unsigned j = 0; j < n; ++j) {
    const uint64_t col = uint64_t{1} << j;
    if (rows.pivot_mask() & col) continue;
    uint64_t z = col;
    for (uint64_t row : rows.basis_words()) {
      if (row & col) z |= row & (~row + 1);
    }
    out.insert_bits(z);
  }
  return out;
}

bool span_equal(const Subspace& a, const Subspace& b) {
  require_same(a.ambient_dim(), b.ambient_dim(), "span_equal");
  return a == b;
}

bool in_span(const BitVector& v, const Subspace& s) {
  require_same(v.dim(), s.ambient_dim(), "in_span");
  return s.contains_bits(v.bits());
}

Subspace orthogonal_complement(const Subspace& s) { return null_space_basis(s.basis()); }

}  // namespace simonls
