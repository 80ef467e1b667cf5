#include "simonls/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "simonls/error.hpp"
#include "simonls/oracle.hpp"
#include "simonls/rng.hpp"
#include "simonls/spectral.hpp"

namespace simonls {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> nonblank_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty()) lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

unsigned parse_uint(std::string_view s, const char* what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::kParse, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// "key=<value>" with the given key.
unsigned parse_header_field(std::string_view token, std::string_view key) {
  token = trim(token);
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    fail(ErrorCode::kParse, "expected '" + std::string(key) + "=<k>', got '" + std::string(token) + "'");
  }
  return parse_uint(token.substr(key.size() + 1), "header value");
}

void require_table_dim(unsigned n) {
  if (n == 0 || n > dimension_cap()) {
    fail(ErrorCode::kCapExceeded, "table dimension " + std::to_string(n) + " outside [1, " +
                                      std::to_string(dimension_cap()) + "]");
  }
}

// Scatters the low bits of `value` into the set positions of `mask`.
uint64_t deposit_bits(uint64_t value, uint64_t mask) {
  uint64_t out = 0;
  for (uint64_t m = mask; m != 0; m &= m - 1) {
    if (value & 1) out |= m & (~m + 1);
    value >>= 1;
  }
  return out;
}

}  // namespace

TruthTable::TruthTable(unsigned n) : n_(n) {
  require_table_dim(n);
  words_.assign(n >= 6 ? size_t{1} << (n - 6) : 1, 0);
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  const size_t len = bits.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    fail(ErrorCode::kParse, "truth table length " + std::to_string(len) + " is not 2^n with n >= 1");
  }
  TruthTable f(static_cast<unsigned>(std::countr_zero(len)));
  for (size_t i = 0; i < len; ++i) {
    if (bits[i] == '1') {
      f.set(i, true);
    } else if (bits[i] != '0') {
      fail(ErrorCode::kParse, "bad character in truth table");
    }
  }
  return f;
}

TruthTable TruthTable::constant(unsigned n, bool value) {
  TruthTable f(n);
  if (value) {
    const uint64_t fill = n >= 6 ? ~uint64_t{0} : low_mask(1u << n);
    std::fill(f.words_.begin(), f.words_.end(), fill);
  }
  return f;
}

TruthTable TruthTable::parse(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.size() != 2) fail(ErrorCode::kParse, "truth table file needs an 'n=<k>' line and a bit line");
  const unsigned n = parse_header_field(lines[0], "n");
  require_table_dim(n);
  if (lines[1].size() != (size_t{1} << n)) {
    fail(ErrorCode::kParse, "expected " + std::to_string(size_t{1} << n) + " table bits, got " +
                                std::to_string(lines[1].size()));
  }
  return from_bits(lines[1]);
}

std::string TruthTable::to_bit_string() const {
  std::string s(size(), '0');
  for (uint64_t i = 0; i < size(); ++i) {
    if (at(i)) s[i] = '1';
  }
  return s;
}

std::string TruthTable::to_file_string() const { return "n=" + std::to_string(n_) + "\n" + to_bit_string() + "\n"; }

uint64_t TruthTable::count_ones() const noexcept {
  uint64_t c = 0;
  for (uint64_t w : words_) c += static_cast<uint64_t>(std::popcount(w));
  return c;
}

bool TruthTable::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

MultiTruthTable::MultiTruthTable(unsigned n, unsigned m_out)
    : MultiTruthTable(n, m_out, std::vector<uint32_t>(n <= 30 ? size_t{1} << n : 0, 0)) {}

MultiTruthTable::MultiTruthTable(unsigned n, unsigned m_out, std::vector<uint32_t> values)
    : n_(n), m_out_(m_out), values_(std::move(values)) {
  require_table_dim(n);
  if (m_out == 0 || m_out > 32) fail(ErrorCode::kInvalidArgument, "output width must be in [1, 32]");
  if (values_.size() != size()) fail(ErrorCode::kDimensionMismatch, "multi-output table length is not 2^n");
  const uint64_t limit = uint64_t{1} << m_out;
  for (uint32_t v : values_) {
    if (v >= limit) fail(ErrorCode::kInvalidArgument, "table entry wider than the output width");
  }
}

MultiTruthTable MultiTruthTable::parse(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) fail(ErrorCode::kParse, "empty multi-output table");
  const std::string_view header = lines[0];
  const size_t space = header.find_first_of(" \t");
  if (space == std::string_view::npos) fail(ErrorCode::kParse, "header must be 'n=<k> m=<m>'");
  const unsigned n = parse_header_field(header.substr(0, space), "n");
  const unsigned m = parse_header_field(header.substr(space + 1), "m");
  require_table_dim(n);
  if (m == 0 || m > 32) fail(ErrorCode::kParse, "output width must be in [1, 32]");
  if (lines.size() != (size_t{1} << n) + 1) {
    fail(ErrorCode::kParse, "expected " + std::to_string(size_t{1} << n) + " entry lines");
  }
  std::vector<uint32_t> values;
  values.reserve(size_t{1} << n);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != m) fail(ErrorCode::kParse, "entry line has wrong width");
    values.push_back(static_cast<uint32_t>(BitVector::parse(lines[i]).bits()));
  }
  return MultiTruthTable(n, m, std::move(values));
}

std::string MultiTruthTable::to_file_string() const {
  std::string out = "n=" + std::to_string(n_) + " m=" + std::to_string(m_out_) + "\n";
  for (uint32_t v : values_) {
    out += BitVector(m_out_, v).to_string();
    out += '\n';
  }
  return out;
}

Anf::Anf(unsigned n) : n_(n) { require_table_dim(n); }

Anf::Anf(unsigned n, std::span<const uint64_t> terms) : Anf(n) {
  for (uint64_t t : terms) toggle(t);
}

void Anf::toggle(uint64_t monomial) {
  if ((monomial & ~low_mask(n_)) != 0) fail(ErrorCode::kInvalidArgument, "monomial uses a variable above x_n");
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), monomial);
  if (it != monomials_.end() && *it == monomial) {
    monomials_.erase(it);
  } else {
    monomials_.insert(it, monomial);
  }
}

bool Anf::contains(uint64_t monomial) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), monomial);
}

int Anf::degree() const {
  int d = -1;
  for (uint64_t m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

bool Anf::evaluate(uint64_t x) const {
  bool v = false;
  for (uint64_t m : monomials_) v ^= (x & m) == m;
  return v;
}

Anf Anf::parse(std::string_view text, unsigned n) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::kParse, "empty ANF text");
  std::vector<uint64_t> terms;
  unsigned max_index = 0;
  if (text != "0") {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('+', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view term = trim(text.substr(pos, end - pos));
      if (term.empty()) fail(ErrorCode::kParse, "empty ANF term");
      uint64_t mask = 0;
      if (term != "1") {
        size_t fpos = 0;
        while (fpos <= term.size()) {
          size_t fend = term.find('*', fpos);
          if (fend == std::string_view::npos) fend = term.size();
          const std::string_view factor = trim(term.substr(fpos, fend - fpos));
          if (factor.size() < 2 || factor[0] != 'x') {
            fail(ErrorCode::kParse, "bad ANF factor '" + std::string(factor) + "'");
          }
          const unsigned idx = parse_uint(factor.substr(1), "variable index");
          if (idx == 0 || idx > kHardDimensionLimit) fail(ErrorCode::kParse, "variable index out of range");
          max_index = std::max(max_index, idx);
          mask |= uint64_t{1} << (idx - 1);
          fpos = fend + 1;
        }
      }
      terms.push_back(mask);
      pos = end + 1;
    }
  }
  if (n == 0) n = std::max(1u, max_index);
  if (max_index > n) fail(ErrorCode::kDimensionMismatch, "ANF uses x" + std::to_string(max_index) + " but n=" + std::to_string(n));
  return Anf(n, terms);
}

std::string Anf::to_string(char var) const {
  if (monomials_.empty()) return "0";
  std::vector<uint64_t> order(monomials_);
  // Highest degree first, then by ascending variable indices.
  std::sort(order.begin(), order.end(), [](uint64_t a, uint64_t b) {
    const int da = std::popcount(a);
    const int db = std::popcount(b);
    if (da != db) return da > db;
    while (a != 0 && b != 0) {
      const int ia = std::countr_zero(a);
      const int ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  std::string out;
  for (uint64_t m : order) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (uint64_t r = m; r != 0; r &= r - 1) {
      if (!first) out += '*';
      out += var;
      out += std::to_string(std::countr_zero(r) + 1);
      first = false;
    }
  }
  return out;
}

bool eval(const TruthTable& f, const BitVector& x) {
  if (x.dim() != f.n()) fail(ErrorCode::kDimensionMismatch, "eval: input dimension differs from table");
  return f.at(x.bits());
}

Anf anf_of(const TruthTable& f) {
  std::vector<uint64_t> w(f.words().begin(), f.words().end());
  mobius(w, f.n());
  Anf a(f.n());
  std::vector<uint64_t> terms;
  for (size_t i = 0; i < w.size(); ++i) {
    for (uint64_t bits = w[i]; bits != 0; bits &= bits - 1) {
      terms.push_back(i * 64 + static_cast<uint64_t>(std::countr_zero(bits)));
    }
  }
  return Anf(f.n(), terms);
}

TruthTable tt_of(const Anf& a) {
  TruthTable f(a.n());
  for (uint64_t m : a.monomials()) f.set(m, true);
  mobius(f.words(), f.n());
  return f;
}

TruthTable xor_shift(const TruthTable& f, uint64_t shift) {
  if (shift >= f.size()) fail(ErrorCode::kDimensionMismatch, "shift wider than table dimension");
  TruthTable g(f.n());
  xor_permute(f.words(), g.words(), f.n(), shift);
  return g;
}

TruthTable derivative(const TruthTable& f, const BitVector& s) {
  if (s.dim() != f.n()) fail(ErrorCode::kDimensionMismatch, "derivative: direction dimension differs from table");
  TruthTable g = xor_shift(f, s.bits());
  auto gw = g.words();
  auto fw = f.words();
  for (size_t i = 0; i < gw.size(); ++i) gw[i] ^= fw[i];
  return g;
}

TruthTable plant_structure(const PlantSpec& spec) {
  const Subspace& basis = spec.structure_basis;
  if (basis.ambient_dim() != spec.n) fail(ErrorCode::kDimensionMismatch, "plant: basis dimension differs from n");
  const uint64_t free_coords = low_mask(spec.n) & ~basis.pivot_mask();
  const uint64_t cosets = uint64_t{1} << (spec.n - basis.dim());
  const auto members = basis.elements();
  for (int attempt = 0; attempt < kPlantRetryCap; ++attempt) {
    Rng rng(split_seed(spec.seed, static_cast<uint64_t>(attempt)));
    TruthTable f(spec.n);
    for (uint64_t c = 0; c < cosets; ++c) {
      if (!rng.bit()) continue;
      const uint64_t rep = deposit_bits(c, free_coords);
      for (uint64_t v : members) f.set(rep ^ v, true);
    }
    if (brute_structures(f).u0 == basis) return f;
  }
  fail(ErrorCode::kRetryExhausted, "plant_structure: no instance with exactly the requested structure after " +
                                       std::to_string(kPlantRetryCap) + " attempts");
}

TruthTable plant_r_type(const TruthTable& f, uint64_t r, uint64_t seed) {
  const uint64_t size = f.size();
  if (r > size) fail(ErrorCode::kInvalidArgument, "plant_r_type: r exceeds 2^n");
  TruthTable g = f;
  Rng rng(seed);
  if (r * 4 >= size) {
    std::vector<uint64_t> idx(size);
    for (uint64_t i = 0; i < size; ++i) idx[i] = i;
    for (uint64_t i = 0; i < r; ++i) {
      std::swap(idx[i], idx[i + rng.below(size - i)]);
      g.flip(idx[i]);
    }
    return g;
  }
  // Floyd's sampling of r distinct points.
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(r);
  for (uint64_t j = size - r; j < size; ++j) {
    const uint64_t t = rng.below(j + 1);
    const uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    g.flip(pick);
  }
  return g;
}

Subspace brute_periods(const MultiTruthTable& F) {
  Subspace periods(F.n());
  const uint32_t at_zero = F.at(0);
  for (uint64_t b = 1; b < F.size(); ++b) {
    if (F.at(b) != at_zero || periods.contains_bits(b)) continue;
    bool is_period = true;
    for (uint64_t x = 0; x < F.size() && is_period; ++x) is_period = F.at(x) == F.at(x ^ b);
    if (is_period) periods.insert_bits(b);
  }
  return periods;
}

MultiTruthTable plant_periods(unsigned n, const Subspace& basis, uint64_t seed) {
  if (basis.ambient_dim() != n) fail(ErrorCode::kDimensionMismatch, "plant_periods: basis dimension differs from n");
  if (basis.dim() == 0) fail(ErrorCode::kInvalidArgument, "plant_periods: the period span must be nontrivial");
  if (n < 2) fail(ErrorCode::kInvalidArgument, "plant_periods: n must be at least 2");
  const unsigned m_out = n - 1;
  const uint64_t free_coords = low_mask(n) & ~basis.pivot_mask();
  const uint64_t cosets = uint64_t{1} << (n - basis.dim());
  const uint64_t codomain = uint64_t{1} << m_out;
  const auto members = basis.elements();
  for (int attempt = 0; attempt < kPlantRetryCap; ++attempt) {
    Rng rng(split_seed(seed, static_cast<uint64_t>(attempt)));
    std::vector<uint32_t> pool(codomain);
    for (uint64_t i = 0; i < codomain; ++i) pool[i] = static_cast<uint32_t>(i);
    std::vector<uint32_t> values(uint64_t{1} << n);
    for (uint64_t c = 0; c < cosets; ++c) {
      std::swap(pool[c], pool[c + rng.below(codomain - c)]);
      const uint64_t rep = deposit_bits(c, free_coords);
      for (uint64_t v : members) values[rep ^ v] = pool[c];
    }
    MultiTruthTable F(n, m_out, std::move(values));
    if (brute_periods(F) == basis) return F;
  }
  fail(ErrorCode::kRetryExhausted, "plant_periods: retry cap exceeded");
}

}  // namespace simonls
