// Glue between library types and the reference oracles.
#pragma once

#include <set>
#include <vector>

#include "reference.hpp"
#include "simonls/boolfn.hpp"
#include "simonls/gf2.hpp"
#include "simonls/rng.hpp"

namespace th {

inline ref::Table to_ref(const simonls::TruthTable& f) {
  ref::Table t(f.size());
  for (uint64_t x = 0; x < f.size(); ++x) t[x] = f.at(x);
  return t;
}

inline simonls::TruthTable random_table(unsigned n, simonls::Rng& rng) {
  simonls::TruthTable f(n);
  for (uint64_t x = 0; x < f.size(); ++x) f.set(x, rng.bit());
  return f;
}

inline std::set<uint64_t> elements(const simonls::Subspace& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

inline simonls::Subspace random_subspace(unsigned n, unsigned dim, simonls::Rng& rng) {
  simonls::Subspace s(n);
  while (s.dim() < dim) s.insert_bits(rng.bits(n));
  return s;
}

inline simonls::BitMatrix matrix(unsigned n, std::vector<uint64_t> rows) { return simonls::BitMatrix(n, std::move(rows)); }

inline simonls::BitVector bv(const char* text) { return simonls::BitVector::parse(text); }

}  // namespace th
