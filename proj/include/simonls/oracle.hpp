#pragma once

// Classical ground truth for linear structures, computed from the full truth
// table and independent of the simulated quantum path.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simonls/boolfn.hpp"
#include "simonls/gf2.hpp"

namespace simonls {

// values[a] = sum_x (-1)^{f(x) ^ f(x ^ a)}.
struct AutocorrSpectrum {
  unsigned n;
  std::vector<int64_t> values;
};

// U_f = u0 (derivative identically 0, a subspace) union u1 (identically 1,
// empty or one coset of u0).
struct StructureSets {
  Subspace u0;
  std::vector<BitVector> u1;
};

struct RTypeEntry {
  BitVector alpha;
  bool c;               // the constant the derivative agrees with off the violation set
  uint64_t violations;  // |{x : f(x ^ alpha) ^ f(x) != c}|
};

struct VerifyResult {
  bool accepted;
  // Set when a violation was found: f(x) != f(x ^ b).
  std::optional<BitVector> witness_x;
  std::optional<BitVector> witness_b;
};

// O(n 2^n): transform (-1)^f, square, transform back.
AutocorrSpectrum autocorrelation(const TruthTable& f);
StructureSets brute_structures(const TruthTable& f);
StructureSets structures_from_spectrum(const AutocorrSpectrum& spectrum);

// Every alpha with min over c of its violation count <= r. Ties (spectrum 0)
// report c = 0.
std::vector<RTypeEntry> r_type_scan(const TruthTable& f, uint64_t r);

// Inputs x with f(x ^ alpha) ^ f(x) != c, ascending.
std::vector<uint64_t> violation_set(const TruthTable& f, const BitVector& alpha, bool c);
// True when every nonzero entry's violation set is the same set of inputs
// (the uniform variant of an r-type structure).
bool violation_sets_coincide(const TruthTable& f, std::span<const RTypeEntry> entries);

// For every candidate b, draws p uniform x (with replacement) and checks
// f(x) == f(x ^ b). Candidates are visited in order, p draws each.
VerifyResult sampled_verify(const TruthTable& f, std::span<const BitVector> candidates, uint64_t p,
                            uint64_t seed);

}  // namespace simonls
