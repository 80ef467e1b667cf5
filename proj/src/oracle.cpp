#include "simonls/oracle.hpp"

#include <bit>
#include <cstdlib>

#include "simonls/error.hpp"
#include "simonls/rng.hpp"
#include "simonls/spectral.hpp"

namespace simonls {

AutocorrSpectrum autocorrelation(const TruthTable& f) {
  const uint64_t size = f.size();
  std::vector<int64_t> v(size);
  for (uint64_t x = 0; x < size; ++x) v[x] = f.at(x) ? -1 : 1;
  walsh_hadamard(v);
  for (int64_t& w : v) w *= w;
  walsh_hadamard(v);
  const unsigned n = f.n();
  for (int64_t& w : v) w >>= n;  // exact: every entry is a multiple of 2^n
  return AutocorrSpectrum{n, std::move(v)};
}

StructureSets structures_from_spectrum(const AutocorrSpectrum& spectrum) {
  const int64_t full = int64_t{1} << spectrum.n;
  StructureSets out{Subspace(spectrum.n), {}};
  uint64_t u0_count = 0;
  for (uint64_t a = 0; a < spectrum.values.size(); ++a) {
    if (spectrum.values[a] == full) {
      out.u0.insert_bits(a);
      ++u0_count;
    } else if (spectrum.values[a] == -full) {
      out.u1.emplace_back(spectrum.n, a);
    }
  }
  if (u0_count != (uint64_t{1} << out.u0.dim())) {
    fail(ErrorCode::kInternal, "U_f^(0) from the spectrum is not closed under xor");
  }
  if (!out.u1.empty() && out.u1.size() != u0_count) {
    fail(ErrorCode::kInternal, "U_f^(1) from the spectrum is not a coset of U_f^(0)");
  }
  return out;
}

StructureSets brute_structures(const TruthTable& f) { return structures_from_spectrum(autocorrelation(f)); }

std::vector<RTypeEntry> r_type_scan(const TruthTable& f, uint64_t r) {
  if (r > f.size()) fail(ErrorCode::kInvalidArgument, "r_type_scan: r exceeds 2^n");
  const auto spectrum = autocorrelation(f);
  const int64_t full = int64_t{1} << f.n();
  std::vector<RTypeEntry> out;
  for (uint64_t a = 0; a < spectrum.values.size(); ++a) {
    const int64_t value = spectrum.values[a];
    const uint64_t violations = static_cast<uint64_t>((full - std::llabs(value)) / 2);
    if (violations <= r) out.push_back(RTypeEntry{BitVector(f.n(), a), value < 0, violations});
  }
  return out;
}

std::vector<uint64_t> violation_set(const TruthTable& f, const BitVector& alpha, bool c) {
  const TruthTable g = derivative(f, alpha);
  std::vector<uint64_t> out;
  for (uint64_t x = 0; x < g.size(); ++x) {
    if (g.at(x) != c) out.push_back(x);
  }
  return out;
}

bool violation_sets_coincide(const TruthTable& f, std::span<const RTypeEntry> entries) {
  bool have_reference = false;
  std::vector<uint64_t> reference;
  for (const auto& e : entries) {
    if (e.alpha.is_zero()) continue;
    auto set = violation_set(f, e.alpha, e.c);
    if (!have_reference) {
      reference = std::move(set);
      have_reference = true;
    } else if (set != reference) {
      return false;
    }
  }
  return true;
}

VerifyResult sampled_verify(const TruthTable& f, std::span<const BitVector> candidates, uint64_t p,
                            uint64_t seed) {
  if (p == 0) fail(ErrorCode::kInvalidArgument, "sampled_verify: p must be at least 1");
  for (const auto& b : candidates) {
    if (b.dim() != f.n()) fail(ErrorCode::kDimensionMismatch, "sampled_verify: candidate dimension differs from table");
  }
  Rng rng(seed);
  for (const auto& b : candidates) {
    for (uint64_t i = 0; i < p; ++i) {
      const uint64_t x = rng.bits(f.n());
      if (f.at(x) != f.at(x ^ b.bits())) {
        return VerifyResult{false, BitVector(f.n(), x), b};
      }
    }
  }
  return VerifyResult{true, std::nullopt, std::nullopt};
}

}  // namespace simonls
