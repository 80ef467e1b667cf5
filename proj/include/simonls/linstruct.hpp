#pragma once

// Top-level recovery algorithms: multi-period recovery, the simplified
// linear-structure algorithm with fixed independent anchors, and the iterative
// algorithm that compares solution spans across passes.

#include <cstdint>
#include <utility>

#include "simonls/boolfn.hpp"
#include "simonls/gf2.hpp"
#include "simonls/rng.hpp"

namespace simonls {

// Zero-valued knobs take the n-dependent default when resolved.
struct RunConfig {
  unsigned rounds_cap = 0;        // sampling rounds per solve (and pass budget); default 8n
  unsigned stabilize_window = 3;  // consecutive span-equal passes (iterative mode)
  unsigned rank_window = 0;       // rounds without rank growth before a solve stops; default 2n+4
  uint64_t verify_p = 0;          // samples per candidate in the verification step; default max(64, 4n)
  unsigned anchor_count = 0;      // l; default n
  unsigned anchor_growth = 0;     // l_{i+1} - l_i; default ceil(n/2)
  bool oracle_check = false;      // cross-check the candidate against brute force
  uint64_t seed = kDefaultSeed;

  RunConfig resolved(unsigned n) const;
};

struct StructureReport {
  StructureReport(Subspace candidate_span, BitMatrix ys)
      : candidate(std::move(candidate_span)), ys_collected(std::move(ys)) {}

  Subspace candidate;
  bool verified = false;
  unsigned rounds_used = 0;
  unsigned passes_used = 0;
  bool stabilized = false;
  BitMatrix ys_collected;
  bool oracle_checked = false;
  bool oracle_match = false;  // meaningful only when oracle_checked
  bool pseudo_flag = false;   // verified, but the oracle disagrees
};

struct PeriodReport {
  Subspace periods;
  unsigned rounds_used = 0;
  bool stabilized = false;
  BitMatrix ys_collected;
};

PeriodReport find_periods(const MultiTruthTable& F, const RunConfig& cfg);
StructureReport find_structure_simple(const TruthTable& f, const RunConfig& cfg);
StructureReport find_structure_iterative(const TruthTable& f, const RunConfig& cfg);

}  // namespace simonls
