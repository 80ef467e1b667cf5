#pragma once

// Exact measurement statistics of the two-register routines. Register II is
// sampled by drawing the superposition label m uniformly (each outcome has
// probability |S| / 2^n, which is the Born weight), and register I's
// distribution after the Hadamard layer is computed exactly by a transform.

#include <cstdint>
#include <span>
#include <vector>

#include "simonls/boolfn.hpp"
#include "simonls/gf2.hpp"
#include "simonls/rng.hpp"

namespace simonls {

struct CollapseOutcome {
  unsigned n;
  std::vector<BitVector> anchors;  // a_1..a_l; a_0 = 0 is implicit
  BitVector label;                 // the m that was drawn
  std::vector<uint8_t> observed;   // F_0..F_l, F_j = f(m ^ a_j)
  TruthTable members;              // membership mask of S
  uint64_t size;                   // |S|
};

struct YDistribution {
  unsigned n;
  std::vector<double> probs;
};

// f together with a fixed anchor list; caches the shifted tables x -> f(x ^ a_j)
// so repeated measurements cost one masked AND per anchor word.
class AnchoredFunction {
 public:
  AnchoredFunction(const TruthTable& f, std::span<const BitVector> anchors);

  CollapseOutcome collapse(uint64_t seed) const;
  CollapseOutcome collapse_at(const BitVector& label) const;
  unsigned n() const noexcept { return f_.n(); }

 private:
  TruthTable f_;
  std::vector<BitVector> anchors_;
  std::vector<TruthTable> shifted_;
};

CollapseOutcome collapse(const TruthTable& f, std::span<const BitVector> anchors, uint64_t seed);
// Same, with the label fixed instead of drawn.
CollapseOutcome collapse_at(const TruthTable& f, std::span<const BitVector> anchors, const BitVector& label);

// weights[y] = (sum_{x in S} (-1)^{x.y})^2; they sum to |S| 2^n.
std::vector<int64_t> y_weights(const TruthTable& members);
YDistribution y_distribution(const CollapseOutcome& c);

// Exact integer-weight sampler over y for one collapsed set.
class YSampler {
 public:
  explicit YSampler(const TruthTable& members);
  BitVector draw(Rng& rng) const;
  uint64_t total() const noexcept { return total_; }

 private:
  unsigned n_;
  std::vector<uint64_t> cumulative_;
  uint64_t total_;
};

BitVector sample_y(const CollapseOutcome& c, uint64_t seed);

// One repetition of the period-finding routine on F: draw m, collapse onto
// {x : F(x) = F(m)}, measure register I.
BitVector simon_round(const MultiTruthTable& F, uint64_t seed);

enum class SolveSampler {
  kNullSpace,      // uniform coefficient vectors over a precomputed null-space basis
  kDirectSupport,  // enumerate the 2^n support of the product-form amplitude
};

// Draws z uniformly from {z : y.z = 0 for every row of ys}, `samples` times,
// and returns the span of the draws.
Subspace quantum_solve(const BitMatrix& ys, uint64_t seed, uint64_t samples,
                       SolveSampler sampler = SolveSampler::kNullSpace);

}  // namespace simonls
