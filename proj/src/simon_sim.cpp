#include "simonls/simon_sim.hpp"

#include <algorithm>

#include "simonls/error.hpp"
#include "simonls/spectral.hpp"

namespace simonls {

AnchoredFunction::AnchoredFunction(const TruthTable& f, std::span<const BitVector> anchors)
    : f_(f), anchors_(anchors.begin(), anchors.end()) {
  if (anchors_.empty()) fail(ErrorCode::kInvalidArgument, "collapse: anchor list is empty");
  shifted_.reserve(anchors_.size());
  for (const auto& a : anchors_) {
    if (a.dim() != f.n()) fail(ErrorCode::kDimensionMismatch, "collapse: anchor dimension differs from table");
    shifted_.push_back(xor_shift(f, a.bits()));
  }
}

CollapseOutcome AnchoredFunction::collapse_at(const BitVector& label) const {
  const unsigned n = f_.n();
  if (label.dim() != n) fail(ErrorCode::kDimensionMismatch, "collapse: label dimension differs from table");
  CollapseOutcome out{n, anchors_, label, {}, TruthTable::constant(n, true), 0};
  out.observed.reserve(anchors_.size() + 1);
  auto mw = out.members.words();
  auto constrain = [&](const TruthTable& shifted, bool want) {
    auto sw = shifted.words();
    for (size_t i = 0; i < mw.size(); ++i) mw[i] &= want ? sw[i] : ~sw[i];
  };
  const bool f0 = f_.at(label.bits());
  out.observed.push_back(f0);
  constrain(f_, f0);
  for (size_t j = 0; j < anchors_.size(); ++j) {
    const bool fj = f_.at(label.bits() ^ anchors_[j].bits());
    out.observed.push_back(fj);
    constrain(shifted_[j], fj);
  }
  if (n < 6) mw[0] &= low_mask(1u << n);
  out.size = out.members.count_ones();
  return out;
}

CollapseOutcome AnchoredFunction::collapse(uint64_t seed) const {
  Rng rng(seed);
  return collapse_at(BitVector(f_.n(), rng.bits(f_.n())));
}

CollapseOutcome collapse_at(const TruthTable& f, std::span<const BitVector> anchors, const BitVector& label) {
  return AnchoredFunction(f, anchors).collapse_at(label);
}

CollapseOutcome collapse(const TruthTable& f, std::span<const BitVector> anchors, uint64_t seed) {
  return AnchoredFunction(f, anchors).collapse(seed);
}

std::vector<int64_t> y_weights(const TruthTable& members) {
  std::vector<int64_t> w(members.size());
  for (uint64_t x = 0; x < members.size(); ++x) w[x] = members.at(x) ? 1 : 0;
  walsh_hadamard(w);
  for (int64_t& v : w) v *= v;
  return w;
}

YDistribution y_distribution(const CollapseOutcome& c) {
  const auto w = y_weights(c.members);
  const double total = static_cast<double>(c.size) * static_cast<double>(c.members.size());
  YDistribution out{c.n, std::vector<double>(w.size())};
  for (size_t y = 0; y < w.size(); ++y) out.probs[y] = static_cast<double>(w[y]) / total;
  return out;
}

YSampler::YSampler(const TruthTable& members) : n_(members.n()) {
  const auto w = y_weights(members);
  cumulative_.resize(w.size());
  uint64_t acc = 0;
  for (size_t y = 0; y < w.size(); ++y) {
    acc += static_cast<uint64_t>(w[y]);
    cumulative_[y] = acc;
  }
  total_ = acc;
  if (total_ == 0) fail(ErrorCode::kInvalidArgument, "YSampler: collapsed set is empty");
}

BitVector YSampler::draw(Rng& rng) const {
  const uint64_t r = rng.below(total_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  return BitVector(n_, static_cast<uint64_t>(it - cumulative_.begin()));
}

BitVector sample_y(const CollapseOutcome& c, uint64_t seed) {
  Rng rng(seed);
  return YSampler(c.members).draw(rng);
}

BitVector simon_round(const MultiTruthTable& F, uint64_t seed) {
  Rng rng(seed);
  const uint64_t m = rng.bits(F.n());
  const uint32_t value = F.at(m);
  TruthTable members(F.n());
  for (uint64_t x = 0; x < F.size(); ++x) {
    if (F.at(x) == value) members.set(x, true);
  }
  return YSampler(members).draw(rng);
}

Subspace quantum_solve(const BitMatrix& ys, uint64_t seed, uint64_t samples, SolveSampler sampler) {
  if (samples == 0) fail(ErrorCode::kInvalidArgument, "quantum_solve: samples must be at least 1");
  const unsigned n = ys.dim();
  Rng rng(seed);
  Subspace span(n);
  if (sampler == SolveSampler::kNullSpace) {
    const Subspace solutions = null_space_basis(ys);
    for (uint64_t i = 0; i < samples; ++i) span.insert_bits(solutions.combine(rng.bits(solutions.dim())));
    return span;
  }
  if (n > 20) fail(ErrorCode::kCapExceeded, "quantum_solve: direct support sampler limited to n <= 20");
  std::vector<uint64_t> support;
  for (uint64_t z = 0; z < (uint64_t{1} << n); ++z) {
    bool ok = true;
    for (uint64_t y : ys.words()) {
      if (dot_bits(y, z)) {
        ok = false;
        break;
      }
    }
    if (ok) support.push_back(z);
  }
  for (uint64_t i = 0; i < samples; ++i) span.insert_bits(support[rng.below(support.size())]);
  return span;
}

}  // namespace simonls
