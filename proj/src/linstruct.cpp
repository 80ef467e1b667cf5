#include "simonls/linstruct.hpp"

#include <algorithm>
#include <vector>

#include "simonls/error.hpp"
#include "simonls/oracle.hpp"
#include "simonls/simon_sim.hpp"

namespace simonls {

namespace {

// Seed-stream tags.
constexpr uint64_t kAnchorStream = 1;
constexpr uint64_t kRoundStream = 2;
constexpr uint64_t kVerifyStream = 3;

struct Collected {
  BitMatrix ys;
  Subspace span;
  unsigned rounds = 0;
  bool stabilized = false;
};

// Draws y's until the rank has not grown for `window` consecutive rounds, the
// rank is full, or `cap` rounds have been spent.
template <class DrawY>
Collected collect_ys(unsigned n, unsigned cap, unsigned window, DrawY&& draw_y) {
  Collected c{BitMatrix(n), Subspace(n), 0, false};
  unsigned since_growth = 0;
  while (c.rounds < cap) {
    const BitVector y = draw_y(c.rounds);
    ++c.rounds;
    c.ys.push_back(y);
    if (c.span.insert(y)) {
      since_growth = 0;
    } else {
      ++since_growth;
    }
    if (c.span.dim() == n || since_growth >= window) {
      c.stabilized = true;
      break;
    }
  }
  return c;
}

BitVector random_vector(Rng& rng, unsigned n) { return BitVector(n, rng.bits(n)); }

std::vector<BitVector> independent_anchors(Rng& rng, unsigned n, unsigned count) {
  std::vector<BitVector> out;
  Subspace seen(n);
  while (out.size() < count) {
    BitVector a = random_vector(rng, n);
    if (seen.insert(a)) out.push_back(a);
  }
  return out;
}

void verify_and_check(const TruthTable& f, const RunConfig& cfg, StructureReport& report) {
  const BitMatrix basis = report.candidate.basis();
  std::vector<BitVector> candidates;
  for (size_t i = 0; i < basis.rows(); ++i) candidates.push_back(basis.row(i));
  report.verified = sampled_verify(f, candidates, cfg.verify_p, split_seed(cfg.seed, kVerifyStream)).accepted;
  if (cfg.oracle_check) {
    report.oracle_checked = true;
    report.oracle_match = brute_structures(f).u0 == report.candidate;
    report.pseudo_flag = report.verified && !report.oracle_match;
  }
}

}  // namespace

RunConfig RunConfig::resolved(unsigned n) const {
  RunConfig r = *this;
  if (r.rounds_cap == 0) r.rounds_cap = 8 * n;
  if (r.rank_window == 0) r.rank_window = 2 * n + 4;
  if (r.verify_p == 0) r.verify_p = std::max<uint64_t>(64, 4 * uint64_t{n});
  if (r.anchor_count == 0) r.anchor_count = n;
  if (r.anchor_growth == 0) r.anchor_growth = (n + 1) / 2;
  if (r.stabilize_window == 0) fail(ErrorCode::kInvalidArgument, "stabilize_window must be at least 1");
  return r;
}

PeriodReport find_periods(const MultiTruthTable& F, const RunConfig& config) {
  const unsigned n = F.n();
  const RunConfig cfg = config.resolved(n);
  const uint64_t round_seed = split_seed(cfg.seed, kRoundStream);
  Collected c = collect_ys(n, cfg.rounds_cap, cfg.rank_window,
                           [&](unsigned r) { return simon_round(F, split_seed(round_seed, r)); });
  return PeriodReport{orthogonal_complement(c.span), c.rounds, c.stabilized, std::move(c.ys)};
}

StructureReport find_structure_simple(const TruthTable& f, const RunConfig& config) {
  const unsigned n = f.n();
  const RunConfig cfg = config.resolved(n);
  if (cfg.anchor_count > n) {
    fail(ErrorCode::kInvalidArgument, "simple mode needs anchor_count <= n (anchors are linearly independent)");
  }
  Rng anchor_rng(split_seed(cfg.seed, kAnchorStream));
  const AnchoredFunction anchored(f, independent_anchors(anchor_rng, n, cfg.anchor_count));
  const uint64_t round_seed = split_seed(cfg.seed, kRoundStream);
  Collected c = collect_ys(n, cfg.rounds_cap, cfg.rank_window, [&](unsigned r) {
    const uint64_t s = split_seed(round_seed, r);
    const CollapseOutcome outcome = anchored.collapse(s);
    return sample_y(outcome, splitmix64(s));
  });

  StructureReport report(orthogonal_complement(c.span), std::move(c.ys));
  report.rounds_used = c.rounds;
  report.passes_used = 1;
  report.stabilized = c.stabilized;
  verify_and_check(f, cfg, report);
  return report;
}

StructureReport find_structure_iterative(const TruthTable& f, const RunConfig& config) {
  const unsigned n = f.n();
  const RunConfig cfg = config.resolved(n);
  Rng anchor_rng(split_seed(cfg.seed, kAnchorStream));
  const uint64_t round_seed = split_seed(cfg.seed, kRoundStream);

  unsigned anchor_count = std::max(n, cfg.anchor_count);
  std::vector<Subspace> spans;
  Collected last{BitMatrix(n), Subspace(n)};
  unsigned total_rounds = 0;
  bool stabilized = false;
  for (unsigned pass = 0; pass < cfg.rounds_cap; ++pass) {
    std::vector<BitVector> anchors;
    anchors.reserve(anchor_count);
    for (unsigned j = 0; j < anchor_count; ++j) anchors.push_back(random_vector(anchor_rng, n));
    const AnchoredFunction anchored(f, anchors);
    const uint64_t pass_seed = split_seed(round_seed, pass);
    last = collect_ys(n, cfg.rounds_cap, cfg.rank_window, [&](unsigned r) {
      const uint64_t s = split_seed(pass_seed, r);
      const CollapseOutcome outcome = anchored.collapse(s);
      return sample_y(outcome, splitmix64(s));
    });
    total_rounds += last.rounds;
    spans.push_back(orthogonal_complement(last.span));
    if (spans.size() >= cfg.stabilize_window &&
        std::all_of(spans.end() - cfg.stabilize_window, spans.end(),
                    [&](const Subspace& s) { return s == spans.back(); })) {
      stabilized = true;
      break;
    }
    anchor_count += cfg.anchor_growth;
  }

  StructureReport report(spans.back(), std::move(last.ys));
  report.rounds_used = total_rounds;
  report.passes_used = static_cast<unsigned>(spans.size());
  report.stabilized = stabilized && last.stabilized;
  verify_and_check(f, cfg, report);
  return report;
}

}  // namespace simonls
