#include "simonls/simonls.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simonls/anf_props.hpp"
#include "simonls/boolfn.hpp"
#include "simonls/error.hpp"
#include "simonls/gf2.hpp"
#include "simonls/linstruct.hpp"
#include "simonls/oracle.hpp"
#include "simonls/probmodel.hpp"
#include "simonls/rng.hpp"
#include "simonls/sat3.hpp"
#include "simonls/simon_sim.hpp"

using namespace simonls;

struct sls_truth_table {
  TruthTable value;
};
struct sls_multi_table {
  MultiTruthTable value;
};
struct sls_anf {
  Anf value;
};
struct sls_cnf {
  Cnf3 value;
};
struct sls_report {
  unsigned n;
  Subspace candidate;
  BitMatrix ys;
  bool verified = false;
  bool stabilized = false;
  bool oracle_checked = false;
  bool oracle_match = false;
  bool pseudo_flag = false;
  unsigned rounds = 0;
  unsigned passes = 0;
};

namespace {

thread_local std::string g_last_error;

sls_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return SLS_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch:
      return SLS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kCapExceeded:
      return SLS_ERR_CAP_EXCEEDED;
    case ErrorCode::kParse:
      return SLS_ERR_PARSE;
    case ErrorCode::kRetryExhausted:
      return SLS_ERR_RETRY_EXHAUSTED;
    case ErrorCode::kInternal:
      return SLS_ERR_INTERNAL;
    case ErrorCode::kIo:
      return SLS_ERR_IO;
  }
  return SLS_ERR_INTERNAL;
}

template <class Body>
sls_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SLS_ERR_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SLS_ERR_INTERNAL;
  }
}

sls_status null_pointer(const char* what) {
  g_last_error = std::string("null pointer: ") + what;
  return SLS_ERR_NULL_POINTER;
}

#define SLS_REQUIRE(ptr)                          \
  do {                                            \
    if ((ptr) == nullptr) return null_pointer(#ptr); \
  } while (false)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sls_status copy_words(std::span<const uint64_t> words, uint64_t* out, size_t cap, size_t* len) {
  if (len != nullptr) *len = words.size();
  if (words.size() > cap) {
    g_last_error = "output buffer holds " + std::to_string(cap) + " words, need " + std::to_string(words.size());
    return SLS_ERR_BUFFER_TOO_SMALL;
  }
  if (!words.empty()) {
    if (out == nullptr) return null_pointer("out");
    std::copy(words.begin(), words.end(), out);
  }
  return SLS_OK;
}

Subspace subspace_from(unsigned n, const uint64_t* basis, size_t len) {
  Subspace s(n);
  for (size_t i = 0; i < len; ++i) s.insert_bits(basis[i]);
  return s;
}

RunConfig to_config(const sls_run_config* c) {
  RunConfig cfg;
  if (c == nullptr) return cfg;
  cfg.rounds_cap = c->rounds_cap;
  cfg.stabilize_window = c->stabilize_window;
  cfg.rank_window = c->rank_window;
  cfg.verify_p = c->verify_p;
  cfg.anchor_count = c->anchor_count;
  cfg.anchor_growth = c->anchor_growth;
  cfg.oracle_check = c->oracle_check != 0;
  cfg.seed = c->seed;
  return cfg;
}

}  // namespace

extern "C" {

const char* sls_version(void) { return "1.0.0"; }

const char* sls_status_string(sls_status status) {
  switch (status) {
    case SLS_OK:
      return "ok";
    case SLS_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SLS_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case SLS_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case SLS_ERR_PARSE:
      return "parse error";
    case SLS_ERR_RETRY_EXHAUSTED:
      return "retry cap exhausted";
    case SLS_ERR_INTERNAL:
      return "internal error";
    case SLS_ERR_IO:
      return "i/o error";
    case SLS_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case SLS_ERR_NULL_POINTER:
      return "null pointer";
  }
  return "unknown status";
}

const char* sls_last_error(void) { return g_last_error.c_str(); }

void sls_string_free(char* s) { std::free(s); }

unsigned sls_dimension_cap(void) { return dimension_cap(); }
unsigned sls_set_dimension_cap(unsigned cap) { return set_dimension_cap(cap); }

sls_status sls_random_words(unsigned n, size_t count, uint64_t seed, uint64_t* out) {
  if (count > 0) SLS_REQUIRE(out);
  return guarded([&] {
    if (n == 0 || n > dimension_cap()) fail(ErrorCode::kCapExceeded, "dimension outside the cap");
    Rng rng(seed);
    for (size_t i = 0; i < count; ++i) out[i] = rng.bits(n);
    return SLS_OK;
  });
}

sls_status sls_random_subspace(unsigned n, unsigned dim, uint64_t seed, uint64_t* out) {
  if (dim > 0) SLS_REQUIRE(out);
  return guarded([&] {
    if (dim > n) fail(ErrorCode::kInvalidArgument, "subspace dimension exceeds n");
    Rng rng(seed);
    Subspace s(n);
    while (s.dim() < dim) s.insert_bits(rng.bits(n));
    std::copy(s.basis_words().begin(), s.basis_words().end(), out);
    return SLS_OK;
  });
}

uint64_t sls_split_seed(uint64_t master, uint64_t index) { return split_seed(master, index); }

sls_status sls_tt_parse(const char* text, sls_truth_table** out) {
  SLS_REQUIRE(text);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_truth_table{TruthTable::parse(text)};
    return SLS_OK;
  });
}

sls_status sls_tt_from_bits(const char* bits, sls_truth_table** out) {
  SLS_REQUIRE(bits);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_truth_table{TruthTable::from_bits(bits)};
    return SLS_OK;
  });
}

sls_status sls_tt_format(const sls_truth_table* f, char** out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(f->value.to_file_string());
    return SLS_OK;
  });
}

void sls_tt_free(sls_truth_table* f) { delete f; }

unsigned sls_tt_n(const sls_truth_table* f) { return f == nullptr ? 0 : f->value.n(); }

sls_status sls_tt_eval(const sls_truth_table* f, uint64_t x, int* out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = eval(f->value, BitVector(f->value.n(), x)) ? 1 : 0;
    return SLS_OK;
  });
}

sls_status sls_tt_plant(unsigned n, const uint64_t* basis, size_t basis_len, uint64_t seed,
                        sls_truth_table** out) {
  SLS_REQUIRE(out);
  if (basis_len > 0) SLS_REQUIRE(basis);
  return guarded([&] {
    *out = new sls_truth_table{plant_structure(PlantSpec{n, subspace_from(n, basis, basis_len), seed})};
    return SLS_OK;
  });
}

sls_status sls_tt_plant_r_type(const sls_truth_table* f, uint64_t r, uint64_t seed, sls_truth_table** out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_truth_table{plant_r_type(f->value, r, seed)};
    return SLS_OK;
  });
}

sls_status sls_tt_derivative(const sls_truth_table* f, uint64_t s, sls_truth_table** out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_truth_table{derivative(f->value, BitVector(f->value.n(), s))};
    return SLS_OK;
  });
}

sls_status sls_tt_anf(const sls_truth_table* f, sls_anf** out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_anf{anf_of(f->value)};
    return SLS_OK;
  });
}

sls_status sls_mt_parse(const char* text, sls_multi_table** out) {
  SLS_REQUIRE(text);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_multi_table{MultiTruthTable::parse(text)};
    return SLS_OK;
  });
}

sls_status sls_mt_format(const sls_multi_table* F, char** out) {
  SLS_REQUIRE(F);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(F->value.to_file_string());
    return SLS_OK;
  });
}

void sls_mt_free(sls_multi_table* F) { delete F; }

unsigned sls_mt_n(const sls_multi_table* F) { return F == nullptr ? 0 : F->value.n(); }

sls_status sls_mt_plant_periods(unsigned n, const uint64_t* basis, size_t basis_len, uint64_t seed,
                                sls_multi_table** out) {
  SLS_REQUIRE(out);
  if (basis_len > 0) SLS_REQUIRE(basis);
  return guarded([&] {
    *out = new sls_multi_table{plant_periods(n, subspace_from(n, basis, basis_len), seed)};
    return SLS_OK;
  });
}

sls_status sls_oracle_spectrum(const sls_truth_table* f, int64_t* values, size_t len) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(values);
  return guarded([&] {
    if (len < f->value.size()) {
      g_last_error = "spectrum buffer must hold 2^n entries";
      return SLS_ERR_BUFFER_TOO_SMALL;
    }
    const auto spectrum = autocorrelation(f->value);
    std::copy(spectrum.values.begin(), spectrum.values.end(), values);
    return SLS_OK;
  });
}

sls_status sls_oracle_structures(const sls_truth_table* f, uint64_t* u0_basis, size_t u0_cap, size_t* u0_len,
                                 uint64_t* u1, size_t u1_cap, size_t* u1_len) {
  SLS_REQUIRE(f);
  return guarded([&] {
    const auto sets = brute_structures(f->value);
    std::vector<uint64_t> ones;
    ones.reserve(sets.u1.size());
    for (const auto& v : sets.u1) ones.push_back(v.bits());
    const sls_status a = copy_words(sets.u0.basis_words(), u0_basis, u0_cap, u0_len);
    const sls_status b = copy_words(ones, u1, u1_cap, u1_len);
    return a != SLS_OK ? a : b;
  });
}

sls_status sls_oracle_r_type(const sls_truth_table* f, uint64_t r, uint64_t* alphas, uint8_t* cs,
                             uint64_t* violations, size_t cap, size_t* len) {
  SLS_REQUIRE(f);
  return guarded([&] {
    const auto entries = r_type_scan(f->value, r);
    if (len != nullptr) *len = entries.size();
    if (entries.size() > cap) {
      g_last_error = "r-type buffer too small";
      return SLS_ERR_BUFFER_TOO_SMALL;
    }
    for (size_t i = 0; i < entries.size(); ++i) {
      if (alphas != nullptr) alphas[i] = entries[i].alpha.bits();
      if (cs != nullptr) cs[i] = entries[i].c ? 1 : 0;
      if (violations != nullptr) violations[i] = entries[i].violations;
    }
    return SLS_OK;
  });
}

sls_status sls_oracle_verify(const sls_truth_table* f, const uint64_t* candidates, size_t count, uint64_t p,
                             uint64_t seed, int* accepted, uint64_t* witness_x, uint64_t* witness_b) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(accepted);
  if (count > 0) SLS_REQUIRE(candidates);
  return guarded([&] {
    std::vector<BitVector> cands;
    for (size_t i = 0; i < count; ++i) cands.emplace_back(f->value.n(), candidates[i]);
    const auto r = sampled_verify(f->value, cands, p, seed);
    *accepted = r.accepted ? 1 : 0;
    if (!r.accepted) {
      if (witness_x != nullptr) *witness_x = r.witness_x->bits();
      if (witness_b != nullptr) *witness_b = r.witness_b->bits();
    }
    return SLS_OK;
  });
}

sls_status sls_sample_round(const sls_truth_table* f, const uint64_t* anchors, size_t anchor_count,
                            uint64_t seed, uint64_t* y, uint8_t* observed, uint64_t* set_size) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(y);
  if (anchor_count > 0) SLS_REQUIRE(anchors);
  return guarded([&] {
    std::vector<BitVector> as;
    for (size_t i = 0; i < anchor_count; ++i) as.emplace_back(f->value.n(), anchors[i]);
    const CollapseOutcome c = collapse(f->value, as, seed);
    *y = sample_y(c, splitmix64(seed)).bits();
    if (observed != nullptr) std::copy(c.observed.begin(), c.observed.end(), observed);
    if (set_size != nullptr) *set_size = c.size;
    return SLS_OK;
  });
}

sls_status sls_simon_round(const sls_multi_table* F, uint64_t seed, uint64_t* y) {
  SLS_REQUIRE(F);
  SLS_REQUIRE(y);
  return guarded([&] {
    *y = simon_round(F->value, seed).bits();
    return SLS_OK;
  });
}

sls_status sls_quantum_solve(unsigned n, const uint64_t* ys, size_t count, uint64_t seed, uint64_t samples,
                             int direct_support, uint64_t* basis, size_t cap, size_t* len) {
  if (count > 0) SLS_REQUIRE(ys);
  return guarded([&] {
    BitMatrix m(n, std::vector<uint64_t>(ys, ys + count));
    const Subspace s = quantum_solve(m, seed, samples,
                                     direct_support ? SolveSampler::kDirectSupport : SolveSampler::kNullSpace);
    return copy_words(s.basis_words(), basis, cap, len);
  });
}

void sls_run_config_init(sls_run_config* cfg) {
  if (cfg == nullptr) return;
  const RunConfig d;
  *cfg = sls_run_config{d.rounds_cap,   d.stabilize_window, d.rank_window, d.verify_p,
                        d.anchor_count, d.anchor_growth,    0,             d.seed};
}

sls_status sls_find_structure(const sls_truth_table* f, const sls_run_config* cfg, sls_mode mode,
                              sls_report** out) {
  SLS_REQUIRE(f);
  SLS_REQUIRE(out);
  return guarded([&] {
    const RunConfig config = to_config(cfg);
    StructureReport r = mode == SLS_MODE_ITERATIVE ? find_structure_iterative(f->value, config)
                                                   : find_structure_simple(f->value, config);
    *out = new sls_report{f->value.n(), r.candidate,   r.ys_collected, r.verified,    r.stabilized,
                          r.oracle_checked, r.oracle_match, r.pseudo_flag, r.rounds_used, r.passes_used};
    return SLS_OK;
  });
}

sls_status sls_find_periods(const sls_multi_table* F, const sls_run_config* cfg, sls_report** out) {
  SLS_REQUIRE(F);
  SLS_REQUIRE(out);
  return guarded([&] {
    PeriodReport r = find_periods(F->value, to_config(cfg));
    *out = new sls_report{F->value.n(), r.periods, r.ys_collected, false, r.stabilized,
                          false,        false,     false,          r.rounds_used, 1};
    return SLS_OK;
  });
}

void sls_report_free(sls_report* r) { delete r; }

unsigned sls_report_n(const sls_report* r) { return r == nullptr ? 0 : r->n; }

sls_status sls_report_candidate(const sls_report* r, uint64_t* basis, size_t cap, size_t* len) {
  SLS_REQUIRE(r);
  return copy_words(r->candidate.basis_words(), basis, cap, len);
}

sls_status sls_report_ys(const sls_report* r, uint64_t* ys, size_t cap, size_t* len) {
  SLS_REQUIRE(r);
  return copy_words(r->ys.words(), ys, cap, len);
}

int sls_report_flag(const sls_report* r, const char* name) {
  if (r == nullptr || name == nullptr) return -1;
  const std::string_view key(name);
  if (key == "verified") return r->verified;
  if (key == "stabilized") return r->stabilized;
  if (key == "oracle_checked") return r->oracle_checked;
  if (key == "oracle_match") return r->oracle_match;
  if (key == "pseudo_flag") return r->pseudo_flag;
  return -1;
}

unsigned sls_report_counter(const sls_report* r, const char* name) {
  if (r == nullptr || name == nullptr) return 0;
  const std::string_view key(name);
  if (key == "rounds") return r->rounds;
  if (key == "passes") return r->passes;
  return 0;
}

sls_status sls_prob_p_full(unsigned n, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = static_cast<double>(p_full(n));
    return SLS_OK;
  });
}

sls_status sls_prob_q(unsigned n, unsigned i, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = static_cast<double>(q(n, i));
    return SLS_OK;
  });
}

sls_status sls_prob_q_direct(unsigned n, unsigned i, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = static_cast<double>(q_direct(n, i));
    return SLS_OK;
  });
}

sls_status sls_prob_q_exact_agree(unsigned n, unsigned i, int* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = q_exact(n, i) == q_direct_exact(n, i) ? 1 : 0;
    return SLS_OK;
  });
}

sls_status sls_prob_table_csv(unsigned n, unsigned k_max, char** out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(prob_table(n, k_max).to_csv());
    return SLS_OK;
  });
}

sls_status sls_prob_s(unsigned n, unsigned k, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    const auto t = prob_table(n, k);
    *out = static_cast<double>(t.rows.back().s);
    return SLS_OK;
  });
}

sls_status sls_prob_pseudo_confirm(unsigned n, uint64_t r, uint64_t l, uint64_t p, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = static_cast<double>(pseudo_confirm_prob(n, r, l, p));
    return SLS_OK;
  });
}

sls_status sls_prob_required_trials(unsigned n, uint64_t r, uint64_t l, double beta, double* exact,
                                    double* lower, double* upper) {
  return guarded([&] {
    const TrialBound b = required_trials(n, r, l, beta);
    if (exact != nullptr) *exact = static_cast<double>(b.exact);
    if (lower != nullptr) *lower = static_cast<double>(b.lower);
    if (upper != nullptr) *upper = static_cast<double>(b.upper);
    return SLS_OK;
  });
}

sls_status sls_prob_rank_success(unsigned n, unsigned k, uint64_t trials, uint64_t seed, double* out) {
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = rank_success_rate(n, k, trials, seed);
    return SLS_OK;
  });
}

sls_status sls_anf_parse(const char* text, unsigned n, sls_anf** out) {
  SLS_REQUIRE(text);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_anf{Anf::parse(text, n)};
    return SLS_OK;
  });
}

sls_status sls_anf_format(const sls_anf* a, char** out) {
  SLS_REQUIRE(a);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(a->value.to_string());
    return SLS_OK;
  });
}

void sls_anf_free(sls_anf* a) { delete a; }

unsigned sls_anf_n(const sls_anf* a) { return a == nullptr ? 0 : a->value.n(); }

sls_status sls_anf_truth_table(const sls_anf* a, sls_truth_table** out) {
  SLS_REQUIRE(a);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_truth_table{tt_of(a->value)};
    return SLS_OK;
  });
}

sls_status sls_anf_derivative(const sls_anf* a, uint64_t s, sls_anf** out) {
  SLS_REQUIRE(a);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_anf{g_anf(a->value, BitVector(a->value.n(), s))};
    return SLS_OK;
  });
}

sls_status sls_anf_classify(const sls_anf* a, int* property, unsigned* m, int* kind, uint64_t* forced) {
  SLS_REQUIRE(a);
  return guarded([&] {
    const ClassifierVerdict v = classify_top(a->value);
    if (property != nullptr) *property = v.property;
    if (m != nullptr) *m = v.m;
    if (kind != nullptr) *kind = static_cast<int>(v.kind);
    if (forced != nullptr) *forced = v.forced;
    return SLS_OK;
  });
}

sls_status sls_anf_system(const sls_anf* a, char** out) {
  SLS_REQUIRE(a);
  SLS_REQUIRE(out);
  return guarded([&] {
    std::string text;
    for (const auto& c : theorem2_system(a->value)) {
      const Anf x(a->value.n(), std::span<const uint64_t>(&c.x_monomial, 1));
      text += "[" + x.to_string() + "] " + c.polynomial.to_string('s') + " = 0\n";
    }
    *out = dup_string(text);
    return SLS_OK;
  });
}

sls_status sls_cnf_parse(const char* text, sls_cnf** out) {
  SLS_REQUIRE(text);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = new sls_cnf{Cnf3::parse(text)};
    return SLS_OK;
  });
}

void sls_cnf_free(sls_cnf* c) { delete c; }

unsigned sls_cnf_n(const sls_cnf* c) { return c == nullptr ? 0 : c->value.n; }

sls_status sls_cnf_reduce(const sls_cnf* c, char** out) {
  SLS_REQUIRE(c);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(reduce(c->value).to_string());
    return SLS_OK;
  });
}

sls_status sls_cnf_solve(const sls_cnf* c, int* found, uint64_t* s) {
  SLS_REQUIRE(c);
  SLS_REQUIRE(found);
  return guarded([&] {
    const auto sol = solve_brute(reduce(c->value));
    *found = sol.has_value() ? 1 : 0;
    if (sol && s != nullptr) *s = sol->bits();
    return SLS_OK;
  });
}

sls_status sls_cnf_equisat(const sls_cnf* c, int* out) {
  SLS_REQUIRE(c);
  SLS_REQUIRE(out);
  return guarded([&] {
    *out = equisat_check(c->value) ? 1 : 0;
    return SLS_OK;
  });
}

sls_status sls_theorem4_verify(const char* case_name, unsigned k, unsigned n, const unsigned* indices, int* out) {
  SLS_REQUIRE(case_name);
  SLS_REQUIRE(out);
  if (k > 0) SLS_REQUIRE(indices);
  return guarded([&] {
    Theorem4Params params{n, std::vector<unsigned>(indices, indices + k), {}};
    *out = theorem4_verify(parse_theorem4_case(case_name), k, params) ? 1 : 0;
    return SLS_OK;
  });
}

}  // extern "C"
