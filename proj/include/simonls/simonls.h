/* C interface to the simonls library.
 *
 * Objects are opaque handles created by the parse and plant functions and
 * released with the matching *_free. Every function returns an sls_status;
 * on failure sls_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with sls_string_free.
 *
 * Vectors of F_2^n travel as uint64_t words with coordinate x_1 in bit 0.
 */
#ifndef SIMONLS_SIMONLS_H_
#define SIMONLS_SIMONLS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SLS_API __declspec(dllexport)
#else
#define SLS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sls_status {
  SLS_OK = 0,
  SLS_ERR_INVALID_ARGUMENT = 1,
  SLS_ERR_DIMENSION_MISMATCH = 2,
  SLS_ERR_CAP_EXCEEDED = 3,
  SLS_ERR_PARSE = 4,
  SLS_ERR_RETRY_EXHAUSTED = 5,
  SLS_ERR_INTERNAL = 6,
  SLS_ERR_IO = 7,
  SLS_ERR_BUFFER_TOO_SMALL = 8,
  SLS_ERR_NULL_POINTER = 9,
} sls_status;

typedef struct sls_truth_table sls_truth_table;
typedef struct sls_multi_table sls_multi_table;
typedef struct sls_report sls_report;
typedef struct sls_anf sls_anf;
typedef struct sls_cnf sls_cnf;

SLS_API const char* sls_version(void);
SLS_API const char* sls_status_string(sls_status status);
SLS_API const char* sls_last_error(void);
SLS_API void sls_string_free(char* s);

SLS_API unsigned sls_dimension_cap(void);
/* Clamped to [1, 64]; returns the previous cap. */
SLS_API unsigned sls_set_dimension_cap(unsigned cap);

/* ---- seeded helpers ---- */

/* count uniform words of F_2^n. */
SLS_API sls_status sls_random_words(unsigned n, size_t count, uint64_t seed, uint64_t* out);
/* Canonical basis of a uniformly random dim-dimensional subspace; out holds dim words. */
SLS_API sls_status sls_random_subspace(unsigned n, unsigned dim, uint64_t seed, uint64_t* out);
/* Per-task seed derived from a master seed: master ^ hash(index). */
SLS_API uint64_t sls_split_seed(uint64_t master, uint64_t index);

/* ---- truth tables ---- */

SLS_API sls_status sls_tt_parse(const char* text, sls_truth_table** out);
SLS_API sls_status sls_tt_from_bits(const char* bits, sls_truth_table** out);
SLS_API sls_status sls_tt_format(const sls_truth_table* f, char** out);
SLS_API void sls_tt_free(sls_truth_table* f);
SLS_API unsigned sls_tt_n(const sls_truth_table* f);
SLS_API sls_status sls_tt_eval(const sls_truth_table* f, uint64_t x, int* out);
SLS_API sls_status sls_tt_plant(unsigned n, const uint64_t* basis, size_t basis_len, uint64_t seed,
                                sls_truth_table** out);
SLS_API sls_status sls_tt_plant_r_type(const sls_truth_table* f, uint64_t r, uint64_t seed,
                                       sls_truth_table** out);
SLS_API sls_status sls_tt_derivative(const sls_truth_table* f, uint64_t s, sls_truth_table** out);
SLS_API sls_status sls_tt_anf(const sls_truth_table* f, sls_anf** out);

SLS_API sls_status sls_mt_parse(const char* text, sls_multi_table** out);
SLS_API sls_status sls_mt_format(const sls_multi_table* F, char** out);
SLS_API void sls_mt_free(sls_multi_table* F);
SLS_API unsigned sls_mt_n(const sls_multi_table* F);
SLS_API sls_status sls_mt_plant_periods(unsigned n, const uint64_t* basis, size_t basis_len, uint64_t seed,
                                        sls_multi_table** out);

/* ---- classical oracle ---- */

/* values must hold 2^n entries. */
SLS_API sls_status sls_oracle_spectrum(const sls_truth_table* f, int64_t* values, size_t len);
/* Basis of U_f^(0) (canonical echelon form) and the members of U_f^(1).
 * Capacities are in words; required sizes are always written to *_len. */
SLS_API sls_status sls_oracle_structures(const sls_truth_table* f, uint64_t* u0_basis, size_t u0_cap,
                                         size_t* u0_len, uint64_t* u1, size_t u1_cap, size_t* u1_len);
/* Every alpha whose violation count is at most r, with the constant c it agrees with. */
SLS_API sls_status sls_oracle_r_type(const sls_truth_table* f, uint64_t r, uint64_t* alphas, uint8_t* cs,
                                     uint64_t* violations, size_t cap, size_t* len);
SLS_API sls_status sls_oracle_verify(const sls_truth_table* f, const uint64_t* candidates, size_t count,
                                     uint64_t p, uint64_t seed, int* accepted, uint64_t* witness_x,
                                     uint64_t* witness_b);

/* ---- simulated measurements ---- */

/* One register-II collapse over f with anchors a_1..a_l followed by one
 * register-I measurement. observed receives F_0..F_l (l+1 bytes). */
SLS_API sls_status sls_sample_round(const sls_truth_table* f, const uint64_t* anchors, size_t anchor_count,
                                    uint64_t seed, uint64_t* y, uint8_t* observed, uint64_t* set_size);
SLS_API sls_status sls_simon_round(const sls_multi_table* F, uint64_t seed, uint64_t* y);
SLS_API sls_status sls_quantum_solve(unsigned n, const uint64_t* ys, size_t count, uint64_t seed,
                                     uint64_t samples, int direct_support, uint64_t* basis, size_t cap,
                                     size_t* len);

/* ---- recovery algorithms ---- */

typedef enum sls_mode { SLS_MODE_SIMPLE = 0, SLS_MODE_ITERATIVE = 1 } sls_mode;

/* Zero fields take n-dependent defaults. */
typedef struct sls_run_config {
  unsigned rounds_cap;
  unsigned stabilize_window;
  unsigned rank_window;
  uint64_t verify_p;
  unsigned anchor_count;
  unsigned anchor_growth;
  int oracle_check;
  uint64_t seed;
} sls_run_config;

SLS_API void sls_run_config_init(sls_run_config* cfg);
SLS_API sls_status sls_find_structure(const sls_truth_table* f, const sls_run_config* cfg, sls_mode mode,
                                      sls_report** out);
SLS_API sls_status sls_find_periods(const sls_multi_table* F, const sls_run_config* cfg, sls_report** out);
SLS_API void sls_report_free(sls_report* r);
SLS_API unsigned sls_report_n(const sls_report* r);
SLS_API sls_status sls_report_candidate(const sls_report* r, uint64_t* basis, size_t cap, size_t* len);
SLS_API sls_status sls_report_ys(const sls_report* r, uint64_t* ys, size_t cap, size_t* len);
/* Flags: verified, stabilized, oracle_checked, oracle_match, pseudo_flag. Counters: rounds, passes. */
SLS_API int sls_report_flag(const sls_report* r, const char* name);
SLS_API unsigned sls_report_counter(const sls_report* r, const char* name);

/* ---- probability model ---- */

SLS_API sls_status sls_prob_p_full(unsigned n, double* out);
SLS_API sls_status sls_prob_q(unsigned n, unsigned i, double* out);
SLS_API sls_status sls_prob_q_direct(unsigned n, unsigned i, double* out);
/* 1 if the recurrence and the composition sum agree exactly. */
SLS_API sls_status sls_prob_q_exact_agree(unsigned n, unsigned i, int* out);
SLS_API sls_status sls_prob_table_csv(unsigned n, unsigned k_max, char** out);
SLS_API sls_status sls_prob_s(unsigned n, unsigned k, double* out);
SLS_API sls_status sls_prob_pseudo_confirm(unsigned n, uint64_t r, uint64_t l, uint64_t p, double* out);
SLS_API sls_status sls_prob_required_trials(unsigned n, uint64_t r, uint64_t l, double beta, double* exact,
                                            double* lower, double* upper);
SLS_API sls_status sls_prob_rank_success(unsigned n, unsigned k, uint64_t trials, uint64_t seed, double* out);

/* ---- algebraic normal form ---- */

SLS_API sls_status sls_anf_parse(const char* text, unsigned n, sls_anf** out);
SLS_API sls_status sls_anf_format(const sls_anf* a, char** out);
SLS_API void sls_anf_free(sls_anf* a);
SLS_API unsigned sls_anf_n(const sls_anf* a);
SLS_API sls_status sls_anf_truth_table(const sls_anf* a, sls_truth_table** out);
SLS_API sls_status sls_anf_derivative(const sls_anf* a, uint64_t s, sls_anf** out);
/* kind: 0 undetermined, 1 zero, 2 vector, 3 all-ones. */
SLS_API sls_status sls_anf_classify(const sls_anf* a, int* property, unsigned* m, int* kind, uint64_t* forced);
/* One line per condition: "[x-monomial] <polynomial in s> = 0". */
SLS_API sls_status sls_anf_system(const sls_anf* a, char** out);

/* ---- 3SAT ---- */

SLS_API sls_status sls_cnf_parse(const char* text, sls_cnf** out);
SLS_API void sls_cnf_free(sls_cnf* c);
SLS_API unsigned sls_cnf_n(const sls_cnf* c);
SLS_API sls_status sls_cnf_reduce(const sls_cnf* c, char** out);
SLS_API sls_status sls_cnf_solve(const sls_cnf* c, int* found, uint64_t* s);
SLS_API sls_status sls_cnf_equisat(const sls_cnf* c, int* out);
/* case_name: "1", "2a", "2b", "2c"; indices holds k entries (1-based). */
SLS_API sls_status sls_theorem4_verify(const char* case_name, unsigned k, unsigned n, const unsigned* indices,
                                       int* out);

#ifdef __cplusplus
}
#endif

#endif /* SIMONLS_SIMONLS_H_ */
