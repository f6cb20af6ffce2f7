/*
 * qauth - Pauli-frame simulator and analytic calculator for quantum
 * authentication codes (trap, threshold and Clifford schemes) over i.i.d.
 * Pauli noise, built on concatenated [[5,1,3]] and Steane codes.
 *
 * C interface. All functions return a qauth_status; results are written
 * through out parameters. Handles are opaque and must be released with the
 * matching destroy function. Every function is thread-safe as long as each
 * handle is used by one thread at a time; estimator calls may spawn worker
 * threads internally and are deterministic in (seed) regardless of the
 * thread count.
 */
#ifndef QAUTH_H
#define QAUTH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qauth_status {
  QAUTH_OK = 0,
  QAUTH_ERR_NULL_POINTER = 1,    /* a required pointer argument was NULL */
  QAUTH_ERR_INVALID_ARGUMENT = 2,/* parameter outside its documented range */
  QAUTH_ERR_DIMENSION = 3,       /* operand sizes disagree */
  QAUTH_ERR_DOMAIN = 4,          /* a bound's precondition is violated */
  QAUTH_ERR_UNKNOWN_NAME = 5,    /* unrecognized code or scheme name */
  QAUTH_ERR_TOO_LARGE = 6,       /* instance too large for exact computation */
  QAUTH_ERR_INTERNAL = 7
} qauth_status;

/* Static name of a status code, e.g. "QAUTH_ERR_DOMAIN". */
const char* qauth_status_name(qauth_status status);

/* Human-readable detail of the most recent failure on this thread. Valid
 * until the next failing qauth call on the same thread. */
const char* qauth_last_error(void);

const char* qauth_version(void);

/* ---- codes ------------------------------------------------------------- */

/* base: "five" (or "five_qubit") and "steane". levels may be 0 (identity
 * code). Writes the concatenated parameters [[n_total, 1, d_total]] plus the
 * base code's qubit count and correctable error count. Output pointers may
 * be NULL when a value is not wanted. */
qauth_status qauth_code_params(const char* base, uint32_t levels, uint64_t* n_total,
                               uint64_t* d_total, uint64_t* base_n, uint64_t* base_t);

/* p_thr = 1 / binom(n, t+1) of the base code. */
qauth_status qauth_threshold_value(const char* base, double* out);

/* Concatenated failure bound C^-1 (C p)^((t+1)^levels), clamped to [0,1]. */
qauth_status qauth_failure_bound(const char* base, uint32_t levels, double p, double* out);

/* ---- schemes ----------------------------------------------------------- */

typedef struct qauth_scheme qauth_scheme;

/* outer_base may be NULL for a bare scheme; outer_levels is ignored then. */
qauth_status qauth_scheme_create_trap(const char* inner_base, uint32_t inner_levels,
                                      const char* outer_base, uint32_t outer_levels,
                                      qauth_scheme** out);
qauth_status qauth_scheme_create_threshold(const char* inner_base, uint32_t inner_levels,
                                           double alpha, const char* outer_base,
                                           uint32_t outer_levels, qauth_scheme** out);
qauth_status qauth_scheme_create_clifford(uint32_t num_traps, uint32_t data_size,
                                          const char* outer_base, uint32_t outer_levels,
                                          qauth_scheme** out);
void qauth_scheme_destroy(qauth_scheme* scheme);

qauth_status qauth_scheme_total_qubits(const qauth_scheme* scheme, uint64_t* out);
/* Trigger count at which a threshold scheme rejects ("fewer than alpha*n"
 * rule). Errors for non-threshold schemes. */
qauth_status qauth_scheme_reject_count(const qauth_scheme* scheme, uint64_t* out);

/* ---- noise ------------------------------------------------------------- */

typedef struct qauth_channel {
  double p_x;
  double p_y;
  double p_z;
} qauth_channel;

qauth_status qauth_channel_make(double p_x, double p_y, double p_z, qauth_channel* out);
qauth_status qauth_channel_depolarizing(double p, qauth_channel* out);
/* Probability that a |0> trap (computational) resp. |+> trap (hadamard)
 * flips under one use of the channel. */
qauth_status qauth_trap_trigger_probabilities(const qauth_channel* channel,
                                              double* computational, double* hadamard);

/* ---- Monte Carlo estimation -------------------------------------------- */

typedef struct qauth_estimate {
  double point;      /* failures / trials */
  double ci_low;     /* two-sided 99% Wilson interval; exact one-sided */
  double ci_high;    /* Clopper-Pearson bound when failures is 0 or trials */
  uint64_t trials;
  uint64_t failures;
  uint64_t rejects;      /* trials ending in rejection */
  uint64_t harms;        /* accepted trials with non-identity residual */
  uint64_t coset_harms;  /* accepted trials whose data block is a strict
                            undetected logical (no correction credited) */
  uint64_t seed;
} qauth_estimate;

/* threads = 0 selects the hardware thread count. Results are bit-identical
 * for any thread count. */
qauth_status qauth_estimate_correctness(const qauth_scheme* scheme, const qauth_channel* channel,
                                        uint64_t trials, uint64_t seed, uint32_t threads,
                                        qauth_estimate* out);
qauth_status qauth_estimate_security_weight(const qauth_scheme* scheme, uint64_t weight,
                                            uint64_t key_trials, uint64_t seed, uint32_t threads,
                                            qauth_estimate* out);
/* pattern: string over I, X, Y, Z covering every qubit of the scheme. */
qauth_status qauth_estimate_security_pattern(const qauth_scheme* scheme, const char* pattern,
                                             uint64_t key_trials, uint64_t seed, uint32_t threads,
                                             qauth_estimate* out);
/* Logical failure frequency of the bare concatenated code under
 * depolarizing noise of strength p. */
qauth_status qauth_estimate_code_failure(const char* base, uint32_t levels, double p,
                                         uint64_t trials, uint64_t seed, uint32_t threads,
                                         qauth_estimate* out);

/* Security sweep over attack weights w_min, w_min + w_step, ..., <= w_max.
 * Caller provides arrays of capacity `capacity`; *count_out receives the
 * number of grid points written. best_weight/best_point (optional) receive
 * the maximizing weight and its estimate. */
qauth_status qauth_security_sweep(const qauth_scheme* scheme, uint64_t w_min, uint64_t w_max,
                                  uint64_t w_step, uint64_t key_trials, uint64_t seed,
                                  uint32_t threads, uint64_t* weights_out,
                                  qauth_estimate* estimates_out, uint64_t capacity,
                                  uint64_t* count_out, uint64_t* best_weight,
                                  double* best_point);

/* Exact accepted-and-harmed probability over the uniform permutation key for
 * an attack with num_x X letters, num_y Y letters and num_z Z letters.
 * Trap/threshold schemes without outer code, inner code of at most 7 qubits.
 * decoder_out: residual-after-correction convention; coset_out: strict
 * undetected-logical convention. Either output may be NULL. */
qauth_status qauth_exact_purity_oracle(const qauth_scheme* scheme, uint64_t num_x, uint64_t num_y,
                                       uint64_t num_z, double* decoder_out, double* coset_out);

/* ---- analytic bounds ---------------------------------------------------- */

qauth_status qauth_trap_purity_bound(uint32_t distance, double* out);
qauth_status qauth_threshold_correctness_bound(const char* base, uint32_t levels, double p,
                                               double alpha, double* out);
qauth_status qauth_threshold_security_bound(const char* base, uint32_t levels, double alpha,
                                            double* out);
/* w_min = 0 and w_max = 0 select the full default grid [max(t,1), 3n]. */
qauth_status qauth_trap_refined_purity_bound(const char* base, uint32_t levels, uint64_t w_min,
                                             uint64_t w_max, uint64_t w_step, double* out,
                                             uint64_t* argmax_weight);
qauth_status qauth_binomial_mean_lower_bound(uint64_t n, double p, double* out);
qauth_status qauth_chernoff_sampling_bound(uint64_t size_a, uint64_t size_b, uint64_t k,
                                           double gamma, double* out);

/* ---- sufficiency sizing -------------------------------------------------- */

typedef struct qauth_scaling {
  uint64_t inner_count;   /* levels M (trap/threshold); trap count (clifford) */
  uint32_t outer_levels;  /* 0 when the scheme has no outer code */
  uint64_t total_qubits;
  double security_exponent;
  double correctness_exponent;
  double combined_exponent; /* growth exponent at epsilon = delta */
  double alpha;             /* threshold: tuning parameter used */
} qauth_scaling;

/* scheme: "trap", "threshold" or "clifford". inner_base is required for
 * trap/threshold, outer_base for trap/clifford. alpha <= 0 selects the
 * midpoint of the valid interval for the threshold scheme. */
qauth_status qauth_qubit_scaling(const char* scheme, const char* inner_base,
                                 const char* outer_base, double epsilon, double delta, double p,
                                 double alpha, qauth_scaling* out);

/* ---- pauli text utilities ------------------------------------------------ */

/* Validates a string over {I,X,Y,Z}; writes its weight (non-identity count)
 * if weight_out is non-NULL. */
qauth_status qauth_pauli_validate(const char* pattern, uint64_t* weight_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QAUTH_H */
