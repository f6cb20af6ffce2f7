#include "qauth.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "qauth/adversary.hpp"
#include "qauth/bounds.hpp"
#include "qauth/concatenated_code.hpp"
#include "qauth/errors.hpp"
#include "qauth/estimation.hpp"
#include "qauth/noise.hpp"
#include "qauth/schemes.hpp"
#include "qauth/stabilizer_code.hpp"

struct qauth_scheme {
  qauth::SchemeSpec spec;
};

namespace {

thread_local std::string g_last_error;

qauth_status fail(qauth_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
qauth_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qauth::DimensionError& e) {
    return fail(QAUTH_ERR_DIMENSION, e.what());
  } catch (const qauth::UnknownNameError& e) {
    return fail(QAUTH_ERR_UNKNOWN_NAME, e.what());
  } catch (const qauth::SizeError& e) {
    return fail(QAUTH_ERR_TOO_LARGE, e.what());
  } catch (const std::domain_error& e) {
    return fail(QAUTH_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QAUTH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QAUTH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QAUTH_ERR_INTERNAL, e.what());
  }
}

qauth_status require(const void* ptr, const char* name) {
  if (ptr == nullptr) return fail(QAUTH_ERR_NULL_POINTER, std::string(name) + " must not be NULL");
  return QAUTH_OK;
}

std::optional<qauth::ConcatenatedCode> make_outer(const char* outer_base, uint32_t outer_levels) {
  if (outer_base == nullptr) return std::nullopt;
  return qauth::ConcatenatedCode(qauth::StabilizerCode::builtin(outer_base), outer_levels);
}

void copy_estimate(const qauth::EstimateResult& in, qauth_estimate* out) {
  out->point = in.point;
  out->ci_low = in.ci_low;
  out->ci_high = in.ci_high;
  out->trials = in.trials;
  out->failures = in.failures;
  out->rejects = in.rejects;
  out->harms = in.harms;
  out->coset_harms = in.coset_harms;
  out->seed = in.master_seed;
}

}  // namespace

extern "C" {

const char* qauth_status_name(qauth_status status) {
  switch (status) {
    case QAUTH_OK: return "QAUTH_OK";
    case QAUTH_ERR_NULL_POINTER: return "QAUTH_ERR_NULL_POINTER";
    case QAUTH_ERR_INVALID_ARGUMENT: return "QAUTH_ERR_INVALID_ARGUMENT";
    case QAUTH_ERR_DIMENSION: return "QAUTH_ERR_DIMENSION";
    case QAUTH_ERR_DOMAIN: return "QAUTH_ERR_DOMAIN";
    case QAUTH_ERR_UNKNOWN_NAME: return "QAUTH_ERR_UNKNOWN_NAME";
    case QAUTH_ERR_TOO_LARGE: return "QAUTH_ERR_TOO_LARGE";
    case QAUTH_ERR_INTERNAL: return "QAUTH_ERR_INTERNAL";
  }
  return "QAUTH_ERR_UNKNOWN";
}

const char* qauth_last_error(void) { return g_last_error.c_str(); }

const char* qauth_version(void) { return "1.0.0"; }

qauth_status qauth_code_params(const char* base, uint32_t levels, uint64_t* n_total,
                               uint64_t* d_total, uint64_t* base_n, uint64_t* base_t) {
  if (auto s = require(base, "base")) return s;
  return guarded([&] {
    const auto& code = qauth::StabilizerCode::builtin(base);
    const qauth::ConcatenatedCode concat(code, levels);
    if (n_total) *n_total = concat.n_total();
    if (d_total) *d_total = concat.d_total();
    if (base_n) *base_n = code.n();
    if (base_t) *base_t = code.t();
    return QAUTH_OK;
  });
}

qauth_status qauth_threshold_value(const char* base, double* out) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::threshold_value(qauth::StabilizerCode::builtin(base));
    return QAUTH_OK;
  });
}

qauth_status qauth_failure_bound(const char* base, uint32_t levels, double p, double* out) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::failure_bound(qauth::StabilizerCode::builtin(base), levels, p);
    return QAUTH_OK;
  });
}

qauth_status qauth_scheme_create_trap(const char* inner_base, uint32_t inner_levels,
                                      const char* outer_base, uint32_t outer_levels,
                                      qauth_scheme** out) {
  if (auto s = require(inner_base, "inner_base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    qauth::ConcatenatedCode inner(qauth::StabilizerCode::builtin(inner_base), inner_levels);
    auto spec = qauth::SchemeSpec::trap(std::move(inner), make_outer(outer_base, outer_levels));
    *out = new qauth_scheme{std::move(spec)};
    return QAUTH_OK;
  });
}

qauth_status qauth_scheme_create_threshold(const char* inner_base, uint32_t inner_levels,
                                           double alpha, const char* outer_base,
                                           uint32_t outer_levels, qauth_scheme** out) {
  if (auto s = require(inner_base, "inner_base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    qauth::ConcatenatedCode inner(qauth::StabilizerCode::builtin(inner_base), inner_levels);
    auto spec = qauth::SchemeSpec::threshold(std::move(inner), alpha,
                                             make_outer(outer_base, outer_levels));
    *out = new qauth_scheme{std::move(spec)};
    return QAUTH_OK;
  });
}

qauth_status qauth_scheme_create_clifford(uint32_t num_traps, uint32_t data_size,
                                          const char* outer_base, uint32_t outer_levels,
                                          qauth_scheme** out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    auto spec =
        qauth::SchemeSpec::clifford(num_traps, data_size, make_outer(outer_base, outer_levels));
    *out = new qauth_scheme{std::move(spec)};
    return QAUTH_OK;
  });
}

void qauth_scheme_destroy(qauth_scheme* scheme) { delete scheme; }

qauth_status qauth_scheme_total_qubits(const qauth_scheme* scheme, uint64_t* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(out, "out")) return s;
  *out = scheme->spec.total_qubits();
  return QAUTH_OK;
}

qauth_status qauth_scheme_reject_count(const qauth_scheme* scheme, uint64_t* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(out, "out")) return s;
  if (scheme->spec.kind != qauth::SchemeKind::kThreshold) {
    return fail(QAUTH_ERR_INVALID_ARGUMENT, "reject count applies to threshold schemes only");
  }
  *out = scheme->spec.threshold_count;
  return QAUTH_OK;
}

qauth_status qauth_channel_make(double p_x, double p_y, double p_z, qauth_channel* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const qauth::PauliChannel c(p_x, p_y, p_z);
    *out = {c.p_x, c.p_y, c.p_z};
    return QAUTH_OK;
  });
}

qauth_status qauth_channel_depolarizing(double p, qauth_channel* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const qauth::PauliChannel c = qauth::depolarizing(p);
    *out = {c.p_x, c.p_y, c.p_z};
    return QAUTH_OK;
  });
}

qauth_status qauth_trap_trigger_probabilities(const qauth_channel* channel, double* computational,
                                              double* hadamard) {
  if (auto s = require(channel, "channel")) return s;
  return guarded([&] {
    const qauth::PauliChannel c(channel->p_x, channel->p_y, channel->p_z);
    const auto probs = qauth::trap_trigger_probabilities(c);
    if (computational) *computational = probs.computational;
    if (hadamard) *hadamard = probs.hadamard;
    return QAUTH_OK;
  });
}

qauth_status qauth_estimate_correctness(const qauth_scheme* scheme, const qauth_channel* channel,
                                        uint64_t trials, uint64_t seed, uint32_t threads,
                                        qauth_estimate* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(channel, "channel")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const qauth::PauliChannel c(channel->p_x, channel->p_y, channel->p_z);
    copy_estimate(qauth::estimate_correctness(scheme->spec, c, trials, seed, threads), out);
    return QAUTH_OK;
  });
}

qauth_status qauth_estimate_security_weight(const qauth_scheme* scheme, uint64_t weight,
                                            uint64_t key_trials, uint64_t seed, uint32_t threads,
                                            qauth_estimate* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const auto attack = qauth::AttackSpec::fixed_weight(static_cast<size_t>(weight));
    copy_estimate(qauth::estimate_security(scheme->spec, attack, key_trials, seed, threads), out);
    return QAUTH_OK;
  });
}

qauth_status qauth_estimate_security_pattern(const qauth_scheme* scheme, const char* pattern,
                                             uint64_t key_trials, uint64_t seed, uint32_t threads,
                                             qauth_estimate* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(pattern, "pattern")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const auto attack =
        qauth::AttackSpec::fixed_pattern(qauth::PauliOperator::from_string(pattern));
    copy_estimate(qauth::estimate_security(scheme->spec, attack, key_trials, seed, threads), out);
    return QAUTH_OK;
  });
}

qauth_status qauth_estimate_code_failure(const char* base, uint32_t levels, double p,
                                         uint64_t trials, uint64_t seed, uint32_t threads,
                                         qauth_estimate* out) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    copy_estimate(qauth::estimate_code_failure(qauth::StabilizerCode::builtin(base), levels, p,
                                               trials, seed, threads),
                  out);
    return QAUTH_OK;
  });
}

qauth_status qauth_security_sweep(const qauth_scheme* scheme, uint64_t w_min, uint64_t w_max,
                                  uint64_t w_step, uint64_t key_trials, uint64_t seed,
                                  uint32_t threads, uint64_t* weights_out,
                                  qauth_estimate* estimates_out, uint64_t capacity,
                                  uint64_t* count_out, uint64_t* best_weight,
                                  double* best_point) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(weights_out, "weights_out")) return s;
  if (auto s = require(estimates_out, "estimates_out")) return s;
  if (auto s = require(count_out, "count_out")) return s;
  return guarded([&] {
    const auto sweep =
        qauth::worst_case_sweep(scheme->spec, key_trials, w_min, w_max, w_step, seed, threads);
    if (sweep.points.size() > capacity) {
      return fail(QAUTH_ERR_INVALID_ARGUMENT,
                  "sweep needs capacity " + std::to_string(sweep.points.size()) + ", got " +
                      std::to_string(capacity));
    }
    for (size_t i = 0; i < sweep.points.size(); ++i) {
      weights_out[i] = sweep.points[i].weight;
      copy_estimate(sweep.points[i].estimate, &estimates_out[i]);
    }
    *count_out = sweep.points.size();
    if (best_weight) *best_weight = sweep.best_weight;
    if (best_point) *best_point = sweep.delta_hat;
    return QAUTH_OK;
  });
}

qauth_status qauth_exact_purity_oracle(const qauth_scheme* scheme, uint64_t num_x, uint64_t num_y,
                                       uint64_t num_z, double* decoder_out, double* coset_out) {
  if (auto s = require(scheme, "scheme")) return s;
  return guarded([&] {
    const auto oracle = qauth::exact_purity_oracle(scheme->spec, static_cast<size_t>(num_x),
                                                   static_cast<size_t>(num_y),
                                                   static_cast<size_t>(num_z));
    if (decoder_out) *decoder_out = oracle.decoder_harm;
    if (coset_out) *coset_out = oracle.coset_harm;
    return QAUTH_OK;
  });
}

qauth_status qauth_trap_purity_bound(uint32_t distance, double* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::trap_purity_bound(distance);
    return QAUTH_OK;
  });
}

qauth_status qauth_threshold_correctness_bound(const char* base, uint32_t levels, double p,
                                               double alpha, double* out) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::threshold_correctness_bound(qauth::StabilizerCode::builtin(base), levels, p,
                                              alpha);
    return QAUTH_OK;
  });
}

qauth_status qauth_threshold_security_bound(const char* base, uint32_t levels, double alpha,
                                            double* out) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::threshold_security_bound(qauth::StabilizerCode::builtin(base), levels, alpha);
    return QAUTH_OK;
  });
}

qauth_status qauth_trap_refined_purity_bound(const char* base, uint32_t levels, uint64_t w_min,
                                             uint64_t w_max, uint64_t w_step, double* out,
                                             uint64_t* argmax_weight) {
  if (auto s = require(base, "base")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    const auto refined = qauth::trap_refined_purity_bound(qauth::StabilizerCode::builtin(base),
                                                          levels, w_min, w_max, w_step);
    *out = refined.value;
    if (argmax_weight) *argmax_weight = refined.argmax_weight;
    return QAUTH_OK;
  });
}

qauth_status qauth_binomial_mean_lower_bound(uint64_t n, double p, double* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::binomial_mean_lower_bound(n, p);
    return QAUTH_OK;
  });
}

qauth_status qauth_chernoff_sampling_bound(uint64_t size_a, uint64_t size_b, uint64_t k,
                                           double gamma, double* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    *out = qauth::chernoff_sampling_bound(size_a, size_b, k, gamma);
    return QAUTH_OK;
  });
}

qauth_status qauth_qubit_scaling(const char* scheme, const char* inner_base,
                                 const char* outer_base, double epsilon, double delta, double p,
                                 double alpha, qauth_scaling* out) {
  if (auto s = require(scheme, "scheme")) return s;
  if (auto s = require(out, "out")) return s;
  return guarded([&] {
    qauth::SchemeKind kind;
    const std::string name(scheme);
    if (name == "trap") {
      kind = qauth::SchemeKind::kTrap;
    } else if (name == "threshold") {
      kind = qauth::SchemeKind::kThreshold;
    } else if (name == "clifford") {
      kind = qauth::SchemeKind::kClifford;
    } else {
      throw qauth::UnknownNameError("unknown scheme '" + name +
                                    "' (expected trap, threshold or clifford)");
    }
    const qauth::StabilizerCode* inner =
        inner_base ? &qauth::StabilizerCode::builtin(inner_base) : nullptr;
    const qauth::StabilizerCode* outer =
        outer_base ? &qauth::StabilizerCode::builtin(outer_base) : nullptr;
    const auto scaling = qauth::qubit_scaling(
        kind, inner, outer, epsilon, delta, p,
        alpha > 0.0 ? std::optional<double>(alpha) : std::nullopt);
    out->inner_count = scaling.inner_count;
    out->outer_levels = scaling.outer_levels.value_or(0);
    out->total_qubits = scaling.total_qubits;
    out->security_exponent = scaling.security_exponent;
    out->correctness_exponent = scaling.correctness_exponent;
    out->combined_exponent = scaling.combined_exponent;
    out->alpha = scaling.alpha;
    return QAUTH_OK;
  });
}

qauth_status qauth_pauli_validate(const char* pattern, uint64_t* weight_out) {
  if (auto s = require(pattern, "pattern")) return s;
  return guarded([&] {
    const auto p = qauth::PauliOperator::from_string(pattern);
    if (weight_out) *weight_out = p.weights().total;
    return QAUTH_OK;
  });
}

}  // extern "C"
