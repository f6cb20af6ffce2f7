#include "qauth/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qauth/concatenated_code.hpp"
#include "qauth/numeric.hpp"

namespace qauth {

namespace {

constexpr double kPi = 3.14159265358979323846;

double int_pow(double base, unsigned exp) { return std::pow(base, static_cast<double>(exp)); }

// (t+1)^M as a double; exact for every size this artifact meets.
double correction_exponent(const StabilizerCode& base, unsigned levels) {
  return int_pow(static_cast<double>(base.t() + 1), levels);
}

uint64_t checked_pow_u64(uint64_t base, unsigned exp) {
  uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (result > UINT64_MAX / base) {
      throw std::domain_error("qubit count exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1), got " +
                                std::to_string(v));
  }
}

}  // namespace

double trap_purity_bound(unsigned distance) {
  if (distance < 1 || distance % 2 == 0) {
    throw std::invalid_argument("trap purity bound needs an odd distance, got " +
                                std::to_string(distance));
  }
  return int_pow(1.0 / 3.0, (distance + 1) / 2);
}

double threshold_correctness_bound(const StabilizerCode& base, unsigned levels, double p,
                                   double alpha) {
  if (levels < 1) throw std::invalid_argument("threshold scheme needs at least one level");
  const double p_thr = threshold_value(base);
  if (!(p < 0.75 * p_thr)) {
    throw std::domain_error("correctness bound requires p < 3*p_thr/4 (p=" + std::to_string(p) +
                            ", p_thr=" + std::to_string(p_thr) + ")");
  }
  if (!(alpha > 4.0 * p / 3.0)) {
    throw std::domain_error("correctness bound requires alpha > 4p/3 (alpha=" +
                            std::to_string(alpha) + ", 4p/3=" + std::to_string(4.0 * p / 3.0) +
                            ")");
  }
  const double n = int_pow(static_cast<double>(base.n()), levels);
  const double recovery = failure_bound(base, levels, p);
  const double slack = alpha - 4.0 * p / 3.0;
  const double traps = std::exp(-n * slack * slack);
  return std::min(1.0, recovery + traps);
}

double threshold_security_bound(const StabilizerCode& base, unsigned levels, double alpha) {
  if (levels < 1) throw std::invalid_argument("threshold scheme needs at least one level");
  const double p_thr = threshold_value(base);
  if (!(alpha > 0.0 && alpha < p_thr)) {
    throw std::domain_error("security bound requires 0 < alpha < p_thr (alpha=" +
                            std::to_string(alpha) + ", p_thr=" + std::to_string(p_thr) + ")");
  }
  const double n = int_pow(static_cast<double>(base.n()), levels);
  const double exponent = correction_exponent(base, levels);
  // Correction-evasion term in log space: the ratio power underflows fast.
  const double log_ratio_power = exponent * std::log(alpha / p_thr);
  const double correction =
      p_thr * 9.0 * std::exp(log_ratio_power) / (10.0 * std::sqrt(6.0 * kPi * n * alpha * (1.0 - alpha)));
  const double traps = std::exp(-alpha * n / 4.0);
  return std::min(1.0, std::max(correction, traps));
}

RefinedPurityBound trap_refined_purity_bound(const StabilizerCode& base, unsigned levels,
                                             uint64_t w_min, uint64_t w_max, uint64_t w_step) {
  const ConcatenatedCode code(base, levels);
  const uint64_t n = code.n_total();
  const uint64_t t = code.t_total();
  if (w_min == 0) w_min = std::max<uint64_t>(t, 1);
  if (w_max == 0) w_max = 3 * n;
  if (w_step == 0) w_step = 1;
  if (w_min < 1 || w_max > 3 * n || w_min > w_max) {
    throw std::invalid_argument("weight grid must lie within [1, 3n]");
  }
  if ((w_max - w_min) / w_step + 1 > 2000000) {
    throw std::invalid_argument("weight grid too large; use a coarser step");
  }

  const double p_thr = threshold_value(base);
  const double exponent = correction_exponent(base, levels);
  const double three_n = 3.0 * static_cast<double>(n);

  RefinedPurityBound result;
  for (uint64_t w = w_min; w <= w_max; w += w_step) {
    const double dw = static_cast<double>(w);
    const double detection = std::exp(0.5 * dw * std::log(2.0 / 3.0));
    double correction;
    if (w == 3 * n) {
      correction = std::numeric_limits<double>::infinity();
    } else {
      const double fraction = dw / three_n;
      const double log_power = exponent * std::log(fraction / p_thr);
      correction = p_thr * 9.0 * std::exp(log_power) /
                   (10.0 * std::sqrt(2.0 * kPi * dw * (1.0 - fraction)));
    }
    const double combined = std::min(detection, correction);
    if (result.table.empty() || combined > result.value) {
      result.value = combined;
      result.argmax_weight = w;
    }
    result.table.push_back({w, detection, correction, combined});
  }
  return result;
}

double binomial_mean_lower_bound(uint64_t n, double p) {
  if (n < 3) throw std::domain_error("binomial mean bound requires n >= 3");
  const double np = static_cast<double>(n) * p;
  if (!(np >= 1.0 - 1e-9)) throw std::domain_error("binomial mean bound requires n*p >= 1");
  if (std::abs(np - std::round(np)) > 1e-9) {
    throw std::domain_error("binomial mean bound requires n*p to be an integer");
  }
  return 0.9 / std::sqrt(2.0 * kPi * np * (1.0 - p));
}

double chernoff_sampling_bound(uint64_t size_a, uint64_t size_b, uint64_t k, double gamma) {
  if (size_a == 0 || k == 0 || k >= size_a) {
    throw std::domain_error("sampling bound requires 0 < k < |A|");
  }
  if (size_b > size_a) throw std::domain_error("sampling bound requires |B| <= |A|");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::domain_error("sampling bound requires 0 < gamma <= 1");
  }
  const double fraction = static_cast<double>(size_b) / static_cast<double>(size_a);
  return std::exp(-gamma * gamma * fraction * static_cast<double>(k) / 2.0);
}

namespace {

// Security sufficiency for the trap construction:
// (2 t1 + 1)^M >= 2 log(1/delta) / log 3 - 1.
unsigned trap_security_levels(const StabilizerCode& inner, double delta) {
  const double need = 2.0 * std::log2(1.0 / delta) / std::log2(3.0) - 1.0;
  const double growth = static_cast<double>(2 * inner.t() + 1);
  for (unsigned m = 1; m <= 64; ++m) {
    if (int_pow(growth, m) >= need) return m;
  }
  throw std::domain_error("no feasible inner level count below 2^64 qubits");
}

// Correctness sufficiency for register-wise outer encoding: the data display
//   (t2+1)^L * inner_exponent >= (log(1/eps) - log(1/p_thr)) / log(p_thr / p)
// and the trap display
//   (t2+1)^L * log(p_thr/p) >= log(1/eps) - log(1/(2 p_thr)) + log(traps/2).
unsigned outer_correctness_levels(const StabilizerCode& outer, double epsilon, double p,
                                  double inner_exponent, double trap_registers) {
  const double p_thr = threshold_value(outer);
  if (!(p > 0.0 && p < p_thr)) {
    throw std::domain_error("correctness requires 0 < p < p_thr of the outer code (p=" +
                            std::to_string(p) + ", p_thr=" + std::to_string(p_thr) + ")");
  }
  const double log_ratio = std::log2(p_thr / p);
  const double data_need = (std::log2(1.0 / epsilon) - std::log2(1.0 / p_thr)) / log_ratio;
  const double trap_need =
      std::log2(1.0 / epsilon) - std::log2(1.0 / (2.0 * p_thr)) + std::log2(trap_registers / 2.0);
  const double growth = static_cast<double>(outer.t() + 1);
  for (unsigned l = 1; l <= 64; ++l) {
    const double power = int_pow(growth, l);
    if (power * inner_exponent >= data_need && power * log_ratio >= trap_need) return l;
  }
  throw std::domain_error("no feasible outer level count below 2^64 qubits");
}

}  // namespace

QubitScaling qubit_scaling(SchemeKind kind, const StabilizerCode* inner,
                           const StabilizerCode* outer, double epsilon, double delta, double p,
                           std::optional<double> alpha) {
  check_unit_interval(epsilon, "epsilon");
  check_unit_interval(delta, "delta");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("p must lie in (0, 1), got " + std::to_string(p));
  }

  QubitScaling result;
  switch (kind) {
    case SchemeKind::kTrap: {
      if (!inner || !outer) throw std::invalid_argument("trap scaling needs inner and outer codes");
      const unsigned m = trap_security_levels(*inner, delta);
      const double inner_exponent = correction_exponent(*inner, m);
      const double trap_registers =
          2.0 * int_pow(static_cast<double>(inner->n()), m);
      const unsigned l = outer_correctness_levels(*outer, epsilon, p, inner_exponent,
                                                  trap_registers);
      result.inner_count = m;
      result.outer_levels = l;
      result.total_qubits = 3 * checked_pow_u64(inner->n(), m) * checked_pow_u64(outer->n(), l);
      result.security_exponent =
          std::log2(static_cast<double>(inner->n())) / std::log2(static_cast<double>(2 * inner->t() + 1));
      result.correctness_exponent =
          std::log2(static_cast<double>(outer->n())) / std::log2(static_cast<double>(outer->t() + 1));
      result.combined_exponent = result.security_exponent + result.correctness_exponent;
      return result;
    }
    case SchemeKind::kClifford: {
      if (!outer) throw std::invalid_argument("clifford scaling needs an outer code");
      const uint64_t traps =
          std::max<uint64_t>(1, static_cast<uint64_t>(std::ceil(std::log2(1.0 / delta))));
      const unsigned l = outer_correctness_levels(*outer, epsilon, p, /*inner_exponent=*/1.0,
                                                  /*trap_registers=*/2.0 * static_cast<double>(traps));
      result.inner_count = traps;
      result.outer_levels = l;
      result.total_qubits = (1 + traps) * checked_pow_u64(outer->n(), l);
      result.security_exponent = 1.0;
      result.correctness_exponent =
          std::log2(static_cast<double>(outer->n())) / std::log2(static_cast<double>(outer->t() + 1));
      result.combined_exponent = 1.0 + result.correctness_exponent;
      return result;
    }
    case SchemeKind::kThreshold: {
      if (!inner) throw std::invalid_argument("threshold scaling needs an inner code");
      const double p_thr = threshold_value(*inner);
      if (!(p < 0.75 * p_thr)) {
        throw std::domain_error("threshold scaling requires p < 3*p_thr/4 (p=" +
                                std::to_string(p) + ", p_thr=" + std::to_string(p_thr) + ")");
      }
      const double a = alpha ? *alpha : 0.5 * (4.0 * p / 3.0 + p_thr);
      if (!(a > 4.0 * p / 3.0 && a < p_thr)) {
        throw std::domain_error("threshold scaling requires 4p/3 < alpha < p_thr (alpha=" +
                                std::to_string(a) + ")");
      }
      // Data display: (t+1)^M >= (log(2/eps) - log(1/p_thr)) / log(p_thr/p).
      const double data_need =
          (std::log2(2.0 / epsilon) - std::log2(1.0 / p_thr)) / std::log2(p_thr / p);
      // Security display:
      // (t+1)^M log(p_thr/alpha) + (M/2) log(n1)
      //   >= log(1/delta) + log(9 p_thr / (10 sqrt(6 pi alpha (1-alpha)))).
      const double sec_need =
          std::log2(1.0 / delta) +
          std::log2(9.0 * p_thr / (10.0 * std::sqrt(6.0 * kPi * a * (1.0 - a))));
      const double growth = static_cast<double>(inner->t() + 1);
      const double log_n1 = std::log2(static_cast<double>(inner->n()));
      const double log_alpha_ratio = std::log2(p_thr / a);
      unsigned m = 0;
      for (unsigned candidate = 1; candidate <= 64; ++candidate) {
        const double power = int_pow(growth, candidate);
        const bool data_ok = power >= data_need;
        const bool sec_ok =
            power * log_alpha_ratio + 0.5 * static_cast<double>(candidate) * log_n1 >= sec_need;
        if (data_ok && sec_ok) {
          m = candidate;
          break;
        }
      }
      if (m == 0) throw std::domain_error("no feasible level count below 2^64 qubits");
      result.inner_count = m;
      result.total_qubits = 3 * checked_pow_u64(inner->n(), m);
      result.security_exponent = log_n1 / std::log2(growth);
      result.correctness_exponent = result.security_exponent;
      result.combined_exponent = result.security_exponent;
      result.alpha = a;
      return result;
    }
  }
  throw std::logic_error("unreachable scheme kind");
}

}  // namespace qauth
