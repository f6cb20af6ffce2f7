#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qauth/schemes.hpp"
#include "qauth/stabilizer_code.hpp"

namespace qauth {

// Purity-testing parameter of the trap construction over a distance-d inner
// code: (1/3)^((d+1)/2). d must be odd.
double trap_purity_bound(unsigned distance);

// Correctness failure bound of the threshold scheme under depolarizing noise
// p with threshold parameter alpha: concatenated-recovery term plus the
// Hoeffding trap term, clamped to [0, 1]. Requires p < 3*p_thr/4 and
// alpha > 4p/3 (domain errors name the violated inequality). Values of 1.0
// indicate a vacuous bound, legitimately reached at small sizes.
double threshold_correctness_bound(const StabilizerCode& base, unsigned levels, double p,
                                   double alpha);

// Security (purity-testing) bound of the threshold scheme: the max of the
// correction-evasion term and the trap-evasion term. Requires
// 0 < alpha < p_thr.
double threshold_security_bound(const StabilizerCode& base, unsigned levels, double alpha);

// Refined trap purity-testing bound: per attack weight w, the minimum of the
// trap-detection term (2/3)^(w/2) and the correction-evasion term; the bound
// is the maximum of that minimum over the weight grid. Grid defaults: from
// the concatenated code's correctable count t (at least 1) to 3n, step 1.
struct RefinedPurityPoint {
  uint64_t weight = 0;
  double detection_term = 0.0;
  double correction_term = 0.0;
  double combined = 0.0;  // min of the two terms
};
struct RefinedPurityBound {
  double value = 0.0;
  uint64_t argmax_weight = 0;
  std::vector<RefinedPurityPoint> table;
};
RefinedPurityBound trap_refined_purity_bound(const StabilizerCode& base, unsigned levels,
                                             uint64_t w_min = 0, uint64_t w_max = 0,
                                             uint64_t w_step = 1);

// Lower bound (9/10)/sqrt(2*pi*n*p*(1-p)) on the binomial pmf at its mean.
// Requires n >= 3, np >= 1 and np integer.
double binomial_mean_lower_bound(uint64_t n, double p);

// Sampling tail bound exp(-gamma^2 * (|B|/|A|) * k / 2) for the probability
// that a size-k uniform sample underrepresents sub-population B by factor
// (1 - gamma). Requires 0 < k < |A|, 0 < gamma <= 1, |B| <= |A|.
double chernoff_sampling_bound(uint64_t size_a, uint64_t size_b, uint64_t k, double gamma);

// Smallest integer protocol sizes that satisfy the sufficiency inequalities
// for a target (epsilon, delta, p), plus the closed-form growth exponents.
// combined_exponent is the growth exponent of the total qubit count in
// log(1/epsilon) when epsilon = delta.
struct QubitScaling {
  uint64_t inner_count = 0;  // concatenation levels M (trap/threshold), trap count (clifford)
  std::optional<unsigned> outer_levels;
  uint64_t total_qubits = 0;
  double security_exponent = 0.0;
  double correctness_exponent = 0.0;
  double combined_exponent = 0.0;
  double alpha = 0.0;  // threshold: the tuning parameter used
};

// inner: required for trap/threshold; outer: required for trap/clifford.
// For the threshold scheme, alpha defaults to the midpoint of its valid
// interval (4p/3, p_thr) when not supplied.
QubitScaling qubit_scaling(SchemeKind kind, const StabilizerCode* inner,
                           const StabilizerCode* outer, double epsilon, double delta, double p,
                           std::optional<double> alpha = {});

inline bool bound_is_vacuous(double value) { return value >= 1.0; }

}  // namespace qauth
