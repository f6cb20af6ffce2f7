#include "qauth/adversary.hpp"

#include <stdexcept>
#include <string>

#include "qauth/errors.hpp"

namespace qauth {

PauliOperator realize_attack(const AttackSpec& spec, size_t num_qubits, Rng& rng) {
  switch (spec.kind) {
    case AttackSpec::Kind::kFixedWeight:
      if (spec.weight > num_qubits) {
        throw std::invalid_argument("attack weight " + std::to_string(spec.weight) +
                                    " exceeds the scheme's " + std::to_string(num_qubits) +
                                    " qubits");
      }
      return sample_fixed_weight(spec.weight, num_qubits, rng);
    case AttackSpec::Kind::kFixedPattern:
      if (spec.pattern.num_qubits() != num_qubits) {
        throw DimensionError("attack pattern acts on " +
                             std::to_string(spec.pattern.num_qubits()) + " qubits, scheme has " +
                             std::to_string(num_qubits));
      }
      return spec.pattern;
  }
  throw std::logic_error("unreachable attack kind");
}

SweepResult worst_case_sweep(const SchemeSpec& scheme, uint64_t key_trials, uint64_t w_min,
                             uint64_t w_max, uint64_t w_step, uint64_t master_seed,
                             unsigned threads) {
  if (key_trials < 1) throw std::invalid_argument("sweep needs at least one key trial");
  if (w_step < 1) throw std::invalid_argument("sweep step must be positive");
  if (w_min > w_max) throw std::invalid_argument("sweep range is empty");

  SweepResult result;
  bool first = true;
  for (uint64_t w = w_min; w <= w_max; w += w_step) {
    const AttackSpec attack = AttackSpec::fixed_weight(static_cast<size_t>(w));
    EstimateResult est =
        estimate_security(scheme, attack, key_trials, derive_seed(master_seed, w), threads);
    if (first || est.point > result.delta_hat) {
      result.best_weight = w;
      result.delta_hat = est.point;
      first = false;
    }
    result.points.push_back({w, est});
  }
  return result;
}

}  // namespace qauth
