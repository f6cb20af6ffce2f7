#pragma once

#include <cstdint>
#include <vector>

#include "qauth/estimation.hpp"
#include "qauth/pauli.hpp"
#include "qauth/rng.hpp"

namespace qauth {

// A Pauli attack family: either a fresh uniformly random fixed-weight Pauli
// per trial, or one fixed pattern. Sweeps over a weight range are driven by
// worst_case_sweep below.
struct AttackSpec {
  enum class Kind { kFixedWeight, kFixedPattern };

  Kind kind = Kind::kFixedWeight;
  size_t weight = 0;
  PauliOperator pattern;

  static AttackSpec fixed_weight(size_t weight) {
    AttackSpec a;
    a.kind = Kind::kFixedWeight;
    a.weight = weight;
    return a;
  }
  static AttackSpec fixed_pattern(PauliOperator pattern) {
    AttackSpec a;
    a.kind = Kind::kFixedPattern;
    a.weight = pattern.weights().total;
    a.pattern = std::move(pattern);
    return a;
  }
};

// Materializes one attack on num_qubits qubits. Fixed patterns must match the
// qubit count; fixed weights must not exceed it.
PauliOperator realize_attack(const AttackSpec& spec, size_t num_qubits, Rng& rng);

struct SweepPoint {
  uint64_t weight = 0;
  EstimateResult estimate;
};

struct SweepResult {
  uint64_t best_weight = 0;   // weight with the largest harm estimate (ties: smallest w)
  double delta_hat = 0.0;     // that largest estimate
  std::vector<SweepPoint> points;
};

// Estimates the undetected-harm probability for random fixed-weight attacks
// at every weight in [w_min, w_max] stepped by w_step, and reports the
// maximizing weight. Each weight gets its own derived seed, so the sweep is
// reproducible regardless of ordering or thread count.
SweepResult worst_case_sweep(const SchemeSpec& scheme, uint64_t key_trials, uint64_t w_min,
                             uint64_t w_max, uint64_t w_step, uint64_t master_seed,
                             unsigned threads = 0);

}  // namespace qauth
