#pragma once

#include <cstdint>

#include "qauth/noise.hpp"
#include "qauth/schemes.hpp"
#include "qauth/stabilizer_code.hpp"

namespace qauth {

struct AttackSpec;  // adversary.hpp

// Result of a Monte Carlo estimate. The interval is a two-sided 99% Wilson
// score interval; runs with zero (or all) failures report the exact
// one-sided Clopper-Pearson bound instead. `rejects` and `harms` decompose
// the failure count for correctness runs (failures = rejects + harms);
// `coset_harms` counts the accepted trials whose data block lies in
// S-perp minus S under the strict classification.
struct EstimateResult {
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  uint64_t trials = 0;
  uint64_t failures = 0;
  uint64_t rejects = 0;
  uint64_t harms = 0;
  uint64_t coset_harms = 0;
  uint64_t master_seed = 0;
};

// Fills point/ci fields from failure and trial counts.
void fill_interval(EstimateResult& result);

// Failure probability of the honest protocol over the given channel:
// failure = Reject or Accept with a non-identity residual. One fresh key and
// one fresh noise sample per trial. Deterministic given master_seed and
// independent of `threads` (0 = use all hardware threads).
EstimateResult estimate_correctness(const SchemeSpec& scheme, const PauliChannel& channel,
                                    uint64_t trials, uint64_t master_seed, unsigned threads = 0);

// Undetected-harm probability against an adversarial Pauli: fresh key per
// trial (and a fresh attack sample for fixed-weight specs); failure = Accept
// with non-identity residual. No channel noise is applied.
EstimateResult estimate_security(const SchemeSpec& scheme, const AttackSpec& attack,
                                 uint64_t key_trials, uint64_t master_seed, unsigned threads = 0);

// Logical failure frequency of the bare concatenated code under depolarizing
// noise: failure = non-identity residual after hierarchical decoding.
EstimateResult estimate_code_failure(const StabilizerCode& base, unsigned levels, double p,
                                     uint64_t trials, uint64_t master_seed, unsigned threads = 0);

// Exact probability, over the uniform permutation key, that an attack with
// the given letter multiset is accepted while harming the data. Computed by
// exhaustive enumeration (multivariate hypergeometric block split x placement
// count inside the data block); serves as the independent oracle for the
// Monte Carlo estimators. Requires a trap or threshold scheme without outer
// code and an inner code of at most 7 qubits.
struct OracleResult {
  double decoder_harm = 0.0;  // residual-after-correction convention
  double coset_harm = 0.0;    // strict S-perp minus S convention
};
OracleResult exact_purity_oracle(const SchemeSpec& scheme, size_t num_x, size_t num_y,
                                 size_t num_z);

}  // namespace qauth
