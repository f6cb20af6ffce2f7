#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qauth/concatenated_code.hpp"
#include "qauth/pauli.hpp"
#include "qauth/rng.hpp"

namespace qauth {

// Outcome of an authentication decode in the Pauli frame. `residual` is the
// logical letter left on the data qubit after the full coset decode;
// Accept('I') means the data survived intact, Accept(!= 'I') is the
// undetected-harm event. `coset_harm` tracks the stricter convention where
// the data block must lie in S-perp minus S (no correction step credited);
// the two conventions agree except for data errors the decoder maps across
// cosets, and both are reported so the gap stays visible.
struct DecodeOutcome {
  bool accepted = false;
  char residual = 'I';
  bool coset_harm = false;

  bool harmed() const { return accepted && residual != 'I'; }
  static DecodeOutcome reject() { return {false, 'I', false}; }
  static DecodeOutcome accept(char residual, bool coset_harm) {
    return {true, residual, coset_harm};
  }
};

// Secret permutation over the 3n registers of a trap/threshold scheme:
// perm[j] is the channel position carrying register j. Registers 0..n-1 are
// the data block, n..2n-1 the |0> traps, 2n..3n-1 the |+> traps.
//
// All decode functions below are pure in (key, error) apart from the rng a
// Clifford twirl draws from; trials parallelize with per-trial rng streams.
struct PermutationKey {
  std::vector<uint32_t> perm;
  size_t block_size = 0;  // n = inner code qubits per block
};

enum class SchemeKind { kTrap, kThreshold, kClifford };

// Parameters of one authentication scheme, optionally wrapped register-wise
// in an outer concatenated code.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::kTrap;
  std::optional<ConcatenatedCode> inner;  // trap/threshold
  double alpha = 0.0;                     // threshold tuning parameter
  size_t threshold_count = 0;             // reject when triggered traps reach this count
  size_t num_traps = 0;                   // clifford
  size_t data_size = 1;                   // clifford
  std::optional<ConcatenatedCode> outer;

  static SchemeSpec trap(ConcatenatedCode inner, std::optional<ConcatenatedCode> outer = {});
  static SchemeSpec threshold(ConcatenatedCode inner, double alpha,
                              std::optional<ConcatenatedCode> outer = {});
  static SchemeSpec clifford(size_t num_traps, size_t data_size = 1,
                             std::optional<ConcatenatedCode> outer = {});

  size_t register_count() const;  // 3n (trap/threshold) or data_size + num_traps
  size_t total_qubits() const;    // register_count * outer qubits (1 if no outer)
};

// Smallest integer trigger count that the rule "accept iff fewer than
// alpha * n traps differ" rejects. Equals ceil(alpha * n) away from integer
// points and alpha * n exactly at them.
size_t threshold_reject_count(double alpha, size_t num_inner_qubits);

// Uniform random permutation key for a trap/threshold scheme. Clifford
// schemes carry no permutation key; requesting one is a parameter error.
PermutationKey keygen(const SchemeSpec& scheme, Rng& rng);

// Trap decode: reject iff any |0> trap sees an X component or any |+> trap a
// Z component; otherwise decode the data block with the inner code.
DecodeOutcome trap_decode(const PermutationKey& key, const ConcatenatedCode& inner,
                          const PauliOperator& error);

// Threshold decode: count triggered traps, accept iff the count stays below
// reject_count, then decode the data block.
DecodeOutcome threshold_decode(const PermutationKey& key, const ConcatenatedCode& inner,
                               size_t reject_count, const PauliOperator& error);

// Clifford decode in the twirl model: a non-identity attack becomes a
// uniformly random non-identity Pauli on data + trap qubits; reject iff any
// trap qubit sees an X component.
DecodeOutcome clifford_decode(size_t num_traps, size_t data_size, bool attack_nonidentity,
                              Rng& rng);

// Composed decode: first decode every register's outer block independently,
// then feed the register-level Pauli into the scheme decoder.
DecodeOutcome composed_decode(const SchemeSpec& scheme, const PermutationKey* key,
                              const PauliOperator& error, Rng& rng);

// Dispatch on scheme kind (and outer code when present). `key` may be null
// for Clifford schemes.
DecodeOutcome decode_with_scheme(const SchemeSpec& scheme, const PermutationKey* key,
                                 const PauliOperator& error, Rng& rng);

}  // namespace qauth
