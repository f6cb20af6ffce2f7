#pragma once

#include <cstdint>

#include "qauth/pauli.hpp"
#include "qauth/stabilizer_code.hpp"

namespace qauth {

// M recursive levels of a base [[n,1,d]] code, giving a [[n^M, 1, d^M]] code.
// Level 0 is the identity code on a single qubit. Decoding is strictly
// hierarchical: each base-code block is decoded to a single logical letter,
// then the next level decodes the resulting letters.
//
// Instances are immutable after construction; decode and classify are pure
// and safe to call from many threads at once.
class ConcatenatedCode {
 public:
  ConcatenatedCode(const StabilizerCode& base, unsigned levels);

  const StabilizerCode& base() const { return *base_; }
  unsigned levels() const { return levels_; }
  uint64_t n_total() const { return n_total_; }
  uint64_t d_total() const { return d_total_; }
  uint64_t t_total() const { return (d_total_ - 1) / 2; }

  // Residual logical letter after hierarchical hard-decision decoding.
  char decode(const PauliOperator& error) const;
  uint8_t decode_letters(const uint8_t* letters) const;  // fast path on letter codes

  // Strict coset classification: kDetected as soon as any block at any level
  // has a non-zero syndrome; otherwise the residual letter decides between
  // kInStabilizer and kUndetectedLogical. This realizes membership in the
  // concatenated code's stabilizer / normalizer without any correction step.
  ErrorClass classify(const PauliOperator& error) const;
  ErrorClass classify_letters(const uint8_t* letters) const;

 private:
  void check_dims(const PauliOperator& error) const;

  const StabilizerCode* base_;
  unsigned levels_;
  uint64_t n_total_;
  uint64_t d_total_;
};

inline char concat_decode(const ConcatenatedCode& code, const PauliOperator& error) {
  return code.decode(error);
}

// Closed-form bound on the concatenated failure probability under i.i.d.
// noise with per-qubit error probability p:
//   failure_bound = C^{-1} (C p)^{(t+1)^M}  with  C = binom(n, t+1),
// clamped to [0, 1] and evaluated in log space.
double failure_bound(const StabilizerCode& base, unsigned levels, double p);

// p_thr = binom(n, t+1)^{-1}; below it the bound decays with the level count.
double threshold_value(const StabilizerCode& base);

}  // namespace qauth
