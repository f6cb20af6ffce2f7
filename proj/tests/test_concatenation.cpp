#include "qauth/concatenated_code.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qauth/errors.hpp"
#include "qauth/estimation.hpp"
#include "qauth/noise.hpp"
#include "qauth/rng.hpp"

using namespace qauth;

namespace {

PauliOperator random_pauli(size_t n, Rng& rng) {
  PauliOperator p(n);
  for (size_t q = 0; q < n; ++q) {
    p.set_letter_code(q, static_cast<uint8_t>(rng.next_below(4)));
  }
  return p;
}

// A distance-1 [[3,1,1]] code: detects nothing in the Z direction, so t = 0.
const StabilizerCode& repetition3() {
  static const StabilizerCode code("repetition3", 1, {"ZZI", "IZZ"}, "XXX", "ZII");
  return code;
}

}  // namespace

TEST_CASE("code parameters are exact powers") {
  const ConcatenatedCode c0(StabilizerCode::five_qubit(), 0);
  CHECK(c0.n_total() == 1);
  CHECK(c0.d_total() == 1);
  const ConcatenatedCode c2(StabilizerCode::five_qubit(), 2);
  CHECK(c2.n_total() == 25);
  CHECK(c2.d_total() == 9);
  CHECK(c2.t_total() == 4);
  const ConcatenatedCode s3(StabilizerCode::steane(), 3);
  CHECK(s3.n_total() == 343);
  CHECK(s3.d_total() == 27);
}

TEST_CASE("identity decodes to identity at every level") {
  for (unsigned m : {0u, 1u, 2u, 3u}) {
    const ConcatenatedCode code(StabilizerCode::five_qubit(), m);
    CHECK(code.decode(PauliOperator::identity(code.n_total())) == 'I');
    CHECK(code.classify(PauliOperator::identity(code.n_total())) == ErrorClass::kInStabilizer);
  }
}

TEST_CASE("level 0 is the identity code") {
  const ConcatenatedCode code(StabilizerCode::five_qubit(), 0);
  CHECK(code.decode(PauliOperator::from_string("X")) == 'X');
  CHECK(code.decode(PauliOperator::from_string("Y")) == 'Y');
  CHECK(code.classify(PauliOperator::from_string("Z")) == ErrorClass::kUndetectedLogical);
}

TEST_CASE("one level reproduces the base decoder on every input") {
  Rng rng(41);
  const auto& base = StabilizerCode::five_qubit();
  const ConcatenatedCode code(base, 1);
  for (int i = 0; i < 500; ++i) {
    const PauliOperator e = random_pauli(5, rng);
    CHECK(code.decode(e) == base.decode_to_logical(e));
  }
}

TEST_CASE("single errors in distinct inner blocks are corrected at two levels") {
  const ConcatenatedCode code(StabilizerCode::five_qubit(), 2);
  PauliOperator e(25);
  e.set_letter(3, 'X');   // inner block 0
  e.set_letter(11, 'X');  // inner block 2
  CHECK(code.decode(e) == 'I');

  // One failing inner block is still caught by the outer level...
  PauliOperator one_block(25);
  one_block.set_letter(5, 'X');
  one_block.set_letter(6, 'X');
  CHECK(code.decode(one_block) == 'I');
  // ...but two failing inner blocks defeat the outer five-qubit code.
  PauliOperator bad(25);
  bad.set_letter(5, 'X');
  bad.set_letter(6, 'X');
  bad.set_letter(10, 'X');
  bad.set_letter(11, 'X');
  CHECK(code.decode(bad) != 'I');
}

TEST_CASE("every weight-<=t error is corrected (exhaustive at one level)") {
  for (const auto* base : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    const ConcatenatedCode code(*base, 1);
    const size_t n = base->n();
    for (size_t q = 0; q < n; ++q) {
      for (uint8_t letter : {kLetterX, kLetterZ, kLetterY}) {
        PauliOperator e(n);
        e.set_letter_code(q, letter);
        CHECK(code.decode(e) == 'I');
        CHECK(code.classify(e) == ErrorClass::kDetected);
      }
    }
  }
}

TEST_CASE("the concatenated logical operator decodes to its letter") {
  const ConcatenatedCode code(StabilizerCode::five_qubit(), 2);
  const PauliOperator logical_x = PauliOperator::from_string(std::string(25, 'X'));
  CHECK(code.decode(logical_x) == 'X');
  CHECK(code.classify(logical_x) == ErrorClass::kUndetectedLogical);
}

TEST_CASE("dimension mismatches are rejected") {
  const ConcatenatedCode code(StabilizerCode::five_qubit(), 2);
  CHECK_THROWS_AS(code.decode(PauliOperator(5)), DimensionError);
}

TEST_CASE("failure bound closed form") {
  CHECK(failure_bound(StabilizerCode::five_qubit(), 2, 0.05) == doctest::Approx(0.00625));
  CHECK(failure_bound(StabilizerCode::five_qubit(), 3, 0.0) == 0.0);
  CHECK(failure_bound(StabilizerCode::steane(), 1, 1.0 / 21) == doctest::Approx(1.0 / 21));
  // Above threshold the bound saturates at 1 once the base grows large.
  CHECK(failure_bound(StabilizerCode::five_qubit(), 8, 0.5) == 1.0);
  CHECK_THROWS_AS(failure_bound(StabilizerCode::five_qubit(), 2, 1.5), std::invalid_argument);
}

TEST_CASE("threshold values") {
  CHECK(threshold_value(StabilizerCode::five_qubit()) == doctest::Approx(0.1));
  CHECK(threshold_value(StabilizerCode::steane()) == doctest::Approx(1.0 / 21));
  CHECK(threshold_value(repetition3()) == doctest::Approx(1.0 / 3));
}

TEST_CASE("the bound decreases with levels below threshold and increases above") {
  for (const auto* base : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    const double p_thr = threshold_value(*base);
    for (double scale : {0.2, 0.5, 0.9}) {
      const double p = scale * p_thr;
      for (unsigned m = 1; m < 6; ++m) {
        CHECK(failure_bound(*base, m + 1, p) < failure_bound(*base, m, p));
      }
    }
    const double p_above = std::min(1.0, 1.5 * p_thr);
    for (unsigned m = 1; m < 4; ++m) {
      const double lo = failure_bound(*base, m, p_above);
      const double hi = failure_bound(*base, m + 1, p_above);
      CHECK((hi > lo || hi == 1.0));
    }
  }
}

TEST_CASE("Monte Carlo failure frequency stays below the analytic bound") {
  const uint64_t trials = 200000;
  const double p = 0.01;
  const auto est = estimate_code_failure(StabilizerCode::five_qubit(), 1, p, trials, 9001);
  const double bound = failure_bound(StabilizerCode::five_qubit(), 1, p);
  const double sigma = std::sqrt(est.point * (1 - est.point) / trials);
  CHECK(est.point <= bound + 3 * sigma);
  // The strict coset count can only be smaller: it ignores correction credit.
  CHECK(est.coset_harms <= est.failures);
}

TEST_CASE("permuting whole top-level blocks leaves the failure frequency invariant") {
  // Statistical check: the same noise trials with block-permuted errors give
  // a frequency within joint Monte Carlo noise.
  const auto& base = StabilizerCode::five_qubit();
  const ConcatenatedCode code(base, 2);
  const PauliChannel channel = depolarizing(0.04);
  const uint64_t trials = 100000;
  const size_t block_map[5] = {3, 0, 4, 1, 2};  // fixed top-level block permutation

  uint64_t plain = 0, permuted = 0;
  for (uint64_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(505, i));
    PauliOperator e(25);
    resample_from_channel(e, channel, rng);
    if (code.decode(e) != 'I') ++plain;
    PauliOperator shuffled(25);
    for (size_t b = 0; b < 5; ++b) {
      for (size_t q = 0; q < 5; ++q) {
        shuffled.set_letter_code(block_map[b] * 5 + q, e.letter_code(b * 5 + q));
      }
    }
    if (code.decode(shuffled) != 'I') ++permuted;
  }
  const double f1 = static_cast<double>(plain) / trials;
  const double f2 = static_cast<double>(permuted) / trials;
  const double sigma = std::sqrt(std::max(f1, 1e-9) * 2.0 / trials);
  CHECK(std::abs(f1 - f2) <= 4 * sigma + 1e-4);
}
