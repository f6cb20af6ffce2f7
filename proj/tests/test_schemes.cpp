#include "qauth/schemes.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qauth/errors.hpp"

using namespace qauth;

namespace {

ConcatenatedCode five(unsigned levels) {
  return ConcatenatedCode(StabilizerCode::five_qubit(), levels);
}

PermutationKey identity_key(size_t n) {
  PermutationKey key;
  key.block_size = n;
  key.perm.resize(3 * n);
  for (size_t i = 0; i < key.perm.size(); ++i) key.perm[i] = static_cast<uint32_t>(i);
  return key;
}

PauliOperator random_pauli(size_t n, Rng& rng) {
  PauliOperator p(n);
  for (size_t q = 0; q < n; ++q) {
    p.set_letter_code(q, static_cast<uint8_t>(rng.next_below(4)));
  }
  return p;
}

}  // namespace

TEST_CASE("threshold reject counts implement the fewer-than-alpha*n rule") {
  CHECK(threshold_reject_count(0.05, 5) == 1);    // alpha*n = 0.25
  CHECK(threshold_reject_count(0.08, 5) == 1);    // 0.4
  CHECK(threshold_reject_count(0.2, 5) == 1);     // exactly 1.0: one trigger rejects
  CHECK(threshold_reject_count(0.05, 25) == 2);   // 1.25
  CHECK(threshold_reject_count(0.08, 25) == 2);   // exactly 2.0
  CHECK(threshold_reject_count(0.05, 125) == 7);  // 6.25: up to 6 triggers pass
  CHECK(threshold_reject_count(0.08, 125) == 10); // exactly 10.0
}

TEST_CASE("keygen is deterministic, bijective, and refuses clifford schemes") {
  const SchemeSpec scheme = SchemeSpec::trap(five(1));
  Rng rng_a(77), rng_b(77);
  const PermutationKey a = keygen(scheme, rng_a);
  const PermutationKey b = keygen(scheme, rng_b);
  CHECK(a.perm == b.perm);
  CHECK(a.perm.size() == 15);
  std::vector<bool> hit(15, false);
  for (uint32_t v : a.perm) {
    REQUIRE(v < 15);
    CHECK_FALSE(hit[v]);
    hit[v] = true;
  }
  const SchemeSpec cliff = SchemeSpec::clifford(3);
  Rng rng_c(1);
  CHECK_THROWS_AS(keygen(cliff, rng_c), std::invalid_argument);
}

TEST_CASE("keygen draws permutations uniformly (n = 1, all 6 within 4 sigma)") {
  const SchemeSpec scheme = SchemeSpec::trap(five(0));  // n_total = 1, 3 registers
  std::map<std::vector<uint32_t>, int> counts;
  const int trials = 60000;
  Rng rng(79);
  for (int i = 0; i < trials; ++i) {
    counts[keygen(scheme, rng).perm]++;
  }
  CHECK(counts.size() == 6);
  const double expected = trials / 6.0;
  const double sigma = std::sqrt(trials * (1.0 / 6) * (5.0 / 6));
  for (const auto& [perm, count] : counts) {
    CHECK(std::abs(count - expected) <= 4 * sigma);
  }
}

TEST_CASE("trap decode: trigger rules under the identity key") {
  const ConcatenatedCode inner = five(1);
  const PermutationKey key = identity_key(5);

  const auto clean = trap_decode(key, inner, PauliOperator::identity(15));
  CHECK(clean.accepted);
  CHECK(clean.residual == 'I');

  // X on the first |0> trap (register 5) trips the computational check.
  PauliOperator x_trap(15);
  x_trap.set_letter(5, 'X');
  CHECK_FALSE(trap_decode(key, inner, x_trap).accepted);

  // Z acts trivially on |0>; the data block is untouched.
  PauliOperator z_trap(15);
  z_trap.set_letter(5, 'Z');
  const auto out = trap_decode(key, inner, z_trap);
  CHECK(out.accepted);
  CHECK(out.residual == 'I');

  // Mirror rules on the |+> block (registers 10..14).
  PauliOperator z_had(15);
  z_had.set_letter(12, 'Z');
  CHECK_FALSE(trap_decode(key, inner, z_had).accepted);
  PauliOperator x_had(15);
  x_had.set_letter(12, 'X');
  CHECK(trap_decode(key, inner, x_had).accepted);

  CHECK_THROWS_AS(trap_decode(key, inner, PauliOperator(14)), DimensionError);
}

TEST_CASE("threshold decode counts triggers against the reject count") {
  const ConcatenatedCode inner = five(1);
  const PermutationKey key = identity_key(5);
  PauliOperator two_triggers(15);
  two_triggers.set_letter(5, 'X');
  two_triggers.set_letter(6, 'X');

  CHECK(threshold_decode(key, inner, 3, two_triggers).accepted);       // 2 < 3
  CHECK_FALSE(threshold_decode(key, inner, 2, two_triggers).accepted); // 2 >= 2
  CHECK(threshold_decode(key, inner, 3, two_triggers).residual == 'I');
}

TEST_CASE("threshold with reject count 1 equals trap decode pointwise") {
  const ConcatenatedCode inner = five(1);
  Rng rng(83);
  for (int i = 0; i < 300; ++i) {
    const PermutationKey key = keygen(SchemeSpec::trap(five(1)), rng);
    const PauliOperator e = random_pauli(15, rng);
    const auto t = trap_decode(key, inner, e);
    const auto h = threshold_decode(key, inner, 1, e);
    CHECK(t.accepted == h.accepted);
    CHECK(t.residual == h.residual);
    CHECK(t.coset_harm == h.coset_harm);
  }
}

TEST_CASE("relabeling the attack and composing the key gives identical outcomes") {
  const ConcatenatedCode inner = five(1);
  Rng rng(85);
  for (int i = 0; i < 200; ++i) {
    const PermutationKey key = keygen(SchemeSpec::trap(five(1)), rng);
    const PauliOperator e = random_pauli(15, rng);

    // Random relabeling sigma
    std::vector<uint32_t> sigma(15);
    for (size_t j = 0; j < 15; ++j) sigma[j] = static_cast<uint32_t>(j);
    for (size_t j = 0; j + 1 < 15; ++j) {
      std::swap(sigma[j], sigma[j + static_cast<size_t>(rng.next_below(15 - j))]);
    }
    PauliOperator relabeled(15);
    for (size_t j = 0; j < 15; ++j) relabeled.set_letter_code(sigma[j], e.letter_code(j));
    PermutationKey composed = key;
    for (size_t j = 0; j < 15; ++j) composed.perm[j] = sigma[key.perm[j]];

    const auto a = trap_decode(key, inner, e);
    const auto b = trap_decode(composed, inner, relabeled);
    CHECK(a.accepted == b.accepted);
    CHECK(a.residual == b.residual);
    CHECK(a.coset_harm == b.coset_harm);
  }
}

TEST_CASE("data-block attacks below the distance never harm in the coset sense") {
  // Exhaustive over weight < d supports on the data block, identity key.
  const ConcatenatedCode inner = five(1);
  const PermutationKey key = identity_key(5);
  for (size_t q1 = 0; q1 < 5; ++q1) {
    for (uint8_t l1 = 1; l1 < 4; ++l1) {
      PauliOperator e1(15);
      e1.set_letter_code(q1, l1);
      const auto out1 = trap_decode(key, inner, e1);
      CHECK(out1.accepted);
      CHECK_FALSE(out1.coset_harm);
      CHECK(out1.residual == 'I');  // weight <= t is even corrected outright
      for (size_t q2 = q1 + 1; q2 < 5; ++q2) {
        for (uint8_t l2 = 1; l2 < 4; ++l2) {
          PauliOperator e2 = e1;
          e2.set_letter_code(q2, l2);
          const auto out2 = trap_decode(key, inner, e2);
          CHECK(out2.accepted);
          CHECK_FALSE(out2.coset_harm);  // weight 2 < d = 3 cannot be a logical
        }
      }
    }
  }
}

TEST_CASE("clifford decode: identity passes, trap statistics match the exact count") {
  Rng rng(87);
  const auto clean = clifford_decode(2, 1, false, rng);
  CHECK(clean.accepted);
  CHECK(clean.residual == 'I');

  // Non-identity attacks twirl to uniform non-identity Paulis on 3 qubits:
  // accept-and-harm probability is (4-1) * 2^2 / (4^3 - 1) = 12/63.
  const int trials = 200000;
  int harmed = 0;
  for (int i = 0; i < trials; ++i) {
    const auto out = clifford_decode(2, 1, true, rng);
    if (out.accepted && out.residual != 'I') ++harmed;
  }
  const double expected = 12.0 / 63.0;
  const double sigma = std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::abs(harmed / static_cast<double>(trials) - expected) <= 4 * sigma);
}

TEST_CASE("composed decode corrects physical errors and exposes register-level logicals") {
  const SchemeSpec scheme = SchemeSpec::trap(five(1), five(1));
  REQUIRE(scheme.total_qubits() == 75);
  const PermutationKey key = identity_key(5);
  Rng rng(89);

  CHECK(composed_decode(scheme, &key, PauliOperator::identity(75), rng).accepted);

  // A single physical error anywhere is absorbed by the outer blocks.
  for (size_t q = 0; q < 75; ++q) {
    PauliOperator e(75);
    e.set_letter(q, 'X');
    const auto out = composed_decode(scheme, &key, e, rng);
    CHECK(out.accepted);
    CHECK(out.residual == 'I');
  }

  // A full logical X on the outer block of register 5 (a |0> trap under the
  // identity key) decodes to a register-level X and must be caught.
  PauliOperator logical(75);
  for (size_t q = 25; q < 30; ++q) logical.set_letter(q, 'X');
  CHECK_FALSE(composed_decode(scheme, &key, logical, rng).accepted);

  // The same pattern on a |+> trap register is invisible.
  PauliOperator benign(75);
  for (size_t q = 50; q < 55; ++q) benign.set_letter(q, 'X');
  CHECK(composed_decode(scheme, &key, benign, rng).accepted);

  CHECK_THROWS_AS(composed_decode(scheme, &key, PauliOperator(15), rng), DimensionError);
  const SchemeSpec bare = SchemeSpec::trap(five(1));
  CHECK_THROWS_AS(composed_decode(bare, &key, PauliOperator(15), rng), std::invalid_argument);
}

TEST_CASE("composed clifford: outer blocks feed the twirl model") {
  const SchemeSpec scheme = SchemeSpec::clifford(2, 1, five(1));
  REQUIRE(scheme.total_qubits() == 15);
  Rng rng(97);

  // Correctable physical errors never reach the twirl.
  for (size_t q = 0; q < 15; ++q) {
    PauliOperator e(15);
    e.set_letter(q, 'Y');
    const auto out = composed_decode(scheme, nullptr, e, rng);
    CHECK(out.accepted);
    CHECK(out.residual == 'I');
  }

  // A register-level logical survives outer decoding and is twirled: over
  // many trials both rejections and accept-with-harm outcomes appear, with
  // the accept-and-harm rate near 12/63.
  PauliOperator logical(15);
  for (size_t q = 0; q < 5; ++q) logical.set_letter(q, 'X');
  int rejects = 0, harms = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    const auto out = composed_decode(scheme, nullptr, logical, rng);
    rejects += !out.accepted;
    harms += out.harmed();
  }
  CHECK(rejects > 0);
  const double rate = harms / static_cast<double>(trials);
  const double expected = 12.0 / 63.0;
  CHECK(std::abs(rate - expected) <= 4 * std::sqrt(expected * (1 - expected) / trials));
}

TEST_CASE("scheme spec validation and register accounting") {
  CHECK_THROWS_AS(SchemeSpec::threshold(five(1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SchemeSpec::threshold(five(1), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SchemeSpec::clifford(0), std::invalid_argument);

  const SchemeSpec thr = SchemeSpec::threshold(five(2), 0.08);
  CHECK(thr.register_count() == 75);
  CHECK(thr.threshold_count == 2);
  const SchemeSpec cliff = SchemeSpec::clifford(4, 1, five(1));
  CHECK(cliff.register_count() == 5);
  CHECK(cliff.total_qubits() == 25);
}
