#include "qauth/stabilizer_code.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qauth/errors.hpp"
#include "qauth/rng.hpp"

using namespace qauth;

namespace {

// Every Pauli of weight exactly w on n qubits.
std::vector<PauliOperator> paulis_of_weight(size_t n, size_t w) {
  std::vector<PauliOperator> out;
  const size_t patterns = size_t{1} << (2 * n);
  for (size_t code = 0; code < patterns; ++code) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; ++q) {
      p.set_letter_code(q, static_cast<uint8_t>((code >> (2 * q)) & 3));
    }
    if (p.weights().total == w) out.push_back(p);
  }
  return out;
}

PauliOperator random_pauli(size_t n, Rng& rng) {
  PauliOperator p(n);
  for (size_t q = 0; q < n; ++q) {
    p.set_letter_code(q, static_cast<uint8_t>(rng.next_below(4)));
  }
  return p;
}

}  // namespace

TEST_CASE("builtin code parameters") {
  const auto& five = StabilizerCode::five_qubit();
  CHECK(five.n() == 5);
  CHECK(five.distance() == 3);
  CHECK(five.t() == 1);
  CHECK(five.generators().size() == 4);

  const auto& steane = StabilizerCode::steane();
  CHECK(steane.n() == 7);
  CHECK(steane.distance() == 3);
  CHECK(steane.t() == 1);
  CHECK(steane.generators().size() == 6);

  CHECK(&StabilizerCode::builtin("five") == &five);
  CHECK(&StabilizerCode::builtin("five_qubit") == &five);
  CHECK(&StabilizerCode::builtin("steane") == &steane);
  CHECK_THROWS_AS(StabilizerCode::builtin("shor"), UnknownNameError);
}

TEST_CASE("generator sets match the pinned fixture") {
  std::ifstream in(std::string(QAUTH_FIXTURE_DIR) + "/builtin_codes.json");
  REQUIRE(in.good());
  const auto fixture = nlohmann::json::parse(in);
  for (const auto& [name, expected] : fixture.items()) {
    const auto& code = StabilizerCode::builtin(name);
    CHECK(code.n() == expected["n"].get<size_t>());
    CHECK(code.distance() == expected["distance"].get<unsigned>());
    REQUIRE(code.generators().size() == expected["generators"].size());
    for (size_t i = 0; i < code.generators().size(); ++i) {
      CHECK(code.generators()[i].to_string() == expected["generators"][i].get<std::string>());
    }
    CHECK(code.logical_x().to_string() == expected["logical_x"].get<std::string>());
    CHECK(code.logical_z().to_string() == expected["logical_z"].get<std::string>());
  }
}

TEST_CASE("syndromes: stabilizer elements are silent, X on the first qubit is (0,0,0,1)") {
  const auto& five = StabilizerCode::five_qubit();
  CHECK(five.syndrome(PauliOperator::identity(5)) == 0);
  for (const auto& g : five.generators()) {
    CHECK(five.syndrome(g) == 0);
  }
  CHECK(five.syndrome(PauliOperator::from_string("XIIII")) == 0b1000);
  CHECK_THROWS_AS(five.syndrome(PauliOperator(7)), DimensionError);
}

TEST_CASE("all 15 single-qubit errors on the five-qubit code have distinct non-zero syndromes") {
  const auto& five = StabilizerCode::five_qubit();
  std::set<uint32_t> seen;
  for (const auto& e : paulis_of_weight(5, 1)) {
    const uint32_t s = five.syndrome(e);
    CHECK(s != 0);
    seen.insert(s);
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("syndrome is a group homomorphism") {
  Rng rng(31);
  for (const auto* code : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    for (int i = 0; i < 200; ++i) {
      const PauliOperator a = random_pauli(code->n(), rng);
      const PauliOperator b = random_pauli(code->n(), rng);
      CHECK(code->syndrome(multiply(a, b)) == (code->syndrome(a) ^ code->syndrome(b)));
    }
  }
}

TEST_CASE("classification: stabilizer, detected, undetected logical") {
  const auto& five = StabilizerCode::five_qubit();
  CHECK(five.classify(PauliOperator::identity(5)) == ErrorClass::kInStabilizer);
  CHECK(five.classify(five.logical_x()) == ErrorClass::kUndetectedLogical);
  CHECK(five.classify(five.logical_z()) == ErrorClass::kUndetectedLogical);
  for (const auto& e : paulis_of_weight(5, 1)) {
    CHECK(five.classify(e) == ErrorClass::kDetected);
  }
  // Products of generators stay in the stabilizer.
  CHECK(five.classify(multiply(five.generators()[0], five.generators()[2])) ==
        ErrorClass::kInStabilizer);
}

TEST_CASE("undetected logicals have weight at least d (exhaustive below d)") {
  for (const auto* code : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    for (size_t w = 1; w < code->distance(); ++w) {
      for (const auto& e : paulis_of_weight(code->n(), w)) {
        CHECK(code->classify(e) != ErrorClass::kUndetectedLogical);
      }
    }
  }
}

TEST_CASE("decoding corrects every error of weight at most t") {
  for (const auto* code : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    for (size_t w = 0; w <= code->t(); ++w) {
      for (const auto& e : paulis_of_weight(code->n(), w)) {
        CHECK(code->decode_to_logical(e) == 'I');
      }
    }
  }
}

TEST_CASE("decoding maps logical representatives to their letter") {
  const auto& five = StabilizerCode::five_qubit();
  CHECK(five.decode_to_logical(five.logical_x()) == 'X');
  CHECK(five.decode_to_logical(five.logical_z()) == 'Z');
  CHECK(five.decode_to_logical(multiply(five.logical_x(), five.logical_z())) == 'Y');
  CHECK(five.decode_to_logical(PauliOperator::identity(5)) == 'I');
  // Multiplying by a stabilizer element never changes the residual.
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const PauliOperator e = random_pauli(5, rng);
    const PauliOperator m = multiply(e, five.generators()[rng.next_below(4)]);
    CHECK(five.decode_to_logical(e) == five.decode_to_logical(m));
  }
}

TEST_CASE("decode table entries are minimum weight in their syndrome coset") {
  for (const auto* code : {&StabilizerCode::five_qubit(), &StabilizerCode::steane()}) {
    const size_t n = code->n();
    std::vector<size_t> min_weight(size_t{1} << (n - 1), n + 1);
    const size_t patterns = size_t{1} << (2 * n);
    for (size_t mask = 0; mask < patterns; ++mask) {
      PauliOperator p(n);
      for (size_t q = 0; q < n; ++q) {
        p.set_letter_code(q, static_cast<uint8_t>((mask >> (2 * q)) & 3));
      }
      const uint32_t s = code->syndrome(p);
      min_weight[s] = std::min(min_weight[s], p.weights().total);
    }
    for (uint32_t s = 0; s < min_weight.size(); ++s) {
      const PauliOperator& c = code->correction(s);
      CHECK(code->syndrome(c) == s);
      CHECK(c.weights().total == min_weight[s]);
    }
  }
}
