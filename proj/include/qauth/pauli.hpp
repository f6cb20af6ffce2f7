#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qauth/rng.hpp"

namespace qauth {

struct PauliWeights {
  size_t total = 0;  // qubits carrying a non-identity letter
  size_t x = 0;      // qubits with an X component (X or Y)
  size_t z = 0;      // qubits with a Z component (Z or Y)
};

// Two-bit letter codes: bit 0 = X component, bit 1 = Z component.
enum : uint8_t { kLetterI = 0, kLetterX = 1, kLetterZ = 2, kLetterY = 3 };

char letter_to_char(uint8_t code);
uint8_t letter_from_char(char c);  // throws std::invalid_argument on bad letter

// An n-qubit Pauli in the symplectic (x bits, z bits) representation, packed
// into 64-bit words. The global phase is not tracked: commutation relations,
// syndromes and residual classification are all phase-invariant, which is
// everything the decoders and estimators need.
//
// Values are immutable in all hot paths; mutation is confined to construction
// and explicit in-place resampling. Safe to share across threads once built.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(size_t num_qubits);

  static PauliOperator identity(size_t num_qubits) { return PauliOperator(num_qubits); }
  // Parses a string over {I,X,Y,Z} (lowercase accepted), e.g. "XIYZ".
  static PauliOperator from_string(std::string_view s);
  std::string to_string() const;

  size_t num_qubits() const { return num_qubits_; }
  bool is_identity() const;

  bool x_bit(size_t qubit) const { return bit(x_words_, qubit); }
  bool z_bit(size_t qubit) const { return bit(z_words_, qubit); }
  uint8_t letter_code(size_t qubit) const {
    return static_cast<uint8_t>(bit(x_words_, qubit) | (bit(z_words_, qubit) << 1));
  }
  char letter(size_t qubit) const { return letter_to_char(letter_code(qubit)); }

  void set_x(size_t qubit, bool value) { set_bit(x_words_, qubit, value); }
  void set_z(size_t qubit, bool value) { set_bit(z_words_, qubit, value); }
  void set_letter_code(size_t qubit, uint8_t code) {
    set_bit(x_words_, qubit, code & 1);
    set_bit(z_words_, qubit, (code >> 1) & 1);
  }
  void set_letter(size_t qubit, char c) { set_letter_code(qubit, letter_from_char(c)); }
  void clear();  // reset to the identity

  // Phase-stripped group product: componentwise XOR of x and z bits.
  PauliOperator multiplied_by(const PauliOperator& other) const;
  void multiply_inplace(const PauliOperator& other);

  // True iff the symplectic inner product is even.
  bool commutes_with(const PauliOperator& other) const;

  PauliWeights weights() const;

  // Copies qubits [begin, begin + count) into a fresh operator.
  PauliOperator extract_block(size_t begin, size_t count) const;

  bool operator==(const PauliOperator& other) const;
  bool operator!=(const PauliOperator& other) const { return !(*this == other); }

  // Packed masks of the first num_qubits bits (num_qubits <= 32 only);
  // used by the lookup-table decoders.
  uint32_t x_mask32() const { return static_cast<uint32_t>(x_words_.empty() ? 0 : x_words_[0]); }
  uint32_t z_mask32() const { return static_cast<uint32_t>(z_words_.empty() ? 0 : z_words_[0]); }

 private:
  static bool bit(const std::vector<uint64_t>& words, size_t i) {
    return (words[i >> 6] >> (i & 63)) & 1;
  }
  static void set_bit(std::vector<uint64_t>& words, size_t i, bool v) {
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words[i >> 6] |= mask;
    } else {
      words[i >> 6] &= ~mask;
    }
  }
  void check_same_size(const PauliOperator& other) const;

  size_t num_qubits_ = 0;
  std::vector<uint64_t> x_words_;
  std::vector<uint64_t> z_words_;
};

inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  return a.multiplied_by(b);
}
inline bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return a.commutes_with(b);
}
inline PauliWeights weights(const PauliOperator& p) { return p.weights(); }

// Uniformly random Pauli with exactly `weight` non-identity letters: the
// support is a uniform subset and each supported qubit is uniformly X/Y/Z.
PauliOperator sample_fixed_weight(size_t weight, size_t num_qubits, Rng& rng);

}  // namespace qauth
