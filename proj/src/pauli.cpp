#include "qauth/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "qauth/errors.hpp"

namespace qauth {

namespace {
constexpr size_t word_count(size_t n) { return (n + 63) / 64; }
}  // namespace

char letter_to_char(uint8_t code) {
  static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
  return kChars[code & 3];
}

uint8_t letter_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return kLetterI;
    case 'X': case 'x': return kLetterX;
    case 'Z': case 'z': return kLetterZ;
    case 'Y': case 'y': return kLetterY;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "' (expected I, X, Y or Z)");
  }
}

PauliOperator::PauliOperator(size_t num_qubits)
    : num_qubits_(num_qubits),
      x_words_(word_count(num_qubits), 0),
      z_words_(word_count(num_qubits), 0) {}

PauliOperator PauliOperator::from_string(std::string_view s) {
  PauliOperator p(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    p.set_letter_code(i, letter_from_char(s[i]));
  }
  return p;
}

std::string PauliOperator::to_string() const {
  std::string s(num_qubits_, 'I');
  for (size_t i = 0; i < num_qubits_; ++i) {
    s[i] = letter(i);
  }
  return s;
}

bool PauliOperator::is_identity() const {
  for (size_t i = 0; i < x_words_.size(); ++i) {
    if (x_words_[i] != 0 || z_words_[i] != 0) return false;
  }
  return true;
}

void PauliOperator::clear() {
  std::fill(x_words_.begin(), x_words_.end(), 0);
  std::fill(z_words_.begin(), z_words_.end(), 0);
}

void PauliOperator::check_same_size(const PauliOperator& other) const {
  if (num_qubits_ != other.num_qubits_) {
    throw DimensionError("Pauli operands act on " + std::to_string(num_qubits_) + " and " +
                         std::to_string(other.num_qubits_) + " qubits");
  }
}

PauliOperator PauliOperator::multiplied_by(const PauliOperator& other) const {
  PauliOperator result = *this;
  result.multiply_inplace(other);
  return result;
}

void PauliOperator::multiply_inplace(const PauliOperator& other) {
  check_same_size(other);
  for (size_t i = 0; i < x_words_.size(); ++i) {
    x_words_[i] ^= other.x_words_[i];
    z_words_[i] ^= other.z_words_[i];
  }
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  check_same_size(other);
  uint64_t acc = 0;
  for (size_t i = 0; i < x_words_.size(); ++i) {
    acc ^= x_words_[i] & other.z_words_[i];
    acc ^= z_words_[i] & other.x_words_[i];
  }
  return (std::popcount(acc) & 1) == 0;
}

PauliWeights PauliOperator::weights() const {
  PauliWeights w;
  for (size_t i = 0; i < x_words_.size(); ++i) {
    w.total += std::popcount(x_words_[i] | z_words_[i]);
    w.x += std::popcount(x_words_[i]);
    w.z += std::popcount(z_words_[i]);
  }
  return w;
}

PauliOperator PauliOperator::extract_block(size_t begin, size_t count) const {
  if (begin + count > num_qubits_) {
    throw DimensionError("block [" + std::to_string(begin) + ", " + std::to_string(begin + count) +
                         ") exceeds operator size " + std::to_string(num_qubits_));
  }
  PauliOperator block(count);
  for (size_t i = 0; i < count; ++i) {
    block.set_letter_code(i, letter_code(begin + i));
  }
  return block;
}

bool PauliOperator::operator==(const PauliOperator& other) const {
  return num_qubits_ == other.num_qubits_ && x_words_ == other.x_words_ &&
         z_words_ == other.z_words_;
}

PauliOperator sample_fixed_weight(size_t weight, size_t num_qubits, Rng& rng) {
  if (weight > num_qubits) {
    throw std::invalid_argument("requested weight " + std::to_string(weight) +
                                " exceeds qubit count " + std::to_string(num_qubits));
  }
  PauliOperator p(num_qubits);
  // Partial Fisher-Yates to pick the support uniformly.
  std::vector<uint32_t> positions(num_qubits);
  for (size_t i = 0; i < num_qubits; ++i) positions[i] = static_cast<uint32_t>(i);
  for (size_t i = 0; i < weight; ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(num_qubits - i));
    std::swap(positions[i], positions[j]);
    const uint8_t code = static_cast<uint8_t>(1 + rng.next_below(3));  // X, Z or Y
    p.set_letter_code(positions[i], code);
  }
  return p;
}

}  // namespace qauth
