#include "qauth/concatenated_code.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qauth/errors.hpp"
#include "qauth/numeric.hpp"

namespace qauth {

ConcatenatedCode::ConcatenatedCode(const StabilizerCode& base, unsigned levels)
    : base_(&base), levels_(levels), n_total_(1), d_total_(1) {
  for (unsigned l = 0; l < levels; ++l) {
    if (n_total_ > UINT64_MAX / base.n()) {
      throw std::invalid_argument("concatenation level count overflows the qubit count");
    }
    n_total_ *= base.n();
    d_total_ *= base.distance();
  }
}

void ConcatenatedCode::check_dims(const PauliOperator& error) const {
  if (error.num_qubits() != n_total_) {
    throw DimensionError("error acts on " + std::to_string(error.num_qubits()) +
                         " qubits, concatenated code has " + std::to_string(n_total_));
  }
}

char ConcatenatedCode::decode(const PauliOperator& error) const {
  check_dims(error);
  if (levels_ == 0) return error.letter(0);
  std::vector<uint8_t> letters(n_total_);
  for (size_t q = 0; q < n_total_; ++q) letters[q] = error.letter_code(q);
  return letter_to_char(decode_letters(letters.data()));
}

uint8_t ConcatenatedCode::decode_letters(const uint8_t* letters) const {
  const size_t nb = base_->n();
  size_t count = static_cast<size_t>(n_total_);
  if (levels_ == 0) return letters[0];
  std::vector<uint8_t> cur(letters, letters + count);
  while (count > 1) {
    const size_t blocks = count / nb;
    for (size_t b = 0; b < blocks; ++b) {
      uint32_t x_mask = 0, z_mask = 0;
      for (size_t q = 0; q < nb; ++q) {
        const uint8_t code = cur[b * nb + q];
        x_mask |= static_cast<uint32_t>(code & 1) << q;
        z_mask |= static_cast<uint32_t>((code >> 1) & 1) << q;
      }
      cur[b] = base_->decode_mask(x_mask, z_mask);
    }
    count = blocks;
  }
  return cur[0];
}

ErrorClass ConcatenatedCode::classify(const PauliOperator& error) const {
  check_dims(error);
  std::vector<uint8_t> letters(n_total_ > 0 ? n_total_ : 1);
  for (size_t q = 0; q < n_total_; ++q) letters[q] = error.letter_code(q);
  return classify_letters(letters.data());
}

ErrorClass ConcatenatedCode::classify_letters(const uint8_t* letters) const {
  if (levels_ == 0) {
    return letters[0] == kLetterI ? ErrorClass::kInStabilizer : ErrorClass::kUndetectedLogical;
  }
  const size_t nb = base_->n();
  size_t count = static_cast<size_t>(n_total_);
  std::vector<uint8_t> cur(letters, letters + count);
  while (count > 1) {
    const size_t blocks = count / nb;
    for (size_t b = 0; b < blocks; ++b) {
      uint32_t x_mask = 0, z_mask = 0;
      for (size_t q = 0; q < nb; ++q) {
        const uint8_t code = cur[b * nb + q];
        x_mask |= static_cast<uint32_t>(code & 1) << q;
        z_mask |= static_cast<uint32_t>((code >> 1) & 1) << q;
      }
      if (base_->syndrome_mask(x_mask, z_mask) != 0) return ErrorClass::kDetected;
      // Zero syndrome: the block is exactly its logical action.
      cur[b] = base_->decode_mask(x_mask, z_mask);
    }
    count = blocks;
  }
  return cur[0] == kLetterI ? ErrorClass::kInStabilizer : ErrorClass::kUndetectedLogical;
}

double failure_bound(const StabilizerCode& base, unsigned levels, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
  }
  if (levels < 1) throw std::invalid_argument("failure_bound needs at least one level");
  if (p == 0.0) return 0.0;
  const double c = binomial_coefficient(base.n(), base.t() + 1);
  const double exponent = std::pow(static_cast<double>(base.t() + 1), static_cast<double>(levels));
  const double log_value = -std::log(c) + exponent * std::log(c * p);
  if (log_value >= 0.0) return 1.0;
  return std::exp(log_value);
}

double threshold_value(const StabilizerCode& base) {
  return 1.0 / binomial_coefficient(base.n(), base.t() + 1);
}

}  // namespace qauth
