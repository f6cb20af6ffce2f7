#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qauth/pauli.hpp"

namespace qauth {

enum class ErrorClass : uint8_t {
  kInStabilizer,       // commutes with everything, acts trivially
  kDetected,           // anticommutes with some generator (non-zero syndrome)
  kUndetectedLogical,  // zero syndrome but non-trivial logical action
};

// A base [[n, 1, d]] stabilizer code with syndrome extraction and
// minimum-weight lookup-table decoding. Instances are immutable after
// construction and safe for concurrent reads.
//
// Decoding convention: for syndrome s the correction is the minimum-weight
// Pauli with that syndrome, ties broken by lexicographically smallest
// (x bits, z bits) pair; the residual is the logical action of
// error * correction. This always succeeds, possibly with a non-identity
// residual when more than t errors are present.
class StabilizerCode {
 public:
  StabilizerCode(std::string name, unsigned distance, std::vector<std::string> generator_strings,
                 std::string_view logical_x, std::string_view logical_z);

  // Builtin codes, constructed once.
  static const StabilizerCode& five_qubit();  // [[5,1,3]] cyclic code
  static const StabilizerCode& steane();      // [[7,1,3]] CSS code
  // Accepts "five", "five_qubit" or "steane"; throws UnknownNameError otherwise.
  static const StabilizerCode& builtin(std::string_view name);

  const std::string& name() const { return name_; }
  size_t n() const { return n_; }
  unsigned distance() const { return distance_; }
  unsigned t() const { return (distance_ - 1) / 2; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  const PauliOperator& logical_x() const { return logical_x_; }
  const PauliOperator& logical_z() const { return logical_z_; }

  // Bit j of the result is set iff the error anticommutes with generator j.
  uint32_t syndrome(const PauliOperator& error) const;
  const PauliOperator& correction(uint32_t syndrome) const { return decode_table_[syndrome]; }

  ErrorClass classify(const PauliOperator& error) const;
  // Residual logical letter ('I', 'X', 'Y' or 'Z') after correction.
  char decode_to_logical(const PauliOperator& error) const;

  // Table-lookup fast paths on packed masks (bit q = qubit q). These carry the
  // Monte Carlo hot loops.
  uint8_t decode_mask(uint32_t x_mask, uint32_t z_mask) const {
    return residual_table_[table_index(x_mask, z_mask)];
  }
  ErrorClass classify_mask(uint32_t x_mask, uint32_t z_mask) const {
    return static_cast<ErrorClass>(class_table_[table_index(x_mask, z_mask)]);
  }
  uint32_t syndrome_mask(uint32_t x_mask, uint32_t z_mask) const;

 private:
  size_t table_index(uint32_t x_mask, uint32_t z_mask) const {
    return static_cast<size_t>(x_mask) | (static_cast<size_t>(z_mask) << n_);
  }
  void build_tables();

  std::string name_;
  size_t n_ = 0;
  unsigned distance_ = 0;
  std::vector<PauliOperator> generators_;
  PauliOperator logical_x_;
  PauliOperator logical_z_;
  std::vector<uint32_t> gen_x_masks_;
  std::vector<uint32_t> gen_z_masks_;
  uint32_t logical_x_xmask_ = 0, logical_x_zmask_ = 0;
  uint32_t logical_z_xmask_ = 0, logical_z_zmask_ = 0;
  std::vector<PauliOperator> decode_table_;   // syndrome -> minimum-weight correction
  std::vector<uint8_t> residual_table_;       // (x,z) mask -> residual letter code
  std::vector<uint8_t> class_table_;          // (x,z) mask -> ErrorClass
};

inline uint32_t syndrome(const StabilizerCode& code, const PauliOperator& error) {
  return code.syndrome(error);
}
inline ErrorClass classify(const StabilizerCode& code, const PauliOperator& error) {
  return code.classify(error);
}
inline char decode_to_logical(const StabilizerCode& code, const PauliOperator& error) {
  return code.decode_to_logical(error);
}

}  // namespace qauth
