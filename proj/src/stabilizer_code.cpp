#include "qauth/stabilizer_code.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "qauth/errors.hpp"

namespace qauth {

namespace {

inline int anticommute_bit(uint32_t ax, uint32_t az, uint32_t bx, uint32_t bz) {
  return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, unsigned distance,
                               std::vector<std::string> generator_strings,
                               std::string_view logical_x, std::string_view logical_z)
    : name_(std::move(name)), distance_(distance) {
  for (const auto& s : generator_strings) {
    generators_.push_back(PauliOperator::from_string(s));
  }
  if (generators_.empty()) throw std::invalid_argument("stabilizer code needs generators");
  n_ = generators_[0].num_qubits();
  if (n_ > 16) throw std::invalid_argument("lookup-table codes support at most 16 qubits");
  if (generators_.size() != n_ - 1) {
    throw std::invalid_argument("a [[n,1,d]] code needs n-1 generators");
  }
  logical_x_ = PauliOperator::from_string(logical_x);
  logical_z_ = PauliOperator::from_string(logical_z);

  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].num_qubits() != n_) throw DimensionError("generator size mismatch");
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      if (!generators_[i].commutes_with(generators_[j])) {
        throw std::invalid_argument("stabilizer generators must commute");
      }
    }
    if (!logical_x_.commutes_with(generators_[i]) || !logical_z_.commutes_with(generators_[i])) {
      throw std::invalid_argument("logical operators must commute with the stabilizer");
    }
  }
  if (logical_x_.commutes_with(logical_z_)) {
    throw std::invalid_argument("logical X and Z must anticommute");
  }

  for (const auto& g : generators_) {
    gen_x_masks_.push_back(g.x_mask32());
    gen_z_masks_.push_back(g.z_mask32());
  }
  logical_x_xmask_ = logical_x_.x_mask32();
  logical_x_zmask_ = logical_x_.z_mask32();
  logical_z_xmask_ = logical_z_.x_mask32();
  logical_z_zmask_ = logical_z_.z_mask32();

  build_tables();
}

uint32_t StabilizerCode::syndrome_mask(uint32_t x_mask, uint32_t z_mask) const {
  uint32_t s = 0;
  for (size_t j = 0; j < gen_x_masks_.size(); ++j) {
    s |= static_cast<uint32_t>(anticommute_bit(x_mask, z_mask, gen_x_masks_[j], gen_z_masks_[j]))
         << j;
  }
  return s;
}

uint32_t StabilizerCode::syndrome(const PauliOperator& error) const {
  if (error.num_qubits() != n_) {
    throw DimensionError("error acts on " + std::to_string(error.num_qubits()) +
                         " qubits, code has " + std::to_string(n_));
  }
  return syndrome_mask(error.x_mask32(), error.z_mask32());
}

ErrorClass StabilizerCode::classify(const PauliOperator& error) const {
  syndrome(error);  // dimension check
  return classify_mask(error.x_mask32(), error.z_mask32());
}

char StabilizerCode::decode_to_logical(const PauliOperator& error) const {
  syndrome(error);  // dimension check
  return letter_to_char(decode_mask(error.x_mask32(), error.z_mask32()));
}

void StabilizerCode::build_tables() {
  const uint32_t num_masks = uint32_t{1} << n_;
  const size_t num_syndromes = size_t{1} << (n_ - 1);

  // Minimum-weight coset representative per syndrome; ties broken by the
  // lexicographically smallest (x bits, z bits) pair for determinism.
  struct Entry {
    bool set = false;
    int weight = 0;
    uint32_t x = 0, z = 0;
  };
  std::vector<Entry> best(num_syndromes);
  for (uint32_t x = 0; x < num_masks; ++x) {
    for (uint32_t z = 0; z < num_masks; ++z) {
      const int w = std::popcount(x | z);
      const uint32_t s = syndrome_mask(x, z);
      Entry& e = best[s];
      if (!e.set || w < e.weight || (w == e.weight && (x < e.x || (x == e.x && z < e.z)))) {
        e = {true, w, x, z};
      }
    }
  }
  decode_table_.resize(num_syndromes);
  for (size_t s = 0; s < num_syndromes; ++s) {
    if (!best[s].set) throw std::logic_error("uncovered syndrome in decode table");
    PauliOperator c(n_);
    for (size_t q = 0; q < n_; ++q) {
      c.set_letter_code(q, static_cast<uint8_t>(((best[s].x >> q) & 1) |
                                                (((best[s].z >> q) & 1) << 1)));
    }
    decode_table_[s] = std::move(c);
  }

  residual_table_.resize(static_cast<size_t>(num_masks) * num_masks);
  class_table_.resize(residual_table_.size());
  for (uint32_t x = 0; x < num_masks; ++x) {
    for (uint32_t z = 0; z < num_masks; ++z) {
      const uint32_t s = syndrome_mask(x, z);
      const uint32_t rx = x ^ best[s].x;
      const uint32_t rz = z ^ best[s].z;
      const int anti_lz = anticommute_bit(rx, rz, logical_z_xmask_, logical_z_zmask_);
      const int anti_lx = anticommute_bit(rx, rz, logical_x_xmask_, logical_x_zmask_);
      // Residual acts as X iff it anticommutes with logical Z, as Z iff it
      // anticommutes with logical X, as Y iff both.
      residual_table_[table_index(x, z)] = static_cast<uint8_t>(anti_lz | (anti_lx << 1));
      ErrorClass cls;
      if (s != 0) {
        cls = ErrorClass::kDetected;
      } else if (anticommute_bit(x, z, logical_z_xmask_, logical_z_zmask_) ||
                 anticommute_bit(x, z, logical_x_xmask_, logical_x_zmask_)) {
        cls = ErrorClass::kUndetectedLogical;
      } else {
        cls = ErrorClass::kInStabilizer;
      }
      class_table_[table_index(x, z)] = static_cast<uint8_t>(cls);
    }
  }
}

const StabilizerCode& StabilizerCode::five_qubit() {
  static const StabilizerCode code("five_qubit", 3, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"},
                                   "XXXXX", "ZZZZZ");
  return code;
}

const StabilizerCode& StabilizerCode::steane() {
  static const StabilizerCode code(
      "steane", 3,
      {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"},
      "XXXXXXX", "ZZZZZZZ");
  return code;
}

const StabilizerCode& StabilizerCode::builtin(std::string_view name) {
  if (name == "five" || name == "five_qubit") return five_qubit();
  if (name == "steane") return steane();
  throw UnknownNameError("unknown code name '" + std::string(name) +
                         "' (expected \"five\" or \"steane\")");
}

}  // namespace qauth
