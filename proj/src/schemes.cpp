#include "qauth/schemes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qauth/errors.hpp"

namespace qauth {

SchemeSpec SchemeSpec::trap(ConcatenatedCode inner, std::optional<ConcatenatedCode> outer) {
  SchemeSpec s;
  s.kind = SchemeKind::kTrap;
  s.inner = std::move(inner);
  s.outer = std::move(outer);
  return s;
}

SchemeSpec SchemeSpec::threshold(ConcatenatedCode inner, double alpha,
                                 std::optional<ConcatenatedCode> outer) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("threshold parameter alpha must lie in (0, 1), got " +
                                std::to_string(alpha));
  }
  SchemeSpec s;
  s.kind = SchemeKind::kThreshold;
  s.alpha = alpha;
  s.threshold_count = threshold_reject_count(alpha, static_cast<size_t>(inner.n_total()));
  s.inner = std::move(inner);
  s.outer = std::move(outer);
  return s;
}

SchemeSpec SchemeSpec::clifford(size_t num_traps, size_t data_size,
                                std::optional<ConcatenatedCode> outer) {
  if (num_traps < 1) throw std::invalid_argument("clifford scheme needs at least one trap");
  if (data_size < 1) throw std::invalid_argument("clifford data size must be positive");
  SchemeSpec s;
  s.kind = SchemeKind::kClifford;
  s.num_traps = num_traps;
  s.data_size = data_size;
  s.outer = std::move(outer);
  return s;
}

size_t SchemeSpec::register_count() const {
  if (kind == SchemeKind::kClifford) return data_size + num_traps;
  return 3 * static_cast<size_t>(inner->n_total());
}

size_t SchemeSpec::total_qubits() const {
  return register_count() * (outer ? static_cast<size_t>(outer->n_total()) : 1);
}

size_t threshold_reject_count(double alpha, size_t num_inner_qubits) {
  const double target = alpha * static_cast<double>(num_inner_qubits);
  // "Fewer than alpha*n" rejects at ceil(alpha*n), except exactly at integer
  // points where alpha*n itself already rejects. The epsilon absorbs the
  // floating-point representation of alpha.
  return static_cast<size_t>(std::ceil(target - 1e-9));
}

PermutationKey keygen(const SchemeSpec& scheme, Rng& rng) {
  if (scheme.kind == SchemeKind::kClifford) {
    throw std::invalid_argument("clifford schemes use no permutation key");
  }
  const size_t n = static_cast<size_t>(scheme.inner->n_total());
  PermutationKey key;
  key.block_size = n;
  key.perm.resize(3 * n);
  for (size_t i = 0; i < key.perm.size(); ++i) key.perm[i] = static_cast<uint32_t>(i);
  for (size_t i = 0; i + 1 < key.perm.size(); ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(key.perm.size() - i));
    std::swap(key.perm[i], key.perm[j]);
  }
  return key;
}

namespace {

void check_register_error(const PermutationKey& key, const ConcatenatedCode& inner,
                          const PauliOperator& error) {
  const size_t n = static_cast<size_t>(inner.n_total());
  if (key.block_size != n || key.perm.size() != 3 * n) {
    throw DimensionError("permutation key does not match the inner code size");
  }
  if (error.num_qubits() != 3 * n) {
    throw DimensionError("error acts on " + std::to_string(error.num_qubits()) +
                         " qubits, scheme has " + std::to_string(3 * n));
  }
}

DecodeOutcome decode_data_block(const PermutationKey& key, const ConcatenatedCode& inner,
                                const PauliOperator& error) {
  const size_t n = static_cast<size_t>(inner.n_total());
  PauliOperator data(n);
  for (size_t j = 0; j < n; ++j) {
    data.set_letter_code(j, error.letter_code(key.perm[j]));
  }
  const char residual = inner.decode(data);
  const bool coset = inner.classify(data) == ErrorClass::kUndetectedLogical;
  return DecodeOutcome::accept(residual, coset);
}

}  // namespace

DecodeOutcome trap_decode(const PermutationKey& key, const ConcatenatedCode& inner,
                          const PauliOperator& error) {
  check_register_error(key, inner, error);
  const size_t n = key.block_size;
  for (size_t j = n; j < 2 * n; ++j) {
    if (error.x_bit(key.perm[j])) return DecodeOutcome::reject();
  }
  for (size_t j = 2 * n; j < 3 * n; ++j) {
    if (error.z_bit(key.perm[j])) return DecodeOutcome::reject();
  }
  return decode_data_block(key, inner, error);
}

DecodeOutcome threshold_decode(const PermutationKey& key, const ConcatenatedCode& inner,
                               size_t reject_count, const PauliOperator& error) {
  check_register_error(key, inner, error);
  const size_t n = key.block_size;
  size_t triggered = 0;
  for (size_t j = n; j < 2 * n; ++j) {
    triggered += error.x_bit(key.perm[j]);
  }
  for (size_t j = 2 * n; j < 3 * n; ++j) {
    triggered += error.z_bit(key.perm[j]);
  }
  if (triggered >= reject_count) return DecodeOutcome::reject();
  return decode_data_block(key, inner, error);
}

DecodeOutcome clifford_decode(size_t num_traps, size_t data_size, bool attack_nonidentity,
                              Rng& rng) {
  if (num_traps < 1 || data_size < 1) {
    throw std::invalid_argument("clifford decode needs positive trap and data counts");
  }
  if (!attack_nonidentity) return DecodeOutcome::accept('I', false);

  // The twirl image of any non-identity Pauli: uniform over non-identity
  // Paulis on data + trap qubits. Per-qubit rejection sampling preserves
  // uniformity.
  const size_t total = data_size + num_traps;
  std::vector<uint8_t> codes(total);
  bool all_identity = true;
  do {
    all_identity = true;
    for (size_t q = 0; q < total; ++q) {
      codes[q] = static_cast<uint8_t>(rng.next_below(4));
      all_identity = all_identity && codes[q] == kLetterI;
    }
  } while (all_identity);

  for (size_t q = data_size; q < total; ++q) {
    if (codes[q] & 1) return DecodeOutcome::reject();  // X component on a |0> trap
  }
  char residual = 'I';
  for (size_t q = 0; q < data_size; ++q) {
    if (codes[q] != kLetterI) {
      residual = letter_to_char(codes[q]);
      break;
    }
  }
  return DecodeOutcome::accept(residual, residual != 'I');
}

DecodeOutcome composed_decode(const SchemeSpec& scheme, const PermutationKey* key,
                              const PauliOperator& error, Rng& rng) {
  if (!scheme.outer) throw std::invalid_argument("composed decode needs an outer code");
  const size_t blocks = scheme.register_count();
  const size_t block_qubits = static_cast<size_t>(scheme.outer->n_total());
  if (error.num_qubits() != blocks * block_qubits) {
    throw DimensionError("error acts on " + std::to_string(error.num_qubits()) +
                         " qubits, composed scheme has " + std::to_string(blocks * block_qubits));
  }
  PauliOperator register_error(blocks);
  for (size_t b = 0; b < blocks; ++b) {
    const PauliOperator block = error.extract_block(b * block_qubits, block_qubits);
    register_error.set_letter(b, scheme.outer->decode(block));
  }
  SchemeSpec bare = scheme;
  bare.outer.reset();
  return decode_with_scheme(bare, key, register_error, rng);
}

DecodeOutcome decode_with_scheme(const SchemeSpec& scheme, const PermutationKey* key,
                                 const PauliOperator& error, Rng& rng) {
  if (scheme.outer) return composed_decode(scheme, key, error, rng);
  switch (scheme.kind) {
    case SchemeKind::kTrap:
      if (!key) throw std::invalid_argument("trap decode needs a permutation key");
      return trap_decode(*key, *scheme.inner, error);
    case SchemeKind::kThreshold:
      if (!key) throw std::invalid_argument("threshold decode needs a permutation key");
      return threshold_decode(*key, *scheme.inner, scheme.threshold_count, error);
    case SchemeKind::kClifford:
      return clifford_decode(scheme.num_traps, scheme.data_size, !error.is_identity(), rng);
  }
  throw std::logic_error("unreachable scheme kind");
}

}  // namespace qauth
