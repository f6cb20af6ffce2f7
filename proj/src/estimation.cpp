#include "qauth/estimation.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qauth/adversary.hpp"
#include "qauth/errors.hpp"
#include "qauth/numeric.hpp"

namespace qauth {

namespace {

struct TrialCounts {
  uint64_t failures = 0;
  uint64_t rejects = 0;
  uint64_t harms = 0;
  uint64_t coset = 0;

  void operator+=(const TrialCounts& other) {
    failures += other.failures;
    rejects += other.rejects;
    harms += other.harms;
    coset += other.coset;
  }
};

// Runs per_trial(index, counts) for every index in [0, trials), partitioned
// over threads. Each trial derives its own rng stream, so the aggregate is
// identical for every thread count.
template <typename Fn>
TrialCounts run_trials(uint64_t trials, unsigned threads, const Fn& per_trial) {
  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count < 1) worker_count = 1;
  if (worker_count > trials) worker_count = static_cast<unsigned>(trials);

  if (worker_count <= 1) {
    TrialCounts counts;
    for (uint64_t i = 0; i < trials; ++i) per_trial(i, counts);
    return counts;
  }

  std::vector<TrialCounts> partial(worker_count);
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  const uint64_t chunk = trials / worker_count;
  const uint64_t remainder = trials % worker_count;
  uint64_t begin = 0;
  for (unsigned t = 0; t < worker_count; ++t) {
    const uint64_t end = begin + chunk + (t < remainder ? 1 : 0);
    workers.emplace_back([&, t, begin, end] {
      for (uint64_t i = begin; i < end; ++i) per_trial(i, partial[t]);
    });
    begin = end;
  }
  for (auto& w : workers) w.join();
  TrialCounts total;
  for (const auto& p : partial) total += p;
  return total;
}

void tally(const DecodeOutcome& outcome, TrialCounts& counts, bool correctness_mode) {
  if (!outcome.accepted) {
    ++counts.rejects;
    if (correctness_mode) ++counts.failures;
  } else if (outcome.residual != 'I') {
    ++counts.harms;
    ++counts.failures;
  }
  if (outcome.coset_harm) ++counts.coset;
}

EstimateResult make_result(const TrialCounts& counts, uint64_t trials, uint64_t seed) {
  EstimateResult r;
  r.trials = trials;
  r.failures = counts.failures;
  r.rejects = counts.rejects;
  r.harms = counts.harms;
  r.coset_harms = counts.coset;
  r.master_seed = seed;
  fill_interval(r);
  return r;
}

}  // namespace

void fill_interval(EstimateResult& result) {
  if (result.trials == 0) {
    result.point = result.ci_low = result.ci_high = 0.0;
    return;
  }
  const double n = static_cast<double>(result.trials);
  result.point = static_cast<double>(result.failures) / n;

  constexpr double kAlphaOneSided = 0.01;
  if (result.failures == 0) {
    // Exact one-sided Clopper-Pearson upper bound at 99%.
    result.ci_low = 0.0;
    result.ci_high = 1.0 - std::pow(kAlphaOneSided, 1.0 / n);
    return;
  }
  if (result.failures == result.trials) {
    result.ci_low = std::pow(kAlphaOneSided, 1.0 / n);
    result.ci_high = 1.0;
    return;
  }
  constexpr double z = 2.5758293035489004;  // two-sided 99% normal quantile
  const double p = result.point;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = p + z2 / (2.0 * n);
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  result.ci_low = std::max(0.0, (center - half) / denom);
  result.ci_high = std::min(1.0, (center + half) / denom);
}

EstimateResult estimate_correctness(const SchemeSpec& scheme, const PauliChannel& channel,
                                    uint64_t trials, uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("estimate needs at least one trial");
  const size_t qubits = scheme.total_qubits();
  const bool needs_key = scheme.kind != SchemeKind::kClifford;

  const TrialCounts counts = run_trials(trials, threads, [&](uint64_t idx, TrialCounts& c) {
    Rng rng(derive_seed(master_seed, idx));
    PermutationKey key;
    const PermutationKey* key_ptr = nullptr;
    if (needs_key) {
      key = keygen(scheme, rng);
      key_ptr = &key;
    }
    PauliOperator error(qubits);
    resample_from_channel(error, channel, rng);
    tally(decode_with_scheme(scheme, key_ptr, error, rng), c, /*correctness_mode=*/true);
  });
  return make_result(counts, trials, master_seed);
}

EstimateResult estimate_security(const SchemeSpec& scheme, const AttackSpec& attack,
                                 uint64_t key_trials, uint64_t master_seed, unsigned threads) {
  if (key_trials < 1) throw std::invalid_argument("estimate needs at least one trial");
  const size_t qubits = scheme.total_qubits();
  const bool needs_key = scheme.kind != SchemeKind::kClifford;
  if (attack.kind == AttackSpec::Kind::kFixedPattern &&
      attack.pattern.num_qubits() != qubits) {
    throw DimensionError("attack pattern acts on " + std::to_string(attack.pattern.num_qubits()) +
                         " qubits, scheme has " + std::to_string(qubits));
  }
  if (attack.kind == AttackSpec::Kind::kFixedWeight && attack.weight > qubits) {
    throw std::invalid_argument("attack weight exceeds the scheme's qubit count");
  }

  const TrialCounts counts = run_trials(key_trials, threads, [&](uint64_t idx, TrialCounts& c) {
    Rng rng(derive_seed(master_seed, idx));
    PermutationKey key;
    const PermutationKey* key_ptr = nullptr;
    if (needs_key) {
      key = keygen(scheme, rng);
      key_ptr = &key;
    }
    const PauliOperator error = realize_attack(attack, qubits, rng);
    tally(decode_with_scheme(scheme, key_ptr, error, rng), c, /*correctness_mode=*/false);
  });
  return make_result(counts, key_trials, master_seed);
}

EstimateResult estimate_code_failure(const StabilizerCode& base, unsigned levels, double p,
                                     uint64_t trials, uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("estimate needs at least one trial");
  const ConcatenatedCode code(base, levels);
  const PauliChannel channel = depolarizing(p);
  const size_t qubits = static_cast<size_t>(code.n_total());

  const TrialCounts counts = run_trials(trials, threads, [&](uint64_t idx, TrialCounts& c) {
    Rng rng(derive_seed(master_seed, idx));
    PauliOperator error(qubits);
    resample_from_channel(error, channel, rng);
    if (code.decode(error) != 'I') {
      ++c.failures;
      ++c.harms;
    }
    if (code.classify(error) == ErrorClass::kUndetectedLogical) ++c.coset;
  });
  return make_result(counts, trials, master_seed);
}

OracleResult exact_purity_oracle(const SchemeSpec& scheme, size_t num_x, size_t num_y,
                                 size_t num_z) {
  if (scheme.kind == SchemeKind::kClifford) {
    throw std::invalid_argument("the permutation oracle covers trap and threshold schemes");
  }
  if (scheme.outer) {
    throw std::invalid_argument("the permutation oracle covers schemes without an outer code");
  }
  const ConcatenatedCode& inner = *scheme.inner;
  const size_t n = static_cast<size_t>(inner.n_total());
  if (n > 7) {
    throw SizeError("oracle instance too large: inner code has " + std::to_string(n) +
                    " qubits (limit 7)");
  }
  const size_t total_letters = num_x + num_y + num_z;
  if (total_letters > 3 * n) {
    throw std::invalid_argument("letter multiset of size " + std::to_string(total_letters) +
                                " exceeds the scheme's " + std::to_string(3 * n) + " positions");
  }
  const size_t reject_count = scheme.kind == SchemeKind::kTrap ? 1 : scheme.threshold_count;

  // Placement counts on the data block, per letter triple: how many distinct
  // (support, letter assignment) pairs decode to a non-identity residual /
  // classify as an undetected logical.
  const size_t side = n + 1;
  std::vector<uint64_t> harm_dec(side * side * side, 0);
  std::vector<uint64_t> harm_coset(side * side * side, 0);
  const auto triple_index = [side](size_t a, size_t b, size_t c) {
    return (a * side + b) * side + c;
  };
  std::vector<uint8_t> letters(n);
  const uint32_t num_masks = uint32_t{1} << n;
  for (uint32_t x = 0; x < num_masks; ++x) {
    for (uint32_t z = 0; z < num_masks; ++z) {
      size_t cx = 0, cy = 0, cz = 0;
      for (size_t q = 0; q < n; ++q) {
        const uint8_t code = static_cast<uint8_t>(((x >> q) & 1) | (((z >> q) & 1) << 1));
        letters[q] = code;
        cx += code == kLetterX;
        cy += code == kLetterY;
        cz += code == kLetterZ;
      }
      if (cx > num_x || cy > num_y || cz > num_z) continue;
      const size_t idx = triple_index(cx, cy, cz);
      if (inner.decode_letters(letters.data()) != kLetterI) ++harm_dec[idx];
      if (inner.classify_letters(letters.data()) == ErrorClass::kUndetectedLogical) {
        ++harm_coset[idx];
      }
    }
  }

  const auto arrangements = [](size_t slots, size_t a, size_t b, size_t c) -> uint64_t {
    if (a + b + c > slots) return 0;
    return binomial_coefficient_u64(slots, a) * binomial_coefficient_u64(slots - a, b) *
           binomial_coefficient_u64(slots - a - b, c);
  };

  uint64_t numer_dec = 0;
  uint64_t numer_coset = 0;
  for (size_t xd = 0; xd <= num_x; ++xd) {
    for (size_t xc = 0; xd + xc <= num_x; ++xc) {
      const size_t xh = num_x - xd - xc;
      for (size_t yd = 0; yd <= num_y; ++yd) {
        for (size_t yc = 0; yd + yc <= num_y; ++yc) {
          const size_t yh = num_y - yd - yc;
          for (size_t zd = 0; zd <= num_z; ++zd) {
            for (size_t zc = 0; zd + zc <= num_z; ++zc) {
              const size_t zh = num_z - zd - zc;
              if (xd + yd + zd > n || xc + yc + zc > n || xh + yh + zh > n) continue;
              // |0> traps flip on X components, |+> traps on Z components.
              const size_t triggered = (xc + yc) + (zh + yh);
              if (triggered >= reject_count) continue;
              const uint64_t comp = arrangements(n, xc, yc, zc);
              const uint64_t had = arrangements(n, xh, yh, zh);
              const uint64_t weight = comp * had;
              const size_t idx = triple_index(xd, yd, zd);
              numer_dec += weight * harm_dec[idx];
              numer_coset += weight * harm_coset[idx];
            }
          }
        }
      }
    }
  }

  const uint64_t denom = arrangements(3 * n, num_x, num_y, num_z);
  OracleResult result;
  result.decoder_harm = static_cast<double>(numer_dec) / static_cast<double>(denom);
  result.coset_harm = static_cast<double>(numer_coset) / static_cast<double>(denom);
  return result;
}

}  // namespace qauth
