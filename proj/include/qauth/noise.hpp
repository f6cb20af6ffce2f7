#pragma once

#include "qauth/pauli.hpp"
#include "qauth/rng.hpp"

namespace qauth {

// i.i.d. single-qubit Pauli noise: each qubit independently suffers X, Y or Z
// with the given probabilities and is left alone otherwise.
struct PauliChannel {
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  PauliChannel() = default;
  PauliChannel(double px, double py, double pz);  // validates, throws std::invalid_argument

  double error_mass() const { return p_x + p_y + p_z; }
  double identity_mass() const { return 1.0 - error_mass(); }
};

// Depolarizing channel with total error probability p: each Pauli applied
// with probability p/3.
PauliChannel depolarizing(double p);

struct TrapTriggerProbs {
  double computational;  // a |0> trap flips iff the error has an X component
  double hadamard;       // a |+> trap flips iff the error has a Z component
};
TrapTriggerProbs trap_trigger_probabilities(const PauliChannel& channel);

PauliOperator sample_from_channel(const PauliChannel& channel, size_t num_qubits, Rng& rng);
// In-place variant for hot loops; `out` keeps its qubit count.
void resample_from_channel(PauliOperator& out, const PauliChannel& channel, Rng& rng);

}  // namespace qauth
