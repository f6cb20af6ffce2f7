#include "qauth/noise.hpp"

#include <stdexcept>
#include <string>

namespace qauth {

namespace {
void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}
}  // namespace

PauliChannel::PauliChannel(double px, double py, double pz) : p_x(px), p_y(py), p_z(pz) {
  check_probability(px, "p_x");
  check_probability(py, "p_y");
  check_probability(pz, "p_z");
  if (px + py + pz > 1.0 + 1e-12) {
    throw std::invalid_argument("p_x + p_y + p_z = " + std::to_string(px + py + pz) +
                                " exceeds 1");
  }
}

PauliChannel depolarizing(double p) {
  check_probability(p, "p");
  return PauliChannel(p / 3.0, p / 3.0, p / 3.0);
}

TrapTriggerProbs trap_trigger_probabilities(const PauliChannel& channel) {
  return {channel.p_x + channel.p_y, channel.p_z + channel.p_y};
}

PauliOperator sample_from_channel(const PauliChannel& channel, size_t num_qubits, Rng& rng) {
  PauliOperator p(num_qubits);
  resample_from_channel(p, channel, rng);
  return p;
}

void resample_from_channel(PauliOperator& out, const PauliChannel& channel, Rng& rng) {
  const double t1 = channel.p_x;
  const double t2 = channel.p_x + channel.p_y;
  double t3 = channel.p_x + channel.p_y + channel.p_z;
  // Snap an all-error channel to exactly 1 so rounding cannot leak identity mass.
  if (t3 > 1.0 - 1e-12) t3 = 1.0;
  for (size_t q = 0; q < out.num_qubits(); ++q) {
    const double u = rng.next_double();
    uint8_t code = kLetterI;
    if (u < t1) {
      code = kLetterX;
    } else if (u < t2) {
      code = kLetterY;
    } else if (u < t3) {
      code = kLetterZ;
    }
    out.set_letter_code(q, code);
  }
}

}  // namespace qauth
