#pragma once

#include <cstdint>

namespace qauth {

// Exact binomial coefficient as a double (exact for the small arguments the
// builtin codes need; monotone product evaluation otherwise).
double binomial_coefficient(uint64_t n, uint64_t k);

// Exact binomial coefficient as a 64-bit integer; throws std::overflow_error
// if the value does not fit.
uint64_t binomial_coefficient_u64(uint64_t n, uint64_t k);

// log of the binomial pmf at k, natural base, computed via lgamma.
double log_binomial_pmf(uint64_t n, uint64_t k, double p);

}  // namespace qauth
