#include "qauth/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace qauth {

double binomial_coefficient(uint64_t n, uint64_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (uint64_t i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return result;
}

uint64_t binomial_coefficient_u64(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // divisible at every step
    if (result > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<uint64_t>(result);
}

double log_binomial_pmf(uint64_t n, uint64_t k, double p) {
  if (p <= 0.0) return k == 0 ? 0.0 : -HUGE_VAL;
  if (p >= 1.0) return k == n ? 0.0 : -HUGE_VAL;
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0) +
         dk * std::log(p) + (dn - dk) * std::log1p(-p);
}

}  // namespace qauth
