#ifndef LANDAU_LOG_WEIGHTS_HPP
#define LANDAU_LOG_WEIGHTS_HPP

#include <cmath>
#include <cstdint>

namespace landau {

// n^{-eps} (log n)^k, optionally divided by exp(log_norm) (pass lgamma(k+1)
// to fold in the 1/k! of Taylor coefficients). Evaluated as
// exp(k log log n - eps log n - log_norm) for n >= 3 so large k neither
// overflows (log n)^k nor k!. n = 1 contributes only at k = 0; n = 2 goes
// through pow since log log 2 < 0.
inline double log_power_weight(std::uint64_t n, double eps, int k,
                               double log_norm = 0.0) {
  if (n == 1) return k == 0 ? std::exp(-log_norm) : 0.0;
  if (n == 2) {
    constexpr double kLn2 = 0.6931471805599453094;
    return std::pow(kLn2, k) * std::exp(-eps * kLn2 - log_norm);
  }
  const double ln = std::log(static_cast<double>(n));
  return std::exp(k * std::log(ln) - eps * ln - log_norm);
}

}  // namespace landau

#endif  // LANDAU_LOG_WEIGHTS_HPP
