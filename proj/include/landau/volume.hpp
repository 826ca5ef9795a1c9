#ifndef LANDAU_VOLUME_HPP
#define LANDAU_VOLUME_HPP

#include <cstdint>

#include "landau/rectangles.hpp"

namespace landau {

/// Everything the volume experiment reports for one (M, rho):
/// the exact packing volume, the closed-form bound, and the hit-or-miss
/// Monte Carlo estimate of Vol(-(B^rho)# intersect [-1,1]^M) with its
/// binomial standard error scaled by 2^M.
struct VolumeReport {
  int M = 0;
  double rho = 0.0;
  double exact_packing_volume = 0.0;
  double lower_bound = 0.0;
  double mc_estimate = 0.0;
  double mc_stderr = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;

  bool operator==(const VolumeReport&) const = default;
};

/// Hit-or-miss estimate over [-1,1]^M. Sampling is counter-based and keyed
/// by (seed, sample index), so the result is identical for any partitioning
/// of the index range across threads. Packing fields are filled when
/// M <= kMaxEnumerationDim and NaN otherwise.
VolumeReport mc_volume(int M, double rho, long long samples, std::uint64_t seed);

/// Single-threaded reference; must agree bit-for-bit with mc_volume.
VolumeReport mc_volume_serial(int M, double rho, long long samples, std::uint64_t seed);

}  // namespace landau

#endif  // LANDAU_VOLUME_HPP
