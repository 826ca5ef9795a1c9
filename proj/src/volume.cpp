#include "landau/volume.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "landau/cone.hpp"
#include "landau/philox.hpp"

namespace landau {

namespace {

/// Draw the M coordinates of sample i in [-1,1)^M.
inline void draw_point(std::uint64_t seed, long long i, int M, double* y) {
  const Philox4x64::Key key{seed, kStreamVolume};
  int have = 0;
  std::uint64_t block_index = 0;
  while (have < M) {
    const auto words =
        Philox4x64::block({static_cast<std::uint64_t>(i), block_index++, 0, 0}, key);
    for (int w = 0; w < 4 && have < M; ++w) y[have++] = u64_to_symmetric(words[w]);
  }
}

/// Membership in -(B^rho)# at gamma = 0, tol = 0: all suffix sums
/// sum_{j>=r} rho^{-j} y_j must be nonnegative. Same weights and order as
/// in_neg_polar, so MC hits agree with the public predicate exactly.
inline bool hit(const double* y, const double* w, int M) {
  double suffix = 0.0;
  for (int r = M - 1; r >= 0; --r) {
    suffix += w[r] * y[r];
    if (suffix < 0.0) return false;
  }
  return true;
}

VolumeReport run_mc(int M, double rho, long long samples, std::uint64_t seed,
                    bool parallel) {
  if (M < 1) throw std::invalid_argument("mc_volume: M must be >= 1");
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("mc_volume: rho must be positive and finite");
  }
  if (samples < 1) throw std::invalid_argument("mc_volume: samples must be >= 1");

  std::vector<double> w(M);
  double cur = 1.0;
  for (int j = 0; j < M; ++j) {
    cur /= rho;
    w[j] = cur;
  }

  long long hits = 0;
  if (parallel) {
#pragma omp parallel
    {
      std::vector<double> y(M);
      long long local = 0;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < samples; ++i) {
        draw_point(seed, i, M, y.data());
        if (hit(y.data(), w.data(), M)) ++local;
      }
#pragma omp atomic
      hits += local;
    }
  } else {
    std::vector<double> y(M);
    for (long long i = 0; i < samples; ++i) {
      draw_point(seed, i, M, y.data());
      if (hit(y.data(), w.data(), M)) ++hits;
    }
  }

  const double cube = std::ldexp(1.0, M);  // 2^M
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeReport rep;
  rep.M = M;
  rep.rho = rho;
  rep.samples = samples;
  rep.seed = seed;
  rep.mc_estimate = p * cube;
  rep.mc_stderr = cube * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  if (M <= kMaxEnumerationDim) {
    rep.exact_packing_volume = packing_volume(packing_rectangles(M, rho));
    rep.lower_bound = lower_bound(M, rho);
  } else {
    rep.exact_packing_volume = std::numeric_limits<double>::quiet_NaN();
    rep.lower_bound = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

}  // namespace

VolumeReport mc_volume(int M, double rho, long long samples, std::uint64_t seed) {
  return run_mc(M, rho, samples, seed, /*parallel=*/true);
}

VolumeReport mc_volume_serial(int M, double rho, long long samples, std::uint64_t seed) {
  return run_mc(M, rho, samples, seed, /*parallel=*/false);
}

}  // namespace landau
