#ifndef LANDAU_SWEEP_HPP
#define LANDAU_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace landau {

/// Volume experiment over a (M, rho) grid. One CSV row per grid point in
/// row-major order (M outer, rho inner); each row's MC stream is seeded by
/// derive_seed(master_seed, row_index).
struct VolumeSweepSpec {
  std::vector<int> Ms;
  std::vector<double> rhos;
  long long samples = 1000000;
  std::uint64_t master_seed = 0;
};

std::string volume_sweep_csv(const VolumeSweepSpec& spec);

/// Key-inequality ratio over an (epsilon, k) grid for one sequence.
struct RatioSweepSpec {
  nlohmann::json sequence_spec;
  std::vector<double> epsilons;
  int k_lo = 0;
  int k_hi = 0;
  std::uint64_t N = 100000;
};

std::string ratio_sweep_csv(const RatioSweepSpec& spec);

}  // namespace landau

#endif  // LANDAU_SWEEP_HPP
