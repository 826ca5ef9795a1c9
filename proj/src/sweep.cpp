#include "landau/sweep.hpp"

#include <sstream>
#include <stdexcept>

#include "landau/json_io.hpp"
#include "landau/philox.hpp"
#include "landau/sequences.hpp"
#include "landau/volume.hpp"

namespace landau {

std::string volume_sweep_csv(const VolumeSweepSpec& spec) {
  if (spec.Ms.empty() || spec.rhos.empty()) {
    throw std::invalid_argument("volume sweep: grids must be nonempty");
  }
  if (spec.samples < 1) throw std::invalid_argument("volume sweep: samples must be >= 1");

  const std::size_t rows = spec.Ms.size() * spec.rhos.size();
  std::vector<std::string> lines(rows);
  // Rows are independent; output order is fixed by the grid, so the buffer
  // is written in index order regardless of scheduling.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t row = 0; row < rows; ++row) {
    const int M = spec.Ms[row / spec.rhos.size()];
    const double rho = spec.rhos[row % spec.rhos.size()];
    const std::uint64_t seed = derive_seed(spec.master_seed, row);
    const VolumeReport rep = mc_volume(M, rho, spec.samples, seed);
    std::ostringstream line;
    line << rep.M << ',' << format_double(rep.rho) << ','
         << format_double(rep.lower_bound) << ','
         << format_double(rep.exact_packing_volume) << ','
         << format_double(rep.mc_estimate) << ',' << format_double(rep.mc_stderr)
         << ',' << rep.samples << ',' << rep.seed << '\n';
    lines[row] = line.str();
  }

  std::string out = "M,rho,lower_bound,packing_volume,mc_estimate,mc_stderr,samples,seed\n";
  for (const auto& l : lines) out += l;
  return out;
}

std::string ratio_sweep_csv(const RatioSweepSpec& spec) {
  if (spec.epsilons.empty()) throw std::invalid_argument("ratio sweep: epsilon grid must be nonempty");
  if (spec.k_hi < spec.k_lo || spec.k_lo < 0) {
    throw std::invalid_argument("ratio sweep: need 0 <= k_lo <= k_hi");
  }
  const CoefficientSequence seq = make_sequence(spec.sequence_spec);
  const std::string name = seq.description();

  const std::size_t ks = static_cast<std::size_t>(spec.k_hi - spec.k_lo + 1);
  const std::size_t rows = spec.epsilons.size() * ks;
  std::vector<std::string> lines(rows);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t row = 0; row < rows; ++row) {
    const double eps = spec.epsilons[row / ks];
    const int k = spec.k_lo + static_cast<int>(row % ks);
    const RatioResult r = key_inequality_ratio(seq, eps, k, spec.N);
    std::ostringstream line;
    line << name << ',' << format_double(eps) << ',' << k << ','
         << (r.is_infinite ? "inf" : format_double(r.value)) << ','
         << (r.is_infinite ? 1 : 0) << '\n';
    lines[row] = line.str();
  }

  std::string out = "sequence,epsilon,k,ratio,infinite\n";
  for (const auto& l : lines) out += l;
  return out;
}

}  // namespace landau
