// Timing comparison of the OpenMP kernels against their serial references.
// The parallel kernels are required to be bit-identical to the serial ones;
// this target reports the speedups and re-checks that equality on the way.

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "landau/dirichlet.hpp"
#include "landau/sequences.hpp"
#include "landau/volume.hpp"

namespace {

template <class F>
double time_once(F&& f) {
  const double t0 = omp_get_wtime();
  f();
  return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
              serial, parallel, serial / parallel, equal ? "outputs equal" : "OUTPUTS DIFFER");
  if (!equal) std::exit(1);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", omp_get_max_threads());

  {
    landau::VolumeReport a, b;
    const double ts = time_once([&] { a = landau::mc_volume_serial(4, 1.5, 4000000, 7); });
    const double tp = time_once([&] { b = landau::mc_volume(4, 1.5, 4000000, 7); });
    report("mc_volume M=4 4e6", ts, tp, a == b);
  }

  {
    const auto seq = landau::named_sequence("harmonic");
    landau::TaylorExpansion a, b;
    const double ts =
        time_once([&] { a = landau::taylor_coeffs_serial(seq, 0.5, 40, 1000000); });
    const double tp = time_once([&] { b = landau::taylor_coeffs(seq, 0.5, 40, 1000000); });
    report("taylor_coeffs k=40 N=1e6", ts, tp, a.coefficients == b.coefficients);
  }

  {
    const auto [seq, params] = landau::gen_counterexample_I(3, 2.0);
    landau::ValidationReport a, b;
    const double ts =
        time_once([&] { a = landau::validate_sequence_serial(seq, 3, 2.0, 0.0, 200000); });
    const double tp =
        time_once([&] { b = landau::validate_sequence(seq, 3, 2.0, 0.0, 200000); });
    report("validate L_max=2e5", ts, tp, a == b);
  }

  return 0;
}
