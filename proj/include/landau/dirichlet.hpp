#ifndef LANDAU_DIRICHLET_HPP
#define LANDAU_DIRICHLET_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "landau/sequences.hpp"

namespace landau {

/// Truncated Dirichlet series sum_{n<=N} a_n n^{-s}, compensated and in
/// fixed order of increasing n.
std::complex<double> eval_partial(const CoefficientSequence& seq,
                                  std::complex<double> s, std::uint64_t N);

/// Least-squares slope of log sum_{n<=N} |a_n| against log N over the grid,
/// clamped at 0 when the partial sums grow sublinearly in every decade
/// (log-type growth) or stop growing entirely.
struct AbscissaEstimate {
  double sigma_a = 0.0;    // clamped estimate
  double raw_slope = 0.0;  // unclamped least-squares slope
  bool clamped = false;
  bool bounded = false;  // partial sums stopped increasing on the grid tail
};

AbscissaEstimate abscissa_abs_estimate(const CoefficientSequence& seq,
                                       const std::vector<std::uint64_t>& N_grid);

/// Power-series data about the center s = eps:
/// c_k = ((-1)^k / k!) sum_{n<=N} a_n n^{-eps} (log n)^k.
struct TaylorExpansion {
  double epsilon = 0.0;
  int k_max = 0;
  std::uint64_t N = 0;
  std::vector<std::complex<double>> coefficients;  // k = 0..k_max
};

/// Per-k compensated sums over increasing n; terms evaluated in log space.
/// Parallel over k; identical to the serial variant for any thread count.
TaylorExpansion taylor_coeffs(const CoefficientSequence& seq, double epsilon,
                              int k_max, std::uint64_t N);
TaylorExpansion taylor_coeffs_serial(const CoefficientSequence& seq, double epsilon,
                                     int k_max, std::uint64_t N);

struct RadiusEstimate {
  double value = 0.0;
  bool is_infinite = false;

  bool operator==(const RadiusEstimate&) const = default;
};

// Root-test estimate of the convergence radius at the expansion center.
//
// Truncation at N caps the k that carry information: the mass of
// sum a_n n^{-eps} (log n)^k sits near n = exp(k/eps), so coefficients with
// k > eps log N are dominated by the missing tail. The estimate therefore
// takes 1/max |c_k|^{1/k} over the top quartile of k <= max(4, eps log N).
// The infinity flag fires when the top quartile of the full k range is
// numerically zero (|c_k| < 1e-12): the tail gives no growth information,
// as for a finite Dirichlet polynomial. Heuristic, not a certification.
RadiusEstimate radius_estimate(const TaylorExpansion& exp);

/// LHS = sum_{k<=k_max} sum_{n<=N} |a_n| n^{-eps} (log n)^k r^k / k! and
/// RHS = sum_{n<=N} |a_n| n^{-(eps-r)}, which the LHS rearranges to as
/// k_max -> infinity. Requires 0 <= r < eps.
std::pair<double, double> double_series_check(const CoefficientSequence& seq,
                                              double eps, double r, int k_max,
                                              std::uint64_t N);

/// Remainder bound for the k-truncation of double_series_check:
/// sum_{n<=N} |a_n| n^{-(eps-r)} (r log n)^{k_max+1} / (k_max+1)!.
double double_series_tail_bound(const CoefficientSequence& seq, double eps, double r,
                                int k_max, std::uint64_t N);

struct TailScanPoint {
  std::uint64_t N = 0;
  double tail = 0.0;  // max_{N<=J<=2N} |S_J - S_N| with S_N = sum_{n<=N} a_n n^eps
};

struct TailScan {
  double slope = 0.0;  // least-squares slope of log tail vs log N
  std::vector<TailScanPoint> points;
};

/// Partial-sum Cauchy diagnostic at s = -eps. Each [N, 2N] window is probed
/// at eight evenly spaced J values. All-zero tails give slope -infinity.
TailScan cauchy_tail_scan(const CoefficientSequence& seq, double eps,
                          const std::vector<std::uint64_t>& N_grid);

/// Decision thresholds for the probe verdict; defaults as documented.
struct ProbeThresholds {
  double extends_radius_factor = 1.2;
  double singular_radius_factor = 1.05;
  double extends_slope_factor = 0.5;

  bool operator==(const ProbeThresholds&) const = default;
};

enum class Verdict { extends, singular, inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ProbeReport {
  std::string sequence;
  double epsilon = 0.0;
  int k_max = 0;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> N_grid;
  RadiusEstimate radius;
  double tail_slope = 0.0;
  Verdict verdict = Verdict::inconclusive;
  ProbeThresholds thresholds;

  bool operator==(const ProbeReport&) const = default;
};

/// Combined extension probe: "extends" when the radius estimate reaches
/// extends_radius_factor * eps and the tail slope is at most
/// -extends_slope_factor * (1 - eps); "singular" when the radius estimate is
/// within singular_radius_factor * eps; "inconclusive" otherwise.
ProbeReport landau_probe(const CoefficientSequence& seq, double eps, int k_max,
                         std::uint64_t N, const std::vector<std::uint64_t>& N_grid,
                         const ProbeThresholds& thresholds = {});

/// Powers of two from 2^11 to 2^17, the default grid for tail scans.
std::vector<std::uint64_t> default_tail_grid();

/// 10^2 .. 10^6, half-decade steps, the default grid for abscissa estimates.
std::vector<std::uint64_t> default_abscissa_grid();

}  // namespace landau

#endif  // LANDAU_DIRICHLET_HPP
