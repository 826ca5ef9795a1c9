#include "landau/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "landau/log_weights.hpp"
#include "landau/summation.hpp"

namespace landau {

namespace {

/// Least-squares slope of y against x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs at least two distinct points");
  return sxy / sxx;
}

void check_grid(const std::vector<std::uint64_t>& grid, const char* what) {
  if (grid.size() < 2) throw std::invalid_argument(std::string(what) + ": grid needs >= 2 points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) {
      throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
  }
  if (grid.front() < 1) throw std::invalid_argument(std::string(what) + ": grid values must be >= 1");
}

}  // namespace

std::complex<double> eval_partial(const CoefficientSequence& seq,
                                  std::complex<double> s, std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("eval_partial: N must be >= 1");
  ComplexCompensatedSum acc;
  for (std::uint64_t n = std::max<std::uint64_t>(1, seq.start_index()); n <= N; ++n) {
    const Term t = seq.term(n);
    if (t.modulus == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    const double mag = t.modulus * std::exp(-s.real() * ln);
    const double phase_sin =
        t.sin_sign * std::sqrt(std::max(0.0, 1.0 - t.cos_theta * t.cos_theta));
    // a_n n^{-s} = mag * e^{i(theta - t_im * log n)}
    const double rot = -s.imag() * ln;
    const double cr = std::cos(rot), sr = std::sin(rot);
    acc.add(mag * (t.cos_theta * cr - phase_sin * sr),
            mag * (t.cos_theta * sr + phase_sin * cr));
  }
  return acc.value();
}

AbscissaEstimate abscissa_abs_estimate(const CoefficientSequence& seq,
                                       const std::vector<std::uint64_t>& N_grid) {
  check_grid(N_grid, "abscissa_abs_estimate");
  std::vector<double> logN, logA;
  CompensatedSum acc;
  std::uint64_t n = std::max<std::uint64_t>(1, seq.start_index());
  for (const std::uint64_t stop : N_grid) {
    for (; n <= stop; ++n) acc.add(seq.term(n).modulus);
    const double A = acc.value();
    if (A <= 0.0) {
      throw std::invalid_argument("abscissa_abs_estimate: partial sums must be positive");
    }
    logN.push_back(std::log(static_cast<double>(stop)));
    logA.push_back(std::log(A));
  }

  AbscissaEstimate est;
  est.raw_slope = lsq_slope(logN, logA);
  std::vector<double> local(logN.size() - 1);
  for (std::size_t i = 0; i + 1 < logN.size(); ++i) {
    local[i] = (logA[i + 1] - logA[i]) / (logN[i + 1] - logN[i]);
  }
  est.bounded = local.back() == 0.0;
  // Log-type growth shows up as local slopes draining toward zero; a genuine
  // power N^sigma keeps them flat.
  const bool draining = local.front() > 0.0 && local.back() / local.front() < 0.7;
  est.clamped = est.bounded || draining || local.back() <= 0.02;
  est.sigma_a = est.clamped ? 0.0 : est.raw_slope;
  return est;
}

namespace {

TaylorExpansion run_taylor(const CoefficientSequence& seq, double epsilon, int k_max,
                           std::uint64_t N, bool parallel) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("taylor_coeffs: epsilon must be positive");
  }
  if (k_max < 1) throw std::invalid_argument("taylor_coeffs: k_max must be >= 1");
  if (N < 1) throw std::invalid_argument("taylor_coeffs: N must be >= 1");

  TaylorExpansion exp;
  exp.epsilon = epsilon;
  exp.k_max = k_max;
  exp.N = N;
  exp.coefficients.assign(static_cast<std::size_t>(k_max) + 1, {});

  const std::uint64_t n0 = std::max<std::uint64_t>(1, seq.start_index());
  const auto one_k = [&](int k) {
    const double log_norm = std::lgamma(static_cast<double>(k) + 1.0);
    ComplexCompensatedSum acc;
    for (std::uint64_t n = n0; n <= N; ++n) {
      const Term t = seq.term(n);
      if (t.modulus == 0.0) continue;
      const double w = log_power_weight(n, epsilon, k, log_norm);
      if (w == 0.0) continue;
      const double sin_theta =
          t.sin_sign * std::sqrt(std::max(0.0, 1.0 - t.cos_theta * t.cos_theta));
      acc.add(t.modulus * w * t.cos_theta, t.modulus * w * sin_theta);
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    exp.coefficients[k] = sign * acc.value();
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k <= k_max; ++k) one_k(k);
  } else {
    for (int k = 0; k <= k_max; ++k) one_k(k);
  }
  return exp;
}

}  // namespace

TaylorExpansion taylor_coeffs(const CoefficientSequence& seq, double epsilon, int k_max,
                              std::uint64_t N) {
  return run_taylor(seq, epsilon, k_max, N, /*parallel=*/true);
}

TaylorExpansion taylor_coeffs_serial(const CoefficientSequence& seq, double epsilon,
                                     int k_max, std::uint64_t N) {
  return run_taylor(seq, epsilon, k_max, N, /*parallel=*/false);
}

RadiusEstimate radius_estimate(const TaylorExpansion& exp) {
  const int k_max = exp.k_max;
  if (k_max < 8) throw std::invalid_argument("radius_estimate: needs k_max >= 8");
  if (exp.coefficients.size() != static_cast<std::size_t>(k_max) + 1) {
    throw std::invalid_argument("radius_estimate: coefficient count does not match k_max");
  }
  bool any_nonzero = false;
  for (const auto& c : exp.coefficients) {
    if (std::abs(c) != 0.0) any_nonzero = true;
  }
  if (!any_nonzero) throw std::invalid_argument("radius_estimate: degenerate expansion");

  const auto quartile_lo = [](int hi) { return hi - std::max(1, (hi + 1) / 4) + 1; };

  double tail_max = 0.0;
  for (int k = quartile_lo(k_max); k <= k_max; ++k) {
    tail_max = std::max(tail_max, std::abs(exp.coefficients[k]));
  }
  if (tail_max < 1e-12) return {0.0, true};

  const int k_eff = std::min(
      k_max, std::max(4, static_cast<int>(std::floor(
                             exp.epsilon * std::log(static_cast<double>(exp.N))))));
  double worst = 0.0;
  for (int k = quartile_lo(k_eff); k <= k_eff; ++k) {
    if (k < 1) continue;
    const double mag = std::abs(exp.coefficients[k]);
    if (mag == 0.0) continue;
    worst = std::max(worst, std::pow(mag, 1.0 / k));
  }
  if (worst < 1e-12) return {0.0, true};
  return {1.0 / worst, false};
}

std::pair<double, double> double_series_check(const CoefficientSequence& seq,
                                              double eps, double r, int k_max,
                                              std::uint64_t N) {
  if (!(eps > 0.0)) throw std::invalid_argument("double_series_check: eps must be positive");
  if (!(r >= 0.0) || !(r < eps)) {
    throw std::invalid_argument("double_series_check: need 0 <= r < eps");
  }
  if (k_max < 1 || N < 1) throw std::invalid_argument("double_series_check: k_max, N must be >= 1");

  const std::uint64_t n0 = std::max<std::uint64_t>(1, seq.start_index());
  // LHS: k outer, n inner, both in increasing fixed order.
  CompensatedSum lhs;
  const double log_r = r > 0.0 ? std::log(r) : 0.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0 && r == 0.0) break;
    const double log_norm = std::lgamma(static_cast<double>(k) + 1.0) - k * log_r;
    CompensatedSum inner;
    for (std::uint64_t n = n0; n <= N; ++n) {
      const Term t = seq.term(n);
      if (t.modulus == 0.0) continue;
      inner.add(t.modulus * log_power_weight(n, eps, k, log_norm));
    }
    lhs.add(inner.value());
  }
  CompensatedSum rhs;
  for (std::uint64_t n = n0; n <= N; ++n) {
    const Term t = seq.term(n);
    if (t.modulus == 0.0) continue;
    rhs.add(t.modulus * log_power_weight(n, eps - r, 0));
  }
  return {lhs.value(), rhs.value()};
}

double double_series_tail_bound(const CoefficientSequence& seq, double eps, double r,
                                int k_max, std::uint64_t N) {
  if (r == 0.0) return 0.0;
  const std::uint64_t n0 = std::max<std::uint64_t>(1, seq.start_index());
  const double log_r = std::log(r);
  const int k1 = k_max + 1;
  const double log_norm = std::lgamma(static_cast<double>(k1) + 1.0) - k1 * log_r;
  CompensatedSum bound;
  for (std::uint64_t n = n0; n <= N; ++n) {
    const Term t = seq.term(n);
    if (t.modulus == 0.0) continue;
    // exp-series remainder: e^x - sum_{k<=K} x^k/k! <= x^{K+1}/(K+1)! e^x
    bound.add(t.modulus * log_power_weight(n, eps - r, k1, log_norm));
  }
  return bound.value();
}

TailScan cauchy_tail_scan(const CoefficientSequence& seq, double eps,
                          const std::vector<std::uint64_t>& N_grid) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("cauchy_tail_scan: eps must lie in (0,1)");
  }
  check_grid(N_grid, "cauchy_tail_scan");

  constexpr int kRefinement = 8;
  // Checkpoints: every N in the grid plus the probes of each [N, 2N] window.
  std::vector<std::uint64_t> checkpoints;
  for (const std::uint64_t N : N_grid) {
    checkpoints.push_back(N);
    for (int i = 1; i <= kRefinement; ++i) {
      checkpoints.push_back(N + (N * static_cast<std::uint64_t>(i)) / kRefinement);
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()),
                    checkpoints.end());

  std::vector<std::complex<double>> S(checkpoints.size());
  ComplexCompensatedSum acc;
  std::uint64_t n = std::max<std::uint64_t>(1, seq.start_index());
  for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
    for (; n <= checkpoints[ci]; ++n) {
      const Term t = seq.term(n);
      if (t.modulus == 0.0) continue;
      const double mag = t.modulus * std::pow(static_cast<double>(n), eps);
      const double sin_theta =
          t.sin_sign * std::sqrt(std::max(0.0, 1.0 - t.cos_theta * t.cos_theta));
      acc.add(mag * t.cos_theta, mag * sin_theta);
    }
    S[ci] = acc.value();
  }
  const auto value_at = [&](std::uint64_t stop) {
    const auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), stop);
    return S[static_cast<std::size_t>(it - checkpoints.begin())];
  };

  TailScan scan;
  std::vector<double> xs, ys;
  for (const std::uint64_t N : N_grid) {
    const std::complex<double> base = value_at(N);
    double tail = 0.0;
    for (int i = 1; i <= kRefinement; ++i) {
      const std::uint64_t J = N + (N * static_cast<std::uint64_t>(i)) / kRefinement;
      tail = std::max(tail, std::abs(value_at(J) - base));
    }
    scan.points.push_back({N, tail});
    if (tail > 0.0) {
      xs.push_back(std::log(static_cast<double>(N)));
      ys.push_back(std::log(tail));
    }
  }
  if (xs.size() < 2) {
    scan.slope = -std::numeric_limits<double>::infinity();
  } else {
    scan.slope = lsq_slope(xs, ys);
  }
  return scan;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::extends: return "extends";
    case Verdict::singular: return "singular";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "extends") return Verdict::extends;
  if (s == "singular") return Verdict::singular;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

ProbeReport landau_probe(const CoefficientSequence& seq, double eps, int k_max,
                         std::uint64_t N, const std::vector<std::uint64_t>& N_grid,
                         const ProbeThresholds& thresholds) {
  ProbeReport rep;
  rep.sequence = seq.description();
  rep.epsilon = eps;
  rep.k_max = k_max;
  rep.N = N;
  rep.N_grid = N_grid;
  rep.thresholds = thresholds;
  rep.radius = radius_estimate(taylor_coeffs(seq, eps, k_max, N));
  rep.tail_slope = cauchy_tail_scan(seq, eps, N_grid).slope;

  const double radius =
      rep.radius.is_infinite ? std::numeric_limits<double>::infinity() : rep.radius.value;
  const bool slope_ok = rep.tail_slope <= -thresholds.extends_slope_factor * (1.0 - eps);
  if (radius >= thresholds.extends_radius_factor * eps && slope_ok) {
    rep.verdict = Verdict::extends;
  } else if (!rep.radius.is_infinite &&
             radius <= thresholds.singular_radius_factor * eps) {
    rep.verdict = Verdict::singular;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

std::vector<std::uint64_t> default_tail_grid() {
  std::vector<std::uint64_t> grid;
  for (int p = 11; p <= 17; ++p) grid.push_back(std::uint64_t{1} << p);
  return grid;
}

std::vector<std::uint64_t> default_abscissa_grid() {
  return {100, 316, 1000, 3162, 10000, 31623, 100000, 316228, 1000000};
}

}  // namespace landau
