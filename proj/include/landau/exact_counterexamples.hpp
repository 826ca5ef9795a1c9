#ifndef LANDAU_EXACT_COUNTEREXAMPLES_HPP
#define LANDAU_EXACT_COUNTEREXAMPLES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "landau/rational.hpp"

namespace landau::exact {

/// Rational-arithmetic form of the sharpness families. The double-precision
/// generators are thin conversions of these, so the boundary identities
/// (sum_j rho^{-j} cos_j = 0, chained modulus ratios equal to rho) hold
/// exactly and can be asserted without tolerances.
struct CounterexampleExact {
  int M = 0;
  Rational rho;
  Rational rho_prime;  // 0 for part I
  Rational c;
  Rational lambda;
  Rational gamma;
  std::vector<Rational> delta;
  std::vector<Rational> cosines;  // lambda*delta_j + gamma
};

inline CounterexampleExact counterexample_I_exact(int M, const Rational& rho,
                                                  const Rational& c,
                                                  const Rational& lambda) {
  if (M < 1) throw std::invalid_argument("counterexample_I: M must be >= 1");
  if (!(rho > 0)) throw std::invalid_argument("counterexample_I: rho must be positive");
  if (!(c > 0)) throw std::invalid_argument("counterexample_I: c must be positive");
  if (!(lambda > 0)) throw std::invalid_argument("counterexample_I: lambda must be positive");

  CounterexampleExact out;
  out.M = M;
  out.rho = rho;
  out.rho_prime = 0;
  out.gamma = 0;
  out.delta.resize(M);
  for (int j = 1; j <= M; ++j) {
    if (M % 2 == 1 && j == 1) {
      out.delta[j - 1] = 0;
    } else {
      const Rational sign = ((M - j) % 2 == 0) ? 1 : -1;
      out.delta[j - 1] = c * sign * pow_int(rho, j);
    }
  }
  Rational dmax = 0;
  for (const auto& d : out.delta) dmax = std::max(dmax, Rational(abs(d)));
  out.c = c;
  if (dmax > 1) {
    for (auto& d : out.delta) d /= dmax;
    out.c = c / dmax;
    dmax = 1;
  }
  out.lambda = lambda;
  if (dmax > 0 && lambda * dmax > 1) out.lambda = Rational(9, 10) / dmax;
  out.cosines.resize(M);
  for (int j = 0; j < M; ++j) out.cosines[j] = out.lambda * out.delta[j];
  return out;
}

inline CounterexampleExact counterexample_II_exact(
    int M, const Rational& rho, const Rational& rho_prime,
    const std::optional<Rational>& lambda = std::nullopt) {
  if (M < 2) throw std::invalid_argument("counterexample_II: M must be >= 2");
  if (!(rho_prime > 0) || !(rho_prime < rho)) {
    throw std::invalid_argument("counterexample_II: need 0 < rho' < rho");
  }

  CounterexampleExact out;
  out.M = M;
  out.rho = rho;
  out.rho_prime = rho_prime;
  out.c = 1;

  const Rational t = (pow_int(rho_prime, -(M - 1)) - pow_int(rho, -(M - 1))) / 2;
  out.delta.assign(M, Rational(0));
  out.delta[0] = -pow_int(rho, -(M - 1)) - t;
  out.delta[M - 1] = 1;
  Rational dmax = 0;
  for (const auto& d : out.delta) dmax = std::max(dmax, Rational(abs(d)));
  if (dmax > 1) {
    for (auto& d : out.delta) d /= dmax;
  }

  Rational weighted = 0;  // sum_j rho^{-j} delta_j, strictly negative here
  Rational total = 0;     // sum_j rho^{-j}
  Rational w = 1;
  for (int j = 1; j <= M; ++j) {
    w /= rho;
    weighted += w * out.delta[j - 1];
    total += w;
  }
  const Rational g = -weighted / total;
  if (!(g > 0)) throw std::logic_error("counterexample_II: shift must be positive");

  Rational lmax = 0;  // sup-norm of delta + g*(1,...,1)
  for (const auto& d : out.delta) lmax = std::max(lmax, Rational(abs(d + g)));
  if (lambda && *lambda > 0 && *lambda * lmax <= 1) {
    out.lambda = *lambda;
  } else {
    out.lambda = Rational(9, 10) / lmax;
  }
  out.gamma = out.lambda * g;
  out.cosines.resize(M);
  for (int j = 0; j < M; ++j) out.cosines[j] = out.lambda * out.delta[j] + out.gamma;
  return out;
}

/// Exact modulus block (|a_{Ml+1}|, ..., |a_{Ml+M}|) = (rho^{-j}/l)_j.
inline std::vector<Rational> modulus_block_exact(const CounterexampleExact& ce,
                                                 long long l) {
  if (l < 1) throw std::out_of_range("modulus_block_exact: l must be >= 1");
  std::vector<Rational> m(ce.M);
  Rational w = 1;
  for (int j = 1; j <= ce.M; ++j) {
    w /= ce.rho;
    m[j - 1] = w / l;
  }
  return m;
}

}  // namespace landau::exact

#endif  // LANDAU_EXACT_COUNTEREXAMPLES_HPP
