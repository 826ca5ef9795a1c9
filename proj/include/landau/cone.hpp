#ifndef LANDAU_CONE_HPP
#define LANDAU_CONE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace landau {

inline constexpr double kDefaultTol = 1e-12;

/// The ratio-chained cone parameters: vectors beta in [0,inf)^M with
/// beta_j <= rho * beta_{j+1} for j = 1..M-1. Indices are 1-based in the
/// math; storage is 0-based.
template <class T>
struct BasicCone {
  int dim = 0;
  T rho{};
};

using Cone = BasicCone<double>;

/// Diagonal shift applied to cosine vectors; gamma = 0 is the sharp boundary.
struct GammaShift {
  double gamma = 0.0;
};

template <class T>
BasicCone<T> make_cone_t(int dim, T rho) {
  if (dim < 1) throw std::invalid_argument("cone dimension must be at least 1");
  if (!(rho > T(0))) throw std::invalid_argument("cone ratio rho must be positive");
  return BasicCone<T>{dim, rho};
}

inline Cone make_cone(int dim, double rho) {
  if (!std::isfinite(rho)) throw std::invalid_argument("cone ratio rho must be finite");
  return make_cone_t<double>(dim, rho);
}

namespace detail {

template <class T>
T abs_val(const T& x) {
  using std::abs;
  return abs(x);
}

template <class T>
void check_dim(const std::vector<T>& v, const BasicCone<T>& cone, const char* what) {
  if (static_cast<int>(v.size()) != cone.dim) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

/// rho^{-1}, rho^{-2}, ..., rho^{-M}, built by iterated division so every
/// operation here sees bitwise-identical weights.
template <class T>
std::vector<T> inverse_powers(const BasicCone<T>& cone) {
  std::vector<T> w(cone.dim);
  T cur = T(1);
  for (int j = 0; j < cone.dim; ++j) {
    cur = cur / cone.rho;
    w[j] = cur;
  }
  return w;
}

}  // namespace detail

/// Membership in the chained cone. Comparisons are chained as
/// beta_j <= rho*beta_{j+1} + tol*scale with scale = max(1, |beta_j|);
/// nonnegativity uses the same scaled slack. tol = 0 is exact.
template <class T>
bool in_brho(const std::vector<T>& beta, const BasicCone<T>& cone, const T& tol) {
  detail::check_dim(beta, cone, "in_brho");
  for (int j = 0; j < cone.dim; ++j) {
    const T scale = std::max(T(1), detail::abs_val(beta[j]));
    if (beta[j] < -tol * scale) return false;
    if (j + 1 < cone.dim && beta[j] > cone.rho * beta[j + 1] + tol * scale) return false;
  }
  return true;
}

inline bool in_brho(const std::vector<double>& beta, const Cone& cone,
                    double tol = kDefaultTol) {
  return in_brho<double>(beta, cone, tol);
}

/// Generator rays x^{(r)} = (0,...,0, rho^{-r}, ..., rho^{-M}), r = 1..M.
/// The cone is their positive linear span.
template <class T>
std::vector<std::vector<T>> generators(const BasicCone<T>& cone) {
  const auto w = detail::inverse_powers(cone);
  std::vector<std::vector<T>> gens(cone.dim, std::vector<T>(cone.dim, T(0)));
  for (int r = 0; r < cone.dim; ++r) {
    for (int j = r; j < cone.dim; ++j) gens[r][j] = w[j];
  }
  return gens;
}

/// Coefficients of beta in the generator basis:
/// c_1 = rho*beta_1, c_r = rho^r (beta_r - rho^{-1} beta_{r-1}) for r >= 2.
/// All coefficients nonnegative exactly when beta lies in the cone.
template <class T>
std::vector<T> cone_decompose(const std::vector<T>& beta, const BasicCone<T>& cone) {
  detail::check_dim(beta, cone, "cone_decompose");
  std::vector<T> c(cone.dim);
  T rho_pow = cone.rho;  // rho^r
  c[0] = rho_pow * beta[0];
  for (int r = 1; r < cone.dim; ++r) {
    rho_pow = rho_pow * cone.rho;
    c[r] = rho_pow * (beta[r] - beta[r - 1] / cone.rho);
  }
  return c;
}

/// Polar description: y is in (B^rho)# iff rows[r] . y <= 0 for every r.
/// The rows coincide with the generator rays.
template <class T>
struct HalfspaceSystem {
  std::vector<std::vector<T>> rows;
};

template <class T>
HalfspaceSystem<T> polar_halfspaces(const BasicCone<T>& cone) {
  return HalfspaceSystem<T>{generators(cone)};
}

/// Test y - gamma*(1,...,1) against -(B^rho)#: every suffix sum
/// sum_{j>=r} rho^{-j} (y_j - gamma) must be >= -tol*scale, with scale the
/// corresponding suffix sum of absolute terms (floored at 1). The relative
/// scale matters at small rho where rho^{-j} amplifies rounding.
template <class T>
bool in_neg_polar(const std::vector<T>& y, const BasicCone<T>& cone, const T& gamma,
                  const T& tol) {
  detail::check_dim(y, cone, "in_neg_polar");
  const auto w = detail::inverse_powers(cone);
  T suffix = T(0);
  T suffix_abs = T(0);
  for (int r = cone.dim - 1; r >= 0; --r) {
    const T term = w[r] * (y[r] - gamma);
    suffix = suffix + term;
    suffix_abs = suffix_abs + detail::abs_val(term);
    const T scale = std::max(T(1), suffix_abs);
    if (suffix < -tol * scale) return false;
  }
  return true;
}

inline bool in_neg_polar(const std::vector<double>& y, const Cone& cone,
                         GammaShift shift = {}, double tol = kDefaultTol) {
  return in_neg_polar<double>(y, cone, shift.gamma, tol);
}

/// Largest gamma for which y - gamma*(1,...,1) stays in -(B^rho)#:
/// min over r of [sum_{j>=r} rho^{-j} y_j] / [sum_{j>=r} rho^{-j}].
/// May be negative when y is outside even the unshifted set.
template <class T>
T gamma_max(const std::vector<T>& y, const BasicCone<T>& cone) {
  detail::check_dim(y, cone, "gamma_max");
  const auto w = detail::inverse_powers(cone);
  T num = T(0);
  T den = T(0);
  bool first = true;
  T best{};
  for (int r = cone.dim - 1; r >= 0; --r) {
    num = num + w[r] * y[r];
    den = den + w[r];
    const T ratio = num / den;
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  return best;
}

/// Nested product P[x_1,...,x_n] = x_1 (1 + x_2 (1 + ... (1 + x_n))).
/// Empty list gives 0.
template <class T>
T nested_p(const std::vector<T>& xs) {
  T acc = T(0);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = *it * (T(1) + acc);
  return acc;
}

}  // namespace landau

#endif  // LANDAU_CONE_HPP
