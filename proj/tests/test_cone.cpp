#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "landau/cone.hpp"
#include "landau/philox.hpp"
#include "landau/rational.hpp"

using landau::Cone;
using landau::GammaShift;
using landau::make_cone;
using Vec = std::vector<double>;
using landau::exact::Rational;
using RCone = landau::BasicCone<Rational>;
using RVec = std::vector<Rational>;

namespace {

// Test-side samplers on their own philox stream.
Vec sample_in_cone(const Cone& cone, std::uint64_t seed, std::uint64_t idx) {
  const auto gens = landau::generators(cone);
  Vec beta(cone.dim, 0.0);
  int w = 0;
  landau::Philox4x64::Ctr words{};
  for (int r = 0; r < cone.dim; ++r) {
    if (w % 4 == 0) {
      words = landau::Philox4x64::block({idx, static_cast<std::uint64_t>(w / 4), 1, 0},
                                        {seed, landau::kStreamSampling});
    }
    const double coeff = landau::u64_to_unit(words[w % 4]);
    ++w;
    for (int j = 0; j < cone.dim; ++j) beta[j] += coeff * gens[r][j];
  }
  return beta;
}

Vec sample_in_neg_polar(const Cone& cone, std::uint64_t seed, std::uint64_t& idx) {
  Vec y(cone.dim);
  for (;;) {
    const std::uint64_t my = idx++;
    int w = 0;
    landau::Philox4x64::Ctr words{};
    for (int j = 0; j < cone.dim; ++j) {
      if (w % 4 == 0) {
        words = landau::Philox4x64::block({my, static_cast<std::uint64_t>(w / 4), 2, 0},
                                          {seed, landau::kStreamSampling});
      }
      y[j] = landau::u64_to_symmetric(words[w % 4]);
      ++w;
    }
    if (in_neg_polar(y, cone, GammaShift{0.0}, 0.0)) return y;
  }
}

Rational rand_rational(std::uint64_t seed, std::uint64_t idx, int lane) {
  const auto words = landau::Philox4x64::block({idx, static_cast<std::uint64_t>(lane), 3, 0},
                                               {seed, landau::kStreamSampling});
  const long long num = static_cast<long long>(words[0] % 41) - 20;
  const long long den = static_cast<long long>(words[1] % 10) + 1;
  return Rational(num) / den;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

}  // namespace

TEST_CASE("make_cone validates parameters") {
  const Cone c = make_cone(2, 2.0);
  CHECK(c.dim == 2);
  CHECK(c.rho == 2.0);
  const Cone degenerate = make_cone(1, 0.5);
  CHECK(degenerate.dim == 1);
  CHECK_THROWS_AS(make_cone(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_cone(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_cone(2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_cone(2, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("in_brho on the chained inequalities") {
  const Cone c = make_cone(2, 2.0);
  CHECK(in_brho(Vec{2.0, 1.0}, c, 0.0));  // rho,1 pattern satisfies the chain
  CHECK(in_brho(Vec{0.0, 0.0}, c, 0.0));
  CHECK_FALSE(in_brho(Vec{3.0, 1.0}, c, 0.0));
  CHECK_FALSE(in_brho(Vec{-0.1, 1.0}, c, 0.0));
  CHECK_THROWS_AS(in_brho(Vec{1.0}, c, 0.0), std::invalid_argument);
  // M = 1: empty chain, any nonnegative value
  const Cone line = make_cone(1, 0.5);
  CHECK(in_brho(Vec{7.0}, line, 0.0));
  CHECK_FALSE(in_brho(Vec{-7.0}, line, 0.0));
}

TEST_CASE("generators match the closed form") {
  {
    const auto g = landau::generators(make_cone(2, 2.0));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Vec{0.5, 0.25});
    CHECK(g[1] == Vec{0.0, 0.25});
  }
  {
    const auto g = landau::generators(make_cone(3, 1.0));
    CHECK(g[0] == Vec{1.0, 1.0, 1.0});
    CHECK(g[1] == Vec{0.0, 1.0, 1.0});
    CHECK(g[2] == Vec{0.0, 0.0, 1.0});
  }
  {
    const auto g = landau::generators(make_cone(1, 5.0));
    CHECK(g[0] == Vec{0.2});
  }
}

TEST_CASE("cone_decompose coefficients and reconstruction") {
  const Cone c = make_cone(2, 2.0);
  const auto coeffs = landau::cone_decompose(Vec{2.0, 1.0}, c);
  CHECK(coeffs[0] == doctest::Approx(4.0));
  CHECK(coeffs[1] == doctest::Approx(0.0));

  const auto ones = landau::cone_decompose(Vec{0.0, 1.0}, make_cone(2, 1.0));
  CHECK(ones[0] == doctest::Approx(0.0));
  CHECK(ones[1] == doctest::Approx(1.0));

  const auto outside = landau::cone_decompose(Vec{3.0, 1.0}, c);
  CHECK(outside[1] == doctest::Approx(-2.0));
  CHECK_FALSE(in_brho(Vec{3.0, 1.0}, c, 0.0));
  CHECK_THROWS_AS(landau::cone_decompose(Vec{1.0, 2.0, 3.0}, c), std::invalid_argument);
}

TEST_CASE("polar halfspace rows") {
  {
    const auto h = landau::polar_halfspaces(make_cone(2, 2.0));
    REQUIRE(h.rows.size() == 2);
    CHECK(h.rows[0] == Vec{0.5, 0.25});
    CHECK(h.rows[1] == Vec{0.0, 0.25});
  }
  CHECK(landau::polar_halfspaces(make_cone(1, 1.0)).rows[0] == Vec{1.0});
  const auto h3 = landau::polar_halfspaces(make_cone(3, 1.0));
  CHECK(h3.rows[0] == Vec{1.0, 1.0, 1.0});
  CHECK(h3.rows[2] == Vec{0.0, 0.0, 1.0});
}

TEST_CASE("in_neg_polar with and without shift") {
  const Cone c1 = make_cone(2, 1.0);
  CHECK(in_neg_polar(Vec{1.0, 1.0}, c1, GammaShift{0.0}, 0.0));
  CHECK(in_neg_polar(Vec{1.0, 1.0}, make_cone(2, 3.0), GammaShift{0.0}, 0.0));
  CHECK(in_neg_polar(Vec{-0.5, 1.0}, c1, GammaShift{0.0}, 0.0));
  CHECK_FALSE(in_neg_polar(Vec{0.0, -0.1}, c1, GammaShift{0.0}, 0.0));
  // shifting by gamma = 1 moves the ones vector onto the boundary
  CHECK(in_neg_polar(Vec{1.0, 1.0}, c1, GammaShift{1.0}, 0.0));
  CHECK_FALSE(in_neg_polar(Vec{1.0, 1.0}, c1, GammaShift{1.0 + 1e-9}, 0.0));
  CHECK_THROWS_AS(in_neg_polar(Vec{1.0}, c1, GammaShift{0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("gamma_max closed form") {
  CHECK(landau::gamma_max(Vec{1.0, 1.0, 1.0}, make_cone(3, 2.0)) == doctest::Approx(1.0));
  CHECK(landau::gamma_max(Vec{-1.0, 1.0}, make_cone(2, 1.0)) == doctest::Approx(0.0));
  CHECK(landau::gamma_max(Vec{0.0, -1.0}, make_cone(2, 1.0)) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(landau::gamma_max(Vec{1.0}, make_cone(2, 1.0)), std::invalid_argument);
}

TEST_CASE("nested_p recursion and conventions") {
  CHECK(landau::nested_p(Vec{}) == 0.0);
  CHECK(landau::nested_p(Vec{0.5}) == 0.5);
  CHECK(landau::nested_p(Vec{2.0, 3.0}) == 8.0);
  // homogeneity in the first slot
  const Vec xs{0.3, 0.7, 1.1, 0.2};
  Vec scaled = xs;
  scaled[0] *= 2.5;
  CHECK(landau::nested_p(scaled) == doctest::Approx(2.5 * landau::nested_p(xs)));
}

TEST_CASE("gamma_max agrees with the shifted membership test") {
  const Cone c = make_cone(3, 2.0);
  std::uint64_t idx = 0;
  for (int i = 0; i < 200; ++i) {
    Vec y(3);
    for (int j = 0; j < 3; ++j) {
      const auto w = landau::Philox4x64::block({idx++, 0, 4, 0}, {9, landau::kStreamSampling});
      y[j] = landau::u64_to_symmetric(w[j]);
    }
    const double g = landau::gamma_max(y, c);
    CHECK(in_neg_polar(y, c, GammaShift{g - 1e-9}, 0.0));
    CHECK_FALSE(in_neg_polar(y, c, GammaShift{g + 1e-9}, 0.0));
  }
}

TEST_CASE("duality: cone samples against polar samples") {
  for (const int M : {2, 3, 5}) {
    for (const double rho : {0.5, 1.0, 2.0}) {
      const Cone cone = make_cone(M, rho);
      std::uint64_t rejection_idx = 0;
      for (std::uint64_t i = 0; i < 2000; ++i) {
        const Vec beta = sample_in_cone(cone, 11, i);
        const Vec y = sample_in_neg_polar(cone, 11, rejection_idx);
        CHECK(dot(beta, y) >= -1e-9 * norm(beta) * norm(y));
      }
    }
  }
}

TEST_CASE("decompose/reconstruct round-trips on arbitrary vectors") {
  for (const int M : {2, 3, 5}) {
    for (const double rho : {0.5, 1.0, 2.0}) {
      const Cone cone = make_cone(M, rho);
      const auto gens = landau::generators(cone);
      for (std::uint64_t i = 0; i < 500; ++i) {
        Vec beta(M);
        int lane = 0;
        for (int j = 0; j < M; ++j) {
          const auto w = landau::Philox4x64::block({i, static_cast<std::uint64_t>(lane++), 5, 0},
                                                   {13, landau::kStreamSampling});
          beta[j] = 10.0 * landau::u64_to_symmetric(w[0]);
        }
        const auto coeffs = landau::cone_decompose(beta, cone);
        Vec recon(M, 0.0);
        for (int r = 0; r < M; ++r) {
          for (int j = 0; j < M; ++j) recon[j] += coeffs[r] * gens[r][j];
        }
        double sup = 0.0, err = 0.0;
        for (int j = 0; j < M; ++j) {
          sup = std::max(sup, std::abs(beta[j]));
          err = std::max(err, std::abs(recon[j] - beta[j]));
        }
        CHECK(err <= 1e-10 * std::max(1.0, sup));
      }
    }
  }
}

TEST_CASE("exact rationals: coefficient signs decide membership") {
  for (const int M : {2, 3, 4}) {
    for (const double rho_d : {0.5, 1.0, 2.0}) {
      const RCone cone{M, landau::exact::from_double(rho_d)};
      for (std::uint64_t i = 0; i < 100; ++i) {
        RVec beta(M);
        for (int j = 0; j < M; ++j) beta[j] = rand_rational(17 + M, i, j);
        const auto coeffs = landau::cone_decompose<Rational>(beta, cone);
        bool all_nonneg = true;
        for (const auto& c : coeffs) all_nonneg = all_nonneg && c >= 0;
        CHECK(all_nonneg == landau::in_brho<Rational>(beta, cone, Rational(0)));

        // exact reconstruction
        const auto gens = landau::generators(cone);
        for (int j = 0; j < M; ++j) {
          Rational r(0);
          for (int g = 0; g < M; ++g) r += coeffs[g] * gens[g][j];
          CHECK(r == beta[j]);
        }
        // gamma_max sign matches the unshifted membership test
        const Rational gm = landau::gamma_max<Rational>(beta, cone);
        CHECK((gm >= 0) == landau::in_neg_polar<Rational>(beta, cone, Rational(0), Rational(0)));
      }
    }
  }
}

TEST_CASE("scaling invariance of memberships") {
  const Cone cone = make_cone(3, 1.5);
  std::uint64_t rejection_idx = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Vec beta = sample_in_cone(cone, 23, i);
    const Vec y = sample_in_neg_polar(cone, 23, rejection_idx);
    for (const double lam : {0.125, 0.9, 4.0, 1024.0}) {
      Vec sb(3), sy(3);
      for (int j = 0; j < 3; ++j) {
        sb[j] = lam * beta[j];
        sy[j] = lam * y[j];
      }
      CHECK(in_brho(sb, cone, 0.0) == in_brho(beta, cone, 0.0));
      CHECK(in_neg_polar(sy, cone, GammaShift{0.0}, 0.0) ==
            in_neg_polar(y, cone, GammaShift{0.0}, 0.0));
    }
  }
}

TEST_CASE("monotonicity in rho") {
  const Cone tight = make_cone(3, 0.75);
  const Cone loose = make_cone(3, 2.0);
  std::uint64_t rejection_idx = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Vec beta = sample_in_cone(tight, 31, i);
    CHECK(in_brho(beta, tight, 1e-12));
    CHECK(in_brho(beta, loose, 1e-12));  // B^{0.75} inside B^{2}
    const Vec y = sample_in_neg_polar(loose, 31, rejection_idx);
    CHECK(in_neg_polar(y, tight, GammaShift{0.0}, 1e-12));  // -(B^2)# inside -(B^{0.75})#
  }
}
