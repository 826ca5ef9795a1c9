// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Tolerances and thresholds are pinned in code next to each check.

#include <omp.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/cone.hpp"
#include "landau/dirichlet.hpp"
#include "landau/exact_counterexamples.hpp"
#include "landau/json_io.hpp"
#include "landau/philox.hpp"
#include "landau/rational.hpp"
#include "landau/rectangles.hpp"
#include "landau/sequences.hpp"
#include "landau/volume.hpp"

namespace fs = std::filesystem;
using landau::Cone;
using landau::GammaShift;
using landau::make_cone;
using landau::Verdict;
using landau::exact::Rational;
using Vec = std::vector<double>;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::ostringstream notes;
  double t0;

  explicit Criterion(std::string n) : name(std::move(n)), t0(omp_get_wtime()) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << "\n";
    }
  }

  void finish() {
    const double dt = omp_get_wtime() - t0;
    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), dt);
    std::fputs(notes.str().c_str(), stderr);
    if (!ok) ++g_failures;
  }
};

std::string fmt(double x) { return landau::format_double(x); }

bool corner_checks(const std::vector<landau::Rectangle>& rects, int M, double rho,
                   double tol) {
  const Cone cone = make_cone(M, rho);
  for (const auto& rect : rects) {
    if (rect.empty()) continue;
    for (std::uint32_t mask = 0; mask < (1u << M); ++mask) {
      Vec corner(M);
      for (int k = 0; k < M; ++k) {
        const auto& iv = rect.intervals[k];
        corner[k] = (mask >> k) & 1u ? iv.hi : iv.lo;
        if (corner[k] < -1.0 - tol || corner[k] > 1.0 + tol) return false;
      }
      if (!in_neg_polar(corner, cone, GammaShift{0.0}, tol)) return false;
    }
  }
  return true;
}

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

/// Snapshot the first N terms of a rule into a vector-backed sequence for
/// fast repeated scans (test-side convenience only).
landau::CoefficientSequence materialize(const landau::CoefficientSequence& seq,
                                        std::uint64_t N) {
  std::vector<landau::Term> terms(N);
  for (std::uint64_t n = 1; n <= N; ++n) terms[n - 1] = seq.term(n);
  return landau::CoefficientSequence(
      seq.description(), seq.start_index(),
      [terms](std::uint64_t n) {
        return n >= 1 && n <= terms.size() ? terms[n - 1] : landau::Term{0.0, 1.0, 1};
      },
      nlohmann::json{{"family", "materialized"}});
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion1_bound_chain() {
  Criterion c("criterion 1: volume bound chain, disjointness, containment, MC consistency");
  std::uint64_t seed = 1001;
  for (const int M : {2, 3, 4, 5}) {
    for (const double rho : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0}) {
      const auto rects = landau::packing_rectangles(M, rho);
      const std::string tag = "M=" + std::to_string(M) + " rho=" + fmt(rho);
      c.expect(landau::verify_disjoint(rects), "disjoint at " + tag);
      c.expect(corner_checks(rects, M, rho, 1e-12), "containment at " + tag);
      const double pv = landau::packing_volume(rects);
      const double lb = landau::lower_bound(M, rho);
      c.expect(pv >= lb - 1e-9, "packing " + fmt(pv) + " >= bound " + fmt(lb) + " at " + tag);
      const auto mc = landau::mc_volume(M, rho, 1000000, seed++);
      c.expect(mc.mc_estimate >= pv - 4.0 * mc.mc_stderr,
               "mc " + fmt(mc.mc_estimate) + " >= packing " + fmt(pv) + " - 4sigma at " + tag);
    }
  }
  c.expect(omp_get_wtime() - c.t0 < 60.0, "runtime under 60 s");
  c.finish();
}

void criterion2_closed_forms() {
  Criterion c("criterion 2: closed-form cross-checks at M = 2");
  const double pv = landau::packing_volume(landau::rectangles_ge1(2, 1.0));
  c.expect(pv == 1.25, "packing volume at (2,1) is exactly 1.25, got " + fmt(pv));
  // analytic area of the M = 2 region: 1 + 1/(2 rho) for rho >= 1
  std::uint64_t seed = 2001;
  for (const double rho : {1.0, 2.0, 4.0}) {
    const auto mc = landau::mc_volume(2, rho, 1000000, seed++);
    const double analytic = 1.0 + 0.5 / rho;
    c.expect(std::abs(mc.mc_estimate - analytic) <= 4.0 * mc.mc_stderr,
             "MC " + fmt(mc.mc_estimate) + " matches analytic " + fmt(analytic) +
                 " at rho=" + fmt(rho));
  }
  c.finish();
}

void criterion3_freedom_limit() {
  Criterion c("criterion 3: rho -> 0 freedom approaches 2^{M-1}");
  const auto mc = landau::mc_volume(3, 0.01, 1000000, 3001);
  c.expect(mc.mc_estimate >= 3.8,
           "mc estimate " + fmt(mc.mc_estimate) + " >= 0.95 * 4 at (3, 0.01)");
  c.finish();
}

void criterion4_duality() {
  Criterion c("criterion 4: duality, decomposition round-trip, rational sign test");
  for (const int M : {2, 3, 5}) {
    for (const double rho : {0.5, 1.0, 2.0}) {
      const Cone cone = make_cone(M, rho);
      const auto gens = landau::generators(cone);
      std::uint64_t rejection_idx = 0;
      const std::string tag = "M=" + std::to_string(M) + " rho=" + fmt(rho);
      bool dual_ok = true, recon_ok = true;
      for (std::uint64_t i = 0; i < 100000; ++i) {
        const Vec beta = sample_in_cone(cone, 41, i);
        const Vec y = sample_in_neg_polar(cone, 41, rejection_idx);
        double dot = 0.0, nb = 0.0, ny = 0.0;
        for (int j = 0; j < M; ++j) {
          dot += beta[j] * y[j];
          nb += beta[j] * beta[j];
          ny += y[j] * y[j];
        }
        dual_ok = dual_ok && dot >= -1e-9 * std::sqrt(nb * ny);

        const auto coeffs = landau::cone_decompose(beta, cone);
        double err = 0.0, sup = 0.0;
        for (int j = 0; j < M; ++j) {
          double recon = 0.0;
          for (int r = 0; r <= j; ++r) recon += coeffs[r] * gens[r][j];
          err = std::max(err, std::abs(recon - beta[j]));
          sup = std::max(sup, std::abs(beta[j]));
        }
        recon_ok = recon_ok && err <= 1e-10 * std::max(1.0, sup);
      }
      c.expect(dual_ok, "duality inner products at " + tag);
      c.expect(recon_ok, "decomposition round-trip at " + tag);
    }
  }
  // 1000 exact-rational cases: coefficient signs decide membership
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const int M = 2 + static_cast<int>(i % 4);
    const double rho_d = (i % 3 == 0) ? 0.5 : (i % 3 == 1 ? 1.0 : 2.0);
    const landau::BasicCone<Rational> cone{M, landau::exact::from_double(rho_d)};
    std::vector<Rational> beta(M);
    for (int j = 0; j < M; ++j) {
      const auto w = landau::Philox4x64::block({i, static_cast<std::uint64_t>(j), 3, 0},
                                               {43, landau::kStreamSampling});
      beta[j] = Rational(static_cast<long long>(w[0] % 41) - 20) /
                (static_cast<long long>(w[1] % 10) + 1);
    }
    const auto coeffs = landau::cone_decompose<Rational>(beta, cone);
    bool nonneg = true;
    for (const auto& cf : coeffs) nonneg = nonneg && cf >= 0;
    if (nonneg != landau::in_brho<Rational>(beta, cone, Rational(0))) {
      c.expect(false, "rational sign/membership mismatch at case " + std::to_string(i));
      break;
    }
  }
  c.expect(omp_get_wtime() - c.t0 < 30.0, "runtime under 30 s");
  c.finish();
}

void criterion5_sharpness_I() {
  Criterion c("criterion 5: part-I sharpness (gamma = 0 boundary, extension probes)");
  const auto grid = landau::default_tail_grid();
  for (const int M : {2, 3, 4}) {
    for (const double rho : {0.5, 1.0, 2.0}) {
      const std::string tag = "M=" + std::to_string(M) + " rho=" + fmt(rho);
      const auto [seq, params] = landau::gen_counterexample_I(M, rho);
      const auto rep = landau::validate_sequence(seq, M, rho, 0.0, 200);
      c.expect(rep.condition3_ok && rep.condition4_ok, "validation at gamma=0, " + tag);

      // exact rational: the cosine block meets the polar boundary exactly
      const auto ce = landau::exact::counterexample_I_exact(
          M, landau::exact::from_double(rho), 1, 1);
      const landau::BasicCone<Rational> rcone{M, ce.rho};
      c.expect(landau::gamma_max<Rational>(ce.cosines, rcone) == 0,
               "exact gamma_max is 0 at " + tag);
      bool boundary = true;
      for (const long long l : {1LL, 2LL, 50LL, 200LL}) {
        const auto mod = landau::exact::modulus_block_exact(ce, l);
        for (int j = 0; j + 1 < M; ++j) boundary = boundary && mod[j] / mod[j + 1] == ce.rho;
      }
      c.expect(boundary, "exact modulus ratios equal rho at " + tag);

      const auto probe = landau::landau_probe(seq, 0.1, 40, 1000000, grid);
      c.expect(probe.verdict == Verdict::extends,
               std::string("verdict extends at ") + tag + ", got " +
                   landau::to_string(probe.verdict));
      c.expect(probe.tail_slope <= -0.8,
               "tail slope " + fmt(probe.tail_slope) + " <= -0.8 at " + tag);
    }
  }
  c.finish();
}

void criterion6_sharpness_II() {
  Criterion c("criterion 6: part-II sharpness (mixed-cone structure, extension probes)");
  const auto grid = landau::default_tail_grid();
  const struct {
    int M;
    double rho, rho_prime;
  } cases[] = {{2, 2.0, 1.0}, {3, 2.0, 1.0}, {3, 1.0, 0.5}};
  for (const auto& cs : cases) {
    const std::string tag = "(" + std::to_string(cs.M) + "," + fmt(cs.rho) + "," +
                            fmt(cs.rho_prime) + ")";
    const auto [seq, params] = landau::gen_counterexample_II(cs.M, cs.rho, cs.rho_prime);
    c.expect(params.gamma > 0.0, "gamma " + fmt(params.gamma) + " > 0 at " + tag);

    // the construction: cosines clear the rho' polar at level gamma while
    // the moduli live on the boundary of the rho cone
    const auto at_prime = landau::validate_sequence(seq, cs.M, cs.rho_prime, params.gamma, 200);
    c.expect(at_prime.condition4_ok, "condition4 at (rho', gamma) at " + tag);
    const auto at_rho = landau::validate_sequence(seq, cs.M, cs.rho, params.gamma, 200);
    c.expect(at_rho.condition3_ok, "condition3 at rho at " + tag);

    // at the rho cone, gamma_max is exactly 0, so condition4 fails for
    // every gamma' >= 1e-6
    const auto ce = landau::exact::counterexample_II_exact(
        cs.M, landau::exact::from_double(cs.rho), landau::exact::from_double(cs.rho_prime));
    const landau::BasicCone<Rational> rcone{cs.M, ce.rho};
    c.expect(landau::gamma_max<Rational>(ce.cosines, rcone) == 0,
             "exact gamma_max at rho is 0 at " + tag);
    c.expect(!landau::validate_sequence(seq, cs.M, cs.rho, 1e-6, 200).condition4_ok,
             "condition4 fails at (rho, 1e-6) at " + tag);

    const auto probe = landau::landau_probe(seq, 0.1, 40, 1000000, grid);
    c.expect(probe.verdict == Verdict::extends,
             std::string("verdict extends at ") + tag + ", got " +
                 landau::to_string(probe.verdict));
  }
  c.finish();
}

void criterion7_landau_control() {
  Criterion c("criterion 7: positive control (shifted zeta)");
  const auto seq = landau::named_sequence("harmonic");
  bool all_one = true;
  for (int k = 0; k <= 30; ++k) {
    const auto r = landau::key_inequality_ratio(seq, 0.1, k, 100000);
    all_one = all_one && !r.is_infinite && r.value == 1.0;
  }
  c.expect(all_one, "key inequality ratio is exactly 1 for k = 0..30");

  const auto exp = landau::taylor_coeffs(seq, 0.5, 40, 1000000);
  const auto radius = landau::radius_estimate(exp);
  c.expect(!radius.is_infinite && std::abs(radius.value - 0.5) <= 0.05,
           "radius estimate " + fmt(radius.value) + " within 10% of 0.5");

  const auto probe = landau::landau_probe(seq, 0.5, 40, 1000000, landau::default_tail_grid());
  c.expect(probe.verdict == Verdict::singular,
           std::string("verdict singular, got ") + landau::to_string(probe.verdict));
  c.finish();
}

void criterion8_cosine_floor() {
  Criterion c("criterion 8: cosine floor gamma = 0.3 keeps ratios below 1/gamma");
  const double gamma = 0.3;
  const double cap = 1.0 / gamma * 1.05;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto seq = materialize(
        landau::make_sequence(nlohmann::json{
            {"family", "random-cos"}, {"params", {{"gamma", gamma}, {"seed", 100 + s}}}}),
        100000);
    bool ok = true;
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) reduction(max : worst)
    for (int cell = 0; cell < 93; ++cell) {
      const double eps = (cell / 31 == 0) ? 0.05 : (cell / 31 == 1 ? 0.1 : 0.2);
      const int k = cell % 31;
      const auto r = landau::key_inequality_ratio(seq, eps, k, 100000);
      ok = ok && !r.is_infinite && r.value <= cap;
      worst = std::max(worst, r.value);
    }
    c.expect(ok, "ratios for seed " + std::to_string(100 + s) + " (worst " + fmt(worst) +
                     " vs cap " + fmt(cap) + ")");
  }
  c.finish();
}

void criterion9_rearrangement() {
  Criterion c("criterion 9: double-series rearrangement within 1e-8 relative");
  std::vector<landau::CoefficientSequence> seqs;
  seqs.push_back(landau::named_sequence("harmonic"));
  for (std::uint64_t s = 0; s < 5; ++s) {
    // random positive coefficients in [0,1]
    std::vector<landau::Term> terms(10000);
    for (std::uint64_t n = 1; n <= terms.size(); ++n) {
      const auto w = landau::Philox4x64::block({n, 0, 9, 0}, {s, landau::kStreamSampling});
      terms[n - 1] = {landau::u64_to_unit(w[0]), 1.0, 1};
    }
    seqs.emplace_back("random-positive-" + std::to_string(s), 1,
                      [terms](std::uint64_t n) {
                        return n >= 1 && n <= terms.size() ? terms[n - 1]
                                                           : landau::Term{0.0, 1.0, 1};
                      },
                      nlohmann::json{{"family", "materialized"}});
  }
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (const auto& [eps, r] : std::vector<std::pair<double, double>>{{1.0, 0.5}, {0.5, 0.25}}) {
      const std::uint64_t N = 10000;
      const auto [lhs, rhs] = landau::double_series_check(seqs[i], eps, r, 40, N);
      c.expect(std::abs(lhs - rhs) <= 1e-8 * rhs,
               "agreement for sequence " + std::to_string(i) + " at (eps,r)=(" + fmt(eps) +
                   "," + fmt(r) + "): |" + fmt(lhs) + " - " + fmt(rhs) + "|");
    }
  }
  c.finish();
}

void criterion10_reproducibility() {
  Criterion c("criterion 10: CLI sweeps byte-identical across thread counts");
  const std::string cli = LANDAU_CLI_PATH;
  const auto dir = fs::temp_directory_path();
  const auto run = [&](const std::string& env, const std::string& args, const fs::path& out) {
    const std::string cmd = env + " " + cli + " " + args + " --out " + out.string() +
                            " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str())) == 0;
  };
  const std::string vargs = "sweep --kind volume --M 2,3 --rho 0.25,0.5,1,2,4,8 "
                            "--samples 1000000 --seed 42";
  const std::string rargs = "sweep --kind ratio --seq harmonic --epsilon 0.05,0.1,0.2 "
                            "--k 0:30 --N 100000";
  const auto v1 = dir / "acc_vol_t1.csv", v2 = dir / "acc_vol_t3.csv";
  const auto r1 = dir / "acc_ratio_t1.csv", r2 = dir / "acc_ratio_t4.csv";
  c.expect(run("LANDAU_KIT_THREADS=1", vargs, v1), "volume sweep run, 1 thread");
  c.expect(run("LANDAU_KIT_THREADS=3", vargs, v2), "volume sweep run, 3 threads");
  c.expect(run("LANDAU_KIT_THREADS=1", rargs, r1), "ratio sweep run, 1 thread");
  c.expect(run("LANDAU_KIT_THREADS=4", rargs, r2), "ratio sweep run, 4 threads");
  c.expect(!slurp(v1).empty() && slurp(v1) == slurp(v2), "volume sweep bytes identical");
  c.expect(!slurp(r1).empty() && slurp(r1) == slurp(r2), "ratio sweep bytes identical");
  c.finish();
}

}  // namespace

int main() {
  criterion1_bound_chain();
  criterion2_closed_forms();
  criterion3_freedom_limit();
  criterion4_duality();
  criterion5_sharpness_I();
  criterion6_sharpness_II();
  criterion7_landau_control();
  criterion8_cosine_floor();
  criterion9_rearrangement();
  criterion10_reproducibility();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
