#ifndef LANDAU_SEQUENCES_HPP
#define LANDAU_SEQUENCES_HPP

#include <complex>
#include <limits>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace landau {

/// One coefficient a_n = modulus * e^{i theta_n}, stored as the modulus, the
/// cosine of the argument, and the sign of its sine (the sine magnitude is
/// recovered as sqrt(1 - cos^2)).
struct Term {
  double modulus = 0.0;
  double cos_theta = 1.0;
  int sin_sign = 1;
};

/// A coefficient stream given as a total rule n -> Term. Coefficients below
/// start_index are zero. Rules are pure and reentrant: validators and probes
/// call them concurrently.
class CoefficientSequence {
 public:
  CoefficientSequence(std::string description, std::uint64_t start_index,
                      std::function<Term(std::uint64_t)> rule, nlohmann::json spec);

  Term term(std::uint64_t n) const {
    if (n < start_index_) return Term{0.0, 1.0, 1};
    return rule_(n);
  }

  std::complex<double> coefficient(std::uint64_t n) const;

  std::uint64_t start_index() const { return start_index_; }
  const std::string& description() const { return description_; }
  const nlohmann::json& spec() const { return spec_; }

 private:
  std::string description_;
  std::uint64_t start_index_ = 1;
  std::function<Term(std::uint64_t)> rule_;
  nlohmann::json spec_;
};

/// Per-block vectors: beta_j = |a_{Ml+j}| (log(Ml+j))^k and
/// psi_j = cos(theta_{Ml+j}), j = 1..M.
struct BlockVectors {
  std::vector<double> beta;
  std::vector<double> psi;
  int k = 0;
  long long l = 0;
  int M = 0;
};

BlockVectors block_vectors(const CoefficientSequence& seq, int M, int k, long long l);

/// beta . psi - gamma * (beta . 1); the block inequality holds iff >= 0.
double block_inequality_slack(const BlockVectors& bv, double gamma);

struct ValidationReport {
  int M = 0;
  double rho = 0.0;
  double gamma = 0.0;
  double tol = 0.0;
  long long blocks_checked = 0;
  bool condition3_ok = false;
  bool condition4_ok = false;
  std::vector<double> gamma_max_per_block;  // blocks l = 1..L_max
  double min_gamma_max = 0.0;
  double worst_slack = 0.0;  // min_l gamma_max_l - gamma

  bool operator==(const ValidationReport&) const = default;
};

/// Checks, for blocks l = 1..L_max, the modulus block against B^rho and the
/// cosine block against -(B^rho)# + gamma*(1,...,1) (via gamma_max).
/// Blocks whose moduli are all zero pass the cone condition vacuously.
ValidationReport validate_sequence(const CoefficientSequence& seq, int M, double rho,
                                  double gamma, long long L_max, double tol = 1e-12);

/// Single-threaded reference; must agree exactly with validate_sequence.
ValidationReport validate_sequence_serial(const CoefficientSequence& seq, int M,
                                         double rho, double gamma, long long L_max,
                                         double tol = 1e-12);

/// Ratio of the absolute to the signed truncated series at the given log
/// power: [sum |a_n| n^{-eps} (log n)^k] / |sum a_n n^{-eps} (log n)^k|,
/// n = 1..N, compensated fixed-order summation. is_infinite is set when the
/// denominator falls below 1e-14 times the numerator (total cancellation).
struct RatioResult {
  double value = 0.0;
  bool is_infinite = false;
};

RatioResult key_inequality_ratio(const CoefficientSequence& seq, double eps, int k,
                                 std::uint64_t N);

/// Parameters of the sharpness families: cos(theta_{Ml+j}) = lambda*delta_j
/// + gamma with |a_{Ml+j}| = l^{-1} rho^{-j} and sine sign (-1)^l.
struct CounterexampleParams {
  int M = 0;
  double rho = 0.0;
  double rho_prime = 0.0;  // NaN for part I
  double c = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;
  std::vector<double> delta;
};

/// Part I family (gamma = 0): delta_j = c (-1)^{M-j} rho^j, with delta_1 = 0
/// when M is odd. delta is rescaled to unit sup-norm when it leaves
/// [-1,1]^M, and lambda is rescaled to 0.9/sup when lambda*delta leaves it.
std::pair<CoefficientSequence, CounterexampleParams> gen_counterexample_I(
    int M, double rho, double c = 1.0, double lambda = 1.0);

/// Part II family (0 < rho' < rho): delta = (-rho^{-(M-1)} - t, 0,...,0, 1)
/// with the midpoint perturbation t = (rho'^{-(M-1)} - rho^{-(M-1)})/2, and
/// gamma = -lambda * (sum rho^{-j} delta_j) / (sum rho^{-j}) > 0. Pass a
/// non-finite lambda to select it automatically.
std::pair<CoefficientSequence, CounterexampleParams> gen_counterexample_II(
    int M, double rho, double rho_prime,
    double lambda = std::numeric_limits<double>::quiet_NaN());

/// Named sequence plus its documented abscissa of absolute convergence.
struct CatalogEntry {
  std::string name;
  double sigma_a = 0.0;
  std::string note;
  CoefficientSequence seq;
};

/// The built-in corpus: zeta, eta, eta-shifted, harmonic, and default
/// instances of the two counterexample families.
std::vector<CatalogEntry> builtin_sequences();

/// Build a sequence from a JSON spec: {"family": name, "params": {...}} or
/// {"explicit": [[modulus, cos, sign], ...], "start_index": n0}. Unknown
/// keys, families, or out-of-range parameters are rejected.
CoefficientSequence make_sequence(const nlohmann::json& spec);

/// Catalog lookup by name; throws when the name is unknown.
CoefficientSequence named_sequence(const std::string& name);

}  // namespace landau

#endif  // LANDAU_SEQUENCES_HPP
