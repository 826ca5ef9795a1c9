#include "landau/sequences.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "landau/cone.hpp"
#include "landau/exact_counterexamples.hpp"
#include "landau/log_weights.hpp"
#include "landau/philox.hpp"
#include "landau/summation.hpp"

namespace landau {

using nlohmann::json;

CoefficientSequence::CoefficientSequence(std::string description,
                                         std::uint64_t start_index,
                                         std::function<Term(std::uint64_t)> rule,
                                         json spec)
    : description_(std::move(description)),
      start_index_(start_index),
      rule_(std::move(rule)),
      spec_(std::move(spec)) {
  if (start_index_ < 1) throw std::invalid_argument("start_index must be >= 1");
}

std::complex<double> CoefficientSequence::coefficient(std::uint64_t n) const {
  const Term t = term(n);
  const double sin_theta =
      t.sin_sign * std::sqrt(std::max(0.0, 1.0 - t.cos_theta * t.cos_theta));
  return {t.modulus * t.cos_theta, t.modulus * sin_theta};
}

BlockVectors block_vectors(const CoefficientSequence& seq, int M, int k, long long l) {
  if (M < 1) throw std::invalid_argument("block_vectors: M must be >= 1");
  if (k < 0) throw std::invalid_argument("block_vectors: k must be >= 0");
  if (l < 0 || (l == 0 && seq.start_index() <= static_cast<std::uint64_t>(M))) {
    throw std::out_of_range("block_vectors: block index out of range");
  }
  BlockVectors bv;
  bv.k = k;
  bv.l = l;
  bv.M = M;
  bv.beta.resize(M);
  bv.psi.resize(M);
  for (int j = 1; j <= M; ++j) {
    const std::uint64_t n = static_cast<std::uint64_t>(M) * l + j;
    const Term t = seq.term(n);
    const double logn = std::log(static_cast<double>(n));
    bv.beta[j - 1] = t.modulus * std::pow(logn, k);
    bv.psi[j - 1] = t.cos_theta;
  }
  return bv;
}

double block_inequality_slack(const BlockVectors& bv, double gamma) {
  if (bv.beta.size() != bv.psi.size()) {
    throw std::invalid_argument("block_inequality_slack: dimension mismatch");
  }
  CompensatedSum dot;
  CompensatedSum mass;
  for (std::size_t j = 0; j < bv.beta.size(); ++j) {
    dot.add(bv.beta[j] * bv.psi[j]);
    mass.add(bv.beta[j]);
  }
  return dot.value() - gamma * mass.value();
}

namespace {

ValidationReport run_validate(const CoefficientSequence& seq, int M, double rho,
                              double gamma, long long L_max, double tol,
                              bool parallel) {
  if (L_max < 1) throw std::invalid_argument("validate_sequence: L_max must be >= 1");
  const Cone cone = make_cone(M, rho);

  ValidationReport rep;
  rep.M = M;
  rep.rho = rho;
  rep.gamma = gamma;
  rep.tol = tol;
  rep.blocks_checked = L_max;
  rep.gamma_max_per_block.assign(static_cast<std::size_t>(L_max), 0.0);
  std::vector<char> cone_ok(static_cast<std::size_t>(L_max), 0);

  const auto check_block = [&](long long l) {
    std::vector<double> moduli(M);
    std::vector<double> psi(M);
    for (int j = 1; j <= M; ++j) {
      const Term t = seq.term(static_cast<std::uint64_t>(M) * l + j);
      moduli[j - 1] = t.modulus;
      psi[j - 1] = t.cos_theta;
    }
    cone_ok[l - 1] = in_brho(moduli, cone, tol) ? 1 : 0;
    rep.gamma_max_per_block[l - 1] = gamma_max(psi, cone);
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long l = 1; l <= L_max; ++l) check_block(l);
  } else {
    for (long long l = 1; l <= L_max; ++l) check_block(l);
  }

  rep.condition3_ok = true;
  for (const char ok : cone_ok) rep.condition3_ok = rep.condition3_ok && ok;
  rep.min_gamma_max = rep.gamma_max_per_block.front();
  for (const double g : rep.gamma_max_per_block) rep.min_gamma_max = std::min(rep.min_gamma_max, g);
  rep.condition4_ok = rep.min_gamma_max >= gamma - tol;
  rep.worst_slack = rep.min_gamma_max - gamma;
  return rep;
}

}  // namespace

ValidationReport validate_sequence(const CoefficientSequence& seq, int M, double rho,
                                   double gamma, long long L_max, double tol) {
  return run_validate(seq, M, rho, gamma, L_max, tol, /*parallel=*/true);
}

ValidationReport validate_sequence_serial(const CoefficientSequence& seq, int M,
                                          double rho, double gamma, long long L_max,
                                          double tol) {
  return run_validate(seq, M, rho, gamma, L_max, tol, /*parallel=*/false);
}

RatioResult key_inequality_ratio(const CoefficientSequence& seq, double eps, int k,
                                 std::uint64_t N) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("key_inequality_ratio: eps must be positive");
  }
  if (k < 0) throw std::invalid_argument("key_inequality_ratio: k must be >= 0");
  if (N < seq.start_index()) {
    throw std::invalid_argument("key_inequality_ratio: N is below the first coefficient");
  }
  CompensatedSum abs_sum;
  CompensatedSum re_sum;
  CompensatedSum im_sum;
  for (std::uint64_t n = seq.start_index(); n <= N; ++n) {
    const Term t = seq.term(n);
    if (t.modulus == 0.0) continue;
    const double w = log_power_weight(n, eps, k);
    const double mag = t.modulus * w;
    const double sin_theta =
        t.sin_sign * std::sqrt(std::max(0.0, 1.0 - t.cos_theta * t.cos_theta));
    abs_sum.add(mag);
    re_sum.add(mag * t.cos_theta);
    im_sum.add(mag * sin_theta);
  }
  const double num = abs_sum.value();
  const double re = re_sum.value();
  const double im = im_sum.value();
  const double den = im == 0.0 ? std::abs(re) : std::hypot(re, im);
  if (num == 0.0) return {0.0, false};
  if (den < 1e-14 * num) return {0.0, true};
  return {num / den, false};
}

namespace {

json params_json(const CounterexampleParams& p, bool part_two) {
  json j{{"M", p.M}, {"rho", p.rho}, {"c", p.c}, {"lambda", p.lambda},
         {"gamma", p.gamma}, {"delta", p.delta}};
  if (part_two) j["rho_prime"] = p.rho_prime;
  return j;
}

std::pair<CoefficientSequence, CounterexampleParams> sequence_from_exact(
    const exact::CounterexampleExact& ce, const std::string& family, json requested) {
  CounterexampleParams p;
  p.M = ce.M;
  p.rho = exact::to_double(ce.rho);
  p.rho_prime = ce.rho_prime == 0 ? std::numeric_limits<double>::quiet_NaN()
                                  : exact::to_double(ce.rho_prime);
  p.c = exact::to_double(ce.c);
  p.lambda = exact::to_double(ce.lambda);
  p.gamma = exact::to_double(ce.gamma);
  p.delta.resize(ce.M);
  for (int j = 0; j < ce.M; ++j) p.delta[j] = exact::to_double(ce.delta[j]);

  std::vector<double> cosines(ce.M);
  for (int j = 0; j < ce.M; ++j) {
    cosines[j] = exact::to_double(ce.cosines[j]);
    if (std::abs(cosines[j]) > 1.0) {
      throw std::logic_error("counterexample cosine left [-1,1]");
    }
  }
  std::vector<double> neg_pow(ce.M);  // rho^{-j}
  double cur = 1.0;
  for (int j = 0; j < ce.M; ++j) {
    cur /= p.rho;
    neg_pow[j] = cur;
  }

  const int M = ce.M;
  auto rule = [M, neg_pow, cosines](std::uint64_t n) -> Term {
    const std::uint64_t l = (n - 1) / static_cast<std::uint64_t>(M);
    const std::uint64_t j = n - l * static_cast<std::uint64_t>(M);
    if (l < 1) return Term{0.0, 1.0, 1};
    return Term{neg_pow[j - 1] / static_cast<double>(l), cosines[j - 1],
                (l % 2 == 0) ? 1 : -1};
  };

  json spec{{"family", family}, {"params", std::move(requested)}};
  spec["resolved"] = params_json(p, family == "counterexample-II");
  const std::string label = family + "(M=" + std::to_string(M) + ")";
  CoefficientSequence seq(label, static_cast<std::uint64_t>(M) + 1, std::move(rule),
                          std::move(spec));
  return {std::move(seq), std::move(p)};
}

}  // namespace

std::pair<CoefficientSequence, CounterexampleParams> gen_counterexample_I(int M,
                                                                          double rho,
                                                                          double c,
                                                                          double lambda) {
  if (!std::isfinite(rho) || !std::isfinite(c) || !std::isfinite(lambda)) {
    throw std::invalid_argument("gen_counterexample_I: parameters must be finite");
  }
  const auto ce = exact::counterexample_I_exact(M, exact::from_double(rho),
                                                exact::from_double(c),
                                                exact::from_double(lambda));
  return sequence_from_exact(ce, "counterexample-I",
                             json{{"M", M}, {"rho", rho}, {"c", c}, {"lambda", lambda}});
}

std::pair<CoefficientSequence, CounterexampleParams> gen_counterexample_II(
    int M, double rho, double rho_prime, double lambda) {
  if (!std::isfinite(rho) || !std::isfinite(rho_prime)) {
    throw std::invalid_argument("gen_counterexample_II: parameters must be finite");
  }
  std::optional<exact::Rational> lam;
  json requested{{"M", M}, {"rho", rho}, {"rho_prime", rho_prime}};
  if (std::isfinite(lambda)) {
    lam = exact::from_double(lambda);
    requested["lambda"] = lambda;
  }
  const auto ce = exact::counterexample_II_exact(M, exact::from_double(rho),
                                                 exact::from_double(rho_prime), lam);
  return sequence_from_exact(ce, "counterexample-II", std::move(requested));
}

namespace {

Term zero_term() { return Term{0.0, 1.0, 1}; }

CoefficientSequence make_zeta() {
  return CoefficientSequence("zeta", 1, [](std::uint64_t) { return Term{1.0, 1.0, 1}; },
                             json{{"family", "zeta"}});
}

CoefficientSequence make_eta() {
  return CoefficientSequence(
      "eta", 1,
      [](std::uint64_t n) { return Term{1.0, n % 2 == 1 ? 1.0 : -1.0, 1}; },
      json{{"family", "eta"}});
}

CoefficientSequence make_eta_shifted() {
  return CoefficientSequence(
      "eta-shifted", 1,
      [](std::uint64_t n) {
        return Term{1.0 / static_cast<double>(n), n % 2 == 1 ? 1.0 : -1.0, 1};
      },
      json{{"family", "eta-shifted"}});
}

CoefficientSequence make_harmonic() {
  return CoefficientSequence(
      "harmonic", 1,
      [](std::uint64_t n) { return Term{1.0 / static_cast<double>(n), 1.0, 1}; },
      json{{"family", "harmonic"}});
}

CoefficientSequence make_random_cos(double gamma, std::uint64_t seed,
                                    const std::string& modulus) {
  if (!(gamma >= -1.0) || !(gamma <= 1.0)) {
    throw std::invalid_argument("random-cos: gamma must lie in [-1,1]");
  }
  const bool harmonic_mod = modulus == "harmonic";
  if (!harmonic_mod && modulus != "one") {
    throw std::invalid_argument("random-cos: modulus must be 'one' or 'harmonic'");
  }
  auto rule = [gamma, seed, harmonic_mod](std::uint64_t n) -> Term {
    const auto words = Philox4x64::block({n, 0, 0, 0}, {seed, kStreamSequence});
    const double u = u64_to_unit(words[0]);
    const double cosv = gamma + (1.0 - gamma) * u;
    const int sign = (words[1] & 1u) ? 1 : -1;
    const double mod = harmonic_mod ? 1.0 / static_cast<double>(n) : 1.0;
    return Term{mod, cosv, sign};
  };
  json spec{{"family", "random-cos"},
            {"params", {{"gamma", gamma}, {"seed", seed}, {"modulus", modulus}}}};
  return CoefficientSequence("random-cos", 1, std::move(rule), std::move(spec));
}

CoefficientSequence make_block_cos(int M, double rho, std::vector<double> psi,
                                   long long l_start) {
  if (M < 1) throw std::invalid_argument("block-cos: M must be >= 1");
  if (!(rho > 0.0)) throw std::invalid_argument("block-cos: rho must be positive");
  if (static_cast<int>(psi.size()) != M) {
    throw std::invalid_argument("block-cos: psi must have length M");
  }
  for (const double c : psi) {
    if (!(std::abs(c) <= 1.0)) throw std::invalid_argument("block-cos: psi entries must lie in [-1,1]");
  }
  if (l_start < 1) throw std::invalid_argument("block-cos: l_start must be >= 1");
  std::vector<double> neg_pow(M);
  double cur = 1.0;
  for (int j = 0; j < M; ++j) {
    cur /= rho;
    neg_pow[j] = cur;
  }
  auto rule = [M, neg_pow, psi, l_start](std::uint64_t n) -> Term {
    const std::uint64_t l = (n - 1) / static_cast<std::uint64_t>(M);
    const std::uint64_t j = n - l * static_cast<std::uint64_t>(M);
    if (l < static_cast<std::uint64_t>(l_start)) return zero_term();
    return Term{neg_pow[j - 1] / static_cast<double>(l), psi[j - 1],
                (l % 2 == 0) ? 1 : -1};
  };
  json spec{{"family", "block-cos"},
            {"params", {{"M", M}, {"rho", rho}, {"psi", psi}, {"l_start", l_start}}}};
  return CoefficientSequence("block-cos", static_cast<std::uint64_t>(M) * l_start + 1,
                             std::move(rule), std::move(spec));
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("unknown key '" + item.key() + "' in " + where);
    }
  }
}

double require_number(const json& params, const std::string& key, const std::string& fam) {
  if (!params.contains(key) || !params[key].is_number()) {
    throw std::invalid_argument(fam + ": missing numeric parameter '" + key + "'");
  }
  return params[key].get<double>();
}

}  // namespace

std::vector<CatalogEntry> builtin_sequences() {
  std::vector<CatalogEntry> out;
  out.push_back({"zeta", 1.0, "a_n = 1; sum n^-sigma converges iff sigma > 1", make_zeta()});
  out.push_back({"eta", 1.0, "a_n = (-1)^(n+1); sigma_c = 0", make_eta()});
  out.push_back({"eta-shifted", 0.0, "a_n = (-1)^(n+1)/n; the eta coefficients translated to sigma_a = 0",
                 make_eta_shifted()});
  out.push_back({"harmonic", 0.0, "a_n = 1/n; shift of zeta", make_harmonic()});
  out.push_back({"counterexample-I", 0.0, "default part-I instance (M=2, rho=1)",
                 gen_counterexample_I(2, 1.0).first});
  out.push_back({"counterexample-II", 0.0, "default part-II instance (M=2, rho=2, rho'=1)",
                 gen_counterexample_II(2, 2.0, 1.0).first});
  return out;
}

CoefficientSequence named_sequence(const std::string& name) {
  for (auto& entry : builtin_sequences()) {
    if (entry.name == name) return std::move(entry.seq);
  }
  throw std::invalid_argument("unknown sequence name '" + name + "'");
}

CoefficientSequence make_sequence(const json& spec) {
  if (!spec.is_object()) throw std::invalid_argument("sequence spec must be a JSON object");

  if (spec.contains("explicit")) {
    reject_unknown_keys(spec, {"explicit", "start_index", "description"}, "explicit spec");
    const auto& arr = spec["explicit"];
    if (!arr.is_array()) throw std::invalid_argument("'explicit' must be an array");
    std::vector<Term> terms;
    terms.reserve(arr.size());
    for (const auto& row : arr) {
      if (!row.is_array() || row.size() != 3) {
        throw std::invalid_argument("explicit rows must be [modulus, cos, sign]");
      }
      Term t{row[0].get<double>(), row[1].get<double>(), row[2].get<int>()};
      if (t.modulus < 0.0) throw std::invalid_argument("explicit modulus must be >= 0");
      if (std::abs(t.cos_theta) > 1.0) throw std::invalid_argument("explicit cos must lie in [-1,1]");
      if (t.sin_sign != 1 && t.sin_sign != -1) throw std::invalid_argument("explicit sign must be +1 or -1");
      terms.push_back(t);
    }
    const std::uint64_t n0 = spec.value("start_index", std::uint64_t{1});
    if (n0 < 1) throw std::invalid_argument("start_index must be >= 1");
    const std::string desc = spec.value("description", std::string("explicit"));
    auto rule = [terms, n0](std::uint64_t n) -> Term {
      const std::uint64_t idx = n - n0;
      if (n < n0 || idx >= terms.size()) return Term{0.0, 1.0, 1};
      return terms[idx];
    };
    json normalized = spec;
    normalized["start_index"] = n0;
    return CoefficientSequence(desc, n0, std::move(rule), std::move(normalized));
  }

  if (!spec.contains("family") || !spec["family"].is_string()) {
    throw std::invalid_argument("sequence spec needs 'family' or 'explicit'");
  }
  reject_unknown_keys(spec, {"family", "params", "resolved"}, "sequence spec");
  const std::string family = spec["family"].get<std::string>();
  const json params = spec.value("params", json::object());

  if (family == "zeta" || family == "eta" || family == "eta-shifted" ||
      family == "harmonic") {
    reject_unknown_keys(params, {}, family);
    return named_sequence(family);
  }
  if (family == "counterexample-I") {
    reject_unknown_keys(params, {"M", "rho", "c", "lambda"}, family);
    const int M = static_cast<int>(require_number(params, "M", family));
    const double rho = require_number(params, "rho", family);
    const double c = params.contains("c") ? params["c"].get<double>() : 1.0;
    const double lam = params.contains("lambda") ? params["lambda"].get<double>() : 1.0;
    return gen_counterexample_I(M, rho, c, lam).first;
  }
  if (family == "counterexample-II") {
    reject_unknown_keys(params, {"M", "rho", "rho_prime", "lambda"}, family);
    const int M = static_cast<int>(require_number(params, "M", family));
    const double rho = require_number(params, "rho", family);
    const double rho_prime = require_number(params, "rho_prime", family);
    const double lam = params.contains("lambda")
                           ? params["lambda"].get<double>()
                           : std::numeric_limits<double>::quiet_NaN();
    return gen_counterexample_II(M, rho, rho_prime, lam).first;
  }
  if (family == "random-cos") {
    reject_unknown_keys(params, {"gamma", "seed", "modulus"}, family);
    const double gamma = require_number(params, "gamma", family);
    const std::uint64_t seed = params.value("seed", std::uint64_t{0});
    const std::string modulus = params.value("modulus", std::string("one"));
    return make_random_cos(gamma, seed, modulus);
  }
  if (family == "block-cos") {
    reject_unknown_keys(params, {"M", "rho", "psi", "l_start"}, family);
    const int M = static_cast<int>(require_number(params, "M", family));
    const double rho = require_number(params, "rho", family);
    if (!params.contains("psi") || !params["psi"].is_array()) {
      throw std::invalid_argument("block-cos: missing 'psi' array");
    }
    const auto psi = params["psi"].get<std::vector<double>>();
    const long long l_start = params.value("l_start", 1LL);
    return make_block_cos(M, rho, psi, l_start);
  }
  throw std::invalid_argument("unknown sequence family '" + family + "'");
}

}  // namespace landau
