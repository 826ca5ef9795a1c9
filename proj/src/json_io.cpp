#include "landau/json_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace landau {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void to_json(json& j, const VolumeReport& r) {
  j = json{{"M", r.M},
           {"rho", r.rho},
           {"exact_packing_volume", r.exact_packing_volume},
           {"lower_bound", r.lower_bound},
           {"mc_estimate", r.mc_estimate},
           {"mc_stderr", r.mc_stderr},
           {"samples", r.samples},
           {"seed", r.seed}};
}

void from_json(const json& j, VolumeReport& r) {
  j.at("M").get_to(r.M);
  j.at("rho").get_to(r.rho);
  r.exact_packing_volume = j.at("exact_packing_volume").is_null()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : j.at("exact_packing_volume").get<double>();
  r.lower_bound = j.at("lower_bound").is_null()
                      ? std::numeric_limits<double>::quiet_NaN()
                      : j.at("lower_bound").get<double>();
  j.at("mc_estimate").get_to(r.mc_estimate);
  j.at("mc_stderr").get_to(r.mc_stderr);
  j.at("samples").get_to(r.samples);
  j.at("seed").get_to(r.seed);
}

void to_json(json& j, const ValidationReport& r) {
  j = json{{"M", r.M},
           {"rho", r.rho},
           {"gamma", r.gamma},
           {"tol", r.tol},
           {"blocks_checked", r.blocks_checked},
           {"condition3_ok", r.condition3_ok},
           {"condition4_ok", r.condition4_ok},
           {"gamma_max_per_block", r.gamma_max_per_block},
           {"min_gamma_max", r.min_gamma_max},
           {"worst_slack", r.worst_slack}};
}

void from_json(const json& j, ValidationReport& r) {
  j.at("M").get_to(r.M);
  j.at("rho").get_to(r.rho);
  j.at("gamma").get_to(r.gamma);
  j.at("tol").get_to(r.tol);
  j.at("blocks_checked").get_to(r.blocks_checked);
  j.at("condition3_ok").get_to(r.condition3_ok);
  j.at("condition4_ok").get_to(r.condition4_ok);
  j.at("gamma_max_per_block").get_to(r.gamma_max_per_block);
  j.at("min_gamma_max").get_to(r.min_gamma_max);
  j.at("worst_slack").get_to(r.worst_slack);
}

void to_json(json& j, const ProbeThresholds& t) {
  j = json{{"extends_radius_factor", t.extends_radius_factor},
           {"singular_radius_factor", t.singular_radius_factor},
           {"extends_slope_factor", t.extends_slope_factor}};
}

void from_json(const json& j, ProbeThresholds& t) {
  j.at("extends_radius_factor").get_to(t.extends_radius_factor);
  j.at("singular_radius_factor").get_to(t.singular_radius_factor);
  j.at("extends_slope_factor").get_to(t.extends_slope_factor);
}

void to_json(json& j, const ProbeReport& r) {
  j = json{{"sequence", r.sequence},
           {"epsilon", r.epsilon},
           {"k_max", r.k_max},
           {"N", r.N},
           {"N_grid", r.N_grid},
           {"radius_is_infinite", r.radius.is_infinite},
           {"tail_slope", r.tail_slope},
           {"verdict", to_string(r.verdict)},
           {"thresholds", r.thresholds}};
  if (r.radius.is_infinite) {
    j["radius_estimate"] = nullptr;
  } else {
    j["radius_estimate"] = r.radius.value;
  }
}

void from_json(const json& j, ProbeReport& r) {
  j.at("sequence").get_to(r.sequence);
  j.at("epsilon").get_to(r.epsilon);
  j.at("k_max").get_to(r.k_max);
  j.at("N").get_to(r.N);
  j.at("N_grid").get_to(r.N_grid);
  j.at("radius_is_infinite").get_to(r.radius.is_infinite);
  r.radius.value = j.at("radius_estimate").is_null() ? 0.0
                                                     : j.at("radius_estimate").get<double>();
  // -inf tail slopes (fully cancelled tails) serialize as null
  r.tail_slope = j.at("tail_slope").is_null() ? -std::numeric_limits<double>::infinity()
                                              : j.at("tail_slope").get<double>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  j.at("thresholds").get_to(r.thresholds);
}

std::string taylor_csv(const std::string& sequence, const TaylorExpansion& exp) {
  std::ostringstream out;
  out << "sequence,epsilon,k,c_k_re,c_k_im\n";
  for (int k = 0; k <= exp.k_max; ++k) {
    out << sequence << ',' << format_double(exp.epsilon) << ',' << k << ','
        << format_double(exp.coefficients[k].real()) << ','
        << format_double(exp.coefficients[k].imag()) << '\n';
  }
  return out.str();
}

std::string tail_csv(const std::string& sequence, double epsilon, const TailScan& scan) {
  std::ostringstream out;
  out << "sequence,epsilon,N,tail\n";
  for (const auto& p : scan.points) {
    out << sequence << ',' << format_double(epsilon) << ',' << p.N << ','
        << format_double(p.tail) << '\n';
  }
  return out.str();
}

std::string volume_csv(const VolumeReport& r) {
  std::ostringstream out;
  out << "M,rho,lower_bound,packing_volume,mc_estimate,mc_stderr,samples,seed\n";
  out << r.M << ',' << format_double(r.rho) << ',' << format_double(r.lower_bound)
      << ',' << format_double(r.exact_packing_volume) << ','
      << format_double(r.mc_estimate) << ',' << format_double(r.mc_stderr) << ','
      << r.samples << ',' << r.seed << '\n';
  return out.str();
}

}  // namespace landau
