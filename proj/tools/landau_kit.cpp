// Command-line front end: cone-info, volume, validate, generate, probe, sweep.
//
// Exit codes: 0 success, 1 configuration/validation failure, 2 computation
// or I/O failure. stdout carries a one-line summary per run; diagnostics go
// to stderr. LANDAU_KIT_THREADS overrides the OpenMP pool size. A JSON file
// passed via --config supplies defaults for any flag not given explicitly.

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "landau/cone.hpp"
#include "landau/dirichlet.hpp"
#include "landau/json_io.hpp"
#include "landau/rectangles.hpp"
#include "landau/sequences.hpp"
#include "landau/sweep.hpp"
#include "landau/volume.hpp"

namespace {

using landau::format_double;
using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

/// --seq accepts either a spec file path or a built-in catalog name.
landau::CoefficientSequence load_sequence(const std::string& ref) {
  if (std::ifstream probe(ref); probe.good()) {
    try {
      return landau::make_sequence(read_json_file(ref));
    } catch (const json::exception& e) {
      throw std::invalid_argument("bad sequence spec in " + ref + ": " + e.what());
    }
  }
  return landau::named_sequence(ref);
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    out.push_back(std::stod(tok));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const double v : parse_double_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

/// "lo:hi" range or comma list.
std::pair<int, int> parse_k_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int k = std::stoi(s);
    return {k, k};
  }
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
  return out;
}

/// Merge a JSON config object into the argument list: keys become --key
/// values for any option the subcommand defines and the command line does
/// not already set. Unknown keys are rejected.
void merge_config(CLI::App& app, std::vector<std::string>& args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) return;
  if (args.empty() || args[0].empty() || args[0][0] == '-') return;  // let CLI11 report

  CLI::App* sub = app.get_subcommand_no_throw(args[0]);
  if (sub == nullptr) return;

  const json cfg = read_json_file(config_path);
  if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");

  const auto given = [&args](const std::string& flag) {
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };

  for (const auto& item : cfg.items()) {
    const std::string flag = "--" + item.key();
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) {
      throw std::invalid_argument("unknown config key '" + item.key() + "' for command '" +
                                  args[0] + "'");
    }
    if (given(flag)) continue;  // explicit flags win
    const json& v = item.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back(flag);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) {
        if (!joined.empty()) joined += ',';
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      args.push_back(flag);
      args.push_back(joined);
    } else if (v.is_string()) {
      args.push_back(flag);
      args.push_back(v.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(v.dump());
    }
  }
}

void apply_thread_env() {
  const char* env = std::getenv("LANDAU_KIT_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || n < 1) {
    throw std::invalid_argument("LANDAU_KIT_THREADS must be a positive integer");
  }
  omp_set_num_threads(static_cast<int>(n));
}

struct Options {
  int M = 2;
  double rho = 1.0;
  double rho_prime = 0.0;
  double c = 1.0;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double gamma = 0.0;
  double tol = landau::kDefaultTol;
  double epsilon = 0.5;
  int k_max = 40;
  long long L_max = 1000;
  long long samples = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t N = 1000000;
  std::string seq;
  std::string family;
  std::string out;
  std::string format = "json";
  std::string coeff_csv;
  std::string tail_csv_path;
  std::string M_list = "2";
  std::string rho_list = "1";
  std::string eps_list = "0.05,0.1,0.2";
  std::string k_range = "0:30";
  std::string grid;
  std::string kind;
  std::string modulus = "one";
  std::string psi_list;
  long long l_start = 1;
  bool serial = false;
  landau::ProbeThresholds thresholds;
  std::string config;  // handled by merge_config; registered so CLI11 accepts it
};

int run_cone_info(const Options& o) {
  const auto cone = landau::make_cone(o.M, o.rho);
  const auto gens = landau::generators(cone);
  const auto half = landau::polar_halfspaces(cone);
  json j{{"M", cone.dim}, {"rho", cone.rho}, {"generators", gens},
         {"halfspace_rows", half.rows}};
  if (!o.out.empty()) write_file(o.out, j.dump(2) + "\n");
  std::cout << "cone-info M=" << cone.dim << " rho=" << format_double(cone.rho)
            << " generators=" << gens.size()
            << (o.out.empty() ? "" : " -> " + o.out) << "\n";
  if (o.out.empty()) std::cout << j.dump(2) << "\n";
  return 0;
}

int run_volume(const Options& o) {
  const landau::VolumeReport rep =
      o.serial ? landau::mc_volume_serial(o.M, o.rho, o.samples, o.seed)
               : landau::mc_volume(o.M, o.rho, o.samples, o.seed);
  std::string payload;
  if (o.format == "json") {
    payload = json(rep).dump(2) + "\n";
  } else if (o.format == "csv") {
    payload = landau::volume_csv(rep);
  } else {
    throw std::invalid_argument("unknown format '" + o.format + "'");
  }
  if (!o.out.empty()) write_file(o.out, payload);
  std::cout << "volume M=" << rep.M << " rho=" << format_double(rep.rho)
            << " packing=" << format_double(rep.exact_packing_volume)
            << " lower_bound=" << format_double(rep.lower_bound)
            << " mc=" << format_double(rep.mc_estimate) << "+/-"
            << format_double(rep.mc_stderr)
            << (o.out.empty() ? "" : " -> " + o.out) << "\n";
  if (o.out.empty()) std::cout << payload;
  return 0;
}

int run_validate(const Options& o) {
  const auto seq = load_sequence(o.seq);
  const landau::ValidationReport rep =
      landau::validate_sequence(seq, o.M, o.rho, o.gamma, o.L_max, o.tol);
  const std::string payload = json(rep).dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out, payload);
  std::cout << "validate seq=" << seq.description() << " M=" << rep.M
            << " rho=" << format_double(rep.rho) << " gamma=" << format_double(rep.gamma)
            << " condition3=" << (rep.condition3_ok ? "pass" : "fail")
            << " condition4=" << (rep.condition4_ok ? "pass" : "fail")
            << " min_gamma_max=" << format_double(rep.min_gamma_max)
            << (o.out.empty() ? "" : " -> " + o.out) << "\n";
  if (o.out.empty()) std::cout << payload;
  return 0;
}

int run_generate(const Options& o) {
  landau::CoefficientSequence seq = [&]() {
    if (o.family == "counterexample-I") {
      const double lam = std::isnan(o.lambda) ? 1.0 : o.lambda;
      return landau::gen_counterexample_I(o.M, o.rho, o.c, lam).first;
    }
    if (o.family == "counterexample-II") {
      if (!(o.rho_prime > 0.0)) {
        throw std::invalid_argument("generate counterexample-II requires --rho-prime > 0");
      }
      return landau::gen_counterexample_II(o.M, o.rho, o.rho_prime, o.lambda).first;
    }
    if (o.family == "random-cos") {
      return landau::make_sequence(json{
          {"family", "random-cos"},
          {"params", {{"gamma", o.gamma}, {"seed", o.seed}, {"modulus", o.modulus}}}});
    }
    if (o.family == "block-cos") {
      if (o.psi_list.empty()) throw std::invalid_argument("block-cos requires --psi");
      return landau::make_sequence(
          json{{"family", "block-cos"},
               {"params",
                {{"M", o.M}, {"rho", o.rho}, {"psi", parse_double_list(o.psi_list)},
                 {"l_start", o.l_start}}}});
    }
    return landau::named_sequence(o.family);
  }();
  if (o.out.empty()) throw std::invalid_argument("generate requires --out");
  write_file(o.out, seq.spec().dump(2) + "\n");
  std::cout << "generate family=" << o.family << " -> " << o.out << "\n";
  return 0;
}

int run_probe(const Options& o) {
  const auto seq = load_sequence(o.seq);
  const auto grid = o.grid.empty() ? landau::default_tail_grid() : parse_u64_list(o.grid);
  const landau::ProbeReport rep =
      landau::landau_probe(seq, o.epsilon, o.k_max, o.N, grid, o.thresholds);
  const std::string payload = json(rep).dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out, payload);
  if (!o.coeff_csv.empty()) {
    const auto exp = landau::taylor_coeffs(seq, o.epsilon, o.k_max, o.N);
    write_file(o.coeff_csv, landau::taylor_csv(seq.description(), exp));
  }
  if (!o.tail_csv_path.empty()) {
    const auto scan = landau::cauchy_tail_scan(seq, o.epsilon, grid);
    write_file(o.tail_csv_path, landau::tail_csv(seq.description(), o.epsilon, scan));
  }
  std::cout << "probe seq=" << seq.description() << " epsilon=" << format_double(o.epsilon)
            << " radius="
            << (rep.radius.is_infinite ? "inf" : format_double(rep.radius.value))
            << " tail_slope=" << format_double(rep.tail_slope)
            << " verdict=" << landau::to_string(rep.verdict)
            << (o.out.empty() ? "" : " -> " + o.out) << "\n";
  if (o.out.empty()) std::cout << payload;
  return 0;
}

int run_sweep(const Options& o) {
  if (o.out.empty()) throw std::invalid_argument("sweep requires --out");
  std::string csv;
  std::size_t rows = 0;
  if (o.kind == "volume") {
    landau::VolumeSweepSpec spec;
    spec.Ms = parse_int_list(o.M_list);
    spec.rhos = parse_double_list(o.rho_list);
    spec.samples = o.samples;
    spec.master_seed = o.seed;
    csv = landau::volume_sweep_csv(spec);
    rows = spec.Ms.size() * spec.rhos.size();
  } else if (o.kind == "ratio") {
    if (o.seq.empty()) throw std::invalid_argument("ratio sweep requires --seq");
    landau::RatioSweepSpec spec;
    spec.sequence_spec = load_sequence(o.seq).spec();
    spec.epsilons = parse_double_list(o.eps_list);
    const auto [klo, khi] = parse_k_range(o.k_range);
    spec.k_lo = klo;
    spec.k_hi = khi;
    spec.N = o.N;
    csv = landau::ratio_sweep_csv(spec);
    rows = spec.epsilons.size() * static_cast<std::size_t>(khi - klo + 1);
  } else {
    throw std::invalid_argument("sweep --kind must be 'volume' or 'ratio'");
  }
  write_file(o.out, csv);
  std::cout << "sweep kind=" << o.kind << " rows=" << rows << " -> " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    apply_thread_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"landau-kit: ratio-chained cones, admissible-cosine volumes, and "
               "Dirichlet-series extension probes"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON file with defaults for this command");
  };

  CLI::App* cone = app.add_subcommand("cone-info", "Generators and halfspace rows of a cone");
  cone->add_option("--M", o.M, "dimension")->required()->check(CLI::PositiveNumber);
  cone->add_option("--rho", o.rho, "ratio parameter")->required();
  cone->add_option("--out", o.out, "output JSON path");
  add_config(cone);

  CLI::App* vol = app.add_subcommand("volume", "Packing, bound, and MC volume at (M, rho)");
  vol->add_option("--M", o.M)->required()->check(CLI::PositiveNumber);
  vol->add_option("--rho", o.rho)->required();
  vol->add_option("--samples", o.samples, "MC samples")->check(CLI::PositiveNumber);
  vol->add_option("--seed", o.seed, "MC seed");
  vol->add_option("--out", o.out, "output path");
  vol->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  vol->add_flag("--serial", o.serial, "use the single-threaded reference kernel");
  add_config(vol);

  CLI::App* val = app.add_subcommand("validate", "Blockwise coefficient-condition checks");
  val->add_option("--seq", o.seq, "sequence spec file or catalog name")->required();
  val->add_option("--M", o.M)->required()->check(CLI::PositiveNumber);
  val->add_option("--rho", o.rho)->required();
  val->add_option("--gamma", o.gamma)->required();
  val->add_option("--L-max", o.L_max)->check(CLI::PositiveNumber);
  val->add_option("--tol", o.tol);
  val->add_option("--out", o.out, "output JSON path");
  add_config(val);

  CLI::App* gen = app.add_subcommand("generate", "Write a sequence spec JSON");
  gen->add_option("--family", o.family)->required();
  gen->add_option("--M", o.M);
  gen->add_option("--rho", o.rho);
  gen->add_option("--rho-prime", o.rho_prime);
  gen->add_option("--c", o.c);
  gen->add_option("--lambda", o.lambda);
  gen->add_option("--gamma", o.gamma);
  gen->add_option("--seed", o.seed);
  gen->add_option("--modulus", o.modulus)->check(CLI::IsMember({"one", "harmonic"}));
  gen->add_option("--psi", o.psi_list, "comma list of block cosines");
  gen->add_option("--l-start", o.l_start);
  gen->add_option("--out", o.out, "output JSON path")->required();
  add_config(gen);

  CLI::App* probe = app.add_subcommand("probe", "Holomorphic-extension probe at s = 0");
  probe->add_option("--seq", o.seq)->required();
  probe->add_option("--epsilon", o.epsilon)->required();
  probe->add_option("--k-max", o.k_max)->check(CLI::PositiveNumber);
  probe->add_option("--N", o.N)->check(CLI::PositiveNumber);
  probe->add_option("--grid", o.grid, "comma list of tail-scan checkpoints");
  probe->add_option("--out", o.out, "report JSON path");
  probe->add_option("--coeff-csv", o.coeff_csv, "Taylor coefficient table path");
  probe->add_option("--tail-csv", o.tail_csv_path, "tail table path");
  probe->add_option("--extends-radius-factor", o.thresholds.extends_radius_factor);
  probe->add_option("--singular-radius-factor", o.thresholds.singular_radius_factor);
  probe->add_option("--extends-slope-factor", o.thresholds.extends_slope_factor);
  add_config(probe);

  CLI::App* sweep = app.add_subcommand("sweep", "Grid experiments, one CSV row per point");
  sweep->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"volume", "ratio"}));
  sweep->add_option("--M", o.M_list, "comma list of dimensions");
  sweep->add_option("--rho", o.rho_list, "comma list of ratios");
  sweep->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", o.seed, "master seed; rows derive their own");
  sweep->add_option("--seq", o.seq);
  sweep->add_option("--epsilon", o.eps_list, "comma list of epsilons");
  sweep->add_option("--k", o.k_range, "k range lo:hi or comma list");
  sweep->add_option("--N", o.N)->check(CLI::PositiveNumber);
  sweep->add_option("--out", o.out)->required();
  add_config(sweep);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    merge_config(app, args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(cone)) return run_cone_info(o);
    if (app.got_subcommand(vol)) return run_volume(o);
    if (app.got_subcommand(val)) return run_validate(o);
    if (app.got_subcommand(gen)) return run_generate(o);
    if (app.got_subcommand(probe)) return run_probe(o);
    if (app.got_subcommand(sweep)) return run_sweep(o);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
