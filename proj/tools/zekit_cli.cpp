#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zekit/chansynth.hpp"
#include "zekit/codesearch.hpp"
#include "zekit/errors.hpp"
#include "zekit/experiments.hpp"
#include "zekit/json_io.hpp"
#include "zekit/klcodes.hpp"
#include "zekit/observables.hpp"
#include "zekit/opsys.hpp"
#include "zekit/parallel.hpp"

using namespace zekit;

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::vector<Angle> parse_angles(const std::vector<std::string>& items) {
  std::vector<Angle> out;
  for (const auto& s : items) out.push_back(Angle::parse(s));
  return out;
}

// "a,b,c" -> angles; repeated flags are already split by CLI11.
std::vector<Angle> parse_grid(const std::vector<std::string>& items) {
  std::vector<Angle> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(Angle::parse(tok));
  }
  if (out.empty()) throw InvalidInput("empty angle grid");
  return out;
}

OperatorSystem system_for(const std::string& path, const std::vector<std::string>& thetas) {
  if (!path.empty() && !thetas.empty()) throw InvalidInput("give either --system or --theta, not both");
  if (!path.empty()) return system_from_json(read_json_file(path));
  if (thetas.empty()) throw InvalidInput("one of --system or --theta is required");
  std::vector<OperatorSystem> factors;
  for (const auto& t : parse_angles(thetas)) factors.push_back(make_N_theta(t));
  return tensor_systems(factors);
}

struct Common {
  std::size_t restarts = 64;
  std::uint64_t seed = 42;
  double tol = 1e-18;
  double kl_tol = 1e-9;
  std::size_t calibration_restarts = 16;
  bool serial = false;
  std::string out;

  void attach(CLI::App* app) {
    app->add_option("--restarts", restarts, "Restarts per search")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Base seed");
    app->add_option("--tol", tol, "Search convergence tolerance")->check(CLI::PositiveNumber);
    app->add_option("--kl-tol", kl_tol, "Pass tolerance for code verification")->check(CLI::PositiveNumber);
    app->add_option("--calibration-restarts", calibration_restarts, "Restarts of the N_pi baseline")
        ->check(CLI::PositiveNumber);
    app->add_flag("--serial", serial, "Use the serial reference kernels");
    app->add_option("--out", out, "Output path (stdout if omitted)");
  }

  ExperimentConfig config() const {
    ExperimentConfig c;
    c.restarts = restarts;
    c.seed = seed;
    c.tol = tol;
    c.kl_tol = kl_tol;
    c.calibration_restarts = calibration_restarts;
    c.exec = serial ? Exec::serial : Exec::parallel;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();

  CLI::App app{"zekit: zero-error codes and superactivation for the N_theta channel family"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  // synthesize
  std::string syn_theta, syn_out;
  auto* syn = app.add_subcommand("synthesize", "Build a channel whose graph is N_theta");
  syn->add_option("--theta", syn_theta, "Angle as a fraction of pi, e.g. 1/3")->required();
  syn->add_option("--out", syn_out, "Channel JSON path (stdout if omitted)");
  auto* syn_sys = syn->add_option("--system-out", "Also write N_theta as operator-system JSON");

  // verify
  std::string ver_system, ver_code, ver_out;
  std::vector<std::string> ver_thetas;
  double ver_tol = kDefaultPassTol;
  bool ver_serial = false;
  auto* ver = app.add_subcommand("verify", "Check the Knill-Laflamme conditions for a code");
  ver->add_option("--system", ver_system, "Operator-system JSON");
  ver->add_option("--theta", ver_thetas, "Build the tensor product of N_theta instead (repeatable)");
  ver->add_option("--code", ver_code, "Code JSON")->required();
  ver->add_option("--tol", ver_tol, "Pass tolerance")->check(CLI::PositiveNumber);
  ver->add_flag("--serial", ver_serial, "Use the serial reference kernels");
  ver->add_option("--out", ver_out, "Report path (stdout if omitted)");

  // search
  std::string sea_system;
  std::vector<std::string> sea_thetas;
  std::size_t sea_dim = 2;
  bool sea_stop = false;
  Common sea;
  auto* srch = app.add_subcommand("search", "Multi-start feasibility search for a code");
  srch->add_option("--system", sea_system, "Operator-system JSON");
  srch->add_option("--theta", sea_thetas, "Build the tensor product of N_theta instead (repeatable)");
  srch->add_option("--code-dim", sea_dim, "Code dimension")->check(CLI::Range(2, 64));
  srch->add_flag("--stop-at-tol", sea_stop, "Stop after the first chunk of restarts that reaches tol");
  sea.attach(srch);

  // sweep
  std::vector<std::string> sw_g1, sw_g2;
  Common sw;
  auto* swp = app.add_subcommand("sweep", "Pair floors over a grid of angles (CSV)");
  swp->add_option("--theta1-grid", sw_g1, "Comma-separated fractions of pi")->required();
  swp->add_option("--theta2-grid", sw_g2, "Comma-separated fractions of pi")->required();
  sw.attach(swp);

  // superactivate
  std::vector<std::string> sup_thetas;
  Common sup;
  auto* supc = app.add_subcommand("superactivate", "Tripartite superactivation report");
  supc->add_option("--theta", sup_thetas, "Three angles summing to pi")->required()->expected(3);
  sup.attach(supc);

  // observable
  std::string obs_theta, obs_out;
  double obs_scale = 0.5;
  auto* obsc = app.add_subcommand("observable", "Positive operator basis of N_theta");
  obsc->add_option("--theta", obs_theta, "Angle as a fraction of pi")->required();
  obsc->add_option("--scale", obs_scale, "Operator-norm rescale target")->check(CLI::Range(0.0, 1.0));
  obsc->add_option("--out", obs_out, "Observable JSON path (stdout if omitted)");

  // indist
  std::string ind_obs, ind_code, ind_out;
  double ind_tol = kDefaultPassTol;
  std::size_t ind_samples = 1000;
  std::uint64_t ind_seed = 7;
  auto* ind = app.add_subcommand("indist", "Check that a subspace is indistinguishable under an observable");
  ind->add_option("--obs", ind_obs, "Observable JSON")->required();
  ind->add_option("--code", ind_code, "Code JSON")->required();
  ind->add_option("--tol", ind_tol, "Pass tolerance")->check(CLI::PositiveNumber);
  ind->add_option("--samples", ind_samples, "Random code states for the spread check");
  ind->add_option("--seed", ind_seed, "Seed for the random code states");
  ind->add_option("--out", ind_out, "Report path (stdout if omitted)");

  // two-shot
  std::vector<std::string> two_thetas;
  Common two;
  auto* twoc = app.add_subcommand("two-shot", "Fourfold code and pair floors for theta_1 + theta_2 = pi/2");
  twoc->alias("two_shot_demo");
  twoc->add_option("--theta", two_thetas, "Two angles summing to pi/2")->required()->expected(2);
  two.attach(twoc);

  // cn-probe
  std::vector<std::string> cn_thetas;
  std::vector<double> cn_raw;
  Common cn;
  auto* cnc = app.add_subcommand("cn-probe", "Small-angle floors for up to three factors");
  cnc->alias("cn_probe");
  cnc->add_option("--theta", cn_thetas, "Angles as fractions of pi (repeatable)");
  cnc->add_option("--theta-raw", cn_raw, "Angles in radians, approximated by fractions (repeatable)");
  cn.attach(cnc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*syn) {
      const Angle theta = Angle::parse(syn_theta);
      const auto system = make_N_theta(theta);
      emit(syn_out, dump(to_json(synthesize(system))));
      if (*syn_sys) write_json_file(syn_sys->as<std::string>(), to_json(system));
    } else if (*ver) {
      const auto system = system_for(ver_system, ver_thetas);
      const auto code = code_from_json(read_json_file(ver_code));
      const auto rep = verify_code(system, code, ver_tol, ver_serial ? Exec::serial : Exec::parallel);
      Json j;
      j["command"] = "verify";
      j["version"] = library_version();
      j["report"] = to_json(rep);
      emit(ver_out, dump(j));
    } else if (*srch) {
      const auto system = system_for(sea_system, sea_thetas);
      SearchOptions o;
      o.code_dim = sea_dim;
      o.restarts = sea.restarts;
      o.seed = sea.seed;
      o.tol = sea.tol;
      o.stop_at_tol = sea_stop;
      o.exec = sea.serial ? Exec::serial : Exec::parallel;
      Json j;
      j["command"] = "search";
      j["version"] = library_version();
      j["code_dim"] = sea_dim;
      j["stop_at_tol"] = sea_stop;
      j["report"] = to_json(search_code(system, o));
      emit(sea.out, dump(j));
    } else if (*swp) {
      emit(sw.out, sweep_csv(sweep(parse_grid(sw_g1), parse_grid(sw_g2), sw.config())));
    } else if (*supc) {
      const auto th = parse_angles(sup_thetas);
      emit(sup.out, dump(to_json(superactivate(th[0], th[1], th[2], sup.config()))));
    } else if (*obsc) {
      emit(obs_out, dump(to_json(positive_basis(make_N_theta(Angle::parse(obs_theta)), obs_scale))));
    } else if (*ind) {
      const auto obs = observable_from_json(read_json_file(ind_obs));
      const auto code = code_from_json(read_json_file(ind_code));
      const auto v = indistinguishable_check(obs, code, ind_tol, ind_samples, ind_seed);
      Json j;
      j["command"] = "indist";
      j["version"] = library_version();
      j["kl"] = to_json(v.kl);
      j["tv_spread"] = v.tv_spread;
      j["samples"] = v.samples;
      j["seed"] = ind_seed;
      j["pass"] = v.pass;
      emit(ind_out, dump(j));
    } else if (*twoc) {
      const auto th = parse_angles(two_thetas);
      emit(two.out, dump(to_json(two_shot_demo(th[0], th[1], two.config()))));
    } else if (*cnc) {
      std::vector<ProbeAngle> probe;
      for (const auto& t : parse_angles(cn_thetas)) probe.push_back({t, std::nullopt});
      for (double r : cn_raw) probe.push_back({Angle::approximate(r), r});
      emit(cn.out, dump(to_json(cn_probe(probe, cn.config()))));
    }
  } catch (const Error& e) {
    std::cerr << "zekit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "zekit: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
