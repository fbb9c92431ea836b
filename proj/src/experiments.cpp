#include "zekit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "zekit/chansynth.hpp"
#include "zekit/errors.hpp"
#include "zekit/opsys.hpp"

namespace zekit {

namespace {

SearchOptions options_from(const ExperimentConfig& c, std::size_t restarts) {
  SearchOptions o;
  o.restarts = restarts;
  o.seed = c.seed;
  o.tol = c.tol;
  o.exec = c.exec;
  o.stop_at_tol = true;
  return o;
}

OperatorSystem product_system(std::span<const Angle> thetas) {
  std::vector<OperatorSystem> factors;
  factors.reserve(thetas.size());
  for (const auto& t : thetas) factors.push_back(make_N_theta(t));
  return tensor_systems(factors);
}

Json angles_json(std::span<const Angle> thetas) {
  Json out = Json::array();
  for (const auto& t : thetas) out.push_back(to_json(t));
  return out;
}

void check_config(const ExperimentConfig& c) {
  if (c.restarts == 0 || c.calibration_restarts == 0) throw InvalidInput("restarts must be >= 1");
  if (!(c.tol > 0.0) || !(c.kl_tol > 0.0)) throw InvalidInput("tolerances must be positive");
}

}  // namespace

std::string library_version() { return ZEKIT_VERSION; }

Calibration calibrate(const ExperimentConfig& config) {
  check_config(config);
  Calibration cal;
  cal.seed = config.seed;
  // Every restart counts here, so no early stop.
  SearchOptions full = options_from(config, config.calibration_restarts);
  full.stop_at_tol = false;
  const auto all = search_code(make_N_theta(Angle::pi()), full);
  cal.restarts = all.restarts;
  for (const auto& o : all.per_restart)
    if (o.converged) {
      ++cal.converged;
      cal.baseline_max = std::max(cal.baseline_max, o.objective);
    }
  if (cal.converged == 0) {
    cal.fallback = true;
    cal.threshold = 100.0 * config.tol;
  } else {
    cal.threshold = 100.0 * cal.baseline_max;
  }
  return cal;
}

FloorEntry search_floor(std::span<const Angle> thetas, const ExperimentConfig& config, const Calibration& cal) {
  check_config(config);
  FloorEntry e;
  e.thetas.assign(thetas.begin(), thetas.end());
  e.report = search_code(product_system(thetas), options_from(config, config.restarts));
  e.above_threshold = e.report.objective_min > cal.threshold;
  return e;
}

SynthesisCheck synthesis_round_trip(const Angle& theta) {
  SynthesisCheck s;
  s.theta = theta;
  const auto system = make_N_theta(theta);
  const Channel ch = synthesize(system);
  s.d_A = ch.d_A;
  s.d_B = ch.d_B;
  s.d_E = ch.choi_rank();
  s.tp_residual = ch.tp_residual();
  s.graph_residual = span_distance(graph_of(ch), system);
  s.ok = s.d_A == 4 && s.d_E == 3 && ch.kraus.size() == 3 && s.tp_residual < 1e-9 && s.graph_residual < 1e-8;
  return s;
}

SuperactivationReport superactivate(const Angle& theta1, const Angle& theta2, const Angle& theta3,
                                    const ExperimentConfig& config) {
  check_config(config);
  const std::array<Angle, 3> th{theta1, theta2, theta3};
  for (const auto& t : th)
    if (t.numerator() <= 0) throw InvalidInput("superactivate: every angle must be positive, got " + t.to_string());
  if (sum(th) != Angle::pi())
    throw AngleSumMismatch("superactivate: angles sum to " + sum(th).to_string() + " pi, not pi");

  SuperactivationReport r;
  r.thetas = th;
  r.config = config;
  r.calibration = calibrate(config);
  for (const auto& t : th) {
    const Angle one[] = {t};
    r.singles.push_back(search_floor(one, config, r.calibration));
  }
  const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [i, j] : pairs) {
    const Angle two[] = {th[i], th[j]};
    r.pairs.push_back(search_floor(two, config, r.calibration));
  }
  r.tripartite = verify_code(product_system(th), theorem_B_code(3), config.kl_tol, config.exec);
  for (const auto& t : th) r.synthesis.push_back(synthesis_round_trip(t));

  r.superactivation = r.tripartite.pass;
  for (const auto& e : r.singles) r.superactivation = r.superactivation && e.above_threshold;
  for (const auto& e : r.pairs) r.superactivation = r.superactivation && e.above_threshold;
  return r;
}

TwoShotReport two_shot_demo(const Angle& theta1, const Angle& theta2, const ExperimentConfig& config) {
  check_config(config);
  if (theta1 + theta2 != Angle(1, 2))
    throw AngleSumMismatch("two_shot_demo: angles sum to " + (theta1 + theta2).to_string() + " pi, not 1/2 pi");
  TwoShotReport r;
  r.thetas = {theta1, theta2};
  r.config = config;
  r.calibration = calibrate(config);
  const Angle four[] = {theta1, theta2, theta1, theta2};
  r.fourfold = verify_code(product_system(four), theorem_B_code(4), config.kl_tol, config.exec);
  const std::array<std::array<Angle, 2>, 3> pairs{{{theta1, theta1}, {theta2, theta2}, {theta1, theta2}}};
  for (const auto& p : pairs) r.pairs.push_back(search_floor(p, config, r.calibration));
  r.pass = r.fourfold.pass;
  for (const auto& e : r.pairs) r.pass = r.pass && e.above_threshold;
  return r;
}

CnProbeReport cn_probe(const std::vector<ProbeAngle>& thetas, const ExperimentConfig& config) {
  check_config(config);
  if (thetas.empty()) throw InvalidInput("cn_probe: at least one angle is required");
  if (thetas.size() > 3) throw DimensionGuard("cn_probe: at most 3 factors (C^64) are supported");
  CnProbeReport r;
  r.thetas = thetas;
  r.config = config;
  r.calibration = calibrate(config);
  std::vector<Angle> exact;
  for (const auto& p : thetas) {
    exact.push_back(p.angle);
    r.abs_sum += p.raw ? std::abs(*p.raw) : p.angle.abs().radians();
    r.angle_bypass = r.angle_bypass || p.raw.has_value();
  }
  if (r.abs_sum <= kTwoLnThreeHalves)
    r.flag = "<= 2 ln(3/2)";
  else if (r.abs_sum < std::numbers::pi)
    r.flag = "< pi";
  else
    r.flag = "neither";
  r.floor = search_floor(exact, config, r.calibration);
  return r;
}

SweepResult sweep(const std::vector<Angle>& grid1, const std::vector<Angle>& grid2, const ExperimentConfig& config) {
  check_config(config);
  SweepResult out;
  out.calibration = calibrate(config);
  for (const auto& t1 : grid1)
    for (const auto& t2 : grid2) {
      const Angle two[] = {t1, t2};
      const auto e = search_floor(two, config, out.calibration);
      out.rows.push_back({t1, t2, e.report.objective_min, e.report.restarts, e.report.converged_at_tol});
    }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "theta1,theta2,objective_min,restarts,converged\n";
  char buf[128];
  for (const auto& r : result.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%zu,%s\n", r.theta1.radians(), r.theta2.radians(),
                  r.objective_min, r.restarts, r.converged ? "true" : "false");
    os << buf;
  }
  return os.str();
}

Json to_json(const ExperimentConfig& c) {
  Json out;
  out["restarts"] = c.restarts;
  out["seed"] = c.seed;
  out["tol"] = c.tol;
  out["kl_tol"] = c.kl_tol;
  out["calibration_restarts"] = c.calibration_restarts;
  return out;
}

Json to_json(const Calibration& c) {
  Json out;
  out["baseline_max"] = c.baseline_max;
  out["threshold"] = c.threshold;
  out["converged"] = c.converged;
  out["restarts"] = c.restarts;
  out["seed"] = c.seed;
  out["fallback"] = c.fallback;
  return out;
}

Json to_json(const FloorEntry& e) {
  Json out;
  out["thetas"] = angles_json(e.thetas);
  out["above_threshold"] = e.above_threshold;
  out["search"] = to_json(e.report);
  return out;
}

Json to_json(const SynthesisCheck& s) {
  Json out;
  out["theta"] = to_json(s.theta);
  out["d_A"] = s.d_A;
  out["d_B"] = s.d_B;
  out["d_E"] = s.d_E;
  out["tp_residual"] = s.tp_residual;
  out["graph_residual"] = s.graph_residual;
  out["ok"] = s.ok;
  return out;
}

Json to_json(const SuperactivationReport& r) {
  Json out;
  out["command"] = "superactivate";
  out["version"] = library_version();
  out["thetas"] = angles_json(r.thetas);
  out["config"] = to_json(r.config);
  out["calibration"] = to_json(r.calibration);
  Json singles = Json::array(), pairs = Json::array(), synth = Json::array();
  for (const auto& e : r.singles) singles.push_back(to_json(e));
  for (const auto& e : r.pairs) pairs.push_back(to_json(e));
  for (const auto& s : r.synthesis) synth.push_back(to_json(s));
  out["singles"] = std::move(singles);
  out["pairs"] = std::move(pairs);
  out["tripartite"] = to_json(r.tripartite);
  out["synthesis"] = std::move(synth);
  out["superactivation"] = r.superactivation;
  return out;
}

Json to_json(const TwoShotReport& r) {
  Json out;
  out["command"] = "two-shot";
  out["version"] = library_version();
  out["thetas"] = angles_json(r.thetas);
  out["config"] = to_json(r.config);
  out["calibration"] = to_json(r.calibration);
  out["fourfold"] = to_json(r.fourfold);
  Json pairs = Json::array();
  for (const auto& e : r.pairs) pairs.push_back(to_json(e));
  out["pairs"] = std::move(pairs);
  out["pass"] = r.pass;
  return out;
}

Json to_json(const CnProbeReport& r) {
  Json out;
  out["command"] = "cn-probe";
  out["version"] = library_version();
  Json thetas = Json::array();
  for (const auto& p : r.thetas) {
    Json t = to_json(p.angle);
    if (p.raw) t["raw_radians"] = *p.raw;
    thetas.push_back(std::move(t));
  }
  out["thetas"] = std::move(thetas);
  out["angle_bypass"] = r.angle_bypass;
  out["config"] = to_json(r.config);
  out["calibration"] = to_json(r.calibration);
  out["abs_sum_radians"] = r.abs_sum;
  out["flag"] = r.flag;
  out["floor"] = to_json(r.floor);
  return out;
}

}  // namespace zekit
