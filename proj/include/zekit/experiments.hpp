#pragma once

// End-to-end runs built from the library pieces: calibration of the
// "positive floor" threshold, the tripartite superactivation report, the
// two-shot code check, small-angle probes, and angle sweeps.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zekit/angle.hpp"
#include "zekit/codesearch.hpp"
#include "zekit/json_io.hpp"
#include "zekit/klcodes.hpp"
#include "zekit/parallel.hpp"

namespace zekit {

std::string library_version();

struct ExperimentConfig {
  std::size_t restarts = 64;
  std::uint64_t seed = 42;
  double tol = 1e-18;
  double kl_tol = 1e-9;
  std::size_t calibration_restarts = 16;
  Exec exec = Exec::parallel;
};

/// Threshold for "positive floor" claims: 100 x the largest objective among
/// converged restarts of the N_pi baseline search. Falls back to 100 x tol
/// (flagged) if no restart converges.
struct Calibration {
  double baseline_max = 0.0;
  double threshold = 0.0;
  std::size_t converged = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  bool fallback = false;
};

Calibration calibrate(const ExperimentConfig& config);

/// Search floor of the tensor product of N_theta over `thetas`.
struct FloorEntry {
  std::vector<Angle> thetas;
  FeasibilityReport report;
  bool above_threshold = false;
};

FloorEntry search_floor(std::span<const Angle> thetas, const ExperimentConfig& config, const Calibration& cal);

struct SynthesisCheck {
  Angle theta;
  std::size_t d_A = 0;
  std::size_t d_B = 0;
  std::size_t d_E = 0;
  double tp_residual = 0.0;
  double graph_residual = 0.0;
  bool ok = false;
};

/// synthesize(N_theta) followed by graph_of; ok when d_A = 4, d_E = 3,
/// TP residual < 1e-9 and both-way membership residual < 1e-8.
SynthesisCheck synthesis_round_trip(const Angle& theta);

struct SuperactivationReport {
  std::array<Angle, 3> thetas;
  ExperimentConfig config;
  Calibration calibration;
  std::vector<FloorEntry> singles;  // theta_1, theta_2, theta_3
  std::vector<FloorEntry> pairs;    // (1,2), (1,3), (2,3)
  KLReport tripartite;
  std::vector<SynthesisCheck> synthesis;
  /// Tripartite code passes while every single and pair floor exceeds the threshold.
  bool superactivation = false;
};

/// Requires theta_i > 0 (InvalidInput) and theta_1 + theta_2 + theta_3 = pi
/// exactly (AngleSumMismatch).
SuperactivationReport superactivate(const Angle& theta1, const Angle& theta2, const Angle& theta3,
                                    const ExperimentConfig& config);

struct TwoShotReport {
  std::array<Angle, 2> thetas;
  ExperimentConfig config;
  Calibration calibration;
  KLReport fourfold;
  std::vector<FloorEntry> pairs;  // (1,1), (2,2), (1,2)
  bool pass = false;
};

/// Requires theta_1 + theta_2 = pi/2 exactly (AngleSumMismatch). Verifies
/// theorem_B_code(4) on N_1 (x) N_2 (x) N_1 (x) N_2 and reports pair floors.
TwoShotReport two_shot_demo(const Angle& theta1, const Angle& theta2, const ExperimentConfig& config);

/// An angle for the small-angle probe; `raw` holds the radians the user
/// typed when the exact fraction was only approximated.
struct ProbeAngle {
  Angle angle;
  std::optional<double> raw;
};

struct CnProbeReport {
  std::vector<ProbeAngle> thetas;
  ExperimentConfig config;
  Calibration calibration;
  double abs_sum = 0.0;
  /// "<= 2 ln(3/2)", "< pi" or "neither".
  std::string flag;
  FloorEntry floor;
  bool angle_bypass = false;
};

inline constexpr double kTwoLnThreeHalves = 0.81093021621632877;

/// n = 1..3 angles (DimensionGuard beyond 3).
CnProbeReport cn_probe(const std::vector<ProbeAngle>& thetas, const ExperimentConfig& config);

struct SweepRow {
  Angle theta1;
  Angle theta2;
  double objective_min = 0.0;
  std::size_t restarts = 0;
  bool converged = false;
};

struct SweepResult {
  Calibration calibration;
  std::vector<SweepRow> rows;
};

SweepResult sweep(const std::vector<Angle>& grid1, const std::vector<Angle>& grid2, const ExperimentConfig& config);
/// Columns theta1, theta2 (radians), objective_min, restarts, converged.
std::string sweep_csv(const SweepResult& result);

Json to_json(const ExperimentConfig& config);
Json to_json(const Calibration& cal);
Json to_json(const FloorEntry& entry);
Json to_json(const SynthesisCheck& check);
Json to_json(const SuperactivationReport& report);
Json to_json(const TwoShotReport& report);
Json to_json(const CnProbeReport& report);

}  // namespace zekit
