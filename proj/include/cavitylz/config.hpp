// Scenario configuration: a single JSON document with strictly validated
// sections, plus dotted-path command-line overrides.
#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cavitylz/dynamics.hpp"
#include "cavitylz/model.hpp"
#include "cavitylz/regimes.hpp"

namespace cavitylz::config {

using Json = nlohmann::ordered_json;

// ─── Sections ───────────────────────────────────────────────────────────────

struct GeometrySection {
  double total_length = 0.0;  // m
  double delta_L = 0.0;       // m, static length difference when relevant
};

struct ModesSection {
  int n_min = 1;
  int n_max = 1;
  double delta_L_min = 0.0;  // m
  double delta_L_max = 0.0;  // m
  int steps = 1;             // grid points across [delta_L_min, delta_L_max]
  double tol = 1.0e-12;      // residual tolerance, relative to k
  bool include_localized = false;
  bool fit_lz = true;  // emit per-crossing two-level fit sidecar
};

struct InitialAmplitudes {
  std::complex<double> a_left{1.0, 0.0};
  std::complex<double> a_right{0.0, 0.0};
};

struct DynamicsSection {
  std::optional<double> theta_tilde;  // dimensionless sweep rate, direct
  std::optional<double> speed;        // m/s, derive theta_tilde via mode n
  int n = 0;                          // mode index used when deriving
  std::vector<dynamics::Order> orders;
  std::vector<double> delta_ratios;  // gap / (hbar omega_av), second order
  double tau_min = -25.0;
  double tau_max = 25.0;
  int samples = 501;
  double tol = 1.0e-10;
  bool emit_derivatives = false;
  bool rotated_frame = true;
  InitialAmplitudes initial;
};

struct TransferSection {
  int n = 1;
  double delta_L_min = 0.0;
  double delta_L_max = 0.0;
  int steps = 1;
  std::string branch = "both";  // "even" | "odd" | "both"
  bool extrema = true;
  double tol = 1.0e-12;
  std::vector<double> overlay_alphas;  // m; max-ratio-vs-alpha overlay
};

struct RegimesSection {
  struct Map {
    double transmission_min = 0.0;
    double transmission_max = 0.0;
    int transmission_steps = 0;
    double omega_ratio_min = 0.0;  // omega_FSR / omega_av
    double omega_ratio_max = 0.0;
    int omega_ratio_steps = 0;
    double speed = 0.0;  // m/s
    bool log_transmission = true;
    bool log_omega_ratio = true;
  };
  struct Point {
    double transmission = 0.0;
    double omega_fsr = 0.0;
    double omega_av = 0.0;
    double speed = 0.0;
  };
  struct Feasibility {
    double finesse = 0.0;
    double speed = 0.0;
    double wavelength = 0.0;
    std::optional<double> delta_L_span;
  };
  struct MovingMedium {
    double k = 0.0;
    double speed = 0.0;
    double gap = 0.0;       // J
    double omega_av = 0.0;  // rad/s
  };
  std::optional<Map> map;
  std::optional<Point> point;
  std::optional<Feasibility> feasibility;
  std::optional<MovingMedium> moving_medium;
  std::optional<double> golden_rule_gap;  // J; rate paired with geometry L
  regimes::RegimeThresholds thresholds;
};

struct MirrorCurveSection {
  double k_min = 0.0;
  double k_max = 0.0;
  int samples = 2;
  bool overlay_delta = false;            // slab: add matched-delta T column
  std::optional<double> overlay_alpha;   // m; default thin-slab equivalent
  bool resonances = false;               // emit slab resonance list
};

struct OutputSection {
  std::string prefix = "run";
};

// ─── Whole document ─────────────────────────────────────────────────────────

struct ScenarioConfig {
  std::optional<GeometrySection> geometry;
  std::optional<model::MirrorModel> mirror;
  std::optional<ModesSection> modes;
  std::optional<DynamicsSection> dynamics;
  std::optional<TransferSection> transfer;
  std::optional<RegimesSection> regimes;
  std::optional<MirrorCurveSection> mirror_curve;
  OutputSection output;
  Json raw;  // validated document, echoed into metadata
};

// Parse + validate.  Unknown keys anywhere raise ConfigError with the field
// path; type mismatches likewise.
[[nodiscard]] ScenarioConfig parse_config(const Json& doc);

// Read a JSON document from disk; parse failures become ConfigError.
[[nodiscard]] Json load_json_file(const std::filesystem::path& path);

// Apply one `--override path.to.key=value` assignment.  The value is parsed
// as JSON when possible and treated as a bare string otherwise.
void apply_override(Json& doc, const std::string& assignment);

}  // namespace cavitylz::config
