// Config-driven scenario execution and artifact emission.
#include "cavitylz/runners.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cavitylz/constants.hpp"
#include "cavitylz/csv.hpp"
#include "cavitylz/dynamics.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/field_profiles.hpp"
#include "cavitylz/mirrors.hpp"
#include "cavitylz/mode_solver.hpp"
#include "cavitylz/regimes.hpp"
#include "cavitylz/version.hpp"

namespace cavitylz::runners {

namespace fs = std::filesystem;
using config::Json;
using io::format_double;

namespace {

// ─── Shared plumbing ────────────────────────────────────────────────────────

std::string iso_timestamp() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

const config::GeometrySection& need_geometry(const config::ScenarioConfig& cfg,
                                             const char* command) {
  if (!cfg.geometry)
    throw ConfigError(std::string(command) + " needs a geometry section");
  return *cfg.geometry;
}

const model::MirrorModel& need_mirror(const config::ScenarioConfig& cfg,
                                      const char* command) {
  if (!cfg.mirror)
    throw ConfigError(std::string(command) + " needs a mirror section");
  return *cfg.mirror;
}

const model::DeltaMirror& need_delta_mirror(const config::ScenarioConfig& cfg,
                                            const char* command) {
  const auto* delta = std::get_if<model::DeltaMirror>(&need_mirror(cfg, command));
  if (delta == nullptr)
    throw ConfigError(std::string(command) + " needs a delta mirror");
  return *delta;
}

// Writes <prefix>_meta.json and returns the collected outputs.
RunResult finish(const config::ScenarioConfig& cfg, const fs::path& out_dir,
                 const char* command, std::vector<fs::path> outputs,
                 Json units) {
  Json meta;
  meta["tool"] = "cavitylz";
  meta["version"] = version_string;
  meta["command"] = command;
  meta["timestamp"] = iso_timestamp();
  meta["config"] = cfg.raw;
  Json files = Json::array();
  for (const fs::path& p : outputs) files.push_back(p.filename().string());
  meta["outputs"] = files;
  meta["units"] = std::move(units);

  const fs::path meta_path = out_dir / (cfg.output.prefix + "_meta.json");
  io::write_text_file(meta_path, meta.dump(2) + "\n");
  outputs.push_back(meta_path);
  return {std::move(outputs)};
}

void write_json(const fs::path& path, const Json& doc) {
  io::write_text_file(path, doc.dump(2) + "\n");
}

// Filename-safe rendering of a number: '.' -> 'p', '-' -> 'm', '+' dropped.
std::string number_slug(double value) {
  std::string out;
  for (char c : format_double(value)) {
    if (c == '.') out += 'p';
    else if (c == '-') out += 'm';
    else if (c != '+') out += c;
  }
  return out;
}

std::vector<double> grid_1d(double lo, double hi, int steps, bool log_spaced) {
  if (steps == 1) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (log_spaced) {
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < steps; ++i)
      out.push_back(std::exp(a + (b - a) * i / (steps - 1)));
  } else {
    for (int i = 0; i < steps; ++i)
      out.push_back(lo + (hi - lo) * i / (steps - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace

// ─── modes ──────────────────────────────────────────────────────────────────

RunResult run_modes(const config::ScenarioConfig& cfg, const fs::path& out_dir,
                    int jobs) {
  const auto& geom = need_geometry(cfg, "modes");
  const auto& mirror = need_mirror(cfg, "modes");
  if (std::holds_alternative<model::InterDielectricDelta>(mirror))
    throw ConfigError("modes supports delta and slab mirrors only");
  if (!cfg.modes) throw ConfigError("modes needs a modes section");
  const auto& m = *cfg.modes;

  fs::create_directories(out_dir);

  mode_solver::SweepRequest request;
  request.total_length = geom.total_length;
  request.mirror = mirror;
  request.delta_L_min = m.delta_L_min;
  request.delta_L_max = m.delta_L_max;
  request.steps = m.steps;
  request.n_min = m.n_min;
  request.n_max = m.n_max;
  request.tol = m.tol;
  request.jobs = jobs;
  request.include_localized = m.include_localized;

  const mode_solver::SpectrumTable table = mode_solver::sweep_spectrum(request);

  io::CsvTable csv({"delta_L_m", "n", "branch", "k_inv_m"});
  for (const auto& row : table.rows)
    csv.add_row({format_double(row.delta_L), std::to_string(row.n),
                 mode_solver::branch_name(row.branch), format_double(row.k)});

  std::vector<fs::path> outputs;
  const fs::path spectrum_path =
      out_dir / (cfg.output.prefix + "_spectrum.csv");
  io::write_text_file(spectrum_path, csv.serialize());
  outputs.push_back(spectrum_path);

  if (m.fit_lz) {
    // Regroup branch rows into (delta_L -> even/odd) samples per crossing.
    std::map<int, std::map<double, mode_solver::SpectrumSample>> per_n;
    for (const auto& row : table.rows) {
      if (row.branch != mode_solver::Branch::even &&
          row.branch != mode_solver::Branch::odd)
        continue;
      auto& sample = per_n[row.n][row.delta_L];
      sample.delta_L = row.delta_L;
      if (row.branch == mode_solver::Branch::even)
        sample.k_even = row.k;
      else
        sample.k_odd = row.k;
    }

    Json fits = Json::array();
    for (const auto& [n, by_dl] : per_n) {
      Json entry;
      entry["n"] = n;
      std::vector<mode_solver::SpectrumSample> samples;
      for (const auto& [dl, sample] : by_dl)
        if (sample.k_even > 0.0 && sample.k_odd > 0.0)
          samples.push_back(sample);
      if (samples.size() < 5) {
        entry["fit_error"] = "needs at least 5 displacement samples";
      } else {
        try {
          const mode_solver::LZParameters fit =
              mode_solver::fit_lz_from_spectrum(samples);
          entry["gap_joule"] = fit.gap;
          entry["gap_over_hbar_per_s"] = fit.gap / hbar;
          entry["curvature_joule2_per_m2"] = fit.curvature;
          entry["omega_av_rad_per_s"] = fit.omega_av;
          entry["delta_ratio"] = fit.gap / (hbar * fit.omega_av);
        } catch (const FitError& e) {
          entry["fit_error"] = e.what();
        }
      }
      if (const auto* delta = std::get_if<model::DeltaMirror>(&mirror)) {
        const mode_solver::LZParameters analytic =
            mode_solver::lz_fit_parameters(n, geom.total_length, delta->alpha);
        entry["gap_analytic_joule"] = analytic.gap;
        entry["curvature_analytic_joule2_per_m2"] = analytic.curvature;
      }
      fits.push_back(entry);
    }
    const fs::path fit_path = out_dir / (cfg.output.prefix + "_lz_fit.json");
    write_json(fit_path, fits);
    outputs.push_back(fit_path);
  }

  Json units;
  units["delta_L_m"] = "m";
  units["n"] = "1";
  units["branch"] = "label";
  units["k_inv_m"] = "1/m";
  return finish(cfg, out_dir, "modes", std::move(outputs), std::move(units));
}

// ─── sweep ──────────────────────────────────────────────────────────────────

namespace {

void append_trajectory_csv(io::CsvTable& csv,
                           const dynamics::AmplitudeTrajectory& traj,
                           bool emit_derivatives) {
  const char* order = dynamics::order_name(traj.order);
  for (const auto& row : traj.rows) {
    std::vector<std::string> cells = {
        format_double(row.tau),           format_double(row.a_left.real()),
        format_double(row.a_left.imag()), format_double(row.a_right.real()),
        format_double(row.a_right.imag()), format_double(row.norm_sq),
        format_double(row.energy_dev),    order};
    if (emit_derivatives) {
      cells.push_back(format_double(row.d_left.real()));
      cells.push_back(format_double(row.d_left.imag()));
      cells.push_back(format_double(row.d_right.real()));
      cells.push_back(format_double(row.d_right.imag()));
    }
    csv.add_row(std::move(cells));
  }
}

std::vector<std::string> trajectory_header(bool emit_derivatives) {
  std::vector<std::string> header = {"tau",    "re_AL",  "im_AL",
                                     "re_AR",  "im_AR",  "normsq",
                                     "energy_dev", "order"};
  if (emit_derivatives) {
    header.insert(header.end(), {"re_dAL", "im_dAL", "re_dAR", "im_dAR"});
  }
  return header;
}

}  // namespace

RunResult run_sweep(const config::ScenarioConfig& cfg, const fs::path& out_dir,
                    int /*jobs*/) {
  if (!cfg.dynamics) throw ConfigError("sweep needs a dynamics section");
  const auto& d = *cfg.dynamics;

  double theta_tilde = 0.0;
  std::optional<double> derived_ratio;
  if (d.theta_tilde) {
    theta_tilde = *d.theta_tilde;
  } else {
    // Derive the dimensionless groups from a physical mirror speed.
    const auto& geom = need_geometry(cfg, "sweep with a speed");
    const auto& delta = need_delta_mirror(cfg, "sweep with a speed");
    const mode_solver::LZParameters lz =
        mode_solver::lz_fit_parameters(d.n, geom.total_length, delta.alpha);
    const double rate = mode_solver::sweep_rate_from_speed(lz.curvature, *d.speed);
    const model::DimensionlessGroups groups =
        model::derive_dimensionless(lz.gap, rate, lz.omega_av);
    theta_tilde = groups.theta_tilde;
    derived_ratio = groups.delta_ratio;
  }

  std::vector<double> ratios = d.delta_ratios;
  const bool wants_second =
      std::find(d.orders.begin(), d.orders.end(), dynamics::Order::second) !=
      d.orders.end();
  if (wants_second && ratios.empty()) {
    if (!derived_ratio)
      throw ConfigError(
          "second order needs delta_ratio (or a speed to derive it from)");
    ratios = {*derived_ratio};
  }

  const std::vector<double> taus =
      dynamics::uniform_grid(d.tau_min, d.tau_max, d.samples);

  dynamics::AmplitudeState initial;
  initial.a_left = d.initial.a_left;
  initial.a_right = d.initial.a_right;

  fs::create_directories(out_dir);
  std::vector<fs::path> outputs;

  auto write_trajectory = [&](const dynamics::AmplitudeTrajectory& traj,
                              const std::string& tag) {
    io::CsvTable csv(trajectory_header(d.emit_derivatives));
    append_trajectory_csv(csv, traj, d.emit_derivatives);
    const fs::path path = out_dir / (cfg.output.prefix + "_" + tag + ".csv");
    io::write_text_file(path, csv.serialize());
    outputs.push_back(path);
  };

  for (dynamics::Order order : d.orders) {
    switch (order) {
      case dynamics::Order::first:
        write_trajectory(
            dynamics::integrate_first_order(theta_tilde, initial, taus, d.tol),
            "first");
        break;
      case dynamics::Order::uncoupled_second:
        write_trajectory(dynamics::integrate_uncoupled(theta_tilde, taus, d.tol),
                         "uncoupled");
        break;
      case dynamics::Order::second:
        for (double r : ratios)
          write_trajectory(
              dynamics::integrate_second_order(theta_tilde, r, initial, taus,
                                               d.tol, d.rotated_frame),
              "second_r" + number_slug(r));
        break;
    }
  }

  Json units;
  for (const std::string& column : trajectory_header(d.emit_derivatives))
    units[column] = column == "order" ? "label" : "1";
  return finish(cfg, out_dir, "sweep", std::move(outputs), std::move(units));
}

// ─── transfer ───────────────────────────────────────────────────────────────

RunResult run_transfer(const config::ScenarioConfig& cfg,
                       const fs::path& out_dir, int jobs) {
  const auto& geom = need_geometry(cfg, "transfer");
  const auto& delta = need_delta_mirror(cfg, "transfer");
  if (!cfg.transfer) throw ConfigError("transfer needs a transfer section");
  const auto& t = *cfg.transfer;
  const double L = geom.total_length;

  mode_solver::SweepRequest request;
  request.total_length = L;
  request.mirror = delta;
  request.delta_L_min = t.delta_L_min;
  request.delta_L_max = t.delta_L_max;
  request.steps = t.steps;
  request.n_min = t.n;
  request.n_max = t.n;
  request.tol = t.tol;
  request.jobs = jobs;
  request.include_localized = false;

  const mode_solver::SpectrumTable table = mode_solver::sweep_spectrum(request);

  fs::create_directories(out_dir);
  std::vector<fs::path> outputs;

  io::CsvTable csv({"delta_L_m", "ratio_A_over_B", "ratio_B_over_A", "branch"});
  for (const auto& row : table.rows) {
    const char* branch = mode_solver::branch_name(row.branch);
    if (t.branch != "both" && t.branch != branch) continue;
    csv.add_row({format_double(row.delta_L),
                 format_double(field_profiles::amplitude_ratio(row.k, L,
                                                               row.delta_L)),
                 format_double(field_profiles::inverse_amplitude_ratio(
                     row.k, L, row.delta_L)),
                 branch});
  }
  const fs::path ratio_path = out_dir / (cfg.output.prefix + "_ratio.csv");
  io::write_text_file(ratio_path, csv.serialize());
  outputs.push_back(ratio_path);

  if (t.extrema) {
    Json extrema;
    const field_profiles::MaxTransferRatio mt =
        field_profiles::max_transfer_ratio(t.n, L, delta.alpha, t.tol);
    extrema["max_abs_ratio_B_over_A"] = mt.exact;
    extrema["approx_2_pi_n_alpha_over_L"] = mt.approx;
    extrema["delta_L_at_max_m"] = mt.at_delta_L;
    extrema["k_at_max_inv_m"] = mt.k_at_max;
    try {
      const mode_solver::OptimalDisplacement od =
          mode_solver::optimal_displacement(t.n, L, delta.alpha);
      extrema["k_star_inv_m"] = od.k_star;
      extrema["delta_L_star_m"] = od.delta_L_star;
      extrema["delta_L_star_expanded_m"] = od.delta_L_star_expanded;
    } catch (const DomainError& e) {
      extrema["optimal_displacement_error"] = e.what();
    }
    const fs::path extrema_path =
        out_dir / (cfg.output.prefix + "_extrema.json");
    write_json(extrema_path, extrema);
    outputs.push_back(extrema_path);
  }

  if (!t.overlay_alphas.empty()) {
    io::CsvTable overlay({"alpha_m", "max_ratio_exact", "max_ratio_approx"});
    for (double alpha : t.overlay_alphas) {
      const field_profiles::MaxTransferRatio mt =
          field_profiles::max_transfer_ratio(t.n, L, alpha, t.tol);
      overlay.add_row({format_double(alpha), format_double(mt.exact),
                       format_double(mt.approx)});
    }
    const fs::path overlay_path =
        out_dir / (cfg.output.prefix + "_alpha_overlay.csv");
    io::write_text_file(overlay_path, overlay.serialize());
    outputs.push_back(overlay_path);
  }

  Json units;
  units["delta_L_m"] = "m";
  units["ratio_A_over_B"] = "1";
  units["ratio_B_over_A"] = "1";
  units["branch"] = "label";
  units["alpha_m"] = "m";
  units["max_ratio_exact"] = "1";
  units["max_ratio_approx"] = "1";
  return finish(cfg, out_dir, "transfer", std::move(outputs), std::move(units));
}

// ─── regimes ────────────────────────────────────────────────────────────────

RunResult run_regimes(const config::ScenarioConfig& cfg,
                      const fs::path& out_dir, int /*jobs*/) {
  if (!cfg.regimes) throw ConfigError("regimes needs a regimes section");
  const auto& r = *cfg.regimes;

  fs::create_directories(out_dir);
  std::vector<fs::path> outputs;

  if (r.map) {
    const auto& m = *r.map;
    const std::vector<double> ts = grid_1d(
        m.transmission_min, m.transmission_max, m.transmission_steps,
        m.log_transmission);
    const std::vector<double> ratios =
        grid_1d(m.omega_ratio_min, m.omega_ratio_max, m.omega_ratio_steps,
                m.log_omega_ratio);
    io::CsvTable csv({"T", "omega_fsr_over_av", "class"});
    for (double transmission : ts) {
      for (double ratio : ratios) {
        // The metrics depend on the frequencies only through their ratio.
        const regimes::RegimeReport report = regimes::classify_regime(
            transmission, ratio, 1.0, m.speed, r.thresholds);
        csv.add_row({format_double(transmission), format_double(ratio),
                     report.classification});
      }
    }
    const fs::path map_path = out_dir / (cfg.output.prefix + "_map.csv");
    io::write_text_file(map_path, csv.serialize());
    outputs.push_back(map_path);
  }

  if (r.point) {
    const auto& p = *r.point;
    const regimes::RegimeReport report = regimes::classify_regime(
        p.transmission, p.omega_fsr, p.omega_av, p.speed, r.thresholds);
    Json doc;
    doc["adiabaticity"] = report.adiabaticity;
    doc["reduction"] = report.reduction;
    doc["mirror_speed"] = report.mirror_speed;
    doc["classification"] = report.classification;
    doc["inputs"]["transmission"] = report.transmission;
    doc["inputs"]["omega_fsr_rad_per_s"] = report.omega_fsr;
    doc["inputs"]["omega_av_rad_per_s"] = report.omega_av;
    doc["inputs"]["speed_m_per_s"] = report.speed;
    const fs::path point_path = out_dir / (cfg.output.prefix + "_point.json");
    write_json(point_path, doc);
    outputs.push_back(point_path);
  }

  if (r.feasibility) {
    const auto& geom = need_geometry(cfg, "regimes feasibility");
    const auto& f = *r.feasibility;
    const regimes::FeasibilityEstimate est = regimes::feasibility_estimate(
        geom.total_length, f.finesse, f.speed, f.wavelength, f.delta_L_span);

    std::string text;
    text += "cavity length: " + format_double(geom.total_length) + " m\n";
    text += "finesse: " + format_double(f.finesse) + "\n";
    text += "mirror speed: " + format_double(f.speed) + " m/s\n";
    text += "wavelength: " + format_double(f.wavelength) + " m\n";
    text += "transfer time: " + format_double(est.transfer_time) + " s\n";
    text += "field decay rate kappa: " + format_double(est.kappa) + " 1/s\n";
    text +=
        "field survival exp(-kappa t): " + format_double(est.survival) + "\n";
    text += "photon escape 1 - exp(-2 kappa t): " +
            format_double(est.escape_probability) + "\n";
    text += "doppler shift: " + format_double(est.doppler_shift) + " rad/s\n";
    const fs::path text_path =
        out_dir / (cfg.output.prefix + "_feasibility.txt");
    io::write_text_file(text_path, text);
    outputs.push_back(text_path);

    Json doc;
    doc["transfer_time_s"] = est.transfer_time;
    doc["kappa_per_s"] = est.kappa;
    doc["survival"] = est.survival;
    doc["escape_probability"] = est.escape_probability;
    doc["doppler_shift_rad_per_s"] = est.doppler_shift;
    const fs::path json_path =
        out_dir / (cfg.output.prefix + "_feasibility.json");
    write_json(json_path, doc);
    outputs.push_back(json_path);
  }

  if (r.golden_rule_gap) {
    const auto& geom = need_geometry(cfg, "regimes golden rule");
    const regimes::GoldenRuleRates rates =
        regimes::golden_rule_rate(*r.golden_rule_gap, geom.total_length);
    Json doc;
    doc["fgr_rate_per_s"] = rates.fgr_rate;
    doc["hop_rate_per_s"] = rates.hop_rate;
    const fs::path path = out_dir / (cfg.output.prefix + "_golden_rule.json");
    write_json(path, doc);
    outputs.push_back(path);
  }

  if (r.moving_medium) {
    const auto& m = *r.moving_medium;
    const regimes::MovingMediumDiagnostic diag =
        regimes::moving_medium_diagnostic(m.k, m.speed, m.gap, m.omega_av);
    Json doc;
    doc["correction_per_m2"] = diag.correction;
    doc["retained_per_m2"] = diag.retained;
    doc["ratio"] = diag.ratio;
    doc["flagged"] = diag.flagged;
    const fs::path path =
        out_dir / (cfg.output.prefix + "_moving_medium.json");
    write_json(path, doc);
    outputs.push_back(path);
  }

  Json units;
  units["T"] = "1";
  units["omega_fsr_over_av"] = "1";
  units["class"] = "label";
  return finish(cfg, out_dir, "regimes", std::move(outputs), std::move(units));
}

// ─── mirror ─────────────────────────────────────────────────────────────────

RunResult run_mirror(const config::ScenarioConfig& cfg, const fs::path& out_dir,
                     int /*jobs*/) {
  const auto& mirror = need_mirror(cfg, "mirror");
  if (!cfg.mirror_curve)
    throw ConfigError("mirror needs a mirror_curve section");
  const auto& mc = *cfg.mirror_curve;

  const auto* slab = std::get_if<model::SlabMirror>(&mirror);
  const auto* inter = std::get_if<model::InterDielectricDelta>(&mirror);
  if (mc.overlay_delta && slab == nullptr)
    throw ConfigError("overlay_delta requires a slab mirror");
  if (mc.resonances && slab == nullptr)
    throw ConfigError("resonances requires a slab mirror");

  std::optional<model::DeltaMirror> overlay;
  if (mc.overlay_delta)
    overlay = model::DeltaMirror{
        mc.overlay_alpha.value_or(mirrors::thin_slab_equivalent_alpha(*slab))};

  std::vector<std::string> header = {"k_inv_m", "T", "R", "phase"};
  if (overlay) header.push_back("T_delta");
  if (inter != nullptr) header.push_back("T_approx");

  io::CsvTable csv(header);
  for (double k : dynamics::uniform_grid(mc.k_min, mc.k_max, mc.samples)) {
    std::vector<std::string> cells;
    if (inter != nullptr) {
      const mirrors::InterdielectricTransmission tr =
          mirrors::interdielectric_transmission(k, *inter);
      cells = {format_double(k), format_double(tr.exact.T),
               format_double(tr.exact.R), format_double(tr.exact.phase)};
      cells.push_back(format_double(tr.T_approx));
    } else {
      const mirrors::TransmissionResult tr = mirrors::transmission(k, mirror);
      cells = {format_double(k), format_double(tr.T), format_double(tr.R),
               format_double(tr.phase)};
      if (overlay)
        cells.push_back(
            format_double(mirrors::delta_transmission(k, *overlay).T));
    }
    csv.add_row(std::move(cells));
  }

  fs::create_directories(out_dir);
  std::vector<fs::path> outputs;
  const fs::path curve_path =
      out_dir / (cfg.output.prefix + "_transmission.csv");
  io::write_text_file(curve_path, csv.serialize());
  outputs.push_back(curve_path);

  if (mc.resonances) {
    Json doc;
    Json list = Json::array();
    for (double k : mirrors::resonance_wavenumbers(*slab, mc.k_max))
      list.push_back(k);
    doc["k_inv_m"] = list;
    const fs::path path = out_dir / (cfg.output.prefix + "_resonances.json");
    write_json(path, doc);
    outputs.push_back(path);
  }

  Json units;
  units["k_inv_m"] = "1/m";
  units["T"] = "1";
  units["R"] = "1";
  units["phase"] = "rad";
  if (overlay) units["T_delta"] = "1";
  if (inter != nullptr) units["T_approx"] = "1";
  return finish(cfg, out_dir, "mirror", std::move(outputs), std::move(units));
}

}  // namespace cavitylz::runners
