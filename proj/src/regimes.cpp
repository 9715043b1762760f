// Regime metrics, classification, golden-rule identity, feasibility numbers,
// and the moving-medium diagnostic.
#include "cavitylz/regimes.hpp"

#include <cmath>
#include <limits>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"

namespace cavitylz::regimes {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

}  // namespace

// ─── Metrics ────────────────────────────────────────────────────────────────

AdiabaticityMetric adiabaticity_metric(double transmission, double omega_fsr,
                                       double omega_av, double speed) {
  if (transmission < 0.0 || transmission > 1.0)
    throw DomainError("adiabaticity metric needs T in [0, 1]");
  if (omega_fsr <= 0.0 || omega_av <= 0.0)
    throw DomainError("adiabaticity metric needs positive frequencies");
  if (speed < 0.0) throw DomainError("adiabaticity metric needs v >= 0");
  if (speed == 0.0) return {infinity, infinity};  // static mirror

  AdiabaticityMetric out;
  out.value = (transmission / 4.0) * (omega_fsr / omega_av) *
              (speed_of_light / speed);
  const double doppler = 2.0 * omega_av * speed / speed_of_light;
  out.equivalent_form = (transmission / 2.0) * (omega_fsr / doppler);
  return out;
}

double reduction_metric(double transmission, double omega_av,
                        double omega_fsr) {
  if (transmission < 0.0 || transmission > 1.0)
    throw DomainError("reduction metric needs T in [0, 1]");
  if (omega_fsr <= 0.0 || omega_av <= 0.0)
    throw DomainError("reduction metric needs positive frequencies");
  if (transmission == 0.0) return infinity;  // closed mirror
  return (2.0 * pi / std::sqrt(transmission)) * (omega_av / omega_fsr);
}

double mirror_speed_metric(double transmission, double speed) {
  if (transmission < 0.0 || transmission > 1.0)
    throw DomainError("mirror-speed metric needs T in [0, 1]");
  if (speed < 0.0) throw DomainError("mirror-speed metric needs v >= 0");
  if (speed == 0.0) return infinity;
  return (std::sqrt(transmission) / 2.0) / (speed / speed_of_light);
}

// ─── Classification ─────────────────────────────────────────────────────────

RegimeReport classify_regime(double transmission, double omega_fsr,
                             double omega_av, double speed,
                             RegimeThresholds thresholds) {
  RegimeReport report;
  report.adiabaticity =
      adiabaticity_metric(transmission, omega_fsr, omega_av, speed).value;
  report.reduction = reduction_metric(transmission, omega_av, omega_fsr);
  report.mirror_speed = mirror_speed_metric(transmission, speed);
  if (report.reduction < thresholds.reduction) {
    report.classification = class_outside_schrodinger;
  } else if (report.adiabaticity >= thresholds.adiabatic) {
    report.classification = class_schrodinger_adiabatic;
  } else {
    report.classification = class_schrodinger_nonadiabatic;
  }
  report.transmission = transmission;
  report.omega_fsr = omega_fsr;
  report.omega_av = omega_av;
  report.speed = speed;
  return report;
}

// ─── Golden rule ────────────────────────────────────────────────────────────

GoldenRuleRates golden_rule_rate(double gap, double total_length) {
  if (gap < 0.0 || total_length <= 0.0)
    throw DomainError("golden-rule rate needs gap >= 0 and L > 0");
  GoldenRuleRates out;
  const double rho = total_length / (2.0 * pi * hbar * speed_of_light);
  out.fgr_rate = (2.0 * pi / hbar) * gap * gap * rho;
  const double t_mirror =
      (gap * total_length / (hbar * speed_of_light)) *
      (gap * total_length / (hbar * speed_of_light));
  out.hop_rate = t_mirror * speed_of_light / total_length;
  return out;
}

// ─── Feasibility ────────────────────────────────────────────────────────────

FeasibilityEstimate feasibility_estimate(double total_length, double finesse,
                                         double speed, double wavelength,
                                         std::optional<double> delta_L_span) {
  if (total_length <= 0.0 || finesse <= 0.0 || wavelength <= 0.0)
    throw DomainError("feasibility needs L, F, lambda > 0");
  if (speed <= 0.0) throw DomainError("feasibility needs v > 0");
  if (delta_L_span && *delta_L_span <= 0.0)
    throw DomainError("feasibility needs a positive delta_L span");

  FeasibilityEstimate out;
  out.transfer_time = delta_L_span ? *delta_L_span / (2.0 * speed)
                                   : wavelength / (4.0 * speed);
  out.kappa = speed_of_light * pi / (2.0 * total_length * finesse);
  out.survival = std::exp(-out.kappa * out.transfer_time);
  out.escape_probability = 1.0 - std::exp(-2.0 * out.kappa * out.transfer_time);
  out.doppler_shift = 4.0 * pi * speed / wavelength;
  return out;
}

// ─── Moving medium ──────────────────────────────────────────────────────────

MovingMediumDiagnostic moving_medium_diagnostic(double k, double speed,
                                                double gap, double omega_av) {
  if (k <= 0.0 || gap <= 0.0 || omega_av <= 0.0)
    throw DomainError("moving-medium diagnostic needs k, gap, omega > 0");
  if (speed < 0.0) throw DomainError("moving-medium diagnostic needs v >= 0");

  MovingMediumDiagnostic out;
  out.correction = k * k * speed / speed_of_light;
  out.retained = omega_av * (gap / hbar) / (speed_of_light * speed_of_light);
  out.ratio = out.correction / out.retained;
  out.flagged = out.ratio > 1.0e-2;
  return out;
}

}  // namespace cavitylz::regimes
