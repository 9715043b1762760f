// Validity metrics for the two-level reduction, parameter-space
// classification, experimental feasibility estimates, and the moving-medium
// correction diagnostic.
#pragma once

#include <optional>
#include <string>

namespace cavitylz::regimes {

// ─── Individual metrics ─────────────────────────────────────────────────────

// (T/4)(omega_FSR/omega_av)(c/v) must be >> 1 for the transfer to stay
// adiabatic.  `equivalent_form` is the algebraically identical
// (T/2)(omega_FSR/delta_omega_doppler) with delta_omega_doppler = 2 omega_av v/c.
struct AdiabaticityMetric {
  double value = 0.0;
  double equivalent_form = 0.0;
};

[[nodiscard]] AdiabaticityMetric adiabaticity_metric(double transmission,
                                                     double omega_fsr,
                                                     double omega_av,
                                                     double speed);

// (2 pi / sqrt(T))(omega_av/omega_FSR) must be >> 1 for the second-order wave
// dynamics to reduce to the Schrodinger-like pair; approximately equals
// hbar omega_av / gap.
[[nodiscard]] double reduction_metric(double transmission, double omega_av,
                                      double omega_fsr);

// (sqrt(T)/2)/(v/c) must be >> 1 for the instantaneous-mode treatment of the
// moving mirror to hold.
[[nodiscard]] double mirror_speed_metric(double transmission, double speed);

// ─── Classification ─────────────────────────────────────────────────────────

struct RegimeThresholds {
  double reduction = 1.0e4;  // conservative contour for the reduction metric
  double adiabatic = 10.0;   // contour for the adiabaticity metric
};

struct RegimeReport {
  double adiabaticity = 0.0;
  double reduction = 0.0;
  double mirror_speed = 0.0;
  std::string classification;  // one of the three class strings below
  // Inputs echo.
  double transmission = 0.0;
  double omega_fsr = 0.0;
  double omega_av = 0.0;
  double speed = 0.0;
};

inline constexpr const char* class_schrodinger_adiabatic =
    "schrodinger+adiabatic";
inline constexpr const char* class_schrodinger_nonadiabatic =
    "schrodinger+nonadiabatic";
inline constexpr const char* class_outside_schrodinger = "outside-schrodinger";

[[nodiscard]] RegimeReport classify_regime(double transmission,
                                           double omega_fsr, double omega_av,
                                           double speed,
                                           RegimeThresholds thresholds = {});

// ─── Golden rule cross-check ────────────────────────────────────────────────

// Two routes to the photon hop rate between the cavities: the golden-rule
// expression (2 pi/hbar) gap^2 rho with density of states rho = L/(2 pi hbar c),
// and the kinetic picture T c/L with mirror transmission T = (gap L/hbar c)^2.
// They are identical symbolically.
struct GoldenRuleRates {
  double fgr_rate = 0.0;
  double hop_rate = 0.0;
};

[[nodiscard]] GoldenRuleRates golden_rule_rate(double gap,
                                               double total_length);

// ─── Experimental feasibility ───────────────────────────────────────────────

struct FeasibilityEstimate {
  double transfer_time = 0.0;      // s
  double kappa = 0.0;              // 1/s, field amplitude decay rate
  double survival = 0.0;           // e^{-kappa t}, field amplitude fraction
  double escape_probability = 0.0; // 1 - e^{-2 kappa t}, photon loss
  double doppler_shift = 0.0;      // 4 pi v / lambda, rad/s
};

// kappa = c pi / (2 L F).  The transfer time is a quarter-wave mirror move
// lambda/(4v) by default, or delta_L_span/(2v) when a sweep span is given.
[[nodiscard]] FeasibilityEstimate feasibility_estimate(
    double total_length, double finesse, double speed, double wavelength,
    std::optional<double> delta_L_span = std::nullopt);

// ─── Moving-medium diagnostic ───────────────────────────────────────────────

// Largest neglected term of the wave equation in a moving medium, k^2 v/c,
// against the smallest retained one, omega_av gap / (hbar c^2).  Both 1/m^2.
struct MovingMediumDiagnostic {
  double correction = 0.0;
  double retained = 0.0;
  double ratio = 0.0;
  bool flagged = false;  // ratio > 1e-2: neglecting the correction is unsafe
};

[[nodiscard]] MovingMediumDiagnostic moving_medium_diagnostic(double k,
                                                              double speed,
                                                              double gap,
                                                              double omega_av);

}  // namespace cavitylz::regimes
