// Time-dependent two-mode dynamics of the swept double cavity: first-order
// (standard two-level) and second-order (wave equation) envelope
// integration, the crossing probability, analytic early-time envelopes and
// diagnostic frequency splits.
#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "cavitylz/exponential_integral.hpp"

namespace cavitylz::dynamics {

enum class Order { first, second, uncoupled_second };

[[nodiscard]] const char* order_name(Order order);  // first/second/uncoupled

// Initial data; derivatives (per dimensionless time tau, optional) follow
// the static-cavity relation when absent.
struct AmplitudeState {
  std::complex<double> a_left{1.0, 0.0};
  std::complex<double> a_right{0.0, 0.0};
  std::optional<std::complex<double>> d_left;
  std::optional<std::complex<double>> d_right;
};

// One sampled instant.  Amplitudes are the slowly varying envelopes in each
// order's own rotating frame; populations |a|^2 are frame independent.
struct TrajectoryRow {
  double tau = 0.0;
  std::complex<double> a_left;
  std::complex<double> a_right;
  std::complex<double> d_left;   // d a_left / d tau
  std::complex<double> d_right;
  double norm_sq = 0.0;          // |a_left|^2 + |a_right|^2
  double energy_dev = 0.0;       // norm_sq - 1
};

struct AmplitudeTrajectory {
  std::vector<TrajectoryRow> rows;
  Order order = Order::first;
  double theta_tilde = 0.0;
  double delta_ratio = 0.0;  // NaN for orders that do not use it
};

// ──────────────────────────────────────────────────────────────────────────
// crossing probability
// ──────────────────────────────────────────────────────────────────────────

struct LZProbability {
  double value = 0.0;
  bool static_mirror = false;  // sweep rate was zero: no crossing happens
};

// P = exp(-2 pi gap^2 / (hbar * sweep_rate)), inputs in J and J/s.
[[nodiscard]] LZProbability lz_probability(double gap, double sweep_rate);

// P = exp(-2 pi / theta_tilde).
[[nodiscard]] LZProbability lz_probability_dimensionless(double theta_tilde);

// ──────────────────────────────────────────────────────────────────────────
// integrators
// ──────────────────────────────────────────────────────────────────────────

[[nodiscard]] std::vector<double> uniform_grid(double a, double b, int n);

// i d a_L/d tau = e^{-i theta_tilde tau^2 / 2} a_R and conjugate-phase
// partner; the canonical two-level sweep.
[[nodiscard]] AmplitudeTrajectory integrate_first_order(
    double theta_tilde, const AmplitudeState& initial,
    std::span<const double> taus, double tol = 1e-10);

// Second-order (wave equation) envelopes at finite delta_ratio
// r = gap/(hbar omega_av).  Integrates in the rotating frame by default;
// rotated_frame = false integrates the plain envelopes and converts, which
// serves as an independent cross-check of the rotation algebra.
[[nodiscard]] AmplitudeTrajectory integrate_second_order(
    double theta_tilde, double delta_ratio, const AmplitudeState& initial,
    std::span<const double> taus, double tol = 1e-10,
    bool rotated_frame = true);

// Second order with the coupling dropped inside the equations (it enters
// only through the initial derivative); canonical (1, 0) start.
[[nodiscard]] AmplitudeTrajectory integrate_uncoupled(
    double theta_tilde, std::span<const double> taus, double tol = 1e-10);

// ──────────────────────────────────────────────────────────────────────────
// analytic references and diagnostics
// ──────────────────────────────────────────────────────────────────────────

// Logarithm-plus-exponential-integral envelope valid far before the
// crossing (tau0 <= tau < 0 required).
[[nodiscard]] std::complex<double> early_time_envelope(double theta_tilde,
                                                       double tau0,
                                                       double tau);
[[nodiscard]] std::complex<double> early_time_envelope_derivative(
    double theta_tilde, double tau0, double tau);

// Initial time derivatives (SI, 1/s) of a static cavity:
// i dA/dt = [[omega_av - E/hbar, gap/hbar], [gap/hbar, omega_av + E/hbar]] A.
[[nodiscard]] std::pair<std::complex<double>, std::complex<double>>
static_initial_derivatives(double E, double gap, double omega_av,
                           const AmplitudeState& state);

// Exact rotating-frame frequencies beta = sqrt((E/hbar -+ omega_av)^2
// + gap^2/hbar^2) against their truncations omega_av and 2E/hbar.
struct BetaFrequencies {
  double beta_left = 0.0;           // rad/s
  double beta_right = 0.0;          // rad/s
  double difference = 0.0;          // beta_right - beta_left
  double truncated_common = 0.0;    // omega_av
  double truncated_difference = 0.0;  // 2 E / hbar
  double common_rel_error = 0.0;
  double difference_rel_error = 0.0;  // signed, ~ -gap^2/(2 hbar^2 omega^2)
};

[[nodiscard]] BetaFrequencies beta_frequencies(double E, double gap,
                                               double omega_av);

// Ratio of the envelope velocity |d a/d tau| to the geometric drift scale
// (v/L)(hbar/gap) |a| per row; large values mean the frozen-cavity basis is
// safe.  v = 0 yields infinities.
struct DriftRatio {
  std::vector<double> ratio;
  double min_ratio = 0.0;
};

[[nodiscard]] DriftRatio diabatic_drift_ratio(double v, double L, double gap,
                                              const AmplitudeTrajectory& traj);

}  // namespace cavitylz::dynamics
