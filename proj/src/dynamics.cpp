#include "cavitylz/dynamics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/ode.hpp"

namespace cavitylz::dynamics {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();
const std::complex<double> imag_unit(0.0, 1.0);

// Antiderivative F(u) = (u sqrt(u^2+1) + asinh u)/2 of sqrt(u^2+1); the
// accumulated rotation phase is Psi(tau) = (F(a tau + c) - F(c))/a with
// a = theta_tilde/2 and c = -+ 1/r for the left/right envelope.
double phase_antiderivative(double u) {
  return 0.5 * (u * std::sqrt(u * u + 1.0) + std::asinh(u));
}

double rotation_phase(double theta_tilde, double inv_r_signed, double tau) {
  const double a = 0.5 * theta_tilde;
  if (a == 0.0) {
    return std::sqrt(inv_r_signed * inv_r_signed + 1.0) * tau;
  }
  return (phase_antiderivative(a * tau + inv_r_signed) -
          phase_antiderivative(inv_r_signed)) /
         a;
}

// Instantaneous rotation rate b(tau) = sqrt((E~ -+ 1/r)^2 + 1) and its
// derivative.
double rotation_rate(double theta_tilde, double inv_r_signed, double tau) {
  const double w = 0.5 * theta_tilde * tau + inv_r_signed;
  return std::sqrt(w * w + 1.0);
}

double rotation_rate_derivative(double theta_tilde, double inv_r_signed,
                                double tau) {
  const double w = 0.5 * theta_tilde * tau + inv_r_signed;
  return w * 0.5 * theta_tilde / std::sqrt(w * w + 1.0);
}

void require_positive_theta(double theta_tilde, const char* who) {
  if (!(theta_tilde >= 0.0)) {
    throw DomainError(std::string(who) + ": theta_tilde must be >= 0");
  }
}

// Dimensionless static-cavity derivative dA/dtau = -i M A with
// M = [[1/r - E~0, 1], [1, 1/r + E~0]].
std::pair<std::complex<double>, std::complex<double>> dimensionless_static_d(
    double theta_tilde, double delta_ratio, double tau0,
    const AmplitudeState& s) {
  const double e0 = 0.5 * theta_tilde * tau0;
  const double inv_r = 1.0 / delta_ratio;
  return {-imag_unit * ((inv_r - e0) * s.a_left + s.a_right),
          -imag_unit * (s.a_left + (inv_r + e0) * s.a_right)};
}

}  // namespace

const char* order_name(Order order) {
  switch (order) {
    case Order::first: return "first";
    case Order::second: return "second";
    case Order::uncoupled_second: return "uncoupled";
  }
  return "?";
}

// ──────────────────────────────────────────────────────────────────────────
// crossing probability
// ──────────────────────────────────────────────────────────────────────────

LZProbability lz_probability(double gap, double sweep_rate) {
  if (!(gap > 0.0)) {
    throw DomainError("lz_probability: gap must be positive");
  }
  if (sweep_rate < 0.0) {
    throw DomainError("lz_probability: sweep rate must be >= 0");
  }
  if (sweep_rate == 0.0) {
    return {0.0, true};
  }
  return {std::exp(-2.0 * pi * gap * gap / (hbar * sweep_rate)), false};
}

LZProbability lz_probability_dimensionless(double theta_tilde) {
  if (theta_tilde < 0.0) {
    throw DomainError("lz_probability_dimensionless: theta_tilde must be "
                      ">= 0");
  }
  if (theta_tilde == 0.0) {
    return {0.0, true};
  }
  return {std::exp(-2.0 * pi / theta_tilde), false};
}

// ──────────────────────────────────────────────────────────────────────────
// integrators
// ──────────────────────────────────────────────────────────────────────────

std::vector<double> uniform_grid(double a, double b, int n) {
  if (n < 2 || !(b > a)) {
    throw DomainError("uniform_grid: need n >= 2 and b > a");
  }
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = a + (b - a) * i / (n - 1);
  }
  g.back() = b;
  return g;
}

AmplitudeTrajectory integrate_first_order(double theta_tilde,
                                          const AmplitudeState& initial,
                                          std::span<const double> taus,
                                          double tol) {
  require_positive_theta(theta_tilde, "integrate_first_order");
  AmplitudeTrajectory traj;
  traj.order = Order::first;
  traj.theta_tilde = theta_tilde;
  traj.delta_ratio = quiet_nan;
  traj.rows.resize(taus.size());

  const ComplexRhs<2> rhs = [theta_tilde](double tau, const ComplexState<2>& y,
                                          ComplexState<2>& dy) {
    const double phase = 0.5 * theta_tilde * tau * tau;
    const std::complex<double> e_minus(std::cos(phase), -std::sin(phase));
    dy[0] = -imag_unit * e_minus * y[1];
    dy[1] = -imag_unit * std::conj(e_minus) * y[0];
  };
  const ComplexState<2> y0{initial.a_left, initial.a_right};
  integrate_dp54<2>(
      rhs, y0, taus, tol, 0.01 * tol,
      [&](std::size_t i, double tau, const ComplexState<2>& y,
          const ComplexState<2>& dy) {
        auto& row = traj.rows[i];
        row.tau = tau;
        row.a_left = y[0];
        row.a_right = y[1];
        row.d_left = dy[0];
        row.d_right = dy[1];
        row.norm_sq = std::norm(y[0]) + std::norm(y[1]);
        row.energy_dev = row.norm_sq - 1.0;
      });
  return traj;
}

AmplitudeTrajectory integrate_second_order(double theta_tilde,
                                           double delta_ratio,
                                           const AmplitudeState& initial,
                                           std::span<const double> taus,
                                           double tol, bool rotated_frame) {
  require_positive_theta(theta_tilde, "integrate_second_order");
  if (!(delta_ratio > 0.0)) {
    throw DomainError("integrate_second_order: delta_ratio must be positive");
  }
  AmplitudeTrajectory traj;
  traj.order = Order::second;
  traj.theta_tilde = theta_tilde;
  traj.delta_ratio = delta_ratio;
  traj.rows.resize(taus.size());

  const double inv_r = 1.0 / delta_ratio;
  const double tau0 = taus.front();

  // initial plain-envelope derivatives (static-cavity relation by default)
  std::complex<double> d_left;
  std::complex<double> d_right;
  if (initial.d_left && initial.d_right) {
    d_left = *initial.d_left;
    d_right = *initial.d_right;
  } else {
    std::tie(d_left, d_right) =
        dimensionless_static_d(theta_tilde, delta_ratio, tau0, initial);
  }

  const auto fill_row = [&](std::size_t i, double tau,
                            std::complex<double> al, std::complex<double> dal,
                            std::complex<double> ar,
                            std::complex<double> dar) {
    auto& row = traj.rows[i];
    row.tau = tau;
    row.a_left = al;
    row.a_right = ar;
    row.d_left = dal;
    row.d_right = dar;
    row.norm_sq = std::norm(al) + std::norm(ar);
    row.energy_dev = row.norm_sq - 1.0;
  };

  if (rotated_frame) {
    // state (a_L, a_L', a_R, a_R') in the frame rotated by the accumulated
    // phases Psi_{L,R}
    const ComplexRhs<4> rhs = [=](double tau, const ComplexState<4>& y,
                                  ComplexState<4>& dy) {
      const double b_l = rotation_rate(theta_tilde, -inv_r, tau);
      const double b_r = rotation_rate(theta_tilde, inv_r, tau);
      const double db_l = rotation_rate_derivative(theta_tilde, -inv_r, tau);
      const double db_r = rotation_rate_derivative(theta_tilde, inv_r, tau);
      const double phi = rotation_phase(theta_tilde, inv_r, tau) -
                         rotation_phase(theta_tilde, -inv_r, tau);
      const std::complex<double> e_minus(std::cos(phi), -std::sin(phi));
      dy[0] = y[1];
      dy[1] = 2.0 * imag_unit * b_l * y[1] + imag_unit * db_l * y[0] -
              2.0 * inv_r * y[2] * e_minus;
      dy[2] = y[3];
      dy[3] = 2.0 * imag_unit * b_r * y[3] + imag_unit * db_r * y[2] -
              2.0 * inv_r * y[0] * std::conj(e_minus);
    };

    const double psi_l0 = rotation_phase(theta_tilde, -inv_r, tau0);
    const double psi_r0 = rotation_phase(theta_tilde, inv_r, tau0);
    const std::complex<double> rot_l0(std::cos(psi_l0), std::sin(psi_l0));
    const std::complex<double> rot_r0(std::cos(psi_r0), std::sin(psi_r0));
    const double b_l0 = rotation_rate(theta_tilde, -inv_r, tau0);
    const double b_r0 = rotation_rate(theta_tilde, inv_r, tau0);
    const ComplexState<4> y0{
        initial.a_left * rot_l0,
        (d_left + imag_unit * b_l0 * initial.a_left) * rot_l0,
        initial.a_right * rot_r0,
        (d_right + imag_unit * b_r0 * initial.a_right) * rot_r0};

    integrate_dp54<4>(rhs, y0, taus, tol, 0.01 * tol,
                      [&](std::size_t i, double tau, const ComplexState<4>& y,
                          const ComplexState<4>&) {
                        fill_row(i, tau, y[0], y[1], y[2], y[3]);
                      });
    return traj;
  }

  // plain (unrotated) envelopes, converted to the rotated frame per row so
  // both code paths emit identical quantities
  const ComplexRhs<4> rhs = [=](double tau, const ComplexState<4>& y,
                                ComplexState<4>& dy) {
    const double e_t = 0.5 * theta_tilde * tau;
    const double m_ll = (e_t - inv_r) * (e_t - inv_r) + 1.0;
    const double m_rr = (e_t + inv_r) * (e_t + inv_r) + 1.0;
    dy[0] = y[1];
    dy[1] = -m_ll * y[0] - 2.0 * inv_r * y[2];
    dy[2] = y[3];
    dy[3] = -m_rr * y[2] - 2.0 * inv_r * y[0];
  };
  const ComplexState<4> y0{initial.a_left, d_left, initial.a_right, d_right};
  integrate_dp54<4>(
      rhs, y0, taus, tol, 0.01 * tol,
      [&](std::size_t i, double tau, const ComplexState<4>& y,
          const ComplexState<4>&) {
        const double psi_l = rotation_phase(theta_tilde, -inv_r, tau);
        const double psi_r = rotation_phase(theta_tilde, inv_r, tau);
        const std::complex<double> rot_l(std::cos(psi_l), std::sin(psi_l));
        const std::complex<double> rot_r(std::cos(psi_r), std::sin(psi_r));
        const double b_l = rotation_rate(theta_tilde, -inv_r, tau);
        const double b_r = rotation_rate(theta_tilde, inv_r, tau);
        fill_row(i, tau, y[0] * rot_l,
                 (y[1] + imag_unit * b_l * y[0]) * rot_l, y[2] * rot_r,
                 (y[3] + imag_unit * b_r * y[2]) * rot_r);
      });
  return traj;
}

AmplitudeTrajectory integrate_uncoupled(double theta_tilde,
                                        std::span<const double> taus,
                                        double tol) {
  require_positive_theta(theta_tilde, "integrate_uncoupled");
  AmplitudeTrajectory traj;
  traj.order = Order::uncoupled_second;
  traj.theta_tilde = theta_tilde;
  traj.delta_ratio = quiet_nan;
  traj.rows.resize(taus.size());

  const double tau0 = taus.front();
  const ComplexRhs<4> rhs = [=](double tau, const ComplexState<4>& y,
                                ComplexState<4>& dy) {
    dy[0] = y[1];
    dy[1] = -imag_unit * theta_tilde * tau * y[1] - y[0];
    dy[2] = y[3];
    dy[3] = imag_unit * theta_tilde * tau * y[3] - y[2];
  };
  // start in the left mode; the coupling survives only in the initial
  // right-envelope velocity
  const double phase0 = 0.5 * theta_tilde * tau0 * tau0;
  const ComplexState<4> y0{{
      {1.0, 0.0},
      {0.0, 0.0},
      {0.0, 0.0},
      -imag_unit * std::complex<double>(std::cos(phase0), std::sin(phase0)),
  }};
  integrate_dp54<4>(
      rhs, y0, taus, tol, 0.01 * tol,
      [&](std::size_t i, double tau, const ComplexState<4>& y,
          const ComplexState<4>&) {
        auto& row = traj.rows[i];
        row.tau = tau;
        row.a_left = y[0];
        row.a_right = y[2];
        row.d_left = y[1];
        row.d_right = y[3];
        row.norm_sq = std::norm(y[0]) + std::norm(y[2]);
        row.energy_dev = row.norm_sq - 1.0;
      });
  return traj;
}

// ──────────────────────────────────────────────────────────────────────────
// analytic references and diagnostics
// ──────────────────────────────────────────────────────────────────────────

std::complex<double> early_time_envelope(double theta_tilde, double tau0,
                                         double tau) {
  if (!(theta_tilde > 0.0)) {
    throw DomainError("early_time_envelope: theta_tilde must be positive");
  }
  if (!(tau0 < 0.0) || !(tau < 0.0) || tau < tau0) {
    throw DomainError("early_time_envelope: valid for tau0 <= tau < 0");
  }
  const std::complex<double> z0(0.0, -0.5 * theta_tilde * tau0 * tau0);
  const std::complex<double> z(0.0, -0.5 * theta_tilde * tau * tau);
  const std::complex<double> log_term =
      (imag_unit / theta_tilde) * std::log(tau / tau0);
  const std::complex<double> ei_term =
      (imag_unit / (2.0 * theta_tilde)) * std::exp(-z0) *
      (complex_exponential_integral(z0) - complex_exponential_integral(z));
  return 1.0 + log_term + ei_term;
}

std::complex<double> early_time_envelope_derivative(double theta_tilde,
                                                    double tau0, double tau) {
  if (!(theta_tilde > 0.0)) {
    throw DomainError("early_time_envelope_derivative: theta_tilde must be "
                      "positive");
  }
  if (!(tau0 < 0.0) || !(tau < 0.0) || tau < tau0) {
    throw DomainError("early_time_envelope_derivative: valid for "
                      "tau0 <= tau < 0");
  }
  const double phase = 0.5 * theta_tilde * (tau0 * tau0 - tau * tau);
  const std::complex<double> osc(std::cos(phase), std::sin(phase));
  return (imag_unit / (tau * theta_tilde)) * (1.0 - osc);
}

std::pair<std::complex<double>, std::complex<double>>
static_initial_derivatives(double E, double gap, double omega_av,
                           const AmplitudeState& state) {
  if (!(gap > 0.0) || !(omega_av > 0.0)) {
    throw DomainError("static_initial_derivatives: gap and omega_av must be "
                      "positive");
  }
  const double g_l = omega_av - E / hbar;
  const double g_r = omega_av + E / hbar;
  const double c = gap / hbar;
  return {-imag_unit * (g_l * state.a_left + c * state.a_right),
          -imag_unit * (c * state.a_left + g_r * state.a_right)};
}

BetaFrequencies beta_frequencies(double E, double gap, double omega_av) {
  if (!(gap > 0.0) || !(omega_av > 0.0)) {
    throw DomainError("beta_frequencies: gap and omega_av must be positive");
  }
  BetaFrequencies out;
  const double g = gap / hbar;
  out.beta_left = std::hypot(E / hbar - omega_av, g);
  out.beta_right = std::hypot(E / hbar + omega_av, g);
  out.difference = out.beta_right - out.beta_left;
  out.truncated_common = omega_av;
  out.truncated_difference = 2.0 * E / hbar;
  out.common_rel_error = std::abs(out.beta_left - omega_av) / omega_av;
  out.difference_rel_error =
      (E == 0.0) ? 0.0
                 : (out.difference - out.truncated_difference) /
                       out.truncated_difference;
  return out;
}

DriftRatio diabatic_drift_ratio(double v, double L, double gap,
                                const AmplitudeTrajectory& traj) {
  if (v < 0.0 || !(L > 0.0) || !(gap > 0.0)) {
    throw DomainError("diabatic_drift_ratio: need v >= 0, L > 0, gap > 0");
  }
  DriftRatio out;
  out.ratio.reserve(traj.rows.size());
  const double inf = std::numeric_limits<double>::infinity();
  const double drift_scale = (v / L) * (hbar / gap);  // per unit tau
  double min_ratio = inf;
  for (const auto& row : traj.rows) {
    double r = inf;
    if (v > 0.0) {
      const double velocity =
          std::sqrt(std::norm(row.d_left) + std::norm(row.d_right));
      const double amplitude = std::sqrt(row.norm_sq);
      r = velocity / (drift_scale * amplitude);
    }
    out.ratio.push_back(r);
    min_ratio = std::min(min_ratio, r);
  }
  out.min_ratio = min_ratio;
  return out;
}

}  // namespace cavitylz::dynamics
