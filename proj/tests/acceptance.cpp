// Acceptance gate: runs every quantitative exit criterion of the library
// end to end and prints one [PASS]/[FAIL] line per criterion with the
// measured value next to the required one.  The process exit code is the
// number of failed criteria, so the gate can anchor a CI job directly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cavitylz/basis.hpp"
#include "cavitylz/constants.hpp"
#include "cavitylz/dynamics.hpp"
#include "cavitylz/field_profiles.hpp"
#include "cavitylz/mirrors.hpp"
#include "cavitylz/mode_solver.hpp"
#include "cavitylz/model.hpp"
#include "cavitylz/regimes.hpp"

namespace {

using cavitylz::hbar;
using cavitylz::pi;
using cavitylz::speed_of_light;

struct Clause {
  std::string text;
  bool ok = false;
};

struct CriterionResult {
  std::vector<Clause> clauses;
  double seconds = 0.0;

  void check(bool ok, std::string text) {
    clauses.push_back({std::move(text), ok});
  }
  [[nodiscard]] bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.ok; });
  }
};

// Formats a double compactly for the report lines.
[[nodiscard]] std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

[[nodiscard]] bool within(double measured, double target, double rel) {
  return std::abs(measured - target) <= rel * std::abs(target);
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 1: crossing gap magnitude, closed form and least-squares fit
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_gap_magnitude() {
  CriterionResult r;
  const double L = 100e-6;
  const double alpha = 1e-6;  // alpha/L = 0.01
  const int n = 128;          // lambda ~ 780 nm

  const auto closed = cavitylz::mode_solver::lz_fit_parameters(n, L, alpha);
  const double analytic = closed.gap / hbar;
  r.check(within(analytic, 7e11, 0.10),
          "analytic gap/hbar = " + num(analytic) + " 1/s vs 7e11 within 10%");

  // fit over an 11-point displacement window of +-2 crossing half-widths
  const double width = 2.0 * closed.gap / std::sqrt(closed.curvature);
  std::vector<cavitylz::mode_solver::SpectrumSample> samples;
  for (int i = 0; i <= 10; ++i) {
    const double dl = -width + 2.0 * width * i / 10.0;
    const auto pair = cavitylz::mode_solver::solve_global_pair(
        cavitylz::model::CavityGeometry{L, dl},
        cavitylz::model::DeltaMirror{alpha}, n);
    samples.push_back({dl, pair.k_even, pair.k_odd});
  }
  const auto fitted = cavitylz::mode_solver::fit_lz_from_spectrum(samples);
  const double fit = fitted.gap / hbar;
  r.check(within(fit, 7e11, 0.10),
          "fitted gap/hbar = " + num(fit) + " 1/s vs 7e11 within 10%");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 2: delta-mirror reflectivity at 780 nm
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_reflectivity() {
  CriterionResult r;
  const double k = 2.0 * pi / 780e-9;
  const auto t =
      cavitylz::mirrors::delta_transmission(k, cavitylz::model::DeltaMirror{1e-6});
  r.check(std::abs(t.R - 0.94) <= 0.005,
          "R = " + num(t.R) + " vs 0.94 +- 0.005");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 3: transfer ratios along the even branch
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_transfer_ratios() {
  CriterionResult r;
  const int n = 128;
  const double L = 1.0, alpha = 0.3;

  const auto best = cavitylz::field_profiles::max_transfer_ratio(n, L, alpha);
  r.check(within(best.exact, 241.0, 0.02),
          "max |B/A| = " + num(best.exact) + " vs 241 within 2%");

  const double dl = 1e-4 * L;
  const auto pair = cavitylz::mode_solver::solve_global_pair(
      cavitylz::model::CavityGeometry{L, dl},
      cavitylz::model::DeltaMirror{alpha}, n);
  const double ratio = std::abs(
      cavitylz::field_profiles::inverse_amplitude_ratio(pair.k_even, L, dl));
  r.check(within(ratio, 20.0, 0.15),
          "|B/A| at delta_L = 1e-4 L = " + num(ratio) + " vs 20 within 15%");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 4: crossing probability, closed form and first-order dynamics
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_lz_probability() {
  CriterionResult r;
  const auto p = cavitylz::dynamics::lz_probability_dimensionless(6.8);
  r.check(std::abs(p.value - 0.40) <= 0.005,
          "P(theta_tilde = 6.8) = " + num(p.value) + " vs 0.40 +- 0.005");

  const auto taus = cavitylz::dynamics::uniform_grid(-25.0, 25.0, 501);
  const auto traj = cavitylz::dynamics::integrate_first_order(
      1.0, cavitylz::dynamics::AmplitudeState{}, taus);
  const double p_left = std::norm(traj.rows.back().a_left);
  const double target = std::exp(-2.0 * pi);
  // The finite window leaves a residual oscillation of the populations
  // (amplitude ~ 1/(theta_tilde tau^2) persists at tau = 25), so the
  // endpoint reading sits above the asymptotic value by more than the
  // stated band.  Kept red deliberately: the band is not reachable at this
  // window length, and widening the window or averaging the tail would
  // change the measurement, not the code under test.
  r.check(std::abs(p_left - target) <= 0.01,
          "first-order final |A_L|^2 = " + num(p_left) + " vs exp(-2 pi) = " +
              num(target) + " +- 0.01");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criteria 5 and 6: order convergence and energy deviation (shared runs)
// ──────────────────────────────────────────────────────────────────────────

struct OrderRuns {
  std::vector<double> sup_dev;    // sup |pL_2nd - pL_1st| per delta_ratio
  std::vector<double> final_gap;  // |final pL_2nd - final pL_1st|
  std::vector<double> norm_dev;   // max |norm^2 - 1| per delta_ratio
  double first_norm_dev = 0.0;
};

OrderRuns run_order_comparison() {
  OrderRuns out;
  const auto taus = cavitylz::dynamics::uniform_grid(-25.0, 25.0, 501);
  const auto first = cavitylz::dynamics::integrate_first_order(
      1.0, cavitylz::dynamics::AmplitudeState{}, taus);
  for (const auto& row : first.rows) {
    out.first_norm_dev = std::max(out.first_norm_dev, std::abs(row.energy_dev));
  }
  for (const double ratio : {1.0 / 100.0, 1.0 / 500.0, 1.0 / 1000.0}) {
    const auto second = cavitylz::dynamics::integrate_second_order(
        1.0, ratio, cavitylz::dynamics::AmplitudeState{}, taus);
    double sup = 0.0, ndev = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      sup = std::max(sup, std::abs(std::norm(second.rows[i].a_left) -
                                   std::norm(first.rows[i].a_left)));
      ndev = std::max(ndev, std::abs(second.rows[i].energy_dev));
    }
    out.sup_dev.push_back(sup);
    out.norm_dev.push_back(ndev);
    out.final_gap.push_back(std::abs(std::norm(second.rows.back().a_left) -
                                     std::norm(first.rows.back().a_left)));
  }
  return out;
}

CriterionResult criterion_order_convergence(const OrderRuns& runs) {
  CriterionResult r;
  const auto& s = runs.sup_dev;
  r.check(s[0] > s[1] && s[1] > s[2],
          "sup deviation strictly decreases: " + num(s[0]) + " > " +
              num(s[1]) + " > " + num(s[2]));
  r.check(runs.final_gap[2] <= 0.02,
          "final populations at delta_ratio = 1/1000 differ by " +
              num(runs.final_gap[2]) + " <= 0.02");
  return r;
}

CriterionResult criterion_energy_deviation(const OrderRuns& runs) {
  CriterionResult r;
  const auto& d = runs.norm_dev;
  r.check(d[0] > d[1] && d[1] > d[2],
          "max |norm^2 - 1| decreases: " + num(d[0]) + " > " + num(d[1]) +
              " > " + num(d[2]));
  r.check(runs.first_norm_dev <= 1e-8,
          "first-order norm conserved to " + num(runs.first_norm_dev) +
              " <= 1e-8");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 7: early-time analytic envelope and uncoupled cross-check
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_early_time() {
  CriterionResult r;
  const double theta_tilde = 1.0, tau0 = -25.0;

  const auto window = cavitylz::dynamics::uniform_grid(-25.0, -22.0, 61);
  const auto first = cavitylz::dynamics::integrate_first_order(
      theta_tilde, cavitylz::dynamics::AmplitudeState{}, window);
  double dev_re = 0.0, dev_im = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const auto analytic =
        cavitylz::dynamics::early_time_envelope(theta_tilde, tau0, window[i]);
    dev_re = std::max(dev_re,
                      std::abs(analytic.real() - first.rows[i].a_left.real()));
    dev_im = std::max(dev_im,
                      std::abs(analytic.imag() - first.rows[i].a_left.imag()));
  }
  r.check(dev_re <= 0.02 && dev_im <= 0.02,
          "early-time envelope deviation re = " + num(dev_re) + ", im = " +
              num(dev_im) + " <= 0.02 on tau in [-25, -22]");

  const auto taus = cavitylz::dynamics::uniform_grid(-25.0, 25.0, 501);
  const auto ref = cavitylz::dynamics::integrate_first_order(
      theta_tilde, cavitylz::dynamics::AmplitudeState{}, taus, 1e-12);
  const auto unc =
      cavitylz::dynamics::integrate_uncoupled(theta_tilde, taus, 1e-12);
  double dev = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    dev = std::max(dev, std::abs(unc.rows[i].a_left - ref.rows[i].a_left));
    dev = std::max(dev, std::abs(unc.rows[i].a_right - ref.rows[i].a_right));
  }
  r.check(dev <= 1e-6, "uncoupled vs first-order amplitude deviation = " +
                           num(dev) + " <= 1e-6");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 8: slab/delta correspondence and resonant branch connectivity
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_slab_correspondence() {
  CriterionResult r;

  // matched pair: slab (L = 1.002668, M = 0.001334, n_r = 7.9987817663)
  // against its equivalent delta mirror (alpha = 2 M n_r^2 = 0.009735,
  // L = 1.0); gaps compared at three displacements, centers may differ by
  // a constant vertical offset (the slab stores optical path inside).
  const cavitylz::model::SlabMirror slab{0.001334, 7.9987817663};
  const double slab_L = 1.002668;
  const cavitylz::model::DeltaMirror delta{0.009735};
  const double delta_L_total = 1.0;
  const int n = 128;

  double worst = 0.0;
  std::vector<double> offsets;
  for (const double dl : {0.0, 2e-4, 5e-4}) {
    const auto s = cavitylz::mode_solver::solve_finite_mirror_pair(
        cavitylz::model::CavityGeometry{slab_L, dl}, slab, n);
    const auto d = cavitylz::mode_solver::solve_global_pair(
        cavitylz::model::CavityGeometry{delta_L_total, dl}, delta, n);
    const double gap_s = std::abs(s.pair.k_odd - s.pair.k_even);
    const double gap_d = std::abs(d.k_odd - d.k_even);
    worst = std::max(worst, std::abs(gap_s / gap_d - 1.0));
    offsets.push_back(0.5 * (s.pair.k_even + s.pair.k_odd) -
                      0.5 * (d.k_even + d.k_odd));
  }
  const auto [lo, hi] = std::minmax_element(offsets.begin(), offsets.end());
  const double spread = *hi - *lo;
  r.check(worst <= 0.05, "worst gap mismatch = " + num(worst) + " <= 5%");
  r.check(spread <= 1e-4,
          "center offset constant to " + num(spread) + " (offset ~ " +
              num(offsets.front()) + " 1/m)");

  // resonant slab: the crossing at a mirror resonance turns into a branch
  // that stays flat in k while the localized lines sweep through it
  // (vertical-crossing connectivity), in contrast with an off-resonance
  // crossing whose branches move by a full free spectral range.
  const cavitylz::model::SlabMirror res_slab{0.0005005, std::sqrt(10.0)};
  const double res_L = 1.001001;
  const auto at_res = cavitylz::mode_solver::solve_finite_mirror_pair(
      cavitylz::model::CavityGeometry{res_L, 0.0}, res_slab, 158);
  r.check(at_res.near_resonance && at_res.window_roots.size() == 3,
          "resonant window holds a ladder of " +
              std::to_string(at_res.window_roots.size()) +
              " roots (flagged near_resonance)");

  const double k_res = at_res.pair.k_even;
  double flat_dev = 0.0;
  int first_line = 0, last_line = 0;
  for (int i = 0; i <= 160; ++i) {
    const double dl = 0.04 * i / 160.0;
    const auto p = cavitylz::mode_solver::solve_finite_mirror_pair(
        cavitylz::model::CavityGeometry{res_L, dl}, res_slab, 158);
    flat_dev = std::max(flat_dev, std::abs(p.pair.k_even - k_res));
    // index of the left-localized line nearest the flat branch
    const int m = static_cast<int>(
        std::lround(k_res * (res_L + dl) / (2.0 * pi)));
    if (i == 0) first_line = m;
    last_line = m;
  }
  r.check(flat_dev <= 0.05 && last_line - first_line >= 3,
          "flat branch dev = " + num(flat_dev) +
              " <= 0.05 1/m while the nearest localized line climbs " +
              std::to_string(first_line) + " -> " +
              std::to_string(last_line));

  // k ~ 157 here, so delta_L = 0.04 spans a full period of the crossing
  // net: track min/max over the grid, not the endpoints.
  double lo_e = 1e300, hi_e = -1e300, lo_o = 1e300, hi_o = -1e300;
  for (int i = 0; i <= 160; ++i) {
    const double dl = 0.04 * i / 160.0;
    const auto p = cavitylz::mode_solver::solve_finite_mirror_pair(
        cavitylz::model::CavityGeometry{res_L, dl}, res_slab, 25);
    lo_e = std::min(lo_e, p.pair.k_even);
    hi_e = std::max(hi_e, p.pair.k_even);
    lo_o = std::min(lo_o, p.pair.k_odd);
    hi_o = std::max(hi_o, p.pair.k_odd);
  }
  const double range_even = hi_e - lo_e;
  const double range_odd = hi_o - lo_o;
  r.check(range_even > 0.5 && range_odd > 0.5,
          "off-resonance branches move (k ranges " + num(range_even) + ", " +
              num(range_odd) + " > 0.5 1/m)");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// criterion 9: property suites
// ──────────────────────────────────────────────────────────────────────────

CriterionResult criterion_property_suites() {
  CriterionResult r;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // losslessness across all three mirror models
  double worst_loss = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double k = std::exp(std::log(1e2) + unit(rng) * std::log(1e5));
    const int which = i % 3;
    cavitylz::mirrors::TransmissionResult t;
    if (which == 0) {
      t = cavitylz::mirrors::delta_transmission(
          k, cavitylz::model::DeltaMirror{1e-8 * std::pow(10.0, 4 * unit(rng))});
    } else if (which == 1) {
      t = cavitylz::mirrors::slab_transmission(
          k, cavitylz::model::SlabMirror{1e-5 * std::pow(10.0, 2 * unit(rng)),
                                         1.0 + 9.0 * unit(rng)});
    } else {
      t = cavitylz::mirrors::interdielectric_transmission(
               k, cavitylz::model::InterDielectricDelta{
                      1e-8 * std::pow(10.0, 4 * unit(rng)),
                      1.0 + 3.0 * unit(rng), 1.0 + 3.0 * unit(rng)})
              .exact;
    }
    worst_loss = std::max(worst_loss, std::abs(t.T + t.R - 1.0));
  }
  r.check(worst_loss <= 1e-12,
          "worst |T + R - 1| = " + num(worst_loss) + " over 10^4 draws");

  // similarity-transform reconstruction (order-unity dimensionless entries,
  // where the absolute threshold is meaningful)
  double worst_sim = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double e = (unit(rng) - 0.5) * 10.0;
    const double gap = 1e-3 + (5.0 - 1e-3) * unit(rng);
    worst_sim = std::max(worst_sim, cavitylz::basis::similarity_check(e, gap));
  }
  r.check(worst_sim <= 1e-10,
          "worst reconstruction error = " + num(worst_sim) +
              " over 10^3 draws");

  // golden-rule two-route identity
  double worst_fgr = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double gap = hbar * 1e9 * std::pow(10.0, 4 * unit(rng));
    const double L = 1e-5 * std::pow(10.0, 3 * unit(rng));
    const auto rates = cavitylz::regimes::golden_rule_rate(gap, L);
    worst_fgr = std::max(
        worst_fgr, std::abs(rates.hop_rate / rates.fgr_rate - 1.0));
  }
  r.check(worst_fgr <= 1e-12,
          "worst two-route relative gap = " + num(worst_fgr));

  // transcendental residual at every root of a solve batch
  cavitylz::mode_solver::SweepRequest req;
  req.total_length = 1.0;
  req.mirror = cavitylz::model::DeltaMirror{0.3};
  req.delta_L_min = 0.0;
  req.delta_L_max = 1.95084e-3;
  req.steps = 5;
  req.n_min = 128;
  req.n_max = 128;
  req.include_localized = false;
  const auto table = cavitylz::mode_solver::sweep_spectrum(req);
  double worst_res = 0.0;
  for (const auto& row : table.rows) {
    worst_res = std::max(
        worst_res, std::abs(cavitylz::mode_solver::delta_mirror_residual(
                       row.k, 1.0, row.delta_L, 0.3)));
  }
  r.check(!table.rows.empty() && worst_res <= 1e-12,
          "worst transcendental residual = " + num(worst_res) + " over " +
              std::to_string(table.rows.size()) + " roots");

  // waveguide index offset for a complete transfer span
  const double eta =
      cavitylz::mode_solver::complete_transfer_index_offset(780e-9, 100e-6);
  r.check(within(eta, 0.004, 0.05),
          "waveguide eta = " + num(eta) + " vs 0.004 within 5%");
  return r;
}

// ──────────────────────────────────────────────────────────────────────────
// driver
// ──────────────────────────────────────────────────────────────────────────

struct Criterion {
  int index;
  const char* label;
  double budget_s;  // stated runtime budget; 0 = bundled/trivial
  CriterionResult result;
};

void report(const Criterion& c, int& failures) {
  bool ok = c.result.passed();
  if (c.budget_s > 0.0 && c.result.seconds > c.budget_s) ok = false;
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.index,
              c.label);
  for (const auto& clause : c.result.clauses) {
    std::printf("    %s %s\n", clause.ok ? "ok  " : "FAIL",
                clause.text.c_str());
  }
  if (c.budget_s > 0.0) {
    std::printf("    %s runtime %.2f s (budget %.0f s)\n",
                c.result.seconds <= c.budget_s ? "ok  " : "FAIL",
                c.result.seconds, c.budget_s);
  }
  if (!ok) ++failures;
}

template <typename F>
CriterionResult timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  criteria.push_back(
      {1, "gap magnitude (analytic and fitted, 100 um cavity)", 1.0,
       timed(criterion_gap_magnitude)});
  criteria.push_back({2, "delta-mirror reflectivity at 780 nm", 0.0,
                      timed(criterion_reflectivity)});
  criteria.push_back({3, "transfer ratios along the even branch", 10.0,
                      timed(criterion_transfer_ratios)});
  criteria.push_back({4, "crossing probability (closed form and dynamics)",
                      5.0, timed(criterion_lz_probability)});

  const auto t5 = std::chrono::steady_clock::now();
  OrderRuns runs;
  bool runs_ok = true;
  std::string runs_err;
  try {
    runs = run_order_comparison();
  } catch (const std::exception& e) {
    runs_ok = false;
    runs_err = e.what();
  }
  const double shared_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t5)
          .count();
  CriterionResult c5, c6;
  if (runs_ok) {
    c5 = criterion_order_convergence(runs);
    c6 = criterion_energy_deviation(runs);
  } else {
    c5.check(false, "exception: " + runs_err);
    c6.check(false, "exception: " + runs_err);
  }
  c5.seconds = shared_s;
  c6.seconds = 0.0;  // bundled with #5
  criteria.push_back(
      {5, "order convergence of the population histories", 120.0, c5});
  criteria.push_back({6, "energy deviation ordering", 0.0, c6});

  criteria.push_back({7, "early-time analytic envelope and uncoupled check",
                      5.0, timed(criterion_early_time)});
  criteria.push_back({8, "slab/delta correspondence and resonant connectivity",
                      30.0, timed(criterion_slab_correspondence)});
  criteria.push_back(
      {9, "property suites (losslessness, similarity, rates, roots, eta)",
       0.0, timed(criterion_property_suites)});

  int failures = 0;
  for (const auto& c : criteria) report(c, failures);
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
