#include "cavitylz/mode_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/roots.hpp"

namespace cavitylz::mode_solver {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

// Refines every bracket with Brent and drops duplicates closer than
// 1e-11 relative.
std::vector<double> refine_brackets(
    const RealFn& f, const std::vector<std::pair<double, double>>& brackets) {
  std::vector<double> roots;
  for (const auto& [a, b] : brackets) {
    const double r = (a == b) ? a : brent(f, a, b);
    bool duplicate = false;
    for (double seen : roots) {
      if (std::abs(seen - r) <= 1e-11 * std::abs(r)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> roots_in(const RealFn& f, double lo, double hi,
                             int n_points) {
  return refine_brackets(f, scan_sign_changes(f, lo, hi, n_points));
}

// Root nearest to a predicted location, searched in a small interval; NaN
// when the interval holds no sign change.
double local_root_near(const RealFn& f, double k_pred, double half_span) {
  const auto roots = roots_in(f, k_pred - half_span, k_pred + half_span, 65);
  if (roots.empty()) return quiet_nan;
  double best = roots.front();
  for (double r : roots) {
    if (std::abs(r - k_pred) < std::abs(best - k_pred)) best = r;
  }
  return best;
}

// Continues the two branch roots of one crossing from displacement dl_from
// (roots known) to dl_to, halving the displacement step whenever a local
// re-bracket fails or a root jumps off its prediction.  residual_of(dl)
// yields the transcendental at fixed displacement; spacing is the free
// spectral range used for jump guards.
struct BranchPairTrack {
  double k_upper = 0.0;  // label "a"
  double k_lower = 0.0;  // label "b"
};

BranchPairTrack continue_pair(
    const std::function<RealFn(double)>& residual_of, double dl_from,
    double dl_to, BranchPairTrack start, double base_step, double spacing) {
  BranchPairTrack cur = start;
  double dl = dl_from;
  double slope_a = 0.0;
  double slope_b = 0.0;
  double step = base_step;
  const double min_step = std::max(std::abs(dl_to - dl_from), base_step) * 1e-12;
  const double direction = (dl_to >= dl_from) ? 1.0 : -1.0;

  while (direction * (dl_to - dl) > 0.0) {
    const double d = std::min(step, direction * (dl_to - dl));
    const double dl_next = dl + direction * d;
    const RealFn f = residual_of(dl_next);
    const double pred_a = cur.k_upper + slope_a * direction * d;
    const double pred_b = cur.k_lower + slope_b * direction * d;
    const double half_a = std::clamp(
        6.0 * std::abs(slope_a * d) + 1e-7 * cur.k_upper, 1e-9 * cur.k_upper,
        0.2 * spacing);
    const double half_b = std::clamp(
        6.0 * std::abs(slope_b * d) + 1e-7 * cur.k_lower, 1e-9 * cur.k_lower,
        0.2 * spacing);
    const double ka = local_root_near(f, pred_a, half_a);
    const double kb = local_root_near(f, pred_b, half_b);
    const bool bad = !std::isfinite(ka) || !std::isfinite(kb) ||
                     std::abs(ka - pred_a) > 0.45 * spacing ||
                     std::abs(kb - pred_b) > 0.45 * spacing ||
                     std::abs(ka - kb) < 1e-13 * ka;
    if (bad) {
      step *= 0.5;
      if (step < min_step) {
        throw SolverError("continue_pair: lost track of branch roots",
                          dl, dl_next);
      }
      continue;
    }
    slope_a = (ka - cur.k_upper) / (direction * d);
    slope_b = (kb - cur.k_lower) / (direction * d);
    cur.k_upper = ka;
    cur.k_lower = kb;
    dl = dl_next;
    step = std::min(step * 1.5, base_step);
  }
  return cur;
}

}  // namespace

// ──────────────────────────────────────────────────────────────────────────
// residuals
// ──────────────────────────────────────────────────────────────────────────

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::even: return "even";
    case Branch::odd: return "odd";
    case Branch::localized_left: return "localized-left";
    case Branch::localized_right: return "localized-right";
  }
  return "?";
}

double delta_mirror_residual(double k, double L, double delta_L,
                             double alpha) {
  return std::cos(k * delta_L) - std::cos(k * L) -
         2.0 * std::sin(k * L) / (alpha * k);
}

double delta_mirror_residual_derivative(double k, double L, double delta_L,
                                        double alpha) {
  return -delta_L * std::sin(k * delta_L) + L * std::sin(k * L) -
         2.0 * L * std::cos(k * L) / (alpha * k) +
         2.0 * std::sin(k * L) / (alpha * k * k);
}

double slab_mirror_residual(double k, const model::CavityGeometry& geom,
                            const model::SlabMirror& mirror) {
  const double L = geom.total_length;
  const double dl = geom.length_difference;
  const double m = mirror.half_width;
  const double nr = mirror.refractive_index;
  const double up = k * (0.5 * L - m + 0.5 * dl);
  const double um = k * (0.5 * L - m - 0.5 * dl);
  const double s2 = std::sin(2.0 * nr * k * m);
  const double c2 = std::cos(2.0 * nr * k * m);
  return (-nr * nr * s2 * std::sin(up) * std::sin(um) +
          nr * c2 * std::sin(k * (L - 2.0 * m)) +
          s2 * std::cos(up) * std::cos(um)) /
         (nr * nr);
}

double slab_parity_factor_odd(double k, const model::CavityGeometry& geom,
                              const model::SlabMirror& mirror) {
  const double u = k * (0.5 * geom.total_length - mirror.half_width);
  const double w = mirror.refractive_index * k * mirror.half_width;
  return mirror.refractive_index * std::sin(u) * std::cos(w) +
         std::cos(u) * std::sin(w);
}

double slab_parity_factor_even(double k, const model::CavityGeometry& geom,
                               const model::SlabMirror& mirror) {
  const double u = k * (0.5 * geom.total_length - mirror.half_width);
  const double w = mirror.refractive_index * k * mirror.half_width;
  return mirror.refractive_index * std::sin(u) * std::sin(w) -
         std::cos(u) * std::cos(w);
}

double waveguide_residual(double k, double L, double n0, double eta,
                          double alpha) {
  return std::cos(eta * k * L) - std::cos(n0 * k * L) -
         2.0 * n0 * std::sin(n0 * k * L) / (alpha * k);
}

// ──────────────────────────────────────────────────────────────────────────
// localized references and quadratic approximations
// ──────────────────────────────────────────────────────────────────────────

std::pair<double, double> localized_wavenumbers(
    const model::CavityGeometry& geom, int n) {
  if (!geom.valid() || n < 1) {
    throw DomainError("localized_wavenumbers: invalid geometry or index");
  }
  const double L = geom.total_length;
  const double dl = geom.length_difference;
  return {2.0 * pi * n / (L + dl), 2.0 * pi * n / (L - dl)};
}

std::pair<double, double> approx_wavenumbers_quadratic(int n, double L,
                                                       double alpha,
                                                       double delta_L) {
  const double k0 = 2.0 * pi * n / L;
  const double two_delta = k0 / (1.0 + n * n * pi * pi * alpha / L);
  const double bend =
      2.0 * pi * pi * pi * n * n * n * alpha * delta_L * delta_L /
      (L * L * L * L);
  return {k0 + two_delta + bend, k0 - bend};
}

LZParameters lz_fit_parameters(int n, double L, double alpha) {
  if (n < 1 || !(L > 0.0) || !(alpha > 0.0)) {
    throw DomainError("lz_fit_parameters: need n >= 1, L > 0, alpha > 0");
  }
  LZParameters p;
  const double hc = hbar * speed_of_light;
  p.gap = (hc / L) * n * pi / (1.0 + n * n * pi * pi * alpha / L);
  p.curvature = 2.0 * p.gap * hc * 2.0 * pi * pi * pi * n * n * n * alpha /
                (L * L * L * L);
  p.omega_av = 2.0 * pi * n * speed_of_light / L + p.gap / hbar;
  p.sweep_rate = quiet_nan;
  return p;
}

double sweep_rate_from_speed(double curvature, double v) {
  if (!(curvature > 0.0)) {
    throw DomainError("sweep_rate_from_speed: curvature must be positive");
  }
  // E = sqrt(curvature) * delta_L and delta_L = 2 v t, so d(2E)/dt is
  return 4.0 * std::sqrt(curvature) * v;
}

double approx_sweep_rate(int n, double L, double v) {
  return 8.0 * pi * hbar * speed_of_light * n * v / (L * L);
}

// ──────────────────────────────────────────────────────────────────────────
// exact pair, delta mirror
// ──────────────────────────────────────────────────────────────────────────

namespace {

// Direct scan of the crossing window, valid for |delta_L| < L/(4n).
ModeBranchPair solve_pair_direct(double L, double dl, double alpha, int n,
                                 double tol) {
  const double k0 = 2.0 * pi * n / L;
  const double lo = 2.0 * pi * (n - 0.5) / L;
  const double hi = 2.0 * pi * (n + 0.5) / L;
  const RealFn f = [=](double k) {
    return delta_mirror_residual(k, L, dl, alpha);
  };
  const RealFn df = [=](double k) {
    return delta_mirror_residual_derivative(k, L, dl, alpha);
  };

  std::vector<double> roots;
  if (dl == 0.0) {
    // the antisymmetric mode k = 2 pi n / L satisfies the equation exactly
    roots.push_back(k0);
    auto upper = roots_in(f, k0 * (1.0 + 5e-14), hi, 257);
    for (int pts : {4097, 65537}) {
      if (!upper.empty()) break;
      upper = roots_in(f, k0 * (1.0 + 5e-14), hi, pts);
    }
    if (!upper.empty()) roots.push_back(upper.front());
  } else {
    for (int pts : {257, 4097, 65537}) {
      roots = roots_in(f, lo, hi, pts);
      if (roots.size() >= 2) break;
    }
  }

  if (roots.size() < 2) {
    // near-degenerate pair: the gap is unresolvable by bracketing, so the
    // found cluster is split according to the quadratic forms
    const auto [ke_q, ko_q] = approx_wavenumbers_quadratic(n, L, alpha, dl);
    if (roots.size() == 1 && (ke_q - ko_q) < 10.0 * tol * k0) {
      const double shift = roots.front() - 0.5 * (ke_q + ko_q);
      ModeBranchPair pair;
      pair.index = n;
      pair.k_even = ke_q + shift;
      pair.k_odd = ko_q + shift;
      pair.residual_even = f(pair.k_even);
      pair.residual_odd = f(pair.k_odd);
      pair.delta_L = dl;
      return pair;
    }
    // last resort: micro-windows around the quadratic and localized
    // predictions
    const double k_left = 2.0 * pi * n / (L + dl);
    const double k_right = 2.0 * pi * n / (L - dl);
    const double half_line =
        std::max(16.0 / (alpha * k0 * L),
                 40.0 * std::numeric_limits<double>::epsilon() * k0);
    const double half_quad = std::max(4.0 * (ke_q - ko_q), 1e-10 * k0);
    for (auto [center, half] :
         {std::pair{ko_q, half_quad}, std::pair{ke_q, half_quad},
          std::pair{k_left, half_line}, std::pair{k_right, half_line}}) {
      for (double r : roots_in(f, center - half, center + half, 129)) {
        if (r <= lo || r >= hi) continue;
        bool dup = false;
        for (double seen : roots) {
          if (std::abs(seen - r) <= 1e-11 * r) dup = true;
        }
        if (!dup) roots.push_back(r);
      }
    }
    std::sort(roots.begin(), roots.end());
  }
  if (roots.size() < 2) {
    throw SolverError("solve_global_pair: could not bracket both roots", lo,
                      hi);
  }
  if (roots.size() > 2) {
    // keep the two nearest the window center
    std::sort(roots.begin(), roots.end(), [=](double a, double b) {
      return std::abs(a - k0) < std::abs(b - k0);
    });
    roots.resize(2);
    std::sort(roots.begin(), roots.end());
  }

  ModeBranchPair pair;
  pair.index = n;
  pair.delta_L = dl;
  // the delta-mirror branches never swap: the symmetric branch stays above
  pair.k_odd = (dl == 0.0) ? k0 : newton_polish(f, df, roots[0], lo, hi);
  pair.k_even = newton_polish(f, df, roots[1], lo, hi);
  pair.residual_odd = f(pair.k_odd);
  pair.residual_even = f(pair.k_even);
  if (std::abs(pair.residual_odd) > tol || std::abs(pair.residual_even) > tol) {
    throw SolverError("solve_global_pair: residual above tolerance", lo, hi);
  }
  return pair;
}

}  // namespace

ModeBranchPair solve_global_pair(const model::CavityGeometry& geom,
                                 const model::DeltaMirror& mirror, int n,
                                 double tol) {
  if (!geom.valid()) {
    throw DomainError("solve_global_pair: invalid cavity geometry");
  }
  if (n < 1) {
    throw DomainError("solve_global_pair: crossing index must be >= 1");
  }
  if (!(mirror.alpha > 0.0)) {
    throw DomainError(
        "solve_global_pair: alpha must be positive (alpha = 0 is the empty "
        "cavity, k = m pi / L)");
  }
  if (!(tol > 0.0)) {
    throw DomainError("solve_global_pair: tol must be positive");
  }
  const double L = geom.total_length;
  const double dl = geom.length_difference;
  const double alpha = mirror.alpha;

  const double direct_limit = L / (4.0 * n);
  if (std::abs(dl) <= direct_limit) {
    return solve_pair_direct(L, dl, alpha, n, tol);
  }

  // continuation from a small displacement outward; labels (upper = even for
  // the delta mirror) are preserved along the track
  const double dl_start = std::copysign(L / (8.0 * n), dl);
  ModeBranchPair seed = solve_pair_direct(L, dl_start, alpha, n, tol);
  const auto residual_of = [=](double d) -> RealFn {
    return [=](double k) { return delta_mirror_residual(k, L, d, alpha); };
  };
  BranchPairTrack track{seed.k_even, seed.k_odd};
  track = continue_pair(residual_of, dl_start, dl, track, L / (8.0 * n),
                        2.0 * pi / L);

  const RealFn f = residual_of(dl);
  const RealFn df = [=](double k) {
    return delta_mirror_residual_derivative(k, L, dl, alpha);
  };
  ModeBranchPair pair;
  pair.index = n;
  pair.delta_L = dl;
  pair.k_even = newton_polish(f, df, track.k_upper, track.k_upper * 0.99,
                              track.k_upper * 1.01);
  pair.k_odd = newton_polish(f, df, track.k_lower, track.k_lower * 0.99,
                             track.k_lower * 1.01);
  pair.residual_even = f(pair.k_even);
  pair.residual_odd = f(pair.k_odd);
  if (std::abs(pair.residual_odd) > tol || std::abs(pair.residual_even) > tol) {
    throw SolverError("solve_global_pair: residual above tolerance after "
                      "continuation", dl, dl);
  }
  return pair;
}

// ──────────────────────────────────────────────────────────────────────────
// spectrum fit
// ──────────────────────────────────────────────────────────────────────────

LZParameters fit_lz_from_spectrum(std::span<const SpectrumSample> samples) {
  if (samples.size() < 5) {
    throw FitError("fit_lz_from_spectrum: need at least 5 samples");
  }
  // least squares of s^2 = p + q * delta_L^2, normalized for conditioning
  double d2_max = 0.0;
  for (const auto& s : samples) {
    d2_max = std::max(d2_max, s.delta_L * s.delta_L);
  }
  if (d2_max == 0.0) {
    throw FitError("fit_lz_from_spectrum: all samples at delta_L = 0");
  }
  double su = 0.0, suu = 0.0, sy = 0.0, suy = 0.0;
  const double n_s = static_cast<double>(samples.size());
  for (const auto& s : samples) {
    const double u = s.delta_L * s.delta_L / d2_max;
    const double half = 0.5 * (s.k_even - s.k_odd);
    const double y = half * half;
    su += u;
    suu += u * u;
    sy += y;
    suy += u * y;
  }
  const double det = n_s * suu - su * su;
  if (std::abs(det) < 1e-12 * n_s * suu) {
    throw FitError("fit_lz_from_spectrum: degenerate displacement samples");
  }
  const double p = (suu * sy - su * suy) / det;
  const double q = (n_s * suy - su * sy) / det / d2_max;
  if (!(p > 0.0) || !(q > 0.0)) {
    throw FitError("fit_lz_from_spectrum: fit did not produce positive "
                   "gap^2 and curvature");
  }

  const double hc = hbar * speed_of_light;
  LZParameters out;
  out.gap = hc * std::sqrt(p);
  out.curvature = q * hc * hc;
  out.sweep_rate = quiet_nan;
  double k_sum = 0.0;
  for (const auto& s : samples) k_sum += 0.5 * (s.k_even + s.k_odd);
  out.omega_av = speed_of_light * k_sum / n_s;

  // consistency: a delta_L = 0 sample must reproduce the fitted gap
  for (const auto& s : samples) {
    if (s.delta_L == 0.0) {
      const double direct = hc * 0.5 * (s.k_even - s.k_odd);
      if (std::abs(direct - out.gap) > 1e-3 * out.gap) {
        throw FitError("fit_lz_from_spectrum: fitted gap inconsistent with "
                       "the delta_L = 0 sample");
      }
    }
  }
  return out;
}

// ──────────────────────────────────────────────────────────────────────────
// optimal displacement
// ──────────────────────────────────────────────────────────────────────────

OptimalDisplacement optimal_displacement(int n, double L, double alpha,
                                         Parity parity) {
  if (n < 1 || !(L > 0.0) || !(alpha > 0.0)) {
    throw DomainError("optimal_displacement: need n >= 1, L > 0, alpha > 0");
  }
  const double c_geom = (2.0 + alpha / L) / (alpha / L);
  const double sign = (parity == Parity::even) ? 1.0 : -1.0;
  double x = (4.0 * n + sign) * pi / 2.0 + c_geom / (2.0 * pi * n);
  // stationarity of the imbalance in x = k L: cos x + C sin x / x = 0
  for (int i = 0; i < 6; ++i) {
    const double g = std::cos(x) + c_geom * std::sin(x) / x;
    const double dg = -std::sin(x) +
                      c_geom * (std::cos(x) / x - std::sin(x) / (x * x));
    if (dg == 0.0) break;
    x -= g / dg;
  }
  OptimalDisplacement out;
  out.k_star = x / L;
  const double arg = 2.0 * std::sin(x) / (alpha * out.k_star) + std::cos(x);
  out.delta_L_star_expanded = (pi / 2.0 - arg) / out.k_star;
  if (std::abs(arg) > 1.0) {
    throw DomainError("optimal_displacement: regime violation, arccos "
                      "argument outside [-1, 1]");
  }
  out.delta_L_star = std::acos(arg) / out.k_star;
  return out;
}

// ──────────────────────────────────────────────────────────────────────────
// slab mirror pair
// ──────────────────────────────────────────────────────────────────────────

SlabPairResult solve_finite_mirror_pair(const model::CavityGeometry& geom,
                                        const model::SlabMirror& mirror, int n,
                                        double tol) {
  if (!geom.valid() || n < 1) {
    throw DomainError("solve_finite_mirror_pair: invalid geometry or index");
  }
  const double L = geom.total_length;
  const double m = mirror.half_width;
  const double nr = mirror.refractive_index;
  if (!(m > 0.0) || m >= geom.left_length() || m >= geom.right_length()) {
    throw DomainError(
        "solve_finite_mirror_pair: slab does not fit in the cavity");
  }
  if (!(nr >= 1.0)) {
    throw DomainError("solve_finite_mirror_pair: refractive index must be "
                      ">= 1");
  }
  const double dl = geom.length_difference;
  const double l_air = L - 2.0 * m;
  const double k0 = 2.0 * pi * n / l_air;
  const double lo = 2.0 * pi * (n - 0.5) / l_air;
  const double hi = 2.0 * pi * (n + 0.5) / l_air;

  const auto residual_of = [=](double d) -> RealFn {
    return [=](double k) {
      model::CavityGeometry g{L, d};
      return slab_mirror_residual(k, g, mirror);
    };
  };

  // solve at delta_L = 0 first: parity labels are defined there
  const RealFn f0 = residual_of(0.0);
  std::vector<double> roots;
  for (int pts : {1201, 9601, 65537}) {
    roots = roots_in(f0, lo, hi, pts);
    if (!roots.empty()) break;
  }
  if (roots.size() < 2) {
    throw SolverError("solve_finite_mirror_pair: could not bracket a pair",
                      lo, hi);
  }

  SlabPairResult result;
  result.window_roots = roots;
  result.near_resonance = (roots.size() != 2);

  // the pair = the two roots nearest the window center
  std::vector<double> pair_roots = roots;
  std::sort(pair_roots.begin(), pair_roots.end(), [=](double a, double b) {
    return std::abs(a - k0) < std::abs(b - k0);
  });
  pair_roots.resize(2);
  std::sort(pair_roots.begin(), pair_roots.end());

  model::CavityGeometry g0{L, 0.0};
  double k_even0 = pair_roots[0];
  double k_odd0 = pair_roots[1];
  // parity of each root from the factorized residual -2 F_odd F_even / nr^2
  const bool first_is_even =
      std::abs(slab_parity_factor_even(pair_roots[0], g0, mirror)) <
      std::abs(slab_parity_factor_odd(pair_roots[0], g0, mirror));
  if (!first_is_even) {
    std::swap(k_even0, k_odd0);
  }

  double k_even = k_even0;
  double k_odd = k_odd0;
  if (dl != 0.0) {
    BranchPairTrack track{k_even0, k_odd0};
    track = continue_pair(residual_of, 0.0, dl, track, l_air / (8.0 * n),
                          2.0 * pi / l_air);
    k_even = track.k_upper;
    k_odd = track.k_lower;
  }

  const RealFn f = residual_of(dl);
  result.pair.index = n;
  result.pair.delta_L = dl;
  result.pair.k_even = k_even;
  result.pair.k_odd = k_odd;
  result.pair.residual_even = f(k_even);
  result.pair.residual_odd = f(k_odd);
  if (std::abs(result.pair.residual_even) > tol ||
      std::abs(result.pair.residual_odd) > tol) {
    throw SolverError("solve_finite_mirror_pair: residual above tolerance",
                      lo, hi);
  }
  return result;
}

// ──────────────────────────────────────────────────────────────────────────
// waveguide pair
// ──────────────────────────────────────────────────────────────────────────

ModeBranchPair solve_waveguide_pair(double L, double n0, double eta,
                                    double alpha, int n, double tol) {
  if (!(L > 0.0) || !(n0 >= 1.0) || !(alpha > 0.0) || n < 1) {
    throw DomainError("solve_waveguide_pair: invalid parameters");
  }
  if (!(std::abs(eta) < n0)) {
    throw DomainError("solve_waveguide_pair: |eta| must stay below n0");
  }
  // exact mapping onto the delta-mirror cavity
  model::CavityGeometry mapped{n0 * L, eta * L};
  model::DeltaMirror mapped_mirror{alpha / n0};
  ModeBranchPair pair = solve_global_pair(mapped, mapped_mirror, n, tol);
  pair.delta_L = eta * L;
  pair.residual_even = waveguide_residual(pair.k_even, L, n0, eta, alpha);
  pair.residual_odd = waveguide_residual(pair.k_odd, L, n0, eta, alpha);
  return pair;
}

double complete_transfer_index_offset(double wavelength, double L) {
  if (!(wavelength > 0.0) || !(L > 0.0)) {
    throw DomainError("complete_transfer_index_offset: need positive "
                      "wavelength and length");
  }
  // the asymmetry eta L must span the full distance 2 delta_L* ~ pi / k
  // between the two transfer extrema
  return wavelength / (2.0 * L);
}

// ──────────────────────────────────────────────────────────────────────────
// displacement sweep
// ──────────────────────────────────────────────────────────────────────────

namespace {

// Continuation of one crossing over the displacement grid (delta or slab
// mirror), emitting even/odd rows; localized rows are added by the caller.
void sweep_one_crossing(const SweepRequest& req,
                        const std::vector<double>& grid, int n,
                        std::vector<SpectrumRow>& out) {
  const bool is_delta =
      std::holds_alternative<model::DeltaMirror>(req.mirror);
  const double L = req.total_length;
  const double l_air =
      is_delta ? L
               : L - 2.0 * std::get<model::SlabMirror>(req.mirror).half_width;

  const auto residual_of = [&](double d) -> RealFn {
    if (is_delta) {
      const double alpha = std::get<model::DeltaMirror>(req.mirror).alpha;
      return [=](double k) { return delta_mirror_residual(k, L, d, alpha); };
    }
    const auto slab = std::get<model::SlabMirror>(req.mirror);
    return [=, total = L](double k) {
      model::CavityGeometry g{total, d};
      return slab_mirror_residual(k, g, slab);
    };
  };

  // start at the grid point of smallest |delta_L|
  std::size_t start = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i]) < std::abs(grid[start])) start = i;
  }

  const double base_step = l_air / (8.0 * n);
  const double spacing = 2.0 * pi / l_air;

  // for the delta mirror "upper = even" exactly; for the slab the parity
  // classification at delta_L = 0 decides which track carries which label
  BranchPairTrack anchor;
  bool upper_is_even = true;
  if (is_delta) {
    const auto mirror = std::get<model::DeltaMirror>(req.mirror);
    const auto p = solve_global_pair(model::CavityGeometry{L, grid[start]},
                                     mirror, n, req.tol);
    anchor = {p.k_even, p.k_odd};
  } else {
    const auto mirror = std::get<model::SlabMirror>(req.mirror);
    const auto p = solve_finite_mirror_pair(
        model::CavityGeometry{L, grid[start]}, mirror, n, req.tol);
    upper_is_even = p.pair.k_even >= p.pair.k_odd;
    anchor = {std::max(p.pair.k_even, p.pair.k_odd),
              std::min(p.pair.k_even, p.pair.k_odd)};
  }
  const auto emit_labeled = [&](double d, const BranchPairTrack& t) {
    if (upper_is_even) {
      out.push_back({d, n, Branch::even, t.k_upper});
      out.push_back({d, n, Branch::odd, t.k_lower});
    } else {
      out.push_back({d, n, Branch::even, t.k_lower});
      out.push_back({d, n, Branch::odd, t.k_upper});
    }
  };

  emit_labeled(grid[start], anchor);
  BranchPairTrack cur = anchor;
  for (std::size_t i = start + 1; i < grid.size(); ++i) {
    cur = continue_pair(residual_of, grid[i - 1], grid[i], cur, base_step,
                        spacing);
    emit_labeled(grid[i], cur);
  }
  cur = anchor;
  for (std::size_t i = start; i-- > 0;) {
    cur = continue_pair(residual_of, grid[i + 1], grid[i], cur, base_step,
                        spacing);
    emit_labeled(grid[i], cur);
  }
}

}  // namespace

SpectrumTable sweep_spectrum(const SweepRequest& req) {
  if (!(req.total_length > 0.0)) {
    throw DomainError("sweep_spectrum: total length must be positive");
  }
  if (req.n_min < 1 || req.n_max < req.n_min) {
    throw DomainError("sweep_spectrum: invalid crossing index range");
  }
  if (req.steps < 1 ||
      (req.steps == 1 && req.delta_L_min != req.delta_L_max)) {
    throw DomainError("sweep_spectrum: invalid grid");
  }
  if (std::holds_alternative<model::InterDielectricDelta>(req.mirror)) {
    throw DomainError("sweep_spectrum: spectra are defined for the delta and "
                      "slab mirror models");
  }

  std::vector<double> grid(req.steps);
  for (int i = 0; i < req.steps; ++i) {
    grid[i] = (req.steps == 1)
                  ? req.delta_L_min
                  : req.delta_L_min + (req.delta_L_max - req.delta_L_min) *
                                          i / (req.steps - 1);
  }

  const int n_count = req.n_max - req.n_min + 1;
  std::vector<std::vector<SpectrumRow>> per_n(n_count);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto work = [&](int slot) {
    try {
      sweep_one_crossing(req, grid, req.n_min + slot, per_n[slot]);
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  const int jobs = std::max(1, std::min(req.jobs, n_count));
  if (jobs == 1) {
    for (int slot = 0; slot < n_count; ++slot) work(slot);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (int slot = next.fetch_add(1); slot < n_count;
             slot = next.fetch_add(1)) {
          work(slot);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SpectrumTable table;
  for (auto& rows : per_n) {
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  if (req.include_localized) {
    const double off =
        std::holds_alternative<model::SlabMirror>(req.mirror)
            ? 2.0 * std::get<model::SlabMirror>(req.mirror).half_width
            : 0.0;
    for (double d : grid) {
      for (int n = req.n_min; n <= req.n_max; ++n) {
        table.rows.push_back({d, n, Branch::localized_left,
                              2.0 * pi * n / (req.total_length + d - off)});
        table.rows.push_back({d, n, Branch::localized_right,
                              2.0 * pi * n / (req.total_length - d - off)});
      }
    }
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const SpectrumRow& a, const SpectrumRow& b) {
              if (a.delta_L != b.delta_L) return a.delta_L < b.delta_L;
              if (a.n != b.n) return a.n < b.n;
              return static_cast<int>(a.branch) < static_cast<int>(b.branch);
            });
  return table;
}

}  // namespace cavitylz::mode_solver
