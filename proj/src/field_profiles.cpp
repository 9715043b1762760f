#include "cavitylz/field_profiles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/mode_solver.hpp"
#include "cavitylz/roots.hpp"

namespace cavitylz::field_profiles {

namespace {

double capped(double numerator, double denominator) {
  const double r = numerator / denominator;
  if (std::isfinite(r) && std::abs(r) < ratio_cap) return r;
  // divergent localization: signed marker with the sign of the limit
  const double s = (denominator == 0.0) ? numerator
                                        : numerator * std::copysign(1.0, denominator);
  return std::copysign(ratio_cap, s == 0.0 ? 1.0 : s);
}

}  // namespace

double amplitude_ratio(double k, double L, double delta_L) {
  const double s_right = std::sin(0.5 * k * (L - delta_L));
  const double s_left = std::sin(0.5 * k * (L + delta_L));
  return capped(-s_right, s_left);
}

double inverse_amplitude_ratio(double k, double L, double delta_L) {
  const double s_right = std::sin(0.5 * k * (L - delta_L));
  const double s_left = std::sin(0.5 * k * (L + delta_L));
  return capped(-s_left, s_right);
}

MaxTransferRatio max_transfer_ratio(int n, double L, double alpha,
                                    double tol) {
  if (n < 1 || !(L > 0.0) || !(alpha > 0.0)) {
    throw DomainError("max_transfer_ratio: need n >= 1, L > 0, alpha > 0");
  }
  MaxTransferRatio out;
  out.approx = 2.0 * pi * n * alpha / L;

  // predicted location of the maximum, then a dense continuation scan of the
  // even branch around it with parabolic refinement
  const auto opt = mode_solver::optimal_displacement(n, L, alpha,
                                                     mode_solver::Parity::even);
  const double dl_star = (opt.delta_L_star > 0.0) ? opt.delta_L_star
                                                  : opt.delta_L_star_expanded;
  const double dl_lo = 0.3 * dl_star;
  const double dl_hi = 1.7 * dl_star;
  constexpr int n_scan = 240;

  const auto even_root_near = [&](double dl, double k_guess) {
    const RealFn f = [=](double k) {
      return mode_solver::delta_mirror_residual(k, L, dl, alpha);
    };
    const double half = std::max(1e-6 * k_guess, 5.0 * (dl_hi - dl_lo) /
                                                     n_scan * k_guess / L);
    const auto brackets = scan_sign_changes(f, k_guess - half, k_guess + half,
                                            129);
    if (brackets.empty()) {
      throw SolverError("max_transfer_ratio: lost the even branch",
                        k_guess - half, k_guess + half);
    }
    double best = brent(f, brackets.front().first, brackets.front().second);
    for (const auto& [a, b] : brackets) {
      const double r = (a == b) ? a : brent(f, a, b);
      if (std::abs(r - k_guess) < std::abs(best - k_guess)) best = r;
    }
    return best;
  };

  const auto pair0 = mode_solver::solve_global_pair(
      model::CavityGeometry{L, dl_lo}, model::DeltaMirror{alpha}, n, tol);
  double k_prev = pair0.k_even;
  double best_ratio = 0.0;
  double best_dl = dl_lo;
  double best_k = k_prev;
  std::array<double, n_scan + 1> dls{}, ratios{};
  std::size_t best_i = 0;
  for (int i = 0; i <= n_scan; ++i) {
    const double dl = dl_lo + (dl_hi - dl_lo) * i / n_scan;
    const double k = even_root_near(dl, k_prev);
    k_prev = k;
    const double ratio = std::abs(inverse_amplitude_ratio(k, L, dl));
    dls[i] = dl;
    ratios[i] = ratio;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_dl = dl;
      best_k = k;
      best_i = static_cast<std::size_t>(i);
    }
  }
  // parabolic vertex through the best sample and its neighbors
  if (best_i > 0 && best_i < static_cast<std::size_t>(n_scan)) {
    const double y0 = ratios[best_i - 1], y1 = ratios[best_i],
                 y2 = ratios[best_i + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom < 0.0) {
      const double h = dls[best_i + 1] - dls[best_i];
      const double dl_v = dls[best_i] + 0.5 * h * (y0 - y2) / denom;
      const double k_v = even_root_near(dl_v, best_k);
      const double r_v = std::abs(inverse_amplitude_ratio(k_v, L, dl_v));
      if (r_v >= best_ratio) {
        best_ratio = r_v;
        best_dl = dl_v;
        best_k = k_v;
      }
    }
  }
  out.exact = best_ratio;
  out.at_delta_L = best_dl;
  out.k_at_max = best_k;
  return out;
}

double ModeProfile::value_at_mirror() const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) return u[i];
  }
  throw DomainError("ModeProfile: grid does not contain x = 0");
}

ModeProfile mode_profile(double k, const model::CavityGeometry& geom,
                         int n_samples) {
  if (!geom.valid() || !(k > 0.0)) {
    throw DomainError("mode_profile: invalid geometry or wavenumber");
  }
  const double half_waves = k * geom.total_length / pi;
  if (n_samples < 16.0 * half_waves) {
    throw DomainError("mode_profile: need at least 16 samples per half "
                      "wavelength");
  }
  const double l1 = geom.left_length();
  const double l2 = geom.right_length();
  ModeProfile p;
  p.k = k;
  p.geometry = geom;
  p.a = 1.0;
  const double ratio = amplitude_ratio(k, geom.total_length,
                                       geom.length_difference);
  p.b = p.a / ratio;

  const int n_left = std::max(
      2, static_cast<int>(std::lround(n_samples * l1 / geom.total_length)));
  const int n_right = std::max(2, n_samples - n_left);
  p.x.reserve(n_left + n_right + 1);
  p.u.reserve(n_left + n_right + 1);
  for (int i = 0; i <= n_left; ++i) {
    // exact 0 at the last left sample so the delta weight sits on the grid
    const double x = (i == n_left) ? 0.0 : -l1 + l1 * i / n_left;
    p.x.push_back(x);
    p.u.push_back(p.a * std::sin(k * (x + l1)));
  }
  for (int i = 1; i <= n_right; ++i) {
    const double x = (i == n_right) ? l2 : l2 * i / n_right;
    p.x.push_back(x);
    p.u.push_back(p.b * std::sin(k * (x - l2)));
  }
  return p;
}

namespace {

double trapezoid_product(const ModeProfile& p1, const ModeProfile& p2) {
  double sum = 0.0;
  for (std::size_t i = 1; i < p1.x.size(); ++i) {
    const double dx = p1.x[i] - p1.x[i - 1];
    sum += 0.5 * dx * (p1.u[i] * p2.u[i] + p1.u[i - 1] * p2.u[i - 1]);
  }
  return sum;
}

}  // namespace

ModeProfile normalize_mode(const ModeProfile& profile,
                           const model::DeltaMirror& mirror) {
  const double u0 = profile.value_at_mirror();
  const double norm_sq = trapezoid_product(profile, profile) +
                         mirror.alpha * u0 * u0;
  if (!(norm_sq > 0.0)) {
    throw DomainError("normalize_mode: profile has zero norm");
  }
  ModeProfile out = profile;
  // keep the left amplitude positive
  const double scale = ((out.a < 0.0) ? -1.0 : 1.0) / std::sqrt(norm_sq);
  for (double& v : out.u) v *= scale;
  out.a *= scale;
  out.b *= scale;
  return out;
}

double weighted_overlap(const ModeProfile& p1, const ModeProfile& p2,
                        const model::DeltaMirror& mirror) {
  if (p1.x.size() != p2.x.size()) {
    throw DomainError("weighted_overlap: profiles sampled on different grids");
  }
  return trapezoid_product(p1, p2) +
         mirror.alpha * p1.value_at_mirror() * p2.value_at_mirror();
}

}  // namespace cavitylz::field_profiles
