// Spatial mode functions of the double cavity: left/right amplitude ratios,
// the transfer maximum over displacement, sampled profiles and their
// delta-weighted normalization.
#pragma once

#include <vector>

#include "cavitylz/model.hpp"

namespace cavitylz::field_profiles {

// Ratios beyond this magnitude are reported as the capped marker value
// (signed), standing in for a divergent localization.
inline constexpr double ratio_cap = 1e12;

[[nodiscard]] inline bool ratio_capped(double ratio) {
  return ratio >= ratio_cap || ratio <= -ratio_cap;
}

// A/B = -sin(k L2) / sin(k L1) for U = A sin(k(x+L1)) left of the mirror
// and U = B sin(k(x-L2)) right of it.
[[nodiscard]] double amplitude_ratio(double k, double L, double delta_L);

// B/A, the left-to-right transfer ratio.
[[nodiscard]] double inverse_amplitude_ratio(double k, double L,
                                             double delta_L);

struct MaxTransferRatio {
  double approx = 0.0;      // 2 pi n alpha / L
  double exact = 0.0;       // max |B/A| along the symmetric branch
  double at_delta_L = 0.0;  // m, location of the maximum
  double k_at_max = 0.0;    // 1/m
};

// Scans |B/A| along the even branch of crossing n and refines the maximum.
[[nodiscard]] MaxTransferRatio max_transfer_ratio(int n, double L,
                                                  double alpha,
                                                  double tol = 1e-12);

// Piecewise-sinusoidal profile sampled on both halves, sharing the x = 0
// sample (needed exactly for the delta weight).
struct ModeProfile {
  std::vector<double> x;  // m, ascending, containing 0 exactly
  std::vector<double> u;
  double k = 0.0;         // 1/m
  double a = 0.0;         // left amplitude, positive by convention
  double b = 0.0;         // right amplitude
  model::CavityGeometry geometry;

  [[nodiscard]] double value_at_mirror() const;
};

// Samples the mode of wavenumber k with at least 16 points per half
// wavelength (n_samples is the total count; DomainError when too coarse).
[[nodiscard]] ModeProfile mode_profile(double k,
                                       const model::CavityGeometry& geom,
                                       int n_samples);

// Rescales so that integral(U^2 dx) + alpha U(0)^2 = 1 (trapezoid plus the
// exact delta term), keeping a > 0.  DomainError on an identically zero
// profile.
[[nodiscard]] ModeProfile normalize_mode(const ModeProfile& profile,
                                         const model::DeltaMirror& mirror);

// integral(U1 U2 dx) + alpha U1(0) U2(0) on the common grid.
[[nodiscard]] double weighted_overlap(const ModeProfile& p1,
                                      const ModeProfile& p2,
                                      const model::DeltaMirror& mirror);

}  // namespace cavitylz::field_profiles
