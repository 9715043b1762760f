// Adaptive Dormand-Prince 5(4) integration for small complex state vectors,
// with output at a caller-supplied time grid (steps are clipped to land on
// every requested sample, so sampled states carry full integration accuracy).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "cavitylz/errors.hpp"

namespace cavitylz {

template <std::size_t N>
using ComplexState = std::array<std::complex<double>, N>;

// dy/dt = rhs(t, y)
template <std::size_t N>
using ComplexRhs = std::function<void(double, const ComplexState<N>&, ComplexState<N>&)>;

namespace detail {
// Dormand-Prince coefficients (5th order propagation, embedded 4th order).
inline constexpr double dp_c2 = 1.0 / 5.0, dp_c3 = 3.0 / 10.0,
                        dp_c4 = 4.0 / 5.0, dp_c5 = 8.0 / 9.0;
inline constexpr double dp_a21 = 1.0 / 5.0;
inline constexpr double dp_a31 = 3.0 / 40.0, dp_a32 = 9.0 / 40.0;
inline constexpr double dp_a41 = 44.0 / 45.0, dp_a42 = -56.0 / 15.0,
                        dp_a43 = 32.0 / 9.0;
inline constexpr double dp_a51 = 19372.0 / 6561.0, dp_a52 = -25360.0 / 2187.0,
                        dp_a53 = 64448.0 / 6561.0, dp_a54 = -212.0 / 729.0;
inline constexpr double dp_a61 = 9017.0 / 3168.0, dp_a62 = -355.0 / 33.0,
                        dp_a63 = 46732.0 / 5247.0, dp_a64 = 49.0 / 176.0,
                        dp_a65 = -5103.0 / 18656.0;
inline constexpr double dp_b1 = 35.0 / 384.0, dp_b3 = 500.0 / 1113.0,
                        dp_b4 = 125.0 / 192.0, dp_b5 = -2187.0 / 6784.0,
                        dp_b6 = 11.0 / 84.0;
inline constexpr double dp_e1 = 35.0 / 384.0 - 5179.0 / 57600.0,
                        dp_e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                        dp_e4 = 125.0 / 192.0 - 393.0 / 640.0,
                        dp_e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0,
                        dp_e6 = 11.0 / 84.0 - 187.0 / 2100.0,
                        dp_e7 = -1.0 / 40.0;
}  // namespace detail

// Integrates from sample_times.front() to sample_times.back() (strictly
// increasing grid) and invokes on_sample(index, t, y, dy/dt) at every grid
// point, including the first.  Throws IntegratorError on step underflow or
// when the step budget is exhausted.
template <std::size_t N>
void integrate_dp54(
    const ComplexRhs<N>& rhs, const ComplexState<N>& y0,
    std::span<const double> sample_times, double rtol, double atol,
    const std::function<void(std::size_t, double, const ComplexState<N>&,
                             const ComplexState<N>&)>& on_sample,
    std::size_t max_steps = 80'000'000) {
  using namespace detail;
  if (sample_times.size() < 2) {
    throw DomainError("integrate_dp54: need at least two sample times");
  }
  for (std::size_t i = 1; i < sample_times.size(); ++i) {
    if (!(sample_times[i] > sample_times[i - 1])) {
      throw DomainError("integrate_dp54: sample grid must be increasing");
    }
  }

  ComplexState<N> y = y0;
  ComplexState<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
  double t = sample_times.front();
  rhs(t, y, k1);
  on_sample(0, t, y, k1);

  const double t_end = sample_times.back();
  const double span = t_end - t;
  double h_prop = span / 100.0;  // running step proposal (never clipped)
  std::size_t next_sample = 1;
  std::size_t steps = 0;

  while (next_sample < sample_times.size()) {
    if (++steps > max_steps) {
      throw IntegratorError("integrate_dp54: step budget exhausted", t);
    }
    const double t_target = sample_times[next_sample];
    const bool clipped = (t + h_prop >= t_target);
    const double h = clipped ? t_target - t : h_prop;
    if (!(h > std::abs(t) * 4.0 * std::numeric_limits<double>::epsilon() +
                  1e-300)) {
      throw IntegratorError("integrate_dp54: step size underflow", t);
    }

    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * dp_a21 * k1[i];
    rhs(t + dp_c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (dp_a31 * k1[i] + dp_a32 * k2[i]);
    rhs(t + dp_c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (dp_a41 * k1[i] + dp_a42 * k2[i] + dp_a43 * k3[i]);
    rhs(t + dp_c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (dp_a51 * k1[i] + dp_a52 * k2[i] + dp_a53 * k3[i] +
                            dp_a54 * k4[i]);
    rhs(t + dp_c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (dp_a61 * k1[i] + dp_a62 * k2[i] + dp_a63 * k3[i] +
                            dp_a64 * k4[i] + dp_a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (dp_b1 * k1[i] + dp_b3 * k3[i] + dp_b4 * k4[i] +
                            dp_b5 * k5[i] + dp_b6 * k6[i]);
    rhs(t + h, ynew, k7);

    // scaled RMS error over components
    double err_sq = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const std::complex<double> e =
          h * (dp_e1 * k1[i] + dp_e3 * k3[i] + dp_e4 * k4[i] + dp_e5 * k5[i] +
               dp_e6 * k6[i] + dp_e7 * k7[i]);
      const double scale =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(e) / scale;
      err_sq += r * r;
    }
    const double err = std::sqrt(err_sq / N);

    const double factor = (err == 0.0)
                              ? 5.0
                              : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    if (err <= 1.0) {
      t = clipped ? t_target : t + h;
      y = ynew;
      k1 = k7;  // first-same-as-last
      if (clipped) {
        on_sample(next_sample, t, y, k1);
        ++next_sample;
        // a clipped step says nothing about accuracy at the full proposal;
        // keep h_prop as is
      } else {
        h_prop = std::min(h * factor, span);
      }
    } else {
      h_prop = h * factor;  // shrink below the rejected step (clipped or not)
    }
  }
}

}  // namespace cavitylz
