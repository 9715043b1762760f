#include "cavitylz/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cavitylz/errors.hpp"

namespace cavitylz {

std::vector<std::pair<double, double>> scan_sign_changes(const RealFn& f,
                                                         double lo, double hi,
                                                         int n_points) {
  std::vector<std::pair<double, double>> brackets;
  if (n_points < 2 || !(hi > lo)) {
    return brackets;
  }
  const double step = (hi - lo) / (n_points - 1);
  double x_prev = lo;
  double f_prev = f(x_prev);
  for (int i = 1; i < n_points; ++i) {
    const double x = lo + i * step;
    const double fx = f(x);
    if (f_prev == 0.0) {
      brackets.emplace_back(x_prev, x_prev);
    } else if (std::signbit(f_prev) != std::signbit(fx)) {
      brackets.emplace_back(x_prev, x);
    }
    x_prev = x;
    f_prev = fx;
  }
  if (f_prev == 0.0) {
    brackets.emplace_back(x_prev, x_prev);
  }
  return brackets;
}

double brent(const RealFn& f, double a, double b, double rel_tol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) {
    throw SolverError("brent: interval does not bracket a root", a, b);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  rel_tol = std::max(rel_tol, 2.0 * eps);

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * rel_tol * std::abs(b);
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant candidate
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += std::copysign(tol1, xm);
    }
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

double newton_polish(const RealFn& f, const RealFn& df, double x0, double lo,
                     double hi, int max_steps) {
  double best_x = x0;
  double best_f = std::abs(f(x0));
  double x = x0;
  for (int i = 0; i < max_steps; ++i) {
    const double fx = f(x);
    const double dfx = df(x);
    if (dfx == 0.0) break;
    const double x_next = x - fx / dfx;
    if (!(x_next >= lo && x_next <= hi) || !std::isfinite(x_next)) break;
    x = x_next;
    const double fn = std::abs(f(x));
    if (fn < best_f) {
      best_f = fn;
      best_x = x;
    } else {
      break;
    }
  }
  return best_x;
}

}  // namespace cavitylz
