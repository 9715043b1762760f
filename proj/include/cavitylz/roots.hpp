// One-dimensional root finding: uniform bracket scans, Brent refinement and
// a guarded Newton polish used to push transcendental residuals to the
// requested floor.
#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace cavitylz {

using RealFn = std::function<double(double)>;

// Scans [lo, hi] with n_points uniform samples and returns every subinterval
// with a sign change (endpoints where f is exactly zero count as brackets of
// zero width).
[[nodiscard]] std::vector<std::pair<double, double>> scan_sign_changes(
    const RealFn& f, double lo, double hi, int n_points);

// Brent's method on a bracketing interval [a, b] (f(a) * f(b) <= 0).
// Converges to a relative abscissa tolerance rel_tol (floored near machine
// epsilon).  Throws SolverError if the bracket is invalid.
[[nodiscard]] double brent(const RealFn& f, double a, double b,
                           double rel_tol = 1e-15);

// Up to max_steps Newton iterations from x0, keeping the iterate with the
// smallest |f| and refusing steps that leave [lo, hi].
[[nodiscard]] double newton_polish(const RealFn& f, const RealFn& df,
                                   double x0, double lo, double hi,
                                   int max_steps = 2);

}  // namespace cavitylz
