// Complex exponential integral Ei(z) on the principal branch, accurate to
// better than 1e-10 relative error away from the underflow regime.  Exact
// negative real arguments return the real principal value.
#pragma once

#include <complex>

namespace cavitylz::dynamics {

// Throws DomainError for z == 0 (logarithmic singularity) and for
// Re z >= 700 (the result and the working sums overflow double there).
[[nodiscard]] std::complex<double> complex_exponential_integral(
    std::complex<double> z);

}  // namespace cavitylz::dynamics
