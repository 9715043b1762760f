#include "cavitylz/exponential_integral.hpp"

#include <cmath>
#include <limits>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"

namespace cavitylz::dynamics {

namespace {

constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Power series Ei(z) = gamma + log(z) + sum_k z^k / (k * k!).  The largest
// term is ~e^|z|/|z|, so the alternating-cancellation loss is bounded by
// e^(|z| - Re z); the caller only enters here when that factor is <= e^9.2,
// keeping at least ~11 significant digits.
std::complex<double> ei_series(std::complex<double> z, bool principal_value) {
  std::complex<double> log_term =
      principal_value ? std::complex<double>(std::log(std::abs(z)), 0.0)
                      : std::log(z);
  std::complex<double> sum = euler_gamma + log_term;
  std::complex<double> term(1.0, 0.0);
  for (int k = 1; k <= 4000; ++k) {
    term *= z / static_cast<double>(k);
    const std::complex<double> contrib = term / static_cast<double>(k);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum) && k > 4) {
      return sum;
    }
  }
  return sum;
}

// E1(w) for Re w > 0 (or w off the negative real axis) via the continued
// fraction e^-w / (w + 1 - 1/(w + 3 - 4/(w + 5 - ...))), modified Lentz.
std::complex<double> e1_continued_fraction(std::complex<double> w) {
  const double tiny = 1e-290;
  std::complex<double> b = w + 1.0;
  std::complex<double> c(1.0 / tiny, 0.0);
  std::complex<double> d = 1.0 / b;
  std::complex<double> f = d;
  for (int j = 1; j <= 1000; ++j) {
    const double a = -static_cast<double>(j) * static_cast<double>(j);
    b += 2.0;
    d = b + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-w) * f;
}

}  // namespace

std::complex<double> complex_exponential_integral(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw DomainError("complex_exponential_integral: z = 0 is singular");
  }
  if (z.real() >= 700.0) {
    throw DomainError(
        "complex_exponential_integral: Re z >= 700 overflows double");
  }
  const double r = std::abs(z);
  const bool on_negative_axis = (z.imag() == 0.0 && z.real() < 0.0);

  // Series region: small |z|, or arguments near the positive real direction
  // where the cancellation factor e^(|z| - Re z) stays harmless.
  if (r <= 6.0 || (r - z.real()) <= 9.2) {
    return ei_series(z, on_negative_axis);
  }

  // Elsewhere use Ei(z) = -E1(-z) + i pi sign(Im z); the region map keeps
  // w = -z away from the negative real axis of the continued fraction.
  const std::complex<double> e1 = e1_continued_fraction(-z);
  double sign = 0.0;
  if (z.imag() > 0.0) sign = 1.0;
  if (z.imag() < 0.0) sign = -1.0;
  return -e1 + std::complex<double>(0.0, sign * pi);
}

}  // namespace cavitylz::dynamics
