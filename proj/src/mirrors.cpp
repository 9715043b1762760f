// Mirror transmission amplitudes and the slab/delta correspondence.
#include "cavitylz/mirrors.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"

namespace cavitylz::mirrors {

namespace {

constexpr std::complex<double> ci{0.0, 1.0};

}  // namespace

// ─── Delta mirror ───────────────────────────────────────────────────────────

TransmissionResult delta_transmission(double k,
                                      const model::DeltaMirror& mirror) {
  if (mirror.alpha <= 0.0) throw DomainError("delta mirror needs alpha > 0");
  const double half = 0.5 * k * mirror.alpha;
  TransmissionResult out;
  out.t = 1.0 / (1.0 - ci * half);
  out.T = 1.0 / (1.0 + half * half);
  out.R = 1.0 - out.T;
  out.phase = std::atan(half);
  return out;
}

// ─── Dielectric slab ────────────────────────────────────────────────────────

TransmissionResult slab_transmission(double k, const model::SlabMirror& mirror) {
  if (mirror.half_width <= 0.0 || mirror.refractive_index < 1.0)
    throw DomainError("slab mirror needs half_width > 0 and n_r >= 1");
  const double nr = mirror.refractive_index;
  const double theta = 2.0 * mirror.half_width * k * nr;
  const double q = (nr * nr - 1.0) / (2.0 * nr);  // reflection strength
  const double s = std::sin(theta);

  TransmissionResult out;
  out.T = 1.0 / (1.0 + q * q * s * s);

  // arg t = -2 M k + phi_r where tan(phi_r) = C tan(theta), C = (n_r^2+1)/2n_r.
  // The branch of phi_r follows theta continuously: phi_r = m pi + atan(...),
  // m = round(theta / pi), so the phase never jumps as theta crosses pi.
  const double big_c = (nr * nr + 1.0) / (2.0 * nr);
  const double m = std::round(theta / pi);
  const double phi_r =
      m * pi + std::atan(big_c * std::tan(theta - m * pi));
  out.phase = -2.0 * mirror.half_width * k + phi_r;
  out.t = std::sqrt(out.T) * std::exp(ci * out.phase);
  out.R = 1.0 - out.T;
  return out;
}

double thin_slab_equivalent_alpha(const model::SlabMirror& mirror) {
  return 2.0 * mirror.half_width * mirror.refractive_index *
         mirror.refractive_index;
}

double delta_slab_match_residual(double k, double alpha,
                                 const model::SlabMirror& mirror) {
  const double nr = mirror.refractive_index;
  const double s = std::sin(2.0 * mirror.half_width * k * nr);
  const double q2 = (nr * nr - 1.0) * (nr * nr - 1.0) / (nr * nr);
  return k * k * alpha * alpha - q2 * s * s;
}

std::vector<double> resonance_wavenumbers(const model::SlabMirror& mirror,
                                          double k_max) {
  if (k_max <= 0.0) throw DomainError("resonance scan needs k_max > 0");
  const double spacing =
      pi / (2.0 * mirror.half_width * mirror.refractive_index);
  std::vector<double> out;
  for (int l = 1; l * spacing <= k_max; ++l) out.push_back(l * spacing);
  return out;
}

// ─── Interdielectric delta mirror ───────────────────────────────────────────

InterdielectricTransmission interdielectric_transmission(
    double k, const model::InterDielectricDelta& mirror) {
  const double n1 = mirror.n1;
  const double n2 = mirror.n2;
  if (n1 < 1.0 || n2 < 1.0 || mirror.alpha < 0.0)
    throw DomainError("interdielectric mirror needs n1, n2 >= 1 and alpha >= 0");

  InterdielectricTransmission out;
  const std::complex<double> t = 2.0 * n1 / (n1 + n2 - ci * k * mirror.alpha);
  const std::complex<double> r = t - 1.0;
  out.exact.t = t;
  out.exact.T = (n2 / n1) * std::norm(t);  // flux factor keeps T + R = 1
  out.exact.R = std::norm(r);
  out.exact.phase = std::atan(k * mirror.alpha / (n1 + n2));

  const double n0 = 0.5 * (n1 + n2);
  const double x = k * mirror.alpha / (2.0 * n0);
  out.T_approx = 1.0 / (1.0 + x * x);
  return out;
}

TransmissionResult transmission(double k, const model::MirrorModel& mirror) {
  if (const auto* d = std::get_if<model::DeltaMirror>(&mirror))
    return delta_transmission(k, *d);
  if (const auto* s = std::get_if<model::SlabMirror>(&mirror))
    return slab_transmission(k, *s);
  return interdielectric_transmission(
             k, std::get<model::InterDielectricDelta>(mirror))
      .exact;
}

}  // namespace cavitylz::mirrors
