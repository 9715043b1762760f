#include "cavitylz/basis.hpp"

#include <algorithm>
#include <cmath>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"

namespace cavitylz::basis {

MixingAngle mixing_angle(double E, double gap) {
  if (!(gap > 0.0)) {
    throw DomainError("mixing_angle: gap must be positive");
  }
  const double rho = std::hypot(E, gap);
  MixingAngle angle;
  angle.cos_theta = std::sqrt((rho + E) / (2.0 * rho));
  angle.sin_theta = -std::sqrt((rho - E) / (2.0 * rho));
  return angle;
}

double similarity_check(double E, double gap) {
  const auto [c, s] = mixing_angle(E, gap);
  const double rho = std::hypot(E, gap);
  // S diag(rho, -rho) S^T with S = [[c, s], [-s, c]]
  const double h00 = rho * (c * c - s * s);
  const double h01 = rho * (-2.0 * c * s);
  const double h11 = rho * (s * s - c * c);
  double err = std::abs(h00 - E);
  err = std::max(err, std::abs(h01 - gap));
  err = std::max(err, std::abs(h11 + E));
  // orthogonality of S itself
  err = std::max(err, std::abs(c * c + s * s - 1.0));
  return err;
}

DiabaticParameters diabatic_from_adiabatic(double omega_even,
                                           double omega_odd, double gap) {
  if (!(gap > 0.0)) {
    throw DomainError("diabatic_from_adiabatic: gap must be positive");
  }
  const double half_split = 0.5 * hbar * (omega_even - omega_odd);
  if (std::abs(half_split) < gap) {
    throw DomainError("diabatic_from_adiabatic: adiabatic splitting below "
                      "the gap");
  }
  DiabaticParameters out;
  out.E = std::sqrt(half_split * half_split - gap * gap);
  out.omega_av = 0.5 * (omega_even + omega_odd);
  return out;
}

DiabaticCoefficients diabatic_hamiltonian_coefficients(double E, double gap,
                                                       double omega_av) {
  if (!(gap > 0.0) || !(omega_av > 0.0)) {
    throw DomainError("diabatic_hamiltonian_coefficients: gap and omega_av "
                      "must be positive");
  }
  DiabaticCoefficients c;
  c.c_RR = hbar * omega_av + E;
  c.c_LL = hbar * omega_av - E;
  c.c_RL = gap;
  return c;
}

}  // namespace cavitylz::basis
