// Two-level basis changes: adiabatic (even/odd) versus diabatic
// (left/right localized) descriptions of one avoided crossing.
#pragma once

namespace cavitylz::basis {

// Rotation angle of the diagonalizing 2x2 orthogonal matrix
// S = [[cos, sin], [-sin, cos]] with the sign convention sin_theta <= 0,
// so that S^T [[E, gap], [gap, -E]] S = diag(+rho, -rho),
// rho = sqrt(E^2 + gap^2).
struct MixingAngle {
  double cos_theta = 1.0;
  double sin_theta = 0.0;
};

// E is the diabatic detuning (J, any sign), gap the coupling Delta (J > 0,
// else DomainError).
[[nodiscard]] MixingAngle mixing_angle(double E, double gap);

// Reconstructs S diag(rho, -rho) S^T and returns the largest entrywise
// deviation from [[E, gap], [gap, -E]].
[[nodiscard]] double similarity_check(double E, double gap);

struct DiabaticParameters {
  double E = 0.0;         // J, magnitude of the detuning
  double omega_av = 0.0;  // rad/s
};

// Inverts the adiabatic pair: E = sqrt((hbar(omega_even - omega_odd)/2)^2
// - gap^2).  DomainError when the half splitting is below the gap or the
// gap is not positive.
[[nodiscard]] DiabaticParameters diabatic_from_adiabatic(double omega_even,
                                                         double omega_odd,
                                                         double gap);

// Entries of the diabatic Hamiltonian in the rotating-carrier form:
// c_RR = hbar omega_av + E, c_LL = hbar omega_av - E, c_RL = gap (all J).
struct DiabaticCoefficients {
  double c_RR = 0.0;
  double c_LL = 0.0;
  double c_RL = 0.0;
};

[[nodiscard]] DiabaticCoefficients diabatic_hamiltonian_coefficients(
    double E, double gap, double omega_av);

}  // namespace cavitylz::basis
