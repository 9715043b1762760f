// Core value types of the double cavity model: geometry, central mirror
// descriptions, and the dimensionless groups of the two-level dynamics.
#pragma once

#include <variant>

namespace cavitylz::model {

// ──────────────────────────────────────────────────────────────────────────
// geometry
// ──────────────────────────────────────────────────────────────────────────

// Cavity on [-L1, L2] with perfect outer walls and a partially transmitting
// mirror at x = 0.  Stored as total length L = L1 + L2 and the signed
// difference delta_L = L1 - L2 (positive when the left half is longer).
struct CavityGeometry {
  double total_length = 0.0;       // L, meters
  double length_difference = 0.0;  // delta_L = L1 - L2, meters

  [[nodiscard]] double left_length() const {
    return 0.5 * (total_length + length_difference);
  }
  [[nodiscard]] double right_length() const {
    return 0.5 * (total_length - length_difference);
  }
  [[nodiscard]] static CavityGeometry from_sides(double l1, double l2) {
    return CavityGeometry{l1 + l2, l1 - l2};
  }
  [[nodiscard]] bool valid() const {
    return total_length > 0.0 && left_length() > 0.0 && right_length() > 0.0;
  }
};

// ──────────────────────────────────────────────────────────────────────────
// central mirror models
// ──────────────────────────────────────────────────────────────────────────

// Dirichlet-delta mirror: dielectric bump alpha * delta(x) on top of the
// background, fully characterized by the length alpha (meters).
struct DeltaMirror {
  double alpha = 0.0;
};

// Finite dielectric slab of half width M (occupying |x| < M) and relative
// refractive index n_r.
struct SlabMirror {
  double half_width = 0.0;        // M, meters
  double refractive_index = 1.0;  // n_r, dimensionless
};

// Delta-like index step between two media n1 (left) and n2 (right), with an
// additional delta strength alpha at the interface.
struct InterDielectricDelta {
  double alpha = 0.0;  // meters
  double n1 = 1.0;
  double n2 = 1.0;
};

using MirrorModel = std::variant<DeltaMirror, SlabMirror, InterDielectricDelta>;

// ──────────────────────────────────────────────────────────────────────────
// dimensionless groups
// ──────────────────────────────────────────────────────────────────────────

// theta_tilde = hbar * theta / gap^2 controls the sweep speed, delta_ratio
// r = gap / (hbar * omega_av) controls how far the dynamics sits from the
// two-level reduction.  tau = gap * t / hbar is the dimensionless time.
struct DimensionlessGroups {
  double theta_tilde = 0.0;
  double delta_ratio = 0.0;

  [[nodiscard]] double tau_from_time(double t_seconds, double gap_joule,
                                     double hbar_js) const {
    return gap_joule * t_seconds / hbar_js;
  }
};

// Builds the dimensionless groups from the gap energy (J), the diabatic
// sweep rate theta = d(2E)/dt (J/s) and the average angular frequency
// (rad/s).  Throws DomainError on gap <= 0, omega_av <= 0 or theta < 0.
[[nodiscard]] DimensionlessGroups derive_dimensionless(double gap,
                                                       double sweep_rate,
                                                       double omega_av);

}  // namespace cavitylz::model
