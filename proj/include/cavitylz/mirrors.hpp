// Free-standing transmission of the three central-mirror models, with the
// slab-to-delta correspondence diagnostics.
#pragma once

#include <complex>
#include <vector>

#include "cavitylz/model.hpp"

namespace cavitylz::mirrors {

struct TransmissionResult {
  std::complex<double> t;  // amplitude transmission coefficient
  double T = 0.0;          // power transmission (flux corrected)
  double R = 0.0;          // power reflection; T + R = 1
  double phase = 0.0;      // arg t, continuous from k = 0
};

// t = 1 / (1 - i k alpha / 2)
[[nodiscard]] TransmissionResult delta_transmission(
    double k, const model::DeltaMirror& mirror);

// Fabry-Perot slab of half width M, index n_r:
// T = 1 / (1 + ((n_r^2-1)^2 / 4 n_r^2) sin^2(2 M k n_r)), with the
// transmission phase unwrapped continuously in k.
[[nodiscard]] TransmissionResult slab_transmission(
    double k, const model::SlabMirror& mirror);

// Equivalent delta strength of a thin slab: alpha = 2 M n_r^2.
[[nodiscard]] double thin_slab_equivalent_alpha(const model::SlabMirror&);

// Residual of matching a delta mirror of strength alpha to the slab at
// wavenumber k: k^2 alpha^2 - ((n_r^2-1)^2 / n_r^2) sin^2(2 M k n_r).
[[nodiscard]] double delta_slab_match_residual(double k, double alpha,
                                               const model::SlabMirror&);

// Slab internal resonances k_l = l pi / (2 M n_r) up to k_max (unit
// transmission there).
[[nodiscard]] std::vector<double> resonance_wavenumbers(
    const model::SlabMirror& mirror, double k_max);

// Index step n1 -> n2 with delta strength alpha at the interface:
// t = 2 n1 / (n1 + n2 - i k alpha).  The power transmission carries the
// flux factor n2/n1 so that T + R = 1 holds exactly; T_approx is the
// delta-mirror-like form 1 / (1 + k^2 alpha^2 / (4 n0^2)), n0 = (n1+n2)/2.
struct InterdielectricTransmission {
  TransmissionResult exact;
  double T_approx = 0.0;
};

[[nodiscard]] InterdielectricTransmission interdielectric_transmission(
    double k, const model::InterDielectricDelta& mirror);

// Dispatch over the mirror variant (exact result).
[[nodiscard]] TransmissionResult transmission(double k,
                                              const model::MirrorModel&);

}  // namespace cavitylz::mirrors
