// Eigenmode solving for the double cavity: localized references, exact
// transcendental pairs for the delta / slab / waveguide mirror models,
// quadratic approximations, avoided-crossing parameter extraction and
// displacement sweeps.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cavitylz/model.hpp"

namespace cavitylz::mode_solver {

// ──────────────────────────────────────────────────────────────────────────
// types
// ──────────────────────────────────────────────────────────────────────────

enum class Branch { even, odd, localized_left, localized_right };

[[nodiscard]] const char* branch_name(Branch b);

// Exact wavenumber pair of crossing index n at one displacement.  Branch
// labels are the mode parities at delta_L = 0, carried along the branch by
// continuity.  For the delta mirror k_even >= k_odd always; a slab mirror
// can invert the ordering when sin(2 M k n_r) < 0 (effective negative
// mirror strength between consecutive resonances).
struct ModeBranchPair {
  int index = 0;             // longitudinal index n
  double k_even = 0.0;       // 1/m
  double k_odd = 0.0;        // 1/m
  double residual_even = 0.0;
  double residual_odd = 0.0;
  double delta_L = 0.0;      // m
};

// Avoided-crossing parameters in energy units: half gap Delta (J), curvature
// gamma (J^2/m^2) of E^2 = Delta^2 + gamma * delta_L^2, optional sweep rate
// theta = d(2E)/dt (J/s, NaN when no sweep is defined) and the average
// angular frequency (rad/s).
struct LZParameters {
  double gap = 0.0;
  double curvature = 0.0;
  double sweep_rate = 0.0;
  double omega_av = 0.0;
};

struct SpectrumRow {
  double delta_L = 0.0;  // m
  int n = 0;
  Branch branch = Branch::even;
  double k = 0.0;        // 1/m
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;
};

// One crossing sampled at one displacement, input to the spectrum fit.
struct SpectrumSample {
  double delta_L = 0.0;
  double k_even = 0.0;
  double k_odd = 0.0;
};

struct OptimalDisplacement {
  double k_star = 0.0;                 // 1/m
  double delta_L_star = 0.0;           // m, closed form (arccos)
  double delta_L_star_expanded = 0.0;  // m, first-order expansion
};

struct SlabPairResult {
  ModeBranchPair pair;
  bool near_resonance = false;         // window did not contain exactly 2 roots
  std::vector<double> window_roots;    // every root found in the scan window
};

enum class Parity { even, odd };

// ──────────────────────────────────────────────────────────────────────────
// transcendental residuals (bounded forms, O(1) away from k = 0)
// ──────────────────────────────────────────────────────────────────────────

// cos(k dL) - cos(k L) - 2 sin(k L) / (alpha k)
[[nodiscard]] double delta_mirror_residual(double k, double L, double delta_L,
                                           double alpha);
[[nodiscard]] double delta_mirror_residual_derivative(double k, double L,
                                                      double delta_L,
                                                      double alpha);

// Finite slab of half width M and index n_r; normalized by n_r^2.
[[nodiscard]] double slab_mirror_residual(double k,
                                          const model::CavityGeometry& geom,
                                          const model::SlabMirror& mirror);

// Parity factors of the slab residual at delta_L = 0; the residual equals
// -2 F_odd F_even / n_r^2 there, so the vanishing factor names the parity.
[[nodiscard]] double slab_parity_factor_odd(double k,
                                            const model::CavityGeometry& geom,
                                            const model::SlabMirror& mirror);
[[nodiscard]] double slab_parity_factor_even(double k,
                                             const model::CavityGeometry& geom,
                                             const model::SlabMirror& mirror);

// Weakly asymmetric single-mode waveguide with indices n0 +- eta coupled by
// a delta mirror of strength alpha: cos(eta k L) - cos(n0 k L)
// - 2 n0 sin(n0 k L) / (alpha k)
[[nodiscard]] double waveguide_residual(double k, double L, double n0,
                                        double eta, double alpha);

// ──────────────────────────────────────────────────────────────────────────
// solvers and parameter extraction
// ──────────────────────────────────────────────────────────────────────────

// (k_left, k_right) = 2 pi n / (L +- delta_L), the perfectly-decoupled
// references the exact branches approach for a strong mirror.
[[nodiscard]] std::pair<double, double> localized_wavenumbers(
    const model::CavityGeometry& geom, int n);

// Exact pair of crossing n for the delta mirror.  tol bounds the residual
// magnitude at the returned roots.  Throws SolverError (carrying the scanned
// interval) when bracketing fails, DomainError for alpha <= 0 or invalid
// geometry.
[[nodiscard]] ModeBranchPair solve_global_pair(
    const model::CavityGeometry& geom, const model::DeltaMirror& mirror, int n,
    double tol = 1e-12);

// Quadratic (small-displacement) approximations: returns (k_even, k_odd).
[[nodiscard]] std::pair<double, double> approx_wavenumbers_quadratic(
    int n, double L, double alpha, double delta_L);

// Closed-form avoided-crossing parameters of crossing n (delta mirror).
[[nodiscard]] LZParameters lz_fit_parameters(int n, double L, double alpha);

// Sweep rate theta = d(2E)/dt for a mirror moving at speed v (so that
// d(delta_L)/dt = 2 v) on a crossing of given curvature.
[[nodiscard]] double sweep_rate_from_speed(double curvature, double v);

// Large-n shortcut theta ~ 8 pi hbar c n v / L^2.
[[nodiscard]] double approx_sweep_rate(int n, double L, double v);

// Least-squares extraction of (gap, curvature, omega_av) from >= 5 sampled
// pairs via s^2 = (gap/hbar c)^2 + (curvature/(hbar c)^2) delta_L^2 with
// s = (k_even - k_odd)/2.  Inputs in SI (1/m, m).  Throws FitError on
// degenerate sample sets or an unusable fit.
[[nodiscard]] LZParameters fit_lz_from_spectrum(
    std::span<const SpectrumSample> samples);

// Displacement maximizing the left/right amplitude imbalance on the branch
// of the requested parity.  Throws DomainError when the arccos argument
// leaves [-1, 1] (no such displacement in this regime).
[[nodiscard]] OptimalDisplacement optimal_displacement(
    int n, double L, double alpha, Parity parity = Parity::even);

// Exact pair for the finite slab mirror.  Near a slab internal resonance
// the scan window holds a pi-spaced ladder instead of an isolated pair; all
// window roots are returned and the flag is raised.
[[nodiscard]] SlabPairResult solve_finite_mirror_pair(
    const model::CavityGeometry& geom, const model::SlabMirror& mirror, int n,
    double tol = 1e-12);

// Exact pair for the asymmetric waveguide (indices n0 +- eta, coupling
// delta strength alpha); maps onto the delta-mirror problem with
// L -> n0 L, delta_L -> eta L, alpha -> alpha / n0.
[[nodiscard]] ModeBranchPair solve_waveguide_pair(double L, double n0,
                                                  double eta, double alpha,
                                                  int n, double tol = 1e-12);

// Index offset eta at which the waveguide asymmetry spans the full distance
// 2 delta_L* ~ pi / k between the two transfer extrema: eta = lambda / (2 L).
[[nodiscard]] double complete_transfer_index_offset(double wavelength,
                                                    double L);

// ──────────────────────────────────────────────────────────────────────────
// displacement sweeps
// ──────────────────────────────────────────────────────────────────────────

struct SweepRequest {
  double total_length = 0.0;  // L, meters
  model::MirrorModel mirror;  // delta or slab
  double delta_L_min = 0.0;
  double delta_L_max = 0.0;
  int steps = 2;              // grid points, >= 1 (1 only if min == max)
  int n_min = 1;
  int n_max = 1;
  double tol = 1e-12;
  int jobs = 1;
  bool include_localized = true;
};

// Solves every crossing on the displacement grid by continuation from the
// smallest |delta_L| outward (local re-bracketing, step halving on loss of
// track), appends the localized reference rows, and returns rows sorted by
// (delta_L, n, branch).
[[nodiscard]] SpectrumTable sweep_spectrum(const SweepRequest& request);

}  // namespace cavitylz::mode_solver
