#!/usr/bin/env python3
"""Independent cross-check for the delta-mirror cavity mode solver.

Scans the bounded form of the transcendental equation for the global wave
numbers on a fine grid, polishes roots with Brent's method, and prints the
reference values that are frozen into the C++ unit tests. Everything runs in
units where the total cavity length is 1; wave numbers scale as 1/L.
"""

import numpy as np
from scipy.optimize import brentq

C = 299792458.0
HBAR = 1.054571817e-34


def residual(k, L, dL, alpha):
    # cos(k dL) - cos(k L) = 2 sin(k L) / (alpha k), rearranged to = 0
    return np.cos(k * dL) - np.cos(k * L) - 2.0 * np.sin(k * L) / (alpha * k)


def solve_pair(L, dL, alpha, n, span=0.5, grid=200001):
    """Both roots in the window (2pi(n-span)/L, 2pi(n+span)/L)."""
    k0 = 2.0 * np.pi * n / L
    lo = 2.0 * np.pi * (n - span) / L
    hi = 2.0 * np.pi * (n + span) / L
    ks = np.linspace(lo, hi, grid)
    fs = residual(ks, L, dL, alpha)
    roots = []
    for i in range(len(ks) - 1):
        if fs[i] == 0.0:
            roots.append(ks[i])
        elif fs[i] * fs[i + 1] < 0.0:
            roots.append(brentq(residual, ks[i], ks[i + 1],
                                args=(L, dL, alpha), xtol=1e-15, rtol=1e-15))
    roots = sorted(set(roots))
    # keep the two nearest k0
    roots.sort(key=lambda r: abs(r - k0))
    pair = sorted(roots[:2])
    return pair, roots


def analytic_gap_params(n, L, alpha):
    delta_tilde = (np.pi * n / L) / (1.0 + n * n * np.pi**2 * alpha / L)  # Delta/(hbar c)
    gamma_tilde = 2.0 * delta_tilde * 2.0 * np.pi**3 * n**3 * alpha / L**4  # gamma/(hbar c)^2
    return delta_tilde, gamma_tilde


def main():
    np.set_printoptions(precision=15)
    L = 1.0

    print("== case A: alpha/L = 0.01, n = 128, dL = 0 (gap calibration) ==")
    alpha, n = 0.01, 128
    pair, _ = solve_pair(L, 0.0, alpha, n)
    k0 = 2.0 * np.pi * n / L
    dt, gt = analytic_gap_params(n, L, alpha)
    print(f"  k0          = {k0:.12f}")
    print(f"  k_odd       = {pair[0]:.12f}   (expect exactly k0)")
    print(f"  k_even      = {pair[1]:.12f}")
    print(f"  gap numeric = {pair[1] - pair[0]:.12e}")
    print(f"  gap analytic 2*Delta/(hbar c) = {2*dt:.12e}")
    print(f"  rel diff    = {abs(pair[1]-pair[0]-2*dt)/(2*dt):.3e}")
    # SI: L = 1e-4 m -> Delta/hbar = c * delta_tilde / L_SI
    L_SI = 1e-4
    print(f"  Delta/hbar (SI, L=1e-4 m) = {C * dt / L_SI:.6e}  (paper-scale 7e11)")
    print(f"  gamma_tilde = {gt:.12e}  (units 1/L^3... dimensionless in L=1)")

    print("\n== case B: quadratic approximation window (alpha/L = 0.01, n = 128) ==")
    width = dt / np.sqrt(gt)  # gap-equivalent dL width
    print(f"  gap-equivalent width dL_w = {width:.6e} L")
    for f in (0.05, 0.1, 0.2):
        dL = f * width
        pair, _ = solve_pair(L, dL, alpha, n)
        ke_q = k0 + 2 * dt / (2) * 0 + (2*np.pi*n/L)/(1.0 + n*n*np.pi**2*alpha/L) + 2*np.pi**3*n**3*alpha*dL**2/L**4
        ko_q = k0 - 2*np.pi**3*n**3*alpha*dL**2/L**4
        gap = pair[1] - pair[0]
        print(f"  dL = {f:4.2f} w: exact (ke,ko)=({pair[1]:.9f},{pair[0]:.9f})"
              f" quad ({ke_q:.9f},{ko_q:.9f}) err/gap=({abs(pair[1]-ke_q)/gap:.2e},{abs(pair[0]-ko_q)/gap:.2e})")

    print("\n== case C: LZ-form fit from synthetic + from solved spectrum ==")
    # synthetic: known (dt, gt); samples on +-2 widths
    dls = np.linspace(-2 * width, 2 * width, 11)
    s = np.sqrt(dt**2 + gt * dls**2)
    # linear LSQ on s^2 = dt^2 + gt * dL^2
    Amat = np.vstack([np.ones_like(dls), dls**2]).T
    coef, *_ = np.linalg.lstsq(Amat, s**2, rcond=None)
    print(f"  synthetic recovered dt = {np.sqrt(coef[0]):.12e} (true {dt:.12e})")
    print(f"  synthetic recovered gt = {coef[1]:.12e} (true {gt:.12e})")
    # from solved roots
    ke, ko = [], []
    for dL in dls:
        pair, _ = solve_pair(L, dL, alpha, n)
        ko.append(pair[0]); ke.append(pair[1])
    ke, ko = np.array(ke), np.array(ko)
    s2 = ((ke - ko) / 2.0)**2
    coef, *_ = np.linalg.lstsq(Amat, s2, rcond=None)
    print(f"  solved-spectrum fit dt = {np.sqrt(coef[0]):.12e}  rel to analytic {abs(np.sqrt(coef[0])-dt)/dt:.3e}")
    print(f"  solved-spectrum fit gt = {coef[1]:.12e}  rel to analytic {abs(coef[1]-gt)/gt:.3e}")

    print("\n== case D: Fig-3-style pair at dL = 2e-4 L (alpha/L = 0.01, n = 128) ==")
    dL = 2e-4
    pair, _ = solve_pair(L, dL, alpha, n)
    print(f"  k_odd = {pair[0]:.12f}  k_even = {pair[1]:.12f}")
    half = (pair[1] - pair[0]) / 2.0
    E_tilde = np.sqrt(half**2 - dt**2)  # E/(hbar c) in 1/L units
    print(f"  E/(hbar c)    = {E_tilde:.10e}")
    print(f"  sqrt(gt)*dL   = {np.sqrt(gt)*dL:.10e}   rel diff {abs(E_tilde-np.sqrt(gt)*dL)/(np.sqrt(gt)*dL):.3e}")

    print("\n== case E: localized limit, alpha/L = 1000, n = 128, dL = 3e-4 ==")
    for a in (1.0, 10.0, 1000.0):
        pair, _ = solve_pair(L, 3e-4, a, n)
        kl = 2*np.pi*n/(L + 3e-4); kr = 2*np.pi*n/(L - 3e-4)
        print(f"  alpha={a:7.1f}: |k_odd-k_left|={abs(pair[0]-kl):.3e} |k_even-k_right|={abs(pair[1]-kr):.3e}")

    print("\n== case F: alpha/L = 0.3, n = 128 roots for transfer tests ==")
    alpha = 0.3
    for dL in (0.0, 0.6e-4, 1e-4, 4e-4, 1.95084e-3):
        pair, _ = solve_pair(L, dL, alpha, n)
        print(f"  dL = {dL:.6e} L: k_odd = {pair[0]:.12f}  k_even = {pair[1]:.12f}")
    dt3, gt3 = analytic_gap_params(n, L, 0.3)
    print(f"  analytic Delta/(hbar c) = {dt3:.10e}, gamma_tilde = {gt3:.6e}")
    print(f"  SI Delta/hbar (L=1e-4)  = {C*dt3/1e-4:.6e}")

    print("\n== case G: waveguide mapping check (n0=1.5, eta=0.001, alpha=0.01, n=128) ==")
    n0, eta, alpha_w = 1.5, 0.001, 0.01
    # direct residual of the approximate waveguide equation, bounded form:
    # cos(eta k L) - cos(n0 k L) - 2 n0 sin(n0 k L)/(alpha k) = 0
    def wres(k):
        return np.cos(eta * k * L) - np.cos(n0 * k * L) - 2.0 * n0 * np.sin(n0 * k * L) / (alpha_w * k)
    k0w = 2.0 * np.pi * n / (n0 * L)
    ks = np.linspace(2*np.pi*(n-0.5)/(n0*L), 2*np.pi*(n+0.5)/(n0*L), 200001)
    fs = wres(ks)
    roots = []
    for i in range(len(ks) - 1):
        if fs[i] * fs[i+1] < 0:
            roots.append(brentq(wres, ks[i], ks[i+1], xtol=1e-15, rtol=1e-15))
    roots.sort(key=lambda r: abs(r - k0w))
    direct = sorted(roots[:2])
    # mapped: delta cavity with L_eff = n0 L, dL_eff = eta L, alpha_eff = alpha/n0
    pair, _ = solve_pair(n0 * L, eta * L, alpha_w / n0, n)
    print(f"  direct  (k_odd,k_even) = ({direct[0]:.12f}, {direct[1]:.12f})")
    print(f"  mapped  (k_odd,k_even) = ({pair[0]:.12f}, {pair[1]:.12f})")
    print(f"  diffs = {abs(direct[0]-pair[0]):.3e}, {abs(direct[1]-pair[1]):.3e}")
    # complete-transfer index swing for lambda = 780 nm, Lg = 100 um
    lam, Lg = 780e-9, 100e-6
    k_si = 2.0 * np.pi / lam
    eta_needed = np.pi / (k_si * Lg)
    print(f"  eta for complete transfer (pi/(kL)) = {eta_needed:.6e}  (paper-scale 0.004)")

    print("\n== case H: near-degenerate fallback threshold (alpha/L = 1e6) ==")
    dt_h, _ = analytic_gap_params(128, 1.0, 1e6)
    print(f"  gap = {2*dt_h:.3e} (1/L); 10*tol*k = {10*1e-12*2*np.pi*128:.3e}")


if __name__ == "__main__":
    main()
