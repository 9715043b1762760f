#!/usr/bin/env python3
"""Independent cross-check for transfer-ratio extrema.

Tracks the upper (even) global-mode branch by continuation in the cavity
length difference, evaluates the side-amplitude ratio along it, and locates
the maximum by brute-force scan plus golden-section refinement. Also polishes
the stationary-wave-number equation and evaluates the optimal-displacement
closed forms frozen into the C++ tests. Units: total length L = 1.
"""

import numpy as np
from scipy.optimize import brentq, minimize_scalar

L = 1.0


def residual(k, dL, alpha):
    return np.cos(k * dL) - np.cos(k * L) - 2.0 * np.sin(k * L) / (alpha * k)


def continue_root(k_prev, dL, alpha, halfspan):
    lo, hi = k_prev - halfspan, k_prev + halfspan
    ks = np.linspace(lo, hi, 4001)
    fs = residual(ks, dL, alpha)
    roots = []
    for i in range(len(ks) - 1):
        if fs[i] * fs[i + 1] < 0:
            roots.append(brentq(residual, ks[i], ks[i + 1], args=(dL, alpha),
                                xtol=1e-15, rtol=1e-15))
    if not roots:
        raise RuntimeError(f"no root near {k_prev} at dL={dL}")
    roots.sort(key=lambda r: abs(r - k_prev))
    return roots[0]


def ratio_B_over_A(k, dL):
    return -np.sin(k * (L + dL) / 2.0) / np.sin(k * (L - dL) / 2.0)


def even_root_at(dL, alpha, n, k_seed=None):
    """Even root by continuation from dL=0 upward."""
    k0 = 2 * np.pi * n / L
    # at dL=0 the even root: tan(kL/2)=2/(alpha k) near 2 pi n
    k = brentq(lambda kk: residual(kk, 0.0, alpha), k0 + 1e-9, k0 + np.pi / 2,
               xtol=1e-15, rtol=1e-15)
    steps = max(8, int(abs(dL) / (L / (8 * n))) + 1)
    for d in np.linspace(0.0, dL, steps + 1)[1:]:
        k = continue_root(k, d, alpha, halfspan=np.pi / (2 * L))
    return k


def main():
    alpha, n = 0.3, 128
    print("== even-branch |B/A| scan, alpha/L = 0.3, n = 128 ==")
    dls = np.linspace(1e-5, 4e-3, 1200)
    k = even_root_at(dls[0], alpha, n)
    best = (0.0, 0.0, 0.0)
    table = []
    for d in dls:
        k = continue_root(k, d, alpha, halfspan=np.pi / (2 * L) * 0.2)
        r = abs(ratio_B_over_A(k, d))
        table.append((d, k, r))
        if r > best[2]:
            best = (d, k, r)
    print(f"  discrete max |B/A| = {best[2]:.6f} at dL = {best[0]:.8e}, k = {best[1]:.10f}")

    # golden refinement around the discrete max
    i0 = np.argmax([t[2] for t in table])
    lo, hi = table[max(0, i0 - 2)][0], table[min(len(table) - 1, i0 + 2)][0]

    def neg_ratio(d):
        kk = even_root_at(d, alpha, n)
        return -abs(ratio_B_over_A(kk, d))

    res = minimize_scalar(neg_ratio, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-12})
    d_star, r_star = res.x, -res.fun
    k_at = even_root_at(d_star, alpha, n)
    print(f"  refined  max |B/A| = {r_star:.6f} at dL* = {d_star:.10e}, k = {k_at:.10f}")
    print(f"  approx 2 n pi alpha / L = {2 * n * np.pi * alpha / L:.6f}")

    print("\n== ratio at dL = 1e-4 L (even branch) ==")
    d = 1e-4
    kk = even_root_at(d, alpha, n)
    print(f"  k_even = {kk:.12f}  |B/A| = {abs(ratio_B_over_A(kk, d)):.6f}"
          f"  A/B = {1.0/ratio_B_over_A(kk, d):.8e}")
    print(f"  odd branch check: ", end="")
    # odd root: continuation downward from k0
    k0 = 2 * np.pi * n / L
    ko = brentq(lambda q: residual(q, d, alpha), k0 - np.pi / 2, k0 - 1e-12 if residual(k0-1e-12,d,alpha)*residual(k0-np.pi/2,d,alpha)<0 else k0+0.001, xtol=1e-15, rtol=1e-15)
    print(f"k_odd = {ko:.12f}  |A/B| = {abs(1.0/ratio_B_over_A(ko, d)):.6f}")

    print("\n== stationary wave number equation ==")
    a = alpha / L

    def kstar_eq(x):  # x = k L
        return np.cos(x) + (np.sin(x) / x) * (2.0 + a) / a

    x_first = (4 * n + 1) * np.pi / 2 + (2.0 + a) / (2 * np.pi * n * a)
    x_pol = brentq(kstar_eq, x_first - 0.05, x_first + 0.05, xtol=1e-15, rtol=1e-15)
    print(f"  first-order x* = {x_first:.10f}")
    print(f"  polished    x* = {x_pol:.10f}")
    kstar = x_pol / L
    arg = 2.0 * np.sin(x_pol) / (alpha * kstar) + np.cos(x_pol)
    dstar_exact = np.arccos(arg) / kstar
    dstar_exp = (np.pi / 2 - 2.0 / (alpha * kstar) + x_pol - (4 * n + 1) * np.pi / 2) / kstar
    print(f"  arccos arg = {arg:.10e}")
    print(f"  dL* (arccos form)   = {dstar_exact:.10e}")
    print(f"  dL* (expanded form) = {dstar_exp:.10e}")
    print(f"  scan dL*            = {d_star:.10e}  -> ratio of scan max loc to arccos form {d_star/dstar_exact:.6f}")

    print("\n== odd-side stationary point (parity check) ==")
    x_first_o = (4 * n - 1) * np.pi / 2 + (2.0 + a) / (2 * np.pi * n * a)
    x_pol_o = brentq(kstar_eq, x_first_o - 0.05, x_first_o + 0.05, xtol=1e-15, rtol=1e-15)
    print(f"  odd polished x* = {x_pol_o:.10f}  (vs (4n-1)pi/2 = {(4*n-1)*np.pi/2:.10f})")

    print("\n== weak-mirror case alpha/L = 0.01 (approx-vs-exact 5% check) ==")
    for a2 in (0.05, 0.1, 0.3):
        dls2 = np.linspace(1e-5, 0.15 * a2 if a2 < 0.2 else 4e-3, 900)
        kk = even_root_at(dls2[0], a2, n)
        mx = 0.0
        for d2 in dls2:
            kk = continue_root(kk, d2, a2, halfspan=np.pi / (2 * L) * 0.2)
            r2 = abs(ratio_B_over_A(kk, d2))
            mx = max(mx, r2)
        approx = 2 * n * np.pi * a2 / L
        print(f"  alpha/L={a2:5.2f}: scan max = {mx:9.4f}, approx = {approx:9.4f}, rel = {abs(mx-approx)/mx:.4f}")


if __name__ == "__main__":
    main()
