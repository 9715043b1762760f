#!/usr/bin/env python3
"""Independent cross-check for the finite-mirror (slab) spectrum and the
mirror transmission formulas.

Part 1 solves the slab transcendental equation on fine grids for the two
parameter sets used in the C++ tests (thin matched mirror; resonant mirror)
and prints gaps, parities, and branch connectivity through a mirror
resonance. Part 2 validates the closed-form transmission amplitudes against
a brute-force boundary-condition solve. Units: vacuum length L - 2M = 1 for
part 1.
"""

import numpy as np
from scipy.optimize import brentq

C = 299792458.0


# ---------------------------------------------------------------- slab modes
def slab_residual(k, Lfull, dL, M, nr):
    up = k * (Lfull / 2.0 - M + dL / 2.0)
    um = k * (Lfull / 2.0 - M - dL / 2.0)
    s2 = np.sin(2.0 * nr * k * M)
    c2 = np.cos(2.0 * nr * k * M)
    eq = (-nr * nr * s2 * np.sin(up) * np.sin(um)
          + nr * c2 * np.sin(k * (Lfull - 2.0 * M))
          + s2 * np.cos(up) * np.cos(um))
    return eq / (nr * nr)


def roots_in(f, lo, hi, grid=120001):
    ks = np.linspace(lo, hi, grid)
    fs = f(ks)
    out = []
    for i in range(len(ks) - 1):
        if fs[i] == 0.0:
            out.append(ks[i])
        elif fs[i] * fs[i + 1] < 0:
            out.append(brentq(f, ks[i], ks[i + 1], xtol=1e-15, rtol=1e-15))
    return sorted(out)


def delta_gap(alpha, n):
    return 2.0 * (np.pi * n) / (1.0 + n * n * np.pi**2 * alpha)


def main():
    print("== part 1a: matched thin slab vs delta reference (n = 128) ==")
    M = 0.001334
    nr2 = 0.1707 / (2.0 * M)
    nr = np.sqrt(nr2)
    Lfull = 1.0 + 2.0 * M
    alpha_d = 0.009735
    n = 128
    k0 = 2.0 * np.pi * n  # vacuum length 1
    print(f"  nr = {nr:.10f} (nr^2 = {nr2:.6f}), L_full = {Lfull}")
    f0 = lambda ks: slab_residual(ks, Lfull, 0.0, M, nr)
    rts = roots_in(f0, k0 - np.pi, k0 + np.pi)
    rts.sort(key=lambda r: abs(r - k0))
    pair = sorted(rts[:2])
    print(f"  slab pair at dL=0: ({pair[0]:.10f}, {pair[1]:.10f}) gap = {pair[1]-pair[0]:.8e}")
    # parity of the two roots via the factorized dL=0 conditions
    for kk in pair:
        u = kk * (Lfull / 2.0 - M)
        s1, c1 = np.sin(nr * kk * M), np.cos(nr * kk * M)
        f_odd = nr * np.sin(u) * c1 + np.cos(u) * s1
        f_even = nr * np.sin(u) * s1 - np.cos(u) * c1
        tag = "odd " if abs(f_odd) < abs(f_even) else "even"
        print(f"    k = {kk:.8f}: |F_odd| = {abs(f_odd):.2e}, |F_even| = {abs(f_even):.2e} -> {tag}")
    gd = delta_gap(alpha_d, n)
    print(f"  delta-reference gap (alpha = {alpha_d}) = {gd:.8e}")
    print(f"  gap ratio slab/delta = {(pair[1]-pair[0])/gd:.6f}")
    print(f"  center offset slab-delta: {0.5*(pair[0]+pair[1]) - (k0 + 0.5*gd*0):.6e} (slab center - k0)")
    # transmission comparison at k0
    Td = 1.0 / (1.0 + (k0 * alpha_d / 2.0)**2)
    Ts = 1.0 / (1.0 + (nr2 - 1.0)**2 / (4.0 * nr2) * np.sin(2.0 * M * k0 * nr)**2)
    print(f"  T_delta(k0) = {Td:.8f}   T_slab(k0) = {Ts:.8f}")

    # gap at a nonzero dL for the same pair (LZ-form behavior both models)
    for dL in (2e-4, 5e-4):
        fs = lambda ks: slab_residual(ks, Lfull, dL, M, nr)
        rts = roots_in(fs, k0 - np.pi, k0 + np.pi)
        rts.sort(key=lambda r: abs(r - k0))
        p2 = sorted(rts[:2])
        print(f"  dL = {dL}: slab split = {p2[1]-p2[0]:.8e}")

    print("\n== part 1b: resonant slab branch connectivity (nr = sqrt(10)) ==")
    M = 0.0005005
    nr = np.sqrt(10.0)
    Lfull = 1.0 + 2.0 * M
    kres = np.pi / (2.0 * M * nr)
    print(f"  k_res = {kres:.6f}, nearest localized index n = {kres/(2*np.pi):.3f}")
    # scan roots in a window around kres for a ladder of dL values
    lo, hi = kres - 2.5 * np.pi, kres + 2.5 * np.pi
    dls = np.linspace(0.0, 8e-4, 33)
    branches = None
    print("  dL, roots in window:")
    rows = []
    for dL in dls:
        f = lambda ks: slab_residual(ks, Lfull, dL, M, nr)
        rts = roots_in(f, lo, hi, grid=60001)
        rows.append((dL, rts))
    for dL, rts in rows[::8]:
        print(f"    dL={dL:.2e}: " + " ".join(f"{r:.4f}" for r in rts))
    # continuation: follow each root found at dL=0 through the ladder by
    # nearest-neighbor matching, then report start/end nearest localized line
    def nearest_line(k, dL):
        nl = round(k * (1.0 + dL) / (2.0 * np.pi))
        nr_ = round(k * (1.0 - dL) / (2.0 * np.pi))
        dl_ = abs(k - 2.0 * np.pi * nl / (1.0 + dL))
        dr_ = abs(k - 2.0 * np.pi * nr_ / (1.0 - dL))
        return ("left", nl, dl_) if dl_ <= dr_ else ("right", nr_, dr_)

    start = rows[0][1]
    tracks = [[r] for r in start]
    for dL, rts in rows[1:]:
        for tr in tracks:
            prev = tr[-1]
            if rts:
                tr.append(min(rts, key=lambda r: abs(r - prev)))
    print("  tracks (start k -> end k, nearest line start -> end):")
    for tr in tracks:
        s_side, s_n, _ = nearest_line(tr[0], rows[0][0])
        e_side, e_n, _ = nearest_line(tr[-1], rows[-1][0])
        print(f"    {tr[0]:.4f} -> {tr[-1]:.4f}   {s_side}{s_n} -> {e_side}{e_n}")

    print("\n== part 2: transmission formulas vs boundary-condition solve ==")

    def slab_t_bruteforce(k, M, nr):
        # A e^{ikx}+B e^{-ikx} | C e^{i nr k x}+D e^{-i nr k x} | F e^{ikx}
        a = np.zeros((4, 4), dtype=complex)
        b = np.zeros(4, dtype=complex)
        em, ep = np.exp(-1j * k * M), np.exp(1j * k * M)
        fm, fp = np.exp(-1j * nr * k * M), np.exp(1j * nr * k * M)
        # unknowns: B, C, D, F
        # x = -M: A em + B ep = C fm + D fp
        a[0] = [ep, -fm, -fp, 0.0]; b[0] = -em
        # E': ik(A em - B ep) = i nr k (C fm - D fp)
        a[1] = [-ep, -nr * fm, nr * fp, 0.0]; b[1] = -em
        # x = +M: C fp + D fm = F ep
        a[2] = [0.0, fp, fm, -ep]; b[2] = 0.0
        # E': nr (C fp - D fm) = F ep
        a[3] = [0.0, nr * fp, -nr * fm, -ep]; b[3] = 0.0
        B, Cc, D, F = np.linalg.solve(a, b)
        return F  # = t since incident amplitude A = 1

    def slab_t_closed(k, M, nr):
        theta = 2.0 * M * k * nr
        Cfac = (nr * nr + 1.0) / (2.0 * nr)
        m = round(theta / np.pi)
        phi_r = m * np.pi + np.arctan(Cfac * np.tan(theta - m * np.pi))
        denom = np.sqrt(1.0 + (nr * nr - 1.0)**2 / (4.0 * nr * nr) * np.sin(theta)**2)
        return np.exp(-2j * M * k) * np.exp(1j * phi_r) / denom

    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        k = rng.uniform(0.5, 50.0)
        M2 = rng.uniform(0.01, 1.0)
        nr3 = rng.uniform(1.01, 6.0)
        tb = slab_t_bruteforce(k, M2, nr3)
        tc = slab_t_closed(k, M2, nr3)
        worst = max(worst, abs(tb - tc))
    print(f"  max |t_closed - t_bruteforce| over 200 draws = {worst:.3e}")
    # fringe minimum example: nr = 2, 2Mk nr = pi/2 -> T = 16/25
    k, nr3 = 1.0, 2.0
    M2 = np.pi / 2.0 / (2.0 * k * nr3)
    print(f"  fringe min T (nr=2) = {abs(slab_t_closed(k, M2, nr3))**2:.10f} (16/25 = {16/25})")

    def inter_t_bruteforce(k, alpha, n1, n2):
        # n1 e^{i n1 k x}+r e^{-i n1 k x} | t e^{i n2 k x}; jump E' at 0: -alpha k^2 E(0)
        # continuity: 1 + r = t ; derivative: i n2 k t - i n1 k (1 - r) = -alpha k^2 t
        # solve directly
        t = 2.0 * n1 / (n1 + n2 - 1j * k * alpha)   # closed form to compare
        # numeric: 2x2
        a = np.array([[1.0, -1.0], [1j * n1 * k, 1j * n2 * k + alpha * k * k]], dtype=complex)
        b = np.array([-1.0, 1j * n1 * k], dtype=complex)
        r, tn = np.linalg.solve(a, b)
        return tn, t, r

    worst = 0.0
    worst_flux = 0.0
    for _ in range(200):
        k = rng.uniform(0.5, 30.0)
        al = rng.uniform(0.0, 2.0)
        n1 = rng.uniform(1.0, 3.0)
        n2 = rng.uniform(1.0, 3.0)
        tn, tc2, r = inter_t_bruteforce(k, al, n1, n2)
        worst = max(worst, abs(tn - tc2))
        worst_flux = max(worst_flux, abs((n2 / n1) * abs(tn)**2 + abs(r)**2 - 1.0))
    print(f"  interdielectric: max |t_closed - t_numeric| = {worst:.3e}, max |T_flux + R - 1| = {worst_flux:.3e}")

    print("\n== part 3: headline transmission numbers ==")
    lam = 780e-9
    k = 2.0 * np.pi / lam
    al = 1e-6
    T = 1.0 / (1.0 + (k * al / 2.0)**2)
    print(f"  R(alpha = 1 um, lambda = 780 nm) = {1.0 - T:.6f}")
    L = 1e-4
    al = 0.3 * L
    T = 1.0 / (1.0 + (k * al / 2.0)**2)
    print(f"  T(alpha/L = 0.3) = {T:.6e}")
    k128 = 2.0 * np.pi * 128 / L
    al = 1e-6
    T = 1.0 / (1.0 + (k128 * al / 2.0)**2)
    print(f"  T(alpha = 1e-6 m, k = 2 pi 128 / L) = {T:.6e}")


if __name__ == "__main__":
    main()
