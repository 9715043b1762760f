#!/usr/bin/env python3
"""Reference numbers for the two-mode dynamics and the complex exponential
integral.

The second-order reference here integrates the *unrotated* dimensionless
system -A'' = M(tau) A directly, so it is independent of the rotated-envelope
algebra used by the library; agreement between the two validates the phase
transform. First-order, uncoupled, and early-time references come from
separate integrations/formulas. Ei values come from mpmath at 40 digits.
"""

import numpy as np
from scipy.integrate import solve_ivp
import mpmath as mp

mp.mp.dps = 40


# ------------------------------------------------------------ first order
def first_order(theta, tau0, tau1, taus, y0=(1.0 + 0j, 0.0 + 0j), rtol=1e-12):
    def rhs(t, y):
        ph = np.exp(-0.5j * theta * t * t)
        return [-1j * ph * y[1], -1j * np.conj(ph) * y[0]]

    sol = solve_ivp(rhs, (tau0, tau1), list(y0), t_eval=taus, rtol=rtol,
                    atol=1e-14, method="DOP853")
    return sol.y[0], sol.y[1]


# --------------------------------------------- unrotated second order (ref)
def second_order_unrotated(theta, r, tau0, tau1, taus, rtol=1e-10):
    invr = 1.0 / r

    def rhs(t, y):
        E = 0.5 * theta * t
        bL2 = (E - invr) ** 2 + 1.0
        bR2 = (E + invr) ** 2 + 1.0
        AL, dAL, AR, dAR = y
        return [dAL, -bL2 * AL - 2.0 * invr * AR,
                dAR, -bR2 * AR - 2.0 * invr * AL]

    E0 = 0.5 * theta * tau0
    AL0, AR0 = 1.0 + 0j, 0.0 + 0j
    dAL0 = -1j * ((invr - E0) * AL0 + AR0)
    dAR0 = -1j * (AL0 + (invr + E0) * AR0)
    sol = solve_ivp(rhs, (tau0, tau1), [AL0, dAL0, AR0, dAR0], t_eval=taus,
                    rtol=rtol, atol=1e-12, method="DOP853")
    return sol.y[0], sol.y[2]


# --------------------------------------------- rotated second order (check)
def F_phase(u):
    return 0.5 * (u * np.sqrt(u * u + 1.0) + np.arcsinh(u))


def second_order_rotated(theta, r, tau0, tau1, taus, rtol=1e-10):
    invr = 1.0 / r
    a = 0.5 * theta

    def psi(tau, c):
        if a == 0.0:
            return np.sqrt(c * c + 1.0) * tau
        return (F_phase(a * tau + c) - F_phase(c)) / a

    def b(tau, c):
        u = a * tau + c
        return np.sqrt(u * u + 1.0)

    def bprime(tau, c):
        u = a * tau + c
        return u * a / np.sqrt(u * u + 1.0)

    cL, cR = -invr, +invr

    def rhs(t, y):
        AL, dAL, AR, dAR = y
        bL, bR = b(t, cL), b(t, cR)
        phi = psi(t, cR) - psi(t, cL)
        eL = np.exp(-1j * phi)
        return [dAL,
                2j * bL * dAL + 1j * bprime(t, cL) * AL - 2.0 * invr * AR * eL,
                dAR,
                2j * bR * dAR + 1j * bprime(t, cR) * AR - 2.0 * invr * AL / eL]

    E0 = 0.5 * theta * tau0
    AL0, AR0 = 1.0 + 0j, 0.0 + 0j
    dAL0 = -1j * ((invr - E0) * AL0 + AR0)
    dAR0 = -1j * (AL0 + (invr + E0) * AR0)
    rL = np.exp(1j * psi(tau0, cL))
    rR = np.exp(1j * psi(tau0, cR))
    y0 = [AL0 * rL, (dAL0 + 1j * b(tau0, cL) * AL0) * rL,
          AR0 * rR, (dAR0 + 1j * b(tau0, cR) * AR0) * rR]
    sol = solve_ivp(rhs, (tau0, tau1), y0, t_eval=taus, rtol=rtol,
                    atol=1e-12, method="DOP853")
    return sol.y[0], sol.y[2]


# ------------------------------------------------------- uncoupled (App E)
def uncoupled(theta, tau0, tau1, taus, rtol=1e-12):
    def rhs(t, y):
        AL, dAL, AR, dAR = y
        return [dAL, -1j * theta * t * dAL - AL,
                dAR, +1j * theta * t * dAR - AR]

    y0 = [1.0 + 0j, 0.0 + 0j, 0.0 + 0j, -1j * np.exp(0.5j * theta * tau0**2)]
    sol = solve_ivp(rhs, (tau0, tau1), y0, t_eval=taus, rtol=rtol,
                    atol=1e-14, method="DOP853")
    return sol.y[0], sol.y[2]


def early_time(theta, tau0, tau):
    z0 = -0.5j * theta * tau0 * tau0
    z1 = -0.5j * theta * tau * tau
    val = (1.0 + (1j / theta) * mp.log(tau / tau0)
           + (0.5j / theta) * mp.e**(-z0) * (mp.ei(z0) - mp.ei(z1)))
    return complex(val)


def main():
    taus = np.linspace(-25.0, 25.0, 501)

    print("== LZ closed form ==")
    for th in (6.8, 1.0):
        print(f"  theta={th}: exp(-2 pi/theta) = {np.exp(-2*np.pi/th):.12f}")

    print("\n== first order finals, tau in [-25, 25] ==")
    finals = {}
    for th in (0.5, 1.0, 2.0, 5.0, 6.8):
        AL, AR = first_order(th, -25.0, 25.0, taus)
        pL = abs(AL[-1]) ** 2
        tgt = np.exp(-2 * np.pi / th)
        finals[th] = (AL, AR)
        nrm = abs(AL) ** 2 + abs(AR) ** 2
        print(f"  theta={th}: |AL(25)|^2 = {pL:.10f}  target {tgt:.10f}"
              f"  dev {pL-tgt:+.2e}  max|norm-1| = {np.max(np.abs(nrm-1)):.2e}")

    print("\n== uncoupled vs first order (theta = 1) ==")
    AL1, AR1 = finals[1.0]
    ALu, ARu = uncoupled(1.0, -25.0, 25.0, taus)
    print(f"  max |AL_unc - AL_1st| = {np.max(np.abs(ALu - AL1)):.3e}")
    print(f"  max |AR_unc - AR_1st| = {np.max(np.abs(ARu - AR1)):.3e}")

    print("\n== early-time analytic vs first order, tau in [-25, -22] ==")
    tE = np.linspace(-25.0, -22.0, 151)
    ALe, _ = first_order(1.0, -25.0, -21.9, tE)
    ana = np.array([early_time(1.0, -25.0, t) for t in tE])
    print(f"  max |Re dev| = {np.max(np.abs(ana.real - ALe.real)):.5f}")
    print(f"  max |Im dev| = {np.max(np.abs(ana.imag - ALe.imag)):.5f}")
    # spot values for unit tests
    for t in (-25.0, -24.0, -23.0, -22.0):
        v = early_time(1.0, -25.0, t)
        print(f"  early_time(1, -25, {t}) = {v.real:+.12f} {v.imag:+.12f}i")

    print("\n== second order vs first order populations (theta = 1) ==")
    pL1 = np.abs(finals[1.0][0]) ** 2
    pR1 = np.abs(finals[1.0][1]) ** 2
    res = {}
    for r in (1e-2, 2e-3, 1e-3):
        AL2, AR2 = second_order_unrotated(1.0, r, -25.0, 25.0, taus)
        pL2, pR2 = np.abs(AL2) ** 2, np.abs(AR2) ** 2
        dev = np.maximum(np.abs(pL2 - pL1), np.abs(pR2 - pR1))
        nrm = pL2 + pR2
        edev = nrm - 1.0
        imax = np.argmax(np.abs(edev))
        res[r] = (pL2, pR2)
        print(f"  r={r}: sup dev = {np.max(dev):.6f}  final devs "
              f"({pL2[-1]-pL1[-1]:+.2e}, {pR2[-1]-pR1[-1]:+.2e})")
        print(f"        max|norm2-1| = {np.max(np.abs(edev)):.6f} at tau = "
              f"{taus[imax]:.2f}; final = {edev[-1]:+.3e}; "
              f"overshoot max(pR2-pR1) = {np.max(pR2 - pR1):+.4f}")
        print(f"        final pops: pL = {pL2[-1]:.8f}, pR = {pR2[-1]:.8f}")

    print("\n== rotated vs unrotated gauge check (r = 1/100) ==")
    ALr, ARr = second_order_rotated(1.0, 1e-2, -25.0, 25.0, taus)
    ALu2, ARu2 = second_order_unrotated(1.0, 1e-2, -25.0, 25.0, taus)
    print(f"  max pop devs: {np.max(np.abs(np.abs(ALr)**2 - np.abs(ALu2)**2)):.3e}"
          f"  {np.max(np.abs(np.abs(ARr)**2 - np.abs(ARu2)**2)):.3e}")

    print("\n== static eigenvector start (theta = 0, r = 1/100) ==")
    invr = 100.0
    E0 = 0.3 * invr  # fixed detuning in gap units: E/Delta = 30
    th_mix = 0.5 * np.arctan2(1.0, E0)  # mixing angle with tan(2theta)=Delta/E
    # even eigenvector in (L, R) basis of [[-E,1],[1,E]]: (cos, -sin) for E>0
    evec = np.array([np.cos(th_mix), -np.sin(th_mix)], dtype=complex)

    def rhs(t, y):
        AL, dAL, AR, dAR = y
        bL2 = (E0 - invr) ** 2 + 1.0
        bR2 = (E0 + invr) ** 2 + 1.0
        return [dAL, -bL2 * AL - 2.0 * invr * AR,
                dAR, -bR2 * AR - 2.0 * invr * AL]

    lam = invr - np.sqrt(E0 * E0 + 1.0)  # even-branch frequency in gap units
    y0 = [evec[0], -1j * lam * evec[0], evec[1], -1j * lam * evec[1]]
    # check eigen-consistency: -A'' = M A requires lam^2 = eigenvalue of M
    M = np.array([[(E0 - invr) ** 2 + 1.0, 2.0 * invr],
                  [2.0 * invr, (E0 + invr) ** 2 + 1.0]])
    w, V = np.linalg.eigh(M)
    print(f"  lam^2 = {lam*lam:.6f}; eig(M) = {w[0]:.6f}, {w[1]:.6f}")
    sol = solve_ivp(rhs, (0.0, 5.0), y0, t_eval=np.linspace(0, 5, 51),
                    rtol=1e-12, atol=1e-14, method="DOP853")
    pops = np.abs(sol.y[0]) ** 2
    print(f"  max |pL - pL(0)| over tau in [0,5]: {np.max(np.abs(pops - pops[0])):.3e}")

    print("\n== drift ratio for the acceptance scenario ==")
    c = 299792458.0
    L = 1e-4
    n = 128
    dk_half = 0.2485259063265e4  # analytic Delta/(hbar c) in 1/m
    Dok = dk_half * c            # Delta/hbar in 1/s
    v = Dok**2 * L * L / (8.0 * np.pi * c * n)
    print(f"  Delta/hbar = {Dok:.6e} 1/s, v(theta=1) = {v:.4f} m/s")
    print(f"  ratio (Delta/hbar)(L/v) = {Dok * L / v:.6e}")

    print("\n== complex exponential integral reference values ==")
    # verify mpmath ei matches the principal-branch series definition
    def ei_series(z, terms=400):
        s = mp.euler + mp.log(z)
        term = mp.mpc(1)
        zz = mp.mpc(z)
        for k in range(1, terms):
            term *= zz / k
            s += term / k
        return s

    for z in (mp.mpc(-1, 0.01), mp.mpc(-1, -0.01), mp.mpc(2, 2), mp.mpc(-3, -4)):
        d = abs(mp.ei(z) - ei_series(z))
        print(f"  |mp.ei - series| at {complex(z)}: {mp.nstr(d, 3)}")

    pts = [1.0, -1.0, 2j, -2j, 3 + 4j, -5.0, 6.5j, -8.0, 30j, -50.0,
           -100 + 5j, 100 + 200j, -312.5j, -242j, 1000j, -1000j,
           20 * np.exp(1j * 0.95), 20 * np.exp(1j * 1.05),
           -700.0, 300 + 40j, 600.0, 690.0 + 50j]
    for z in pts:
        v = mp.ei(mp.mpc(z))
        print(f"  Ei({z}) = {mp.nstr(v.real, 17)} {'+' if v.imag >= 0 else '-'} "
              f"{mp.nstr(abs(v.imag), 17)}i")
    print(f"  Ci(2) = {mp.nstr(mp.ci(2), 17)}   Si(2) = {mp.nstr(mp.si(2), 17)}")

    print("\n== beta frequencies, section-VI numbers ==")
    om = c * 2.0 * np.pi * n / L * (1.0 + 0)  # omega_av ~ c kbar; kbar = 2 pi n / L
    kbar = 2.0 * np.pi * n / L + 0.5 * (4970.518126530 / 2.0) / 1.0  # + Delta~/L shift
    om = c * kbar
    E = Dok  # E = Delta in angular units (E/hbar)
    bL = np.sqrt((E - om) ** 2 + Dok**2)
    bR = np.sqrt((E + om) ** 2 + Dok**2)
    print(f"  omega_av = {om:.6e}")
    print(f"  |beta_L - om|/om = {abs(bL - om)/om:.3e}  (E/om = {E/om:.3e})")
    corr = (bR - bL - 2 * E) / (2 * E)
    print(f"  [(bR-bL) - 2E]/(2E) = {corr:.3e}  Delta^2/(2 om^2) = {Dok**2/(2*om*om):.3e}")


if __name__ == "__main__":
    main()
