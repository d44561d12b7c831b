#!/usr/bin/env python3
"""Reference data for the interval boundary operator and secular roots.

Solves the two-point boundary-value problem directly (general solution in a
cos/sin basis, 2x2 linear solve per boundary column) to tabulate the
Dirichlet-to-Neumann matrix at fixed lambda, independent of any closed-form
matrix expression. Also refines a handful of secular roots z tan(z a) = alpha
and -z cot(z a) = alpha at 50 digits together with the eigenvalue derivative
quotient 2 psi(a)^2 / ||psi||^2. Frozen into crates/robin-dtn and
crates/robin-tracer tests; regenerate with this script.
"""

import mpmath as mp

mp.mp.dps = 60


def dtn_matrix(lam, a):
    """DtN matrix via direct BVP solve: columns from boundary data (1,0), (0,1)."""
    z = mp.sqrt(lam)
    cols = []
    for g in ([mp.mpf(1), mp.mpf(0)], [mp.mpf(0), mp.mpf(1)]):
        A = mp.matrix([[mp.cos(z * a), -mp.sin(z * a)],
                       [mp.cos(z * a), mp.sin(z * a)]])
        c = mp.lu_solve(A, mp.matrix(g))
        up = lambda x: -c[0] * z * mp.sin(z * x) + c[1] * z * mp.cos(z * x)
        cols.append([-up(-a), up(a)])
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]


def show_matrix(lam, a, label):
    M = dtn_matrix(lam, a)
    print(f"# DtN matrix, lambda = {label}, a = {a}")
    for i in range(2):
        for j in range(2):
            v = M[i][j]
            print(f"M[{i}][{j}] = {mp.nstr(v.real, 25)} {mp.nstr(v.imag, 25)}")
    print()


def show_roots(alpha, a, seeds_even, seeds_odd):
    print(f"# secular roots and derivative quotients, alpha = {alpha}, a = {a}")
    for parity, seeds in (("even", seeds_even), ("odd", seeds_odd)):
        if parity == "even":
            f = lambda z: z * mp.sin(z * a) - alpha * mp.cos(z * a)
        else:
            f = lambda z: z * mp.cos(z * a) + alpha * mp.sin(z * a)
        for s in seeds:
            z = mp.findroot(f, s)
            lam = z * z
            if parity == "even":
                dlam = 2 * mp.cos(z * a) ** 2 / (a + mp.sin(2 * z * a) / (2 * z))
            else:
                dlam = 2 * mp.sin(z * a) ** 2 / (a - mp.sin(2 * z * a) / (2 * z))
            print(f"root {parity} seed={s} z = {mp.nstr(z.real, 25)} {mp.nstr(z.imag, 25)}")
            print(f"     lambda = {mp.nstr(lam.real, 25)} {mp.nstr(lam.imag, 25)}")
            print(f"     dlambda/dalpha = {mp.nstr(dlam.real, 25)} {mp.nstr(dlam.imag, 25)}")
    print()


def main():
    show_matrix(mp.mpc(1, 1), mp.mpf(1), "1+1i")
    show_matrix(mp.mpc("0.09"), mp.mpf(1), "0.09")
    show_roots(mp.mpc(1, 1), mp.mpf(1),
               seeds_even=[mp.mpc("1.3", "0.3"), mp.mpc("3.5", "0.1")],
               seeds_odd=[mp.mpc("2.2", "0.2"), mp.mpc("5.0", "0.05")])
    show_roots(mp.mpc(-3, 4), mp.mpf(1),
               seeds_even=[mp.mpc("4", "-1")],
               seeds_odd=[mp.mpc("2", "-1")])


if __name__ == "__main__":
    main()
