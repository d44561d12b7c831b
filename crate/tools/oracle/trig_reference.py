#!/usr/bin/env python3
"""Reference values for the overflow-safe trig kernels.

Prints 30-significant-digit values of cot, csc and tan at a fixed set of
complex points (computed with mpmath at 200-digit working precision), plus
the root of kappa * tanh(kappa) = 2 used by the interval secular tests.
Frozen into crates/robin-specfun tests; regenerate with this script.
"""

import mpmath as mp

mp.mp.dps = 200

POINTS = [
    ("1+1i", mp.mpc(1, 1)),
    ("0.3-2i", mp.mpc("0.3", "-2")),
    ("2.5+0.7i", mp.mpc("2.5", "0.7")),
    ("-1.2+3.4i", mp.mpc("-1.2", "3.4")),
    ("0.25", mp.mpc("0.25", "0")),
    ("3+40i", mp.mpc(3, 40)),
    ("-2-35i", mp.mpc(-2, -35)),
]


def show(name, fn):
    print(f"# {name}")
    for label, z in POINTS:
        v = fn(z)
        print(f"{name}({label}) = {mp.nstr(v.real, 30)} {mp.nstr(v.imag, 30)}")
    print()


def main():
    show("cot", mp.cot)
    show("csc", mp.csc)
    show("tan", mp.tan)

    # kappa * tanh(kappa) = 2, bracketed in [1, 3].
    f = lambda k: k * mp.tanh(k) - 2
    root = mp.findroot(f, mp.mpf(2))
    print("# kappa*tanh(kappa) = 2")
    print(f"kappa = {mp.nstr(root, 30)}")
    print(f"lambda = -kappa^2 = {mp.nstr(-root**2, 30)}")


if __name__ == "__main__":
    main()
