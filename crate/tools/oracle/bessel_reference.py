#!/usr/bin/env python3
"""Reference values for the Bessel-J kernel (complex argument, real order).

Prints 25-significant-digit values of J_m(z) over the order/argument grid the
toolkit exercises, the first zeros j_{m,p} for the interlacing and pole
tables, and the scaled ratio J_{m+1}(z)/J_m(z) at large imaginary argument.
Computed with mpmath at 100-digit working precision. Frozen into
crates/robin-specfun tests; regenerate with this script.
"""

import mpmath as mp

mp.mp.dps = 100

ORDERS = ["0", "0.5", "1", "1.5", "2", "3", "5", "7.5", "12"]

ARGS = [
    ("1", mp.mpc(1)),
    ("2", mp.mpc(2)),
    ("5.5", mp.mpc("5.5")),
    ("11", mp.mpc(11)),
    ("13.2", mp.mpc("13.2")),
    ("20", mp.mpc(20)),
    ("35", mp.mpc(35)),
    ("49", mp.mpc(49)),
    ("1+1i", mp.mpc(1, 1)),
    ("8-3i", mp.mpc(8, -3)),
    ("14+2i", mp.mpc(14, 2)),
    ("3+25i", mp.mpc(3, 25)),
    ("0.5+40i", mp.mpc("0.5", 40)),
    ("60+5i", mp.mpc(60, 5)),
    ("2e-3", mp.mpc("0.002")),
]


def main():
    print("# J_m(z), one line per (m, z): m z re im")
    for ms in ORDERS:
        m = mp.mpf(ms)
        for label, z in ARGS:
            v = mp.besselj(m, z)
            print(f"J {ms} {label} {mp.nstr(v.real, 25)} {mp.nstr(v.imag, 25)}")
    print()

    print("# scaled values exp(-|Im z|) * J_m(z) at large imaginary argument")
    for ms, zl in [("0", "3+25i"), ("0", "0.5+40i"), ("2", "0.5+40i"), ("5", "1+60i")]:
        m = mp.mpf(ms)
        z = mp.mpc(*[mp.mpf(t) for t in zl.replace("i", "").split("+")])
        v = mp.besselj(m, z) * mp.exp(-abs(z.imag))
        print(f"Jscaled {ms} {zl} {mp.nstr(v.real, 25)} {mp.nstr(v.imag, 25)}")
    print()

    print("# ratio J_{m+1}(z)/J_m(z)")
    for ms, z in [("0", mp.mpc(1, 0)), ("0", mp.mpc(0, 30)), ("1", mp.mpc(0, 80)),
                  ("0.5", mp.mpc(2, 0)), ("3", mp.mpc(9, -7))]:
        m = mp.mpf(ms)
        v = mp.besselj(m + 1, z) / mp.besselj(m, z)
        print(f"ratio {ms} {mp.nstr(z.real, 6)}{'+' if z.imag >= 0 else ''}{mp.nstr(z.imag, 6)}i "
              f"{mp.nstr(v.real, 25)} {mp.nstr(v.imag, 25)}")
    print()

    print("# zeros j_{m,p}")
    for ms in ["0", "0.5", "1", "1.5", "2", "3", "6"]:
        m = mp.mpf(ms)
        for p in range(1, 21):
            jz = mp.besseljzero(m, p)
            print(f"jzero {ms} {p} {mp.nstr(jz, 25)}")
    print()

    print("# half-integer closed forms")
    z = mp.mpf(2)
    print(f"sqrt(2/(pi*2))*sin(2) = {mp.nstr(mp.sqrt(2 / (mp.pi * z)) * mp.sin(z), 25)}")
    print(f"J_{{3/2}}(2) closed   = "
          f"{mp.nstr(mp.sqrt(2 / (mp.pi * z)) * (mp.sin(z) / z - mp.cos(z)), 25)}")


if __name__ == "__main__":
    main()
