#!/usr/bin/env python3
"""Brute-force dimension of spherical-harmonic spaces.

Counts the dimension of homogeneous harmonic polynomials of degree l in d
variables by building the Laplacian as an exact rational matrix on the
monomial basis and taking the nullity via fraction-free Gaussian elimination.
Independent of any closed-form multiplicity formula. Frozen into
crates/robin-dtn tests; regenerate with this script.
"""

from fractions import Fraction
from itertools import combinations_with_replacement


def monomials(d, l):
    """Exponent tuples of total degree l in d variables."""
    out = []
    for combo in combinations_with_replacement(range(d), l):
        e = [0] * d
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(out)


def laplacian_matrix(d, l):
    """Matrix of the Laplacian from degree-l monomials to degree-(l-2)."""
    src = monomials(d, l)
    dst = monomials(d, l - 2) if l >= 2 else []
    idx = {e: i for i, e in enumerate(dst)}
    rows = len(dst)
    cols = len(src)
    mat = [[Fraction(0)] * cols for _ in range(rows)]
    for j, e in enumerate(src):
        for v in range(d):
            if e[v] >= 2:
                t = list(e)
                t[v] -= 2
                mat[idx[tuple(t)]][j] += Fraction(e[v] * (e[v] - 1))
    return mat, rows, cols


def rank(mat, rows, cols):
    r = 0
    mat = [row[:] for row in mat]
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == rows:
            break
    return r


def harmonic_dim(d, l):
    if l == 0:
        return 1
    if l == 1:
        return d
    mat, rows, cols = laplacian_matrix(d, l)
    return cols - rank(mat, rows, cols)


def main():
    print("# dim of harmonic homogeneous polynomials: d l dim")
    for d in range(2, 6):
        for l in range(0, 7):
            print(f"dim {d} {l} {harmonic_dim(d, l)}")


if __name__ == "__main__":
    main()
