"""Exact integer linear algebra: Hermite normal form and saturated kernels.

Matrices are lists of rows of Python ints.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_with_transform(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form H and unimodular U with U @ m == H.

    H is in echelon form with positive pivots, entries above each pivot reduced
    into [0, pivot), and zero rows at the bottom.  H is unique for the row
    lattice of m.
    """
    h = [list(map(int, row)) for row in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            # [x y; -q p] has determinant x*p + y*q = 1
            h[r], h[i] = (
                [x * s + y * t for s, t in zip(h[r], h[i])],
                [-q * s + p * t for s, t in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [x * s + y * t for s, t in zip(u[r], u[i])],
                [-q * s + p * t for s, t in zip(u[r], u[i])],
            )
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-s for s in h[r]]
            u[r] = [-s for s in u[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            if q:
                h[i] = [s - q * t for s, t in zip(h[i], h[r])]
                u[i] = [s - q * t for s, t in zip(u[i], u[r])]
        r += 1
    return h, u


def hermite_normal_form(m: Sequence[Sequence[int]]) -> Matrix:
    h, _ = hnf_with_transform(m)
    return [row for row in h if any(row)]


def rank(m: Sequence[Sequence[int]]) -> int:
    return len(hermite_normal_form(m)) if m else 0


def integer_kernel(a: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as rows, in HNF) of the saturated lattice {c : a @ c == 0}."""
    if not a:
        raise ValueError("empty matrix")
    ncols = len(a[0])
    transposed = [[row[j] for row in a] for j in range(ncols)]
    h, u = hnf_with_transform(transposed)
    basis = [u[i] for i in range(ncols) if not any(h[i])]
    return hermite_normal_form(basis) if basis else []


def primitive(v: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """(v / g, g) with g the gcd of the entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(int(x) // g for x in v), g


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def quotient_projection(a: Sequence[int]) -> Matrix:
    """An n x (n+1) integer matrix P, surjective onto Z^n, with kernel Z*a.

    a must be primitive.  P is the HNF of the last n rows of a unimodular U with
    U @ a = e_0, which makes the choice canonical.
    """
    col = [[int(x)] for x in a]
    h, u = hnf_with_transform(col)
    if h[0][0] != 1:
        raise ValueError(f"vector {tuple(a)} is not primitive")
    return hermite_normal_form(u[1:])
