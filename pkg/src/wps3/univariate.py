"""Dense univariate polynomials over Q, as coefficient lists (constant term first)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

UPoly = list[Fraction]


def normalize(p: Sequence) -> UPoly:
    q = [Fraction(c) for c in p]
    while q and q[-1] == 0:
        q.pop()
    return q


def degree(p: UPoly) -> int:
    return len(p) - 1 if p else -1


def monic(p: UPoly) -> UPoly:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def derivative(p: UPoly) -> UPoly:
    return normalize([k * c for k, c in enumerate(p)][1:])


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def divmod_poly(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = degree(q)
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while r and degree(r) >= dq:
        c = r[-1] / q[-1]
        s = degree(r) - dq
        quot[s] = c
        for i, b in enumerate(q):
            r[s + i] -= c * b
        r = normalize(r)
    return normalize(quot), r


def exact_div(p: UPoly, q: UPoly) -> UPoly:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = normalize(p), normalize(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def squarefree_decomposition(p: Sequence) -> tuple[Fraction, list[tuple[UPoly, int]]]:
    """Yun's algorithm: p = c * prod(s_m ** m) with s_m monic, squarefree, pairwise coprime.

    Returns (c, [(s_m, m), ...]) listing only nonconstant factors, m increasing.
    """
    p = normalize(p)
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    c = p[-1]
    f = monic(p)
    if degree(f) == 0:
        return c, []
    out = []
    df = derivative(f)
    a = gcd(f, df)
    b = exact_div(f, a)
    cc = exact_div(df, a)
    d = normalize([x - y for x, y in _pad(cc, derivative(b))])
    m = 1
    while degree(b) > 0:
        s = gcd(b, d)
        if degree(s) > 0:
            out.append((s, m))
        b = exact_div(b, s)
        cc = exact_div(d, s)
        d = normalize([x - y for x, y in _pad(cc, derivative(b))])
        m += 1
    return c, out


def _pad(p: UPoly, q: UPoly):
    n = max(len(p), len(q))
    return zip(list(p) + [Fraction(0)] * (n - len(p)), list(q) + [Fraction(0)] * (n - len(q)))


def det(m: list[list[Fraction]]) -> Fraction:
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    out = Fraction(sign)
    for k in range(n):
        out *= a[k][k]
    return out


def resultant(p: UPoly, q: UPoly) -> Fraction:
    """Determinant of the Sylvester matrix."""
    m, n = degree(p), degree(q)
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(reversed(p)) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(reversed(q)) + [Fraction(0)] * (size - n - 1 - i))
    return det(rows)


def discriminant(p: Sequence) -> Fraction:
    """Zero iff p has a repeated root (for deg p >= 1); computed via the resultant."""
    p = normalize(p)
    if degree(p) < 1:
        raise ValueError("discriminant needs degree >= 1")
    if degree(p) == 1:
        return Fraction(1)
    return resultant(p, derivative(p))
