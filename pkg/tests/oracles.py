"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from functools import reduce


def monomials_brute(weights, d):
    """All exponent vectors of weighted degree d, by exhaustive product."""
    ranges = [range(d // a + 1) for a in weights]
    return sorted(e for e in itertools.product(*ranges) if sum(a * k for a, k in zip(weights, e)) == d)


def gorenstein_brute(max_weight):
    """Well-formed (a0<=..<=a3) with every a_i dividing the sum, by exhaustive search."""
    out = []
    for w in itertools.combinations_with_replacement(range(1, max_weight + 1), 4):
        s = sum(w)
        if any(s % a for a in w):
            continue
        if any(reduce(gcd, w[:i] + w[i + 1 :]) != 1 for i in range(4)):
            continue
        out.append(w)
    return out


def is_product_of(m, smaller, n, weights):
    """Whether the exponent vector m splits as a sum of two nonzero vectors of degrees divisible by n."""
    for e in itertools.product(*[range(k + 1) for k in m]):
        if not any(e) or tuple(e) == tuple(m):
            continue
        if sum(a * k for a, k in zip(weights, e)) % n == 0:
            return True
    return False


def expand_binary(factors, wa, wb):
    """Multiply out prod (b^q - r a^p)^m together with coordinate powers.

    ``factors`` is a list of (root r, multiplicity m) plus optional ("a", k) / ("b", k)
    entries.  Returns {(i, j): coeff} for a^i b^j.
    """
    g = gcd(wa, wb)
    p, q = wb // g, wa // g
    poly = {(0, 0): Fraction(1)}

    def mul(u, v):
        out = {}
        for (i1, j1), c1 in u.items():
            for (i2, j2), c2 in v.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return {k: c for k, c in out.items() if c}

    for r, m in factors:
        if r == "a":
            lin = {(1, 0): Fraction(1)}
        elif r == "b":
            lin = {(0, 1): Fraction(1)}
        else:
            lin = {(0, q): Fraction(1), (p, 0): -Fraction(r)}
        for _ in range(m):
            poly = mul(poly, lin)
    return poly
