"""Gorenstein weighted projective 3-spaces and their numerical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .grading import DimensionError, DomainError, WeightedSpace

EXPECTED_GORENSTEIN_COUNT = 14


class NotGorenstein(ValueError):
    def __init__(self, weight: int, space: WeightedSpace):
        super().__init__(f"weight {weight} does not divide the weight sum {space.sigma} of {space}")
        self.weight = weight
        self.space = space


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the computation cannot be trusted."""


@dataclass(frozen=True)
class GorensteinInvariants:
    l: int
    sigma: int
    index: int

    def __post_init__(self):
        if self.sigma % self.l or self.sigma // self.l != self.index:
            raise ConsistencyError(f"inconsistent invariants {self}")


def _weights(space: WeightedSpace | Sequence[int]) -> tuple[int, ...]:
    return space.weights if isinstance(space, WeightedSpace) else tuple(int(a) for a in space)


def _require_3space(space: WeightedSpace) -> None:
    if len(space) != 4:
        raise DimensionError(f"expected a weighted projective 3-space, got {space}")


def is_well_formed(space: WeightedSpace) -> bool:
    """True iff every choice of all-but-one weights is coprime."""
    w = space.weights
    return all(reduce(gcd, sub) == 1 for sub in combinations(w, len(w) - 1))


def gorenstein_invariants(space: WeightedSpace) -> GorensteinInvariants:
    _require_3space(space)
    for a in space.weights:
        if space.sigma % a:
            raise NotGorenstein(a, space)
    return GorensteinInvariants(space.lcm, space.sigma, space.sigma // space.lcm)


def is_gorenstein(space: WeightedSpace) -> bool:
    return all(space.sigma % a == 0 for a in space.weights)


def enumerate_unit_fraction_quadruples() -> list[tuple[int, int, int, int]]:
    """All b0 <= b1 <= b2 <= b3 with 1/b0 + 1/b1 + 1/b2 + 1/b3 = 1.

    At each level the remaining budget r must be split among k more terms, each
    at most 1/b, so b <= k/r; and b > 1/r leaves room for the others.
    """
    out = []

    def extend(prefix: list[int], budget: Fraction, k: int):
        lo = max(prefix[-1] if prefix else 1, int(1 / budget) + 1 if k > 1 else 1)
        hi = int(k / budget)
        for b in range(lo, hi + 1):
            rest = budget - Fraction(1, b)
            if k == 1:
                if rest == 0:
                    out.append(tuple(prefix + [b]))
            elif rest > 0:
                extend(prefix + [b], rest, k - 1)

    extend([], Fraction(1), 4)
    return out


def weights_from_quadruple(b: Sequence[int]) -> tuple[int, ...]:
    n = lcm(*b)
    w = [n // x for x in b]
    g = reduce(gcd, w)
    return tuple(sorted(a // g for a in w))


def enumerate_gorenstein_wps3(debug: bool = False):
    """The well-formed Gorenstein weighted projective 3-spaces, sorted by weights.

    With ``debug=True`` also returns the raw (quadruple, weights, well_formed)
    list before filtering and merging.
    """
    raw = []
    found = set()
    for b in enumerate_unit_fraction_quadruples():
        w = weights_from_quadruple(b)
        ok = is_well_formed(WeightedSpace(w))
        raw.append((b, w, ok))
        if ok:
            found.add(w)
    spaces = [WeightedSpace(w) for w in sorted(found)]
    if len(spaces) != EXPECTED_GORENSTEIN_COUNT:
        raise ConsistencyError(f"found {len(spaces)} Gorenstein 3-spaces, expected {EXPECTED_GORENSTEIN_COUNT}")
    for s in spaces:
        gorenstein_invariants(s)
    return (spaces, raw) if debug else spaces


def is_basepoint_free(space: WeightedSpace | Sequence[int], m: int) -> bool:
    """|O(m)| has no base points iff every weight divides m."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return all(m % a == 0 for a in _weights(space))


def anticanonical_degree(space: WeightedSpace) -> Fraction:
    """(-K)^3 = sigma^3 / prod(weights)."""
    _require_3space(space)
    return Fraction(space.sigma**3, space.weight_product)


def anticanonical_genus(space: WeightedSpace) -> int:
    """g with (-K)^3 = 2g - 2."""
    deg = anticanonical_degree(space)
    if deg.denominator != 1 or deg.numerator % 2:
        raise ConsistencyError(f"(-K)^3 = {deg} on {space} is not an even integer; is the space Gorenstein?")
    g = 1 + deg.numerator // 2
    if g < 1:
        raise ConsistencyError(f"nonpositive genus {g} for {space}")
    return g


def primitive_genus(g: int, i: int) -> int:
    """Genus of the primitive class C when the hyperplane class is i*C."""
    if i < 1:
        raise DomainError(f"index must be positive, got {i}")
    if (g - 1) % (i * i):
        raise DomainError(f"index {i} is incompatible with genus {g}: {i}^2 does not divide g - 1")
    return 1 + (g - 1) // (i * i)
