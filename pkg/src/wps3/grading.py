"""Graded polynomial rings of weighted projective spaces.

Exponent vectors are plain tuples of ints.  Monomials of one degree are listed
in graded-lexicographic order: first by ordinary total degree, then
lexicographically on the exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd, lcm, prod
from typing import Sequence

import numpy as np

from . import _accel

ExponentVector = tuple[int, ...]


class DimensionError(ValueError):
    """Lengths of exponent vectors / degree lists do not match the ambient space."""


class DomainError(ValueError):
    """An argument is outside the domain of an operation."""


@dataclass(frozen=True)
class WeightedSpace:
    """The weighted projective space P(a0, ..., an).

    Weights keep the order they were given in, since maps and polynomials refer
    to coordinates by position; ``canonical()`` sorts them.
    """

    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]):
        w = tuple(int(a) for a in weights)
        if not w:
            raise DomainError("a weighted space needs at least one weight")
        if any(a < 1 for a in w):
            raise DomainError(f"weights must be positive, got {w}")
        if reduce(gcd, w) != 1:
            raise DomainError(f"weights must have gcd 1, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __str__(self) -> str:
        return "P(" + ", ".join(map(str, self.weights)) + ")"

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @cached_property
    def lcm(self) -> int:
        return lcm(*self.weights)

    @cached_property
    def sigma(self) -> int:
        return sum(self.weights)

    @cached_property
    def weight_product(self) -> int:
        return prod(self.weights)

    def canonical(self) -> "WeightedSpace":
        return WeightedSpace(sorted(self.weights))

    @property
    def is_canonical(self) -> bool:
        return list(self.weights) == sorted(self.weights)

    @classmethod
    def parse(cls, text: str) -> "WeightedSpace":
        """Parse ``"1,4,5,10"``; anything else (spaces, empty fields) is rejected."""
        parts = text.split(",")
        if not all(p.isdigit() for p in parts):
            raise DomainError(f"weights must be comma-separated positive integers: {text!r}")
        return cls(int(p) for p in parts)


@dataclass(frozen=True)
class DivisorClass:
    """The class of O(n)."""

    degree: int

    def is_cartier(self, space: WeightedSpace) -> bool:
        return all(self.degree % a == 0 for a in space.weights)


def weighted_degree(e: Sequence[int], space: WeightedSpace | Sequence[int]) -> int:
    w = space.weights if isinstance(space, WeightedSpace) else tuple(space)
    if len(e) != len(w):
        raise DimensionError(f"exponent vector of length {len(e)} on a space with {len(w)} coordinates")
    return sum(int(x) * a for x, a in zip(e, w))


def grlex_key(e: ExponentVector):
    return (sum(e), e)


def monomial_array(space: WeightedSpace, d: int) -> np.ndarray:
    """Exponent vectors of degree d as an (m, n) int64 array, grlex-sorted."""
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    return _accel.enumerate_exponents(space.weights, d)


def monomials_of_degree(space: WeightedSpace, d: int) -> list[ExponentVector]:
    return list(map(tuple, monomial_array(space, d).tolist()))


def hilbert_count(space: WeightedSpace, d: int) -> int:
    """dim R_d, by dynamic programming over the coordinates."""
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    return _accel.hilbert_table(space.weights, d)[d]


def hilbert_counts(space: WeightedSpace, d_max: int) -> list[int]:
    if d_max < 0:
        raise DomainError(f"degree must be nonnegative, got {d_max}")
    return _accel.hilbert_table(space.weights, d_max)
