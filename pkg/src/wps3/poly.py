"""Sparse polynomials over Q in named, weighted coordinates.

Text format (one header line, then the terms joined by ``+``)::

    coords: u0:1 u1:1 v:2
    3/2 * u0^2 u1 + -1 * v^2 + u0 v

A term is ``coefficient * monomial``, a bare coefficient, or a bare monomial.
Monomial factors are ``name`` or ``name^k`` separated by spaces or ``*``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import univariate
from .grading import DimensionError, DomainError, ExponentVector, WeightedSpace, monomials_of_degree

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


class HomogeneityError(ValueError):
    pass


@dataclass(frozen=True)
class Coords:
    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __init__(self, names: Sequence[str], weights: Sequence[int]):
        names, weights = tuple(names), tuple(int(w) for w in weights)
        if len(names) != len(weights):
            raise DimensionError(f"{len(names)} names for {len(weights)} weights")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate coordinate names in {names}")
        for n in names:
            if not _NAME.match(n):
                raise DomainError(f"bad coordinate name {n!r}")
        if any(w < 1 for w in weights):
            raise DomainError(f"weights must be positive, got {weights}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"no coordinate named {name!r} in {self.names}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def without(self, name: str) -> "Coords":
        i = self.index(name)
        return Coords(self.names[:i] + self.names[i + 1 :], self.weights[:i] + self.weights[i + 1 :])

    def header(self) -> str:
        return "coords: " + " ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))

    @classmethod
    def of(cls, spec: str) -> "Coords":
        """``"u0:1 u1:1 v:2"`` -> Coords."""
        names, weights = [], []
        for item in spec.split():
            name, sep, w = item.partition(":")
            if not sep or not w.isdigit():
                raise DomainError(f"bad coordinate declaration {item!r}")
            names.append(name)
            weights.append(int(w))
        return cls(names, weights)


def _monomial_degree(e: ExponentVector, weights) -> int:
    return sum(a * w for a, w in zip(e, weights))


class SparsePoly:
    """Immutable map from exponent vectors to nonzero rationals."""

    __slots__ = ("coords", "_terms")

    def __init__(self, coords: Coords, terms: Mapping[Sequence[int], object] | Iterable = ()):
        self.coords = coords
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentVector, Fraction] = {}
        n = len(coords)
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise DimensionError(f"exponent vector {e} in a ring with {n} coordinates")
            if any(x < 0 for x in e):
                raise DomainError(f"negative exponent in {e}")
            c = Fraction(c)
            if c:
                acc[e] = acc.get(e, Fraction(0)) + c
        self._terms = {e: c for e, c in acc.items() if c}

    # construction helpers
    @classmethod
    def zero(cls, coords: Coords) -> "SparsePoly":
        return cls(coords)

    @classmethod
    def constant(cls, coords: Coords, c) -> "SparsePoly":
        return cls(coords, {(0,) * len(coords): c})

    @classmethod
    def var(cls, coords: Coords, name: str) -> "SparsePoly":
        e = [0] * len(coords)
        e[coords.index(name)] = 1
        return cls(coords, {tuple(e): 1})

    @classmethod
    def monomial(cls, coords: Coords, e: Sequence[int], c=1) -> "SparsePoly":
        return cls(coords, {tuple(e): c})

    @property
    def terms(self) -> dict[ExponentVector, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: by weighted degree, then grlex, both descending."""
        w = self.coords.weights
        return sorted(self._terms.items(), key=lambda t: (_monomial_degree(t[0], w), sum(t[0]), t[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def support(self) -> list[ExponentVector]:
        return [e for e, _ in self.items()]

    # arithmetic
    def _check(self, other: "SparsePoly") -> None:
        if self.coords != other.coords:
            raise DomainError(f"polynomials live in different rings: {self.coords.names} vs {other.coords.names}")

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(self.coords, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SparsePoly(self.coords, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.coords, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SparsePoly(self.coords, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[ExponentVector, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return SparsePoly(self.coords, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        out = SparsePoly.constant(self.coords, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.coords == other.coords and self._terms == other._terms

    def __hash__(self):
        return hash((self.coords, frozenset(self._terms.items())))

    def __repr__(self):
        return f"SparsePoly({self.coords.header()!r}, {self.format()!r})"

    # structure
    def degree(self) -> int | None:
        """Weighted degree if homogeneous and nonzero, else None."""
        degs = {_monomial_degree(e, self.coords.weights) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def valuation(self, name: str) -> int:
        """Largest k such that name^k divides the polynomial."""
        if self.is_zero():
            raise DomainError("valuation of the zero polynomial")
        i = self.coords.index(name)
        return min(e[i] for e in self._terms)

    def divide_monomial(self, e: Sequence[int]) -> "SparsePoly":
        out = {}
        for t, c in self._terms.items():
            q = tuple(a - b for a, b in zip(t, e))
            if any(x < 0 for x in q):
                raise ArithmeticError(f"monomial {tuple(e)} does not divide the polynomial")
            out[q] = c
        return SparsePoly(self.coords, out)

    def monomial_content(self) -> ExponentVector:
        """The largest monomial dividing every term."""
        if self.is_zero():
            raise DomainError("content of the zero polynomial")
        return tuple(min(col) for col in zip(*self._terms))

    def variables(self) -> set[str]:
        used = set()
        for e in self._terms:
            used.update(n for n, x in zip(self.coords.names, e) if x)
        return used

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = " ".join(n if x == 1 else f"{n}^{x}" for n, x in zip(self.coords.names, e) if x)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c} * {mono}")
        return " + ".join(parts)

    def to_text(self) -> str:
        return self.coords.header() + "\n" + self.format() + "\n"


def parse_monomial(text: str, coords: Coords) -> ExponentVector:
    e = [0] * len(coords)
    for factor in text.replace("*", " ").split():
        name, _, k = factor.partition("^")
        if k and not k.isdigit():
            raise DomainError(f"bad exponent in {factor!r}")
        e[coords.index(name)] += int(k) if k else 1
    return tuple(e)


def _parse_coeff(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad coefficient {text!r}") from None


def parse_terms(body: str, coords: Coords) -> SparsePoly:
    body = " ".join(body.split())
    if body in ("", "0"):
        return SparsePoly.zero(coords)
    terms = []
    for raw in body.split("+"):
        raw = raw.strip()
        if not raw:
            raise DomainError(f"empty term in {body!r}")
        if re.match(r"^-?[0-9]+(/[0-9]+)?\s*\*", raw):
            c, _, mono = raw.partition("*")
            terms.append((parse_monomial(mono, coords), _parse_coeff(c)))
        elif re.fullmatch(r"-?[0-9]+(/[0-9]+)?", raw):
            terms.append(((0,) * len(coords), _parse_coeff(raw)))
        else:
            sign = -1 if raw.startswith("-") else 1
            terms.append((parse_monomial(raw.lstrip("-"), coords), sign))
    return SparsePoly(coords, terms)


def parse_poly(text: str) -> SparsePoly:
    lines = [ln for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("coords:"):
        raise DomainError("polynomial text must start with a 'coords:' header")
    coords = Coords.of(lines[0][len("coords:") :])
    return parse_terms(" ".join(lines[1:]), coords)


# --------------------------------------------------------------------------
# operations


def is_weighted_homogeneous(p: SparsePoly) -> tuple[int | None, bool]:
    """(degree, is_zero).  The degree is None for the zero polynomial and for
    inhomogeneous input; the flag tells the two apart."""
    if p.is_zero():
        return None, True
    return p.degree(), False


def _merge_coords(a: Coords, b: Coords) -> Coords:
    names, weights = list(a.names), list(a.weights)
    for n, w in zip(b.names, b.weights):
        if n in names:
            if weights[names.index(n)] != w:
                raise DomainError(f"coordinate {n} has weights {weights[names.index(n)]} and {w}")
        else:
            names.append(n)
            weights.append(w)
    return Coords(names, weights)


def _embed(p: SparsePoly, target: Coords) -> SparsePoly:
    idx = [target.index(n) for n in p.coords.names]
    out = []
    for e, c in p._terms.items():
        f = [0] * len(target)
        for i, x in zip(idx, e):
            f[i] = x
        out.append((f, c))
    return SparsePoly(target, out)


def substitute(p: SparsePoly, var: str, r: SparsePoly) -> SparsePoly:
    """Replace the coordinate ``var`` by ``r``.

    The result lives on p's coordinates without ``var``, followed by any
    coordinates of r not already present (``var`` itself is kept only if r
    uses it).
    """
    w = p.coords.weight(var)
    rd, rzero = is_weighted_homogeneous(r)
    if not rzero and rd != w:
        raise HomogeneityError(f"cannot substitute a polynomial of degree {rd} for {var} of weight {w}")
    base = p.coords if var in r.coords.names else p.coords.without(var)
    out_coords = _merge_coords(base, r.coords)
    r_emb = _embed(r, out_coords)
    vi = p.coords.index(var)
    keep = [(i, out_coords.index(n)) for i, n in enumerate(p.coords.names) if i != vi]
    powers: dict[int, SparsePoly] = {}
    total = SparsePoly.zero(out_coords)
    for e, c in p._terms.items():
        f = [0] * len(out_coords)
        for i, j in keep:
            f[j] = e[i]
        k = e[vi]
        if k not in powers:
            powers[k] = r_emb**k
        total = total + SparsePoly.monomial(out_coords, f, c) * powers[k]
    return total


def restrict_hyperplane(p: SparsePoly, var: str) -> SparsePoly:
    """Set ``var`` to zero; the result no longer has that coordinate."""
    i = p.coords.index(var)
    out = [(e[:i] + e[i + 1 :], c) for e, c in p._terms.items() if e[i] == 0]
    return SparsePoly(p.coords.without(var), out)


def restrict(p: SparsePoly, *names: str) -> SparsePoly:
    for n in names:
        p = restrict_hyperplane(p, n)
    return p


def drop_coords(p: SparsePoly, keep: Sequence[str]) -> SparsePoly:
    """Re-express p on a subset of its coordinates (p must not use the others)."""
    extra = p.variables() - set(keep)
    if extra:
        raise DomainError(f"polynomial still involves {sorted(extra)}")
    target = Coords(keep, [p.coords.weight(n) for n in keep])
    idx = [p.coords.index(n) for n in keep]
    return SparsePoly(target, [([e[i] for i in idx], c) for e, c in p._terms.items()])


# --------------------------------------------------------------------------
# binary forms


@dataclass(frozen=True)
class ProfileEntry:
    """``count`` points, each of multiplicity ``multiplicity`` and degree ``point_degree``.

    ``location`` is ``"[0:1]"`` or ``"[1:0]"`` for the coordinate points, or
    ``"factor"`` for the roots of a squarefree factor of degree ``count``.
    """

    multiplicity: int
    location: str
    point_degree: int
    count: int = 1


@dataclass(frozen=True)
class MultiplicityProfile:
    entries: tuple[ProfileEntry, ...]
    form_degree: int

    def multiplicities(self) -> tuple[int, ...]:
        out = []
        for e in self.entries:
            out.extend([e.multiplicity] * e.count)
        return tuple(sorted(out, reverse=True))

    def accounted_degree(self) -> int:
        return sum(e.multiplicity * e.point_degree * e.count for e in self.entries)

    def scaled(self, k: int) -> "MultiplicityProfile":
        """The profile of the k-th power of the form."""
        return MultiplicityProfile(
            tuple(ProfileEntry(e.multiplicity * k, e.location, e.point_degree, e.count) for e in self.entries),
            self.form_degree * k,
        )

    def to_dict(self) -> dict:
        return {
            "multiplicities": list(self.multiplicities()),
            "degree": self.form_degree,
            "entries": [
                {"multiplicity": e.multiplicity, "location": e.location, "point_degree": e.point_degree, "count": e.count}
                for e in self.entries
            ],
        }


def dehomogenize_binary(form: SparsePoly) -> tuple[int, int, list[Fraction]]:
    """Write a binary form as a^alpha b^beta H(a^p, b^q) and return (alpha, beta, H(t, 1)).

    Here (p, q) = (w_b, w_a) / gcd(w_a, w_b), and H(t, 1) is a polynomial in t
    with nonzero constant term.
    """
    if len(form.coords) != 2:
        raise DimensionError(f"binary form expected, got coordinates {form.coords.names}")
    d, zero = is_weighted_homogeneous(form)
    if zero:
        raise DomainError("the zero form has no multiplicity profile")
    if d is None:
        raise HomogeneityError("binary form is not weighted-homogeneous")
    wa, wb = form.coords.weights
    g = gcd(wa, wb)
    p = wb // g
    alpha, beta = form.monomial_content()
    rest = form.divide_monomial((alpha, beta))
    coeffs: dict[int, Fraction] = {}
    for (i, _j), c in rest._terms.items():
        coeffs[i // p] = c
    k = max(coeffs)
    h = [coeffs.get(t, Fraction(0)) for t in range(k + 1)]
    return alpha, beta, h


def binary_profile(form: SparsePoly) -> MultiplicityProfile:
    """Multiplicities of the points cut out by a binary form on a weighted line P(w_a, w_b)."""
    alpha, beta, h = dehomogenize_binary(form)
    wa, wb = form.coords.weights
    general = wa * wb // gcd(wa, wb)
    entries = []
    if alpha:
        entries.append(ProfileEntry(alpha, "[0:1]", wa))
    if beta:
        entries.append(ProfileEntry(beta, "[1:0]", wb))
    if len(h) > 1:
        _, factors = univariate.squarefree_decomposition(h)
        for s, m in factors:
            entries.append(ProfileEntry(m, "factor", general, univariate.degree(s)))
    prof = MultiplicityProfile(tuple(entries), form.degree())
    if prof.accounted_degree() != prof.form_degree:
        raise ArithmeticError(f"profile degree {prof.accounted_degree()} != form degree {prof.form_degree}")
    return prof


def plane_curve_genus(d: int, deltas: Sequence[int] = ()) -> int:
    """Geometric genus (d-1)(d-2)/2 - sum(deltas) of a plane curve of degree d."""
    if d < 1:
        raise DomainError(f"degree must be positive, got {d}")
    if any(x < 0 for x in deltas):
        raise DomainError("delta invariants must be nonnegative")
    g = (d - 1) * (d - 2) // 2 - sum(deltas)
    if g < 0:
        raise DomainError(f"negative genus {g}: the curve would be reducible or too singular")
    return g


# --------------------------------------------------------------------------
# random forms

_NUMERATORS = [n for n in range(-9, 10) if n]


def random_coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMERATORS), rng.randint(1, 7))


def random_homogeneous(coords: Coords, d: int, seed: int | random.Random) -> SparsePoly:
    """Every monomial of degree d with a nonzero small rational coefficient."""
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    mons = monomials_of_degree(WeightedSpace(coords.weights), d) if _gcd_one(coords.weights) else _monomials(coords, d)
    return SparsePoly(coords, [(e, random_coefficient(rng)) for e in mons])


def _gcd_one(weights) -> bool:
    g = 0
    for w in weights:
        g = gcd(g, w)
    return g == 1


def _monomials(coords: Coords, d: int) -> list[ExponentVector]:
    g = 0
    for w in coords.weights:
        g = gcd(g, w)
    if d % g:
        return []
    return monomials_of_degree(WeightedSpace([w // g for w in coords.weights]), d // g)
