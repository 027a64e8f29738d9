"""Fans of weighted projective 3-spaces, star subdivisions, and monomial maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .grading import DimensionError, DomainError, ExponentVector, WeightedSpace
from .lattice import det, primitive, quotient_projection, rank
from .poly import Coords, SparsePoly, is_weighted_homogeneous, parse_monomial


class FanError(ValueError):
    pass


class DegenerateSubdivision(FanError):
    pass


class CompositionError(ValueError):
    pass


# --------------------------------------------------------------------------
# fans


@dataclass(frozen=True)
class Ray:
    vector: tuple[int, ...]

    def __init__(self, vector: Sequence[int]):
        v = tuple(int(x) for x in vector)
        if primitive(v)[1] != 1:
            raise FanError(f"ray {v} is not primitive")
        object.__setattr__(self, "vector", v)


@dataclass(frozen=True)
class Fan:
    """A simplicial fan: rays plus maximal cones as sets of ray indices."""

    rays: tuple[Ray, ...]
    max_cones: tuple[frozenset[int], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.names and len(self.names) != len(self.rays):
            raise FanError("one name per ray is required")
        for cone in self.max_cones:
            vecs = [self.rays[i].vector for i in cone]
            if rank(vecs) != len(vecs):
                raise FanError(f"cone {sorted(cone)} is not simplicial")

    @property
    def dim(self) -> int:
        return len(self.rays[0].vector)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else f"r{i}"

    def index_of(self, name_or_vector) -> int:
        if isinstance(name_or_vector, str):
            return self.names.index(name_or_vector)
        return [r.vector for r in self.rays].index(tuple(name_or_vector))

    def cone_vectors(self) -> frozenset[frozenset[tuple[int, ...]]]:
        return frozenset(frozenset(self.rays[i].vector for i in c) for c in self.max_cones)

    def ray_vectors(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.vector for r in self.rays)

    def same_as(self, other: "Fan") -> bool:
        """Equality of fans as sets of rays and cones, ignoring names and order."""
        return self.ray_vectors() == other.ray_vectors() and self.cone_vectors() == other.cone_vectors()

    def cones_containing(self, face: frozenset[int]) -> list[frozenset[int]]:
        return [c for c in self.max_cones if face <= c]

    def is_complete_and_proper(self) -> bool:
        """Certificate that the cones tile R^3 without overlap.

        Every facet (pair of rays) of a maximal cone must be shared by exactly
        two cones lying on opposite sides of it, and a fixed generic vector must
        lie in exactly one cone.  Together these force a proper complete fan.
        """
        if self.dim != 3:
            raise FanError("the tiling certificate is implemented for 3-dimensional fans")
        facets: dict[frozenset[int], list[int]] = {}
        for cone in self.max_cones:
            if len(cone) != 3:
                return False
            for f in combinations(sorted(cone), 2):
                (other,) = cone - set(f)
                a, b = (self.rays[i].vector for i in f)
                side = det([a, b, self.rays[other].vector])
                facets.setdefault(frozenset(f), []).append(1 if side > 0 else -1)
        if any(sorted(s) != [-1, 1] for s in facets.values()):
            return False
        for probe in ((1, 7919, 104729), (104723, -7, 31), (-13, 1009, -77)):
            if all(det([self.rays[i].vector for i in sorted(f)] + [probe]) for f in facets):
                return sum(self._contains_interior(c, probe) for c in self.max_cones) == 1
        raise FanError("no generic probe vector found")

    def _contains_interior(self, cone: frozenset[int], v) -> bool:
        vecs = [self.rays[i].vector for i in sorted(cone)]
        d = det(vecs)
        for k in range(3):
            m = list(vecs)
            m[k] = tuple(v)
            if Fraction(det(m), d) <= 0:
                return False
        return True

    def to_dict(self) -> dict:
        out = {
            "rays": [list(r.vector) for r in self.rays],
            "cones": sorted(sorted(c) for c in self.max_cones),
        }
        if self.names:
            out["names"] = list(self.names)
        return out


def wps_fan(space: WeightedSpace, names: Sequence[str] = ()) -> Fan:
    """Fan of P(a0, ..., a3): rays v_i with sum a_i v_i = 0, all 3-subsets as cones.

    If some weight a_k divides all the others, the other rays are the standard
    basis and v_k = -(a_j / a_k).  Otherwise the rays are the columns of the
    canonical (Hermite normal form) projection with kernel spanned by the weights.
    """
    w = space.weights
    if len(w) != 4:
        raise DomainError(f"fans are built for weighted projective 3-spaces, got {space}")
    k = next((i for i, a in enumerate(w) if all(b % a == 0 for b in w)), None)
    if k is not None:
        others = [j for j in range(4) if j != k]
        vecs = [None] * 4
        for pos, j in enumerate(others):
            e = [0, 0, 0]
            e[pos] = 1
            vecs[j] = tuple(e)
        vecs[k] = tuple(-w[j] // w[k] for j in others)
    else:
        p = quotient_projection(w)
        vecs = [tuple(row[j] for row in p) for j in range(4)]
    cones = tuple(frozenset(c) for c in combinations(range(4), 3))
    return Fan(tuple(Ray(v) for v in vecs), cones, tuple(names))


def weighted_blowup(fan: Fan, face: Sequence[int], coeffs: Sequence[int], name: str = "") -> tuple[Fan, Ray, int]:
    """Star subdivision at the primitive ray of sum(coeffs_i * ray_i) over a cone of the fan.

    Returns (new fan, new ray, m) with m * new ray = sum(coeffs_i * ray_i).
    Every maximal cone containing the face is replaced by the cones obtained by
    swapping one ray of the face for the new ray.
    """
    face = list(face)
    if len(face) != len(coeffs):
        raise DimensionError("one coefficient per ray of the face is required")
    if any(c < 1 for c in coeffs):
        raise DomainError("weighted blow-up coefficients must be positive")
    fset = frozenset(face)
    containing = fan.cones_containing(fset)
    if not containing:
        raise FanError(f"{sorted(face)} is not a cone of the fan")
    total = [sum(c * fan.rays[i].vector[j] for i, c in zip(face, coeffs)) for j in range(fan.dim)]
    vec, m = primitive(total)
    if vec in fan.ray_vectors():
        raise DegenerateSubdivision(f"ray {vec} is already in the fan")
    new = len(fan.rays)
    cones = [c for c in fan.max_cones if not fset <= c]
    for c in containing:
        for r in face:
            cones.append((c - {r}) | {new})
    names = fan.names + (name or f"r{new}",) if fan.names else ()
    ray = Ray(vec)
    return Fan(fan.rays + (ray,), tuple(cones), names), ray, m


# --------------------------------------------------------------------------
# monomial maps


@dataclass(frozen=True)
class MonomialMap:
    """A rational map given coordinatewise by monomials.

    ``columns[j]`` is the exponent vector (over the source coordinates) of the
    monomial giving target coordinate j.  ``grading`` has one row per grading
    of the source (two rows for a space like a weighted blow-up).
    """

    source_names: tuple[str, ...]
    grading: tuple[tuple[int, ...], ...]
    target: WeightedSpace
    target_names: tuple[str, ...]
    columns: tuple[ExponentVector, ...]

    def __post_init__(self):
        n = len(self.source_names)
        if any(len(row) != n for row in self.grading):
            raise DimensionError("grading rows must have one entry per source coordinate")
        if len(self.target_names) != len(self.target) or len(self.columns) != len(self.target):
            raise DimensionError("one name and one monomial per target coordinate are required")
        if any(len(c) != n or min(c) < 0 for c in self.columns):
            raise DimensionError("monomials must be nonnegative exponent vectors over the source")
        self.degree_ratio()

    @classmethod
    def build(cls, source: str, target: str, expression: str, grading: Sequence[Sequence[int]] | None = None):
        """``build("x:1 y:4 z:5 w:10", "u0:1 u1:1 u2:1 v:2", "[x^5 : x y : z : w]")``."""
        src = Coords.of(source)
        tgt = Coords.of(target)
        body = expression.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise DomainError(f"map expression must be bracketed: {expression!r}")
        cols = tuple(parse_monomial(part, src) for part in body[1:-1].split(":"))
        rows = tuple(tuple(r) for r in grading) if grading is not None else (src.weights,)
        return cls(src.names, rows, WeightedSpace(tgt.weights), tgt.names, cols)

    @classmethod
    def identity(cls, space: WeightedSpace, names: Sequence[str]) -> "MonomialMap":
        n = len(space)
        cols = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
        return cls(tuple(names), (space.weights,), space, tuple(names), cols)

    @property
    def source_coords(self) -> Coords:
        return Coords(self.source_names, self.grading[0])

    @property
    def target_coords(self) -> Coords:
        return Coords(self.target_names, self.target.weights)

    def source_degree(self, e: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(g * x for g, x in zip(row, e)) for row in self.grading)

    def degree_ratio(self) -> tuple[Fraction, ...]:
        """The common vector D_j / t_j, where D_j is the source multidegree of column j."""
        ratio = None
        for col, t in zip(self.columns, self.target.weights):
            r = tuple(Fraction(d, t) for d in self.source_degree(col))
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise DomainError("map is not homogeneous: column degrees are not proportional to the target weights")
        return ratio

    def format(self) -> str:
        def mono(e):
            s = " ".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.source_names, e) if k)
            return s or "1"

        return "[" + " : ".join(mono(c) for c in self.columns) + "]"

    def to_dict(self) -> dict:
        return {
            "source": list(self.source_names),
            "grading": [list(r) for r in self.grading],
            "target": {n: w for n, w in zip(self.target_names, self.target.weights)},
            "exponents": {n: list(c) for n, c in zip(self.target_names, self.columns)},
            "expression": self.format(),
        }


def compose(g: MonomialMap, f: MonomialMap) -> MonomialMap:
    """g after f: substitute f's monomials into g's."""
    if f.target_names != g.source_names or (f.target.weights,) != g.grading:
        raise CompositionError(
            f"target of the inner map {list(zip(f.target_names, f.target.weights))} does not match "
            f"the source of the outer map {list(zip(g.source_names, g.grading[0]))}"
        )
    n = len(f.source_names)
    cols = tuple(
        tuple(sum(e_b * f.columns[b][i] for b, e_b in enumerate(col)) for i in range(n)) for col in g.columns
    )
    return MonomialMap(f.source_names, f.grading, g.target, g.target_names, cols)


def _same_frame(f: MonomialMap, g: MonomialMap) -> bool:
    return (
        f.source_names == g.source_names
        and f.grading == g.grading
        and f.target.weights == g.target.weights
    )


def scaling_vector(f: MonomialMap, g: MonomialMap) -> tuple[Fraction, ...] | None:
    """The rational c with columns_f[j] - columns_g[j] = t_j * c for all j, if any.

    Such a c means f = g up to the weighted scaling by the (possibly fractional)
    monomial source^c, i.e. the two maps agree as maps to the weighted space.
    """
    if not _same_frame(f, g):
        return None
    c = None
    for cf, cg, t in zip(f.columns, g.columns, f.target.weights):
        cj = tuple(Fraction(a - b, t) for a, b in zip(cf, cg))
        if c is None:
            c = cj
        elif cj != c:
            return None
    return c


def equal_mod_scaling(f: MonomialMap, g: MonomialMap) -> bool:
    return scaling_vector(f, g) is not None


def pullback(f: MonomialMap, p: SparsePoly) -> SparsePoly:
    """Substitute the monomials of f into a polynomial on the target."""
    if p.coords != f.target_coords:
        raise DomainError(f"polynomial coordinates {p.coords.names} do not match the target {f.target_names}")
    d, zero = is_weighted_homogeneous(p)
    if not zero and d is None:
        raise DomainError("pullback of an inhomogeneous polynomial")
    n = len(f.source_names)
    terms = []
    for e, c in p.terms.items():
        terms.append((tuple(sum(k * f.columns[j][i] for j, k in enumerate(e)) for i in range(n)), c))
    return SparsePoly(f.source_coords, terms)


def indeterminacy_strata(f: MonomialMap) -> list[frozenset[str]]:
    """Maximal sets S of source coordinates such that the torus orbit where
    exactly the coordinates in S are nonzero lies in the base locus of f.

    A singleton {y} is the coordinate point p_y.
    """
    n = len(f.source_names)
    supports = [frozenset(i for i in range(n) if c[i]) for c in f.columns]
    bad = []
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            ss = frozenset(s)
            if not any(sup <= ss for sup in supports):
                bad.append(ss)
    maximal = [s for s in bad if not any(s < t for t in bad)]
    return sorted((frozenset(f.source_names[i] for i in s) for s in maximal), key=lambda s: sorted(s))
