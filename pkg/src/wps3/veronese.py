"""n-Veronese subrings: minimal monomial generators and their binomial relations.

A monomial of degree divisible by n is a zero-sum sequence in Z/n (one entry
a_i mod n per factor x_i).  A minimal generator is a zero-sum sequence with no
proper zero-sum subsequence, and every sequence of length >= n has one, so a
minimal generator has total degree at most n.  Its weighted degree is then at
most n * max(a), i.e. its target weight is at most max(a).  Searching target
weights 1..max(a) is therefore complete, with no closure heuristic needed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .grading import DomainError, ExponentVector, WeightedSpace, monomial_array, weighted_degree
from .lattice import integer_kernel

_LETTERS = "vstrpqmn"


class IncompleteSearch(RuntimeError):
    """The requested search bound is too small to certify the generator list."""


class NotHypersurface(ValueError):
    def __init__(self, embedding: "VeroneseEmbedding"):
        k = len(embedding.generators)
        super().__init__(
            f"the {embedding.n}-Veronese image of {embedding.source} has {k} generators, "
            f"not {embedding.source.dim + 2}; it is not a hypersurface"
        )
        self.embedding = embedding

    @property
    def generators(self):
        return self.embedding.generators


@dataclass(frozen=True)
class VeroneseGenerator:
    monomial: ExponentVector
    target_weight: int
    name: str = ""


@dataclass(frozen=True)
class Binomial:
    """lhs - rhs, with lhs and rhs exponent vectors over the generators."""

    lhs: ExponentVector
    rhs: ExponentVector

    def degree(self, weights) -> int:
        return weighted_degree(self.lhs, weights)

    def format(self, names) -> str:
        return f"{_monomial_text(self.lhs, names)} = {_monomial_text(self.rhs, names)}"


@dataclass(frozen=True)
class VeroneseEmbedding:
    source: WeightedSpace
    n: int
    generators: tuple[VeroneseGenerator, ...]
    relations: tuple[Binomial, ...]
    certified_minimal: bool = field(default=False)

    @property
    def target_weights(self) -> tuple[int, ...]:
        return tuple(g.target_weight for g in self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def to_dict(self) -> dict:
        tw = self.target_weights
        return {
            "source": list(self.source.weights),
            "n": self.n,
            "target_weights": list(tw),
            "generators": [
                {"name": g.name, "monomial": list(g.monomial), "weight": g.target_weight} for g in self.generators
            ],
            "relations": [
                {
                    "lhs": list(r.lhs),
                    "rhs": list(r.rhs),
                    "degree": r.degree(tw),
                    "text": r.format(self.names),
                }
                for r in self.relations
            ],
            "certified_minimal": self.certified_minimal,
        }


def _monomial_text(e, names) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
    return "*".join(parts) if parts else "1"


def generator_names(weights) -> tuple[str, ...]:
    """Coordinate names: u for weight-1 generators, then v, s, t, r, ... by weight.

    A letter shared by several generators of the same weight gets subscripts.
    """
    counts = Counter(weights)
    letters = {}
    rest = iter(_LETTERS)
    for w in sorted(counts):
        if w == 1:
            letters[w] = "u"
        else:
            try:
                letters[w] = next(rest)
            except StopIteration:
                letters[w] = f"y{w}_"
    seen: Counter = Counter()
    names = []
    for w in weights:
        if counts[w] == 1:
            names.append(letters[w])
        else:
            names.append(f"{letters[w]}{seen[w]}")
        seen[w] += 1
    return tuple(names)


def veronese_generators(space: WeightedSpace, n: int, bound: int | None = None) -> list[VeroneseGenerator]:
    """Minimal monomial generators of the n-Veronese subring.

    Ordered by target weight, then by descending exponent vector (so x^5 comes
    before xy).  ``bound`` caps the target weight searched; it must be at least
    max(weights) for the answer to be certified complete.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    needed = max(space.weights)
    if bound is None:
        bound = needed
    if bound < needed:
        raise IncompleteSearch(
            f"target weights up to {needed} must be searched to certify completeness, bound is {bound}"
        )
    found = np.zeros((0, len(space)), dtype=np.int64)
    gens: list[tuple[ExponentVector, int]] = []
    for d in range(1, needed + 1):
        cands = monomial_array(space, n * d)
        if cands.shape[0] == 0:
            continue
        fresh = cands[~_accel.has_divisor(cands, found)] if found.shape[0] else cands
        if fresh.shape[0] == 0:
            continue
        rows = sorted((tuple(int(x) for x in r) for r in fresh), reverse=True)
        gens.extend((r, d) for r in rows)
        found = np.vstack([found, fresh])
    names = generator_names([d for _, d in gens])
    return [VeroneseGenerator(m, d, nm) for (m, d), nm in zip(gens, names)]


def _orient(c: list[int]) -> Binomial:
    pos = tuple(max(x, 0) for x in c)
    neg = tuple(max(-x, 0) for x in c)
    sp, sn = sum(1 for x in pos if x), sum(1 for x in neg if x)
    # the side with more variables goes on the left; ties keep the earliest generator left
    if sn > sp or (sn == sp and neg > pos):
        pos, neg = neg, pos
    return Binomial(pos, neg)


def toric_relations(gens) -> list[Binomial]:
    """Binomials from a saturated basis of the relation lattice among the generators."""
    gens = list(gens)
    if not gens:
        raise DomainError("no generators")
    mat = [[g.monomial[i] for g in gens] for i in range(len(gens[0].monomial))]
    return [_orient(list(c)) for c in integer_kernel(mat)]


def veronese_embedding(space: WeightedSpace, n: int) -> VeroneseEmbedding:
    gens = veronese_generators(space, n)
    rels = toric_relations(gens)
    # a rank-one relation lattice is generated by its primitive vector,
    # and that binomial generates the (principal, prime) toric ideal
    return VeroneseEmbedding(space, n, tuple(gens), tuple(rels), certified_minimal=len(rels) <= 1)


def embed_as_hypersurface(space: WeightedSpace, n: int):
    """(target space, relation, relation degree) when the image is a hypersurface."""
    emb = veronese_embedding(space, n)
    if len(emb.generators) != space.dim + 2:
        raise NotHypersurface(emb)
    (rel,) = emb.relations
    return WeightedSpace(emb.target_weights), rel, rel.degree(emb.target_weights)


def generates(gens, space: WeightedSpace, n: int, d_max: int) -> bool:
    """Whether every monomial of degree n*d, d <= d_max, is a product of generators.

    Independent of the search: a dynamic program over degrees that builds the
    semigroup from the generators.
    """
    by_weight = {}
    for g in gens:
        by_weight.setdefault(g.target_weight, []).append(np.array(g.monomial, dtype=np.int64))
    reached = {0: {tuple([0] * len(space))}}
    for d in range(1, d_max + 1):
        cur = set()
        for w, ms in by_weight.items():
            if w > d:
                continue
            for prev in reached[d - w]:
                p = np.array(prev, dtype=np.int64)
                for m in ms:
                    cur.add(tuple(int(x) for x in p + m))
        reached[d] = cur
        if len(cur) != monomial_array(space, n * d).shape[0]:
            return False
    return True
