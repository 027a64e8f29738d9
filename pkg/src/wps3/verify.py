"""The full verification suite, collected into one deterministic report."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .birational import (
    HANDWRITTEN_ROUND_TRIP,
    SEXTIC_P_PRIME,
    blowup_factorization,
    expected_indeterminacy,
    projection,
    sextic_model_maps,
    square_projection,
)
from .classify import (
    anticanonical_genus,
    enumerate_gorenstein_wps3,
    gorenstein_invariants,
    is_basepoint_free,
    primitive_genus,
)
from .grading import DomainError, WeightedSpace, hilbert_count
from .intersect import embedding_dimension_check, extension_consistency
from .poly import SparsePoly, random_homogeneous
from .profiles import oscnode_trichotomy, quintic_span_defect, run_profiles
from .reference import ReferenceData, load_reference
from .toric import MonomialMap, compose, equal_mod_scaling, indeterminacy_strata, pullback, scaling_vector
from .veronese import NotHypersurface, embed_as_hypersurface, veronese_embedding

PULLBACK_SEED = 20


@dataclass(frozen=True)
class Check:
    check_id: str
    anchor: str
    computed: object
    expected: object
    passed: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "computed": _plain(self.computed),
            "expected": _plain(self.expected),
            "pass": self.passed,
            "note": self.note,
        }


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    return v


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    def __post_init__(self):
        ids = [c.check_id for c in self.checks]
        dup = {i for i in ids if ids.count(i) > 1}
        if dup:
            raise ValueError(f"duplicate check ids: {sorted(dup)}")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }


def _eq(check_id, anchor, computed, expected, note="") -> Check:
    return Check(check_id, anchor, computed, expected, computed == expected, note)


# --------------------------------------------------------------------------


def classification_checks(ref: ReferenceData) -> list[Check]:
    spaces = enumerate_gorenstein_wps3()
    out = [_eq("classify.count", "classification", len(spaces), len(ref.gorenstein))]
    computed = sorted(s.weights for s in spaces)
    expected = sorted(r.weights.weights for r in ref.gorenstein)
    out.append(_eq("classify.weights", "classification", computed, expected))
    for r in ref.gorenstein:
        inv = gorenstein_invariants(r.weights)
        out.append(
            Check(
                f"classify.index.{r.row}",
                "classification",
                (inv.l, inv.sigma, inv.index),
                "sigma = index * l",
                inv.sigma == inv.index * inv.l,
            )
        )
    return out


def genus_checks(ref: ReferenceData) -> list[Check]:
    out = []
    for r in ref.gorenstein:
        g = anticanonical_genus(r.weights)
        out.append(_eq(f"hilbert.anticanonical.{r.row}", "hilbert", hilbert_count(r.weights, r.weights.sigma), g + 2))
    for c in ref.cases.values():
        g = anticanonical_genus(c.weights)
        out.append(_eq(f"genus.{c.case_id}", "genus", g, c.g))
        out.append(_eq(f"genus.primitive.{c.case_id}", "genus", primitive_genus(g, c.i_s), c.g_c))
    return out


def veronese_checks(ref: ReferenceData) -> list[Check]:
    out = []
    for row in ref.veronese.values():
        space = ref.cases[row.case_id].weights
        try:
            target, rel, deg = embed_as_hypersurface(space, row.n)
        except NotHypersurface as exc:
            out.append(Check(f"veronese.{row.case_id}", "veronese", f"{len(exc.generators)} generators", row.relation, False))
            continue
        names = veronese_embedding(space, row.n).names
        computed = (target.weights, names, rel.format(names), deg)
        expected = (row.target, row.names, row.relation, row.degree)
        out.append(_eq(f"veronese.{row.case_id}", "veronese", computed, expected))
        # the anticanonical system of the ambient hypersurface space X is O_X(sigma / n)
        bpf = is_basepoint_free(target, space.sigma // row.n)
        out.append(_eq(f"veronese.regular.{row.case_id}", "veronese", bpf, row.case_id not in (10, 12, 14)))

    square = WeightedSpace((2, 3, 10, 15))
    target, rel, deg = embed_as_hypersurface(square, 2)
    names = veronese_embedding(square, 2).names
    out.append(
        _eq(
            "veronese.square",
            "veronese",
            (target.weights, rel.format(names), deg),
            ((1, 3, 5, 9, 15), "v*r = t^2", 18),
        )
    )
    try:
        embed_as_hypersurface(square, 6)
        out.append(Check("veronese.sixfold", "veronese", "hypersurface", "NotHypersurface", False))
    except NotHypersurface as exc:
        ws = tuple(g.target_weight for g in exc.generators)
        out.append(_eq("veronese.sixfold", "veronese", ws, (1, 1, 2, 3, 5, 5)))
    return out


def toric_checks() -> list[Check]:
    b = blowup_factorization()
    fan = b.fan_p
    e = {n: fan.rays[fan.index_of(n)].vector for n in ("x", "y", "z", "w")}
    weights = (1, 4, 5, 10)
    total = tuple(sum(a * e[n][k] for a, n in zip(weights, "xyzw")) for k in range(3))
    zeta = b.ray_from_p
    out = [
        _eq("toric.rays", "blow-up factorization", tuple(e[n] for n in "xyzw"), ((-4, -5, -10), (1, 0, 0), (0, 1, 0), (0, 0, 1))),
        _eq("toric.balance", "blow-up factorization", total, (0, 0, 0)),
        _eq("toric.new-ray", "blow-up factorization", (zeta, b.multiplicity_from_p), ((-1, -1, -2), 4)),
        _eq(
            "toric.zeta-relation",
            "blow-up factorization",
            tuple(4 * zeta[k] for k in range(3)),
            tuple(e["x"][k] + e["z"][k] + 2 * e["w"][k] for k in range(3)),
        ),
        _eq(
            "toric.x-relation",
            "blow-up factorization",
            b.ray_from_p_prime,
            tuple(5 * zeta[k] + e["y"][k] for k in range(3)),
        ),
        _eq("toric.same-fan", "blow-up factorization", b.fan_from_p.same_as(b.fan_from_p_prime), True),
        _eq("toric.proper", "blow-up factorization", b.fan_from_p.is_complete_and_proper(), True),
        _eq("toric.commutes", "blow-up factorization", equal_mod_scaling(b.composite, b.eps2), True,
            f"scaling vector {_plain(scaling_vector(b.composite, b.eps2))}"),
    ]
    for case in (9, 10, 12, 13, 14):
        f = projection(case)
        # each stratum lists the coordinates that stay nonzero on it
        strata = [sorted(s) for s in indeterminacy_strata(f)]
        out.append(_eq(f"toric.indeterminacy.{case}", "projections", strata, [[expected_indeterminacy(case)]]))
    return out


def sextic_model_checks(ref: ReferenceData) -> list[Check]:
    maps = sextic_model_maps()
    out = []
    rt = compose(maps["phi"], maps["phi_inv"])
    out.append(_eq("sextic.round-trip", "P(1,2,3,6) model", equal_mod_scaling(rt, maps["id"]), True, rt.format()))
    try:
        MonomialMap.build(SEXTIC_P_PRIME, SEXTIC_P_PRIME, HANDWRITTEN_ROUND_TRIP)
        rejected = False
    except DomainError:
        rejected = True
    out.append(
        Check("sextic.misquoted-round-trip", "P(1,2,3,6) model", rejected, True, rejected,
              f"{HANDWRITTEN_ROUND_TRIP} is not homogeneous; the last entry must be a0^6 b")
    )
    out.append(
        _eq("sextic.veronese-factor", "P(1,2,3,6) model", equal_mod_scaling(compose(maps["v2"], maps["phi_inv"]), maps["psi"]), True)
    )
    out.append(_eq("sextic.hilbert-P", "P(1,2,3,6) model", hilbert_count(WeightedSpace((1, 2, 3, 6)), 12), 27))
    out.append(_eq("sextic.hilbert-P-prime", "P(1,2,3,6) model", hilbert_count(WeightedSpace((1, 1, 1, 3)), 5), 27))
    span, full, missing = quintic_span_defect()
    out.append(_eq("sextic.quintic-span", "P(1,2,3,6) model", (span, full, len(missing)), (24, 27, 3)))
    g_c = ref.cases[11].g_c
    tri = oscnode_trichotomy(g_c)
    out.append(
        _eq("sextic.trichotomy", "P(1,2,3,6) model", [(d, g) for d, g, _ in tri], [(1, 9), (2, 8), (3, 7)])
    )
    out.append(_eq("sextic.oscnode", "P(1,2,3,6) model", [d for d, _, ok in tri if ok], [3]))
    return out


def degree_checks(ref: ReferenceData) -> list[Check]:
    out = []
    for case in ref.cases.values():
        seen: dict[str, int] = {}
        for r in extension_consistency(case, ref):
            base = f"extension.{case.case_id}{r.part}"
            seen[base] = seen.get(base, 0) + 1
            cid = base if seen[base] == 1 else f"{base}.{seen[base]}"
            note = f"{r.check}; {r.note}" if r.note else r.check
            out.append(Check(cid, "extension", r.computed, r.expected, r.passed, note))
        for m in ref.models_for(case.case_id):
            if len(m.equation_degrees) == 1 and m.base_dim == 0:
                r = embedding_dimension_check(m, case.g)
                out.append(Check(f"embedding.{m.label}", "extension", r.computed, r.expected, r.passed, r.check))
    return out


def pullback_checks() -> list[Check]:
    rng = random.Random(PULLBACK_SEED)
    out = []
    phi = projection(9)
    c = phi.target_coords
    quintic = SparsePoly.var(c, "u0") * random_homogeneous(c, 4, rng) + SparsePoly.var(c, "u1") ** 5
    pulled = pullback(phi, quintic)
    content = pulled.monomial_content()
    quotient = pulled.divide_monomial(content)
    out.append(_eq("pullback.quintic", "pullback", (content, quotient.degree()), ((5, 0, 0, 0), 20)))

    psi = square_projection()
    c = psi.target_coords
    form = SparsePoly.var(c, "v'") * random_homogeneous(c, 15, rng) + SparsePoly.var(c, "t'") ** 2
    pulled = pullback(psi, form)
    content = pulled.monomial_content()
    quotient = pulled.divide_monomial(content)
    out.append(_eq("pullback.square", "pullback", (content, quotient.degree()), ((0, 2, 0, 0), 30)))
    return out


def profile_checks() -> list[Check]:
    out = []
    for r in run_profiles():
        note = r.description if not r.notes else f"{r.description}; " + "; ".join(r.notes)
        out.append(Check(r.check_id, "restriction profile", r.computed, r.expected, r.passed, note))
    return out


def verify_all(reference: ReferenceData | None = None) -> VerificationReport:
    ref = reference or load_reference()
    checks = (
        classification_checks(ref)
        + genus_checks(ref)
        + veronese_checks(ref)
        + toric_checks()
        + degree_checks(ref)
        + sextic_model_checks(ref)
        + pullback_checks()
        + profile_checks()
    )
    return VerificationReport(tuple(checks))
