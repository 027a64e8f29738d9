"""The concrete monomial maps and fans used by the verification suite.

Each projection phi drops the last Veronese coordinate, realizing the space
birationally as a weighted 3-space P' of smaller weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import WeightedSpace
from .toric import Fan, MonomialMap, compose, wps_fan, weighted_blowup

XYZW = ("x", "y", "z", "w")


def _src(weights) -> str:
    return " ".join(f"{n}:{a}" for n, a in zip(XYZW, weights))


# case -> (weights, target coordinates of P', expression, expected indeterminacy point)
PROJECTIONS = {
    9: ((1, 4, 5, 10), "u0:1 u1:1 u2:1 v:2", "[x^5 : x y : z : w]", "y"),
    10: ((1, 2, 6, 9), "u0:1 u1:1 v:3 s:5", "[x^2 : y : z : x w]", "w"),
    12: ((1, 3, 8, 12), "u0:1 u1:1 v:3 s:4", "[x^3 : y : x z : w]", "z"),
    13: ((1, 6, 14, 21), "u0:1 u1:1 v:2 s:3", "[x^7 : x y : z : w]", "y"),
    14: ((2, 3, 10, 15), "u:1 v:2 s:4 t:5", "[y : x^3 : x z : w]", "z"),
}


def projection(case_id: int) -> MonomialMap:
    weights, target, expr, _ = PROJECTIONS[case_id]
    return MonomialMap.build(_src(weights), target, expr)


def expected_indeterminacy(case_id: int) -> str:
    return PROJECTIONS[case_id][3]


def square_projection() -> MonomialMap:
    """P(2,3,10,15) -> P(1,3,5,9), the 2-Veronese without its last coordinate."""
    return MonomialMap.build(_src((2, 3, 10, 15)), "u':1 v':3 s':5 t':9", "[x : y^2 : z : y w]")


# --------------------------------------------------------------------------
# the blow-up factorization of P(1,4,5,10) -> P(1,1,1,2)

BLOWUP_GRADING = ((1, 0, 4, 5, 10), (0, 1, 1, 1, 2))
BLOWUP_SOURCE = "x:1 zeta:1 y:4 z:5 w:10"


@dataclass(frozen=True)
class BlowupFactorization:
    fan_p: Fan
    fan_p_prime: Fan
    fan_from_p: Fan
    fan_from_p_prime: Fan
    ray_from_p: tuple[int, ...]
    multiplicity_from_p: int
    ray_from_p_prime: tuple[int, ...]
    multiplicity_from_p_prime: int
    phi: MonomialMap
    eps1: MonomialMap
    eps2: MonomialMap

    @property
    def composite(self) -> MonomialMap:
        return compose(self.phi, self.eps1)


def blowup_factorization() -> BlowupFactorization:
    fan_p = wps_fan(WeightedSpace((1, 4, 5, 10)), ("x", "y", "z", "w"))
    fan_pp = wps_fan(WeightedSpace((1, 1, 1, 2)), ("zeta", "y", "z", "w"))
    # weighted blow-up of P at p_y: subdivide the cone {x, z, w} with weights (1, 1, 2)
    from_p, ray_p, m_p = weighted_blowup(fan_p, [fan_p.index_of(n) for n in ("x", "z", "w")], (1, 1, 2), "zeta")
    # on P' the same fan arises by subdividing the 2-cone {zeta, y} with weights (5, 1)
    from_pp, ray_pp, m_pp = weighted_blowup(fan_pp, [fan_pp.index_of(n) for n in ("zeta", "y")], (5, 1), "x")
    phi = projection(9)
    eps1 = MonomialMap.build(
        BLOWUP_SOURCE, "x:1 y:4 z:5 w:10", "[x zeta : y zeta^3 : z zeta^4 : w zeta^8]", BLOWUP_GRADING
    )
    eps2 = MonomialMap.build(
        BLOWUP_SOURCE, "u0:1 u1:1 u2:1 v:2", "[x^5 zeta : x y : z : w]", BLOWUP_GRADING
    )
    return BlowupFactorization(fan_p, fan_pp, from_p, from_pp, ray_p.vector, m_p, ray_pp.vector, m_pp, phi, eps1, eps2)


# --------------------------------------------------------------------------
# P(1,2,3,6) and its birational model P(1,1,1,3)

SEXTIC_P = "x:1 y:2 z:3 w:6"
SEXTIC_P_PRIME = "a0:1 a1:1 a2:1 b:3"
SEXTIC_X = "u0:1 u1:1 v:2 s0:3 s1:3"
# phi o phi^-1 with the last entry misquoted as a0^3 b (it is a0^6 b); kept to show it is rejected
HANDWRITTEN_ROUND_TRIP = "[a0^3 : a0^2 a1 : a0^2 a2 : a0^3 b]"


def sextic_model_maps() -> dict[str, MonomialMap]:
    return {
        "phi": MonomialMap.build(SEXTIC_P, SEXTIC_P_PRIME, "[x^3 : x y : z : x^3 w]"),
        "phi_inv": MonomialMap.build(SEXTIC_P_PRIME, SEXTIC_P, "[a0 : a0 a1 : a0^2 a2 : a0^3 b]"),
        "v2": MonomialMap.build(SEXTIC_P, SEXTIC_X, "[x^2 : y : x z : z^2 : w]"),
        "psi": MonomialMap.build(SEXTIC_P_PRIME, SEXTIC_X, "[a0 : a1 : a0 a2 : a0 a2^2 : b]"),
        "id": MonomialMap.build(SEXTIC_P_PRIME, SEXTIC_P_PRIME, "[a0 : a1 : a2 : b]"),
    }
