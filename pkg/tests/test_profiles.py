import itertools
import logging
import random

import pytest

from wps3 import profiles
from wps3.birational import sextic_model_maps
from wps3.profiles import (
    PIPELINES,
    NotGeneric,
    oscnode_trichotomy,
    quintic_span_defect,
    run_profiles,
)


@pytest.mark.parametrize("check_id,desc,fn,expected", PIPELINES, ids=[p[0] for p in PIPELINES])
@pytest.mark.parametrize("seed", [10, 11, 12])
def test_pipelines(check_id, desc, fn, expected, seed):
    _, prof, _ = profiles._with_reseed(check_id, seed, fn)
    assert prof.multiplicities() == expected
    assert prof.accounted_degree() == prof.form_degree


def test_run_profiles_default_seeds():
    runs = run_profiles()
    assert len(runs) == 3 * len(PIPELINES)
    assert all(r.passed for r in runs)
    assert len({r.check_id for r in runs}) == len(runs)


def test_reseed_is_logged(caplog):
    calls = []

    def flaky(rng: random.Random):
        calls.append(1)
        if len(calls) == 1:
            raise NotGeneric("forced")
        return profiles.hyperelliptic_tangent(rng)

    with caplog.at_level(logging.INFO, logger="wps3.profiles"):
        used, prof, notes = profiles._with_reseed("flaky", 5, flaky)
    assert used == 1005 and prof.multiplicities() == (2,)
    assert notes and "seed 5 rejected" in notes[0]
    assert "reseeding" in caplog.text


def test_reseed_gives_up():
    def never(rng):
        raise NotGeneric("always")

    with pytest.raises(RuntimeError):
        profiles._with_reseed("never", 0, never)


def test_trichotomy():
    assert oscnode_trichotomy(7) == [(1, 9, False), (2, 8, False), (3, 7, True)]


def test_quintic_span_brute_force():
    span, full, missing = quintic_span_defect()
    assert (span, full) == (24, 27)
    assert sorted(missing) == [(0, 0, 5, 0), (0, 1, 4, 0), (0, 2, 3, 0)]
    assert full + len(missing) == 30
    # oracle: images of all 12-ic monomials under x = a0, y = a0 a1, z = a0^2 a2, w = a0^3 b
    reached = set()
    for e in itertools.product(range(13), range(7), range(5), range(3)):
        if e[0] + 2 * e[1] + 3 * e[2] + 6 * e[3] != 12:
            continue
        a0 = e[0] + e[1] + 2 * e[2] + 3 * e[3]
        img = (a0, e[1], e[2], e[3])
        if a0 >= 7:
            reached.add((a0 - 7,) + img[1:])
    assert len(reached) == span


def test_phi_inverse_has_sextic_content():
    maps = sextic_model_maps()
    assert maps["phi_inv"].format() == "[a0 : a0 a1 : a0^2 a2 : a0^3 b]"
