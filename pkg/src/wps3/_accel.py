"""Integer kernels with a numba path and a pure-numpy fallback.

The backend is chosen from the ``WPS3_BACKEND`` environment variable
(``numba`` or ``numpy``) at import time; ``numba`` is the default when it is
importable.  ``use_backend`` switches it temporarily (tests, benchmarks).

The numba kernels work in int64.  Callers that need arbitrary precision go
through ``hilbert_table``, which only dispatches to numba when an a-priori bound
guarantees the table fits, and otherwise runs the object-dtype numpy path.
"""

from __future__ import annotations

import contextlib
import os
from math import comb

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
    from numba import njit
except ImportError:  # pragma: no cover
    numba = None

BACKENDS = ("numba", "numpy")
INT64_SAFE = 2**62

_requested = os.environ.get("WPS3_BACKEND", "numba").strip().lower()
if _requested not in BACKENDS:
    raise ImportError(f"WPS3_BACKEND must be one of {BACKENDS}, got {_requested!r}")
_backend = _requested if (_requested == "numpy" or numba is not None) else "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and numba is None:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


# --------------------------------------------------------------------------
# numba kernels

if numba is not None:

    @njit(cache=True)
    def _hilbert_table_nb(w, d):
        c = np.zeros(d + 1, np.int64)
        c[0] = 1
        for a in w:
            for k in range(a, d + 1):
                c[k] += c[k - a]
        return c

    @njit(cache=True)
    def _enumerate_nb(w, d, total):
        n = w.shape[0]
        out = np.empty((total, n), np.int64)
        cur = np.zeros(n, np.int64)
        rem = np.zeros(n, np.int64)
        row = 0
        i = 0
        rem[0] = d
        cur[0] = -1
        while i >= 0:
            if i == n - 1:
                if rem[i] % w[i] == 0:
                    cur[i] = rem[i] // w[i]
                    if row < total:
                        for j in range(n):
                            out[row, j] = cur[j]
                    row += 1
                i -= 1
                continue
            cur[i] += 1
            if cur[i] * w[i] > rem[i]:
                i -= 1
                continue
            rem[i + 1] = rem[i] - cur[i] * w[i]
            i += 1
            cur[i] = -1
        return out, row

    @njit(cache=True)
    def _has_divisor_nb(cands, gens):
        m, n = cands.shape
        k = gens.shape[0]
        out = np.zeros(m, np.bool_)
        for r in range(m):
            for g in range(k):
                ok = True
                for j in range(n):
                    if gens[g, j] > cands[r, j]:
                        ok = False
                        break
                if ok:
                    out[r] = True
                    break
        return out


# --------------------------------------------------------------------------
# numpy fallbacks


def _hilbert_table_np(weights, d):
    c = np.zeros(d + 1, dtype=object)
    c[0] = 1
    for a in weights:
        # c[k] += c[k - a] for increasing k is a prefix sum along each residue class
        for r in range(min(a, d + 1)):
            c[r::a] = np.cumsum(c[r::a])
    return c


def _enumerate_np(weights, d):
    n = len(weights)
    rows = np.zeros((1, 0), dtype=np.int64)
    rem = np.array([d], dtype=np.int64)
    for a in weights[:-1]:
        counts = rem // a + 1
        idx = np.repeat(np.arange(rows.shape[0]), counts)
        starts = np.cumsum(counts) - counts
        e = np.arange(idx.shape[0], dtype=np.int64) - np.repeat(starts, counts)
        rows = np.column_stack([rows[idx], e])
        rem = rem[idx] - a * e
    last = weights[-1]
    keep = rem % last == 0
    rows = np.column_stack([rows[keep], rem[keep] // last])
    return rows.reshape(-1, n)


def _has_divisor_np(cands, gens):
    if gens.shape[0] == 0 or cands.shape[0] == 0:
        return np.zeros(cands.shape[0], dtype=bool)
    return (gens[None, :, :] <= cands[:, None, :]).all(axis=2).any(axis=1)


# --------------------------------------------------------------------------
# dispatch


def _fits_int64(weights, d):
    # count(d) <= #{e : sum(e) <= d} = C(d + n, n)
    return comb(d + len(weights), len(weights)) < INT64_SAFE


def hilbert_table(weights, d: int) -> list[int]:
    """Number of monomials of each weighted degree 0..d (exact Python ints)."""
    w = tuple(int(a) for a in weights)
    if _backend == "numba" and _fits_int64(w, d):
        table = _hilbert_table_nb(np.asarray(w, dtype=np.int64), d)
        return [int(x) for x in table]
    return [int(x) for x in _hilbert_table_np(w, d)]


def enumerate_exponents(weights, d: int, total: int | None = None) -> np.ndarray:
    """All exponent vectors of weighted degree d, as rows in graded-lex order."""
    w = tuple(int(a) for a in weights)
    if _backend == "numba":
        if total is None:
            total = hilbert_table(w, d)[d]
        out, found = _enumerate_nb(np.asarray(w, dtype=np.int64), d, total)
        if found != total:
            raise RuntimeError(f"enumeration found {found} monomials of degree {d}, expected {total}")
    else:
        out = _enumerate_np(w, d)
    return grlex_sort(out)


def grlex_sort(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] <= 1:
        return rows
    keys = tuple(rows[:, j] for j in range(rows.shape[1] - 1, -1, -1)) + (rows.sum(axis=1),)
    return rows[np.lexsort(keys)]


def has_divisor(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Row mask: which candidates are componentwise >= some generator row."""
    cands = np.ascontiguousarray(cands, dtype=np.int64)
    gens = np.ascontiguousarray(gens, dtype=np.int64).reshape(-1, cands.shape[1])
    if _backend == "numba":
        return _has_divisor_nb(cands, gens)
    return _has_divisor_np(cands, gens)
