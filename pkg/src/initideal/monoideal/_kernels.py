"""Batch divisibility kernels on int64 exponent matrices.

Rows are exponent vectors.  Two interchangeable backends exist: numba
``@njit`` loops and a broadcasting numpy path.  Set the environment
variable ``INITIDEAL_NO_NUMBA=1`` (or uninstall numba) to force numpy.
Both backends return identical results; ``tests/test_kernels.py`` checks it.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("INITIDEAL_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by INITIDEAL_NO_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


# ----------------------------------------------------------------------
# numpy path
# ----------------------------------------------------------------------


def minimal_mask_numpy(E: np.ndarray) -> np.ndarray:
    """``keep[i]`` is False iff another row divides row ``i`` (ties: first copy kept)."""
    n = E.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.bool_)
    div = np.all(E[None, :, :] <= E[:, None, :], axis=2)  # div[i, j]: row j | row i
    eq = np.all(E[None, :, :] == E[:, None, :], axis=2)
    idx = np.arange(n)
    removers = div & (~eq | (idx[None, :] < idx[:, None]))
    np.fill_diagonal(removers, False)
    return ~removers.any(axis=1)


def contains_mask_numpy(G: np.ndarray, M: np.ndarray) -> np.ndarray:
    """``out[i]`` is True iff some row of ``G`` divides row ``i`` of ``M``."""
    if G.shape[0] == 0 or M.shape[0] == 0:
        return np.zeros(M.shape[0], dtype=np.bool_)
    return np.any(np.all(G[None, :, :] <= M[:, None, :], axis=2), axis=1)


# ----------------------------------------------------------------------
# numba path
# ----------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _minimal_mask_jit(E):
        n, r = E.shape
        keep = np.ones(n, dtype=np.bool_)
        for i in range(n):
            for j in range(n):
                if i == j or not keep[j]:
                    continue
                div = True
                same = True
                for t in range(r):
                    if E[j, t] > E[i, t]:
                        div = False
                        break
                    if E[j, t] != E[i, t]:
                        same = False
                if div and (j < i or not same):
                    keep[i] = False
                    break
        return keep

    @njit(cache=True)
    def _contains_mask_jit(G, M):
        ng, r = G.shape
        nm = M.shape[0]
        out = np.zeros(nm, dtype=np.bool_)
        for i in range(nm):
            for j in range(ng):
                div = True
                for t in range(r):
                    if G[j, t] > M[i, t]:
                        div = False
                        break
                if div:
                    out[i] = True
                    break
        return out

    def minimal_mask_numba(E: np.ndarray) -> np.ndarray:
        return _minimal_mask_jit(np.ascontiguousarray(E, dtype=np.int64))

    def contains_mask_numba(G: np.ndarray, M: np.ndarray) -> np.ndarray:
        return _contains_mask_jit(np.ascontiguousarray(G, dtype=np.int64),
                                  np.ascontiguousarray(M, dtype=np.int64))

    minimal_mask = minimal_mask_numba
    contains_mask = contains_mask_numba
    BACKEND = "numba"
else:
    minimal_mask = minimal_mask_numpy
    contains_mask = contains_mask_numpy
    BACKEND = "numpy"


def as_matrix(monomials, nvars: int) -> np.ndarray:
    if not monomials:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.asarray(monomials, dtype=np.int64).reshape(len(monomials), nvars)
