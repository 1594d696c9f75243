import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from initideal.monoideal import _kernels as K


def matrices(max_rows=12, max_cols=5):
    return st.integers(1, max_cols).flatmap(lambda r: st.lists(
        st.tuples(*[st.integers(0, 4)] * r), max_size=max_rows).map(
            lambda rows: np.array(rows, dtype=np.int64).reshape(len(rows), r)))


def minimal_ref(E):
    rows = [tuple(x) for x in E]
    keep = []
    for i, a in enumerate(rows):
        removed = any(
            j != i and all(b[t] <= a[t] for t in range(len(a))) and (b != a or j < i)
            for j, b in enumerate(rows))
        keep.append(not removed)
    return keep


@given(matrices())
def test_minimal_mask_numpy_matches_reference(E):
    assert list(K.minimal_mask_numpy(E)) == minimal_ref(E)


@given(matrices(), st.data())
def test_contains_mask_numpy_matches_reference(G, data):
    r = G.shape[1]
    M = np.array(data.draw(st.lists(st.tuples(*[st.integers(0, 5)] * r), max_size=10)),
                 dtype=np.int64).reshape(-1, r)
    want = [any(all(g[t] <= m[t] for t in range(r)) for g in G) for m in M]
    assert list(K.contains_mask_numpy(G, M)) == want


@pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba backend not active")
@given(matrices(), st.data())
def test_backends_agree(E, data):
    r = E.shape[1]
    M = np.array(data.draw(st.lists(st.tuples(*[st.integers(0, 5)] * r), max_size=10)),
                 dtype=np.int64).reshape(-1, r)
    assert np.array_equal(K.minimal_mask_numba(E), K.minimal_mask_numpy(E))
    assert np.array_equal(K.contains_mask_numba(E, M), K.contains_mask_numpy(E, M))


def _backend_with(env_value):
    env = dict(os.environ, INITIDEAL_NO_NUMBA=env_value)
    out = subprocess.run(
        [sys.executable, "-c",
         "from initideal.monoideal import BACKEND, MonomialIdeal;"
         "I = MonomialIdeal(['x', 'y'], [(2, 0), (2, 1), (0, 1)]);"
         "print(BACKEND, I.gens)"],
        env=env, capture_output=True, text=True, check=True)
    return out.stdout.split(" ", 1)


def test_env_flag_selects_numpy():
    backend, gens = _backend_with("1")
    assert backend == "numpy"
    assert gens.strip() == "((0, 1), (2, 0))"


@pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")
def test_default_backend_is_numba():
    backend, gens = _backend_with("")
    assert backend == "numba"
    assert gens.strip() == "((0, 1), (2, 0))"
