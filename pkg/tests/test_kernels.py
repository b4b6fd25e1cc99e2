import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hallgroups.engine import _kernels_py, build, kernels
from hallgroups.engine.hall import hall_subgroups

compiled = pytest.mark.skipif("cython" not in kernels.available(),
                              reason="compiled extension not built")


def _args(G):
    return G.perms, G.base, G.weights, G.keys


@compiled
@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["sym:6", "psl2:11", "gu2:5", "m11"]), st.integers(0, 2**32 - 1))
def test_products_parity(name, seed):
    from hallgroups.engine import _kernels

    G = build(name)
    rng = np.random.default_rng(seed)
    a = rng.integers(0, G.order, 500)
    b = rng.integers(0, G.order, 500)
    c = np.asarray(_kernels.products(*_args(G), a, b))
    p = _kernels_py.products(*_args(G), a, b)
    assert (c == p).all()


@compiled
@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["sym:6", "psl2:11", "gl2:5"]), st.integers(0, 2**32 - 1),
       st.integers(1, 3), st.sampled_from([None, 24, 60, 10**9]))
def test_closure_parity(name, seed, k, cutoff):
    from hallgroups.engine import _kernels

    G = build(name)
    rng = np.random.default_rng(seed)
    gens = rng.integers(0, G.order, k).astype(np.int64)
    start = np.array([G.identity], dtype=np.int64)
    cut = G.order if cutoff is None else cutoff
    c = _kernels.closure(*_args(G), gens, start, cut)
    p = _kernels_py.closure(*_args(G), gens, start, cut)
    if c is None or p is None:
        assert c is None and p is None
    else:
        assert (np.asarray(c) == p).all()


@compiled
def test_hall_search_identical_across_backends():
    results = {}
    prev = kernels.BACKEND
    try:
        for backend in ("cython", "python"):
            kernels.use_backend(backend)
            G = build("psl2:11")
            results[backend] = [H.elements.tolist() for H in hall_subgroups(G, [2, 3])]
    finally:
        kernels.use_backend(prev)
    assert results["cython"] == results["python"]


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
