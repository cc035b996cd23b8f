"""Shared fixtures and hypothesis strategies for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from fermicode.automorphisms import compose_factors
from fermicode.laurent import LaurentPoly
from fermicode.pauli import HORIZONTAL, VERTICAL, PauliVec, single

# --- hypothesis strategies -------------------------------------------------

exponents = st.integers(min_value=-4, max_value=4)

polys = st.frozensets(st.tuples(exponents, exponents), max_size=5).map(
    LaurentPoly.from_json
)

small_polys = st.frozensets(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), max_size=3
).map(LaurentPoly.from_json)

vecs = st.builds(PauliVec, a1=small_polys, a2=small_polys, c1=small_polys, c2=small_polys)

factor_lists = st.lists(st.integers(min_value=1, max_value=16), max_size=4)

sym_maps = factor_lists.map(lambda fs: compose_factors(tuple(fs)))

offsets = st.tuples(st.integers(-3, 3), st.integers(-3, 3))

pauli_singles = st.builds(
    single,
    st.sampled_from([HORIZONTAL, VERTICAL]),
    st.sampled_from(["X", "Y", "Z"]),
    st.integers(-2, 2),
    st.integers(-2, 2),
)

errors = st.lists(pauli_singles, min_size=1, max_size=4).map(
    lambda parts: sum(parts, PauliVec())
)


# --- fixtures ---------------------------------------------------------------


@pytest.fixture(scope="session")
def bundled_codes():
    from fermicode.codes import known_codes

    return known_codes()


@pytest.fixture(scope="session")
def api_client():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from fermicode.api import app

    return TestClient(app)
