from itertools import product

import numpy as np
from hypothesis import given, strategies as st

from intvalg import ModRing, make_fq
from intvalg._linalg import first_dependency, kernel_mod_prime_power


def span_mod(gens, m, k):
    """All Z/m-combinations of the generators (small cases only)."""
    out = {(0,) * k}
    for g in gens:
        out = {tuple((v[i] + c * g[i]) % m for i in range(k)) for v in out for c in range(m)}
    return out


@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (5, 1), (2, 1)]), st.integers(1, 4), st.integers(1, 3), st.data())
def test_kernel_matches_brute_force(pe, nrows, ncols, data):
    p, e = pe
    m = p**e
    rows = np.array([[data.draw(st.integers(0, m - 1)) for _ in range(ncols)] for _ in range(nrows)], dtype=np.int64)
    gens = kernel_mod_prime_power(rows, p, e)
    brute = {c for c in product(range(m), repeat=ncols) if not (rows @ np.array(c) % m).any()}
    assert span_mod(gens, m, ncols) == brute


def test_kernel_of_empty_and_zero_rows():
    assert sorted(kernel_mod_prime_power(np.zeros((2, 2), dtype=np.int64), 3, 1)) == [[0, 1], [1, 0]]
    gens = kernel_mod_prime_power(np.array([[2]]), 2, 2)
    assert span_mod(gens, 4, 1) == {(0,), (2,)}


def test_first_dependency():
    F = make_fq(3)
    # vectors e0, e1, e0 + 2 e1: relation 1*v2 - v0 - 2 v1 = 0
    rel = first_dependency([(1, 0), (0, 1), (1, 2)], F)
    assert rel == [2, 1, 1]
    assert first_dependency([(0, 0)], ModRing(5)) == [1]
