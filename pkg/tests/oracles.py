"""Independent reference computations used by the intval and acceptance tests."""

from itertools import product

import numpy as np


def exact_null_check(g, A, d):
    """g kills A/dA, decided by evaluating g over Z at every lift in [0, d)^r.

    Arithmetic is exact Python integers (numpy object arrays) using the
    integer structure constants of A; no CRT, no modular reduction until
    the final divisibility test.
    """
    r = A.rank
    X = np.array(list(product(range(d), repeat=r)), dtype=object)[:, ::-1]
    unit = np.array(A.unit, dtype=object)
    acc = np.zeros_like(X)
    for c in reversed(g.coeffs):
        nxt = np.zeros_like(X)
        for i, j, k, s in A.constants:
            nxt[:, k] = nxt[:, k] + acc[:, i] * X[:, j] * s
        acc = nxt + unit * c
    bad = np.flatnonzero(((acc % d) != 0).any(axis=1))
    if bad.size:
        return False, tuple(int(v) for v in X[bad[0]])
    return True, None


def least_annihilator(A, max_degree):
    """Least-degree monic polynomial killing every element of A over its field, by search."""
    from intvalg import monic_polys
    els = list(A.elements())
    for deg in range(1, max_degree + 1):
        for f in monic_polys(A.ring, deg):
            if all(A.is_zero(A.eval(f, x)) for x in els):
                return f
    return None
