"""Linear algebra kernels used by matalg, algebra and intval."""

from __future__ import annotations

import numpy as np

from .errors import NotAField


def first_dependency(vectors, R):
    """Least k such that vectors[k] lies in the span of vectors[:k], over a field R.

    Returns the relation c with c[k] == 1 and sum(c[i] * vectors[i]) == 0,
    so c is the ascending coefficient list of a monic polynomial when the
    vectors are successive powers.  ``vectors`` may be any iterable.
    """
    if not R.is_field:
        raise NotAField(f"{R} is not a field")
    basis = []  # (pivot, vec, combo), vec[pivot] == 1
    for k, v in enumerate(vectors):
        v = list(v)
        combo = [0] * k + [R.one]
        for piv, bvec, bcombo in basis:
            c = v[piv]
            if c:
                for i, b in enumerate(bvec):
                    if b:
                        v[i] = R.sub(v[i], R.mul(c, b))
                for i, b in enumerate(bcombo):
                    if b:
                        combo[i] = R.sub(combo[i], R.mul(c, b))
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return combo
        inv = R.inv(v[piv])
        basis.append((piv, [R.mul(inv, x) for x in v], [R.mul(inv, x) for x in combo]))
    raise ValueError("vectors are linearly independent")


def _valuation(a: np.ndarray, p: int, e: int) -> np.ndarray:
    """p-adic valuation of residues mod p**e, with e for zero entries."""
    v = np.zeros(a.shape, dtype=np.int64)
    pk = 1
    for _ in range(e):
        pk *= p
        v += (a % pk == 0)
    return v


def kernel_mod_prime_power(rows: np.ndarray, p: int, e: int) -> list[list[int]]:
    """Generators of {c : rows @ c == 0 mod p**e}.

    Z/p^e is a chain ring, so an entry of least valuation divides every
    other entry; pivoting on it clears its row and column without changing
    the kernel beyond the tracked column operations.
    """
    m = p**e
    A = np.array(rows, dtype=np.int64) % m
    if A.ndim != 2:
        raise ValueError("rows must be a 2-d array")
    if A.shape[0]:
        A = np.unique(A, axis=0)
    ncols = A.shape[1]
    V = np.eye(ncols, dtype=np.int64)
    row_alive = np.ones(A.shape[0], dtype=bool)
    col_alive = np.ones(ncols, dtype=bool)
    pivots = []
    while row_alive.any() and col_alive.any():
        sub = A[np.ix_(row_alive, col_alive)]
        if not sub.any():
            break
        val = _valuation(sub, p, e)
        flat = int(np.argmin(val))
        r_sub, c_sub = divmod(flat, sub.shape[1])
        i = np.flatnonzero(row_alive)[r_sub]
        j = np.flatnonzero(col_alive)[c_sub]
        k = int(val[r_sub, c_sub])
        pk = p**k
        unit = int(A[i, j]) // pk
        uinv = pow(unit, -1, m)
        A[:, j] = A[:, j] * uinv % m
        V[:, j] = V[:, j] * uinv % m
        for jj in np.flatnonzero(col_alive):
            if jj == j or A[i, jj] == 0:
                continue
            c = int(A[i, jj]) // pk
            A[:, jj] = (A[:, jj] - c * A[:, j]) % m
            V[:, jj] = (V[:, jj] - c * V[:, j]) % m
        # row operations with the pivot row only touch column j
        A[:, j] = 0
        A[i, j] = pk
        row_alive[i] = False
        col_alive[j] = False
        pivots.append((j, k))
    gens = []
    for j in np.flatnonzero(col_alive):
        gens.append([int(x) for x in V[:, j]])
    for j, k in pivots:
        if k > 0:
            gens.append([int(x) * p ** (e - k) % m for x in V[:, j]])
    return [g for g in gens if any(g)]
