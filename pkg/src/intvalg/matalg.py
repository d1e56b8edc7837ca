"""Square matrices over ZZ, Z/m and F_q.

Matrices are immutable; entries are ring elements (ints).  Text form is
row-major ``"a,b;c,d"``.
"""

from __future__ import annotations

from itertools import product

from ._linalg import first_dependency
from .errors import ParseError, RingMismatch
from .poly import Poly
from .rings import ZZ, check_enum


class Matrix:
    __slots__ = ("ring", "rows", "n")

    def __init__(self, rows, ring=ZZ):
        rows = tuple(tuple(ring.canon(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.ring = ring
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n, ring=ZZ):
        return cls.scalar(n, ring.one, ring)

    @classmethod
    def zero(cls, n, ring=ZZ):
        return cls.scalar(n, 0, ring)

    @classmethod
    def scalar(cls, n, c, ring=ZZ):
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)], ring)

    @classmethod
    def from_flat(cls, flat, n, ring=ZZ):
        flat = list(flat)
        return cls([flat[i * n:(i + 1) * n] for i in range(n)], ring)

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring.key, self.rows))

    def __repr__(self):
        return f"Matrix({format_matrix(self)!r}, {self.ring!r})"

    def __str__(self):
        return format_matrix(self)

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def _check(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring or other.n != self.n:
            raise RingMismatch(f"{self.ring}^{self.n}x{self.n} vs {other.ring}^{other.n}x{other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        R = self.ring
        return Matrix([[R.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], R)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        R = self.ring
        return Matrix([[R.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], R)

    def __neg__(self):
        R = self.ring
        return Matrix([[R.neg(a) for a in r] for r in self.rows], R)

    def __mul__(self, other):
        R = self.ring
        if isinstance(other, int):
            return Matrix([[R.mul(other, a) for a in r] for r in self.rows], R)
        other = self._check(other)
        if other is NotImplemented:
            return other
        cols = list(zip(*other.rows))
        if R.int_like:
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows], R)
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = R.add(acc, R.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(out, R)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Matrix.identity(self.n, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def trace(self):
        R = self.ring
        acc = 0
        for i in range(self.n):
            acc = R.add(acc, self.rows[i][i])
        return acc

    def transpose(self):
        return Matrix(list(zip(*self.rows)), self.ring)


def format_matrix(M: Matrix) -> str:
    return ";".join(",".join(str(x) for x in r) for r in M.rows)


def parse_matrix(text: str, ring=ZZ) -> Matrix:
    try:
        rows = [[ring.from_int(int(x)) for x in r.split(",")] for r in text.strip().split(";")]
        return Matrix(rows, ring)
    except ValueError as exc:
        raise ParseError(f"bad matrix {text!r}: {exc}") from exc


def _poly_into(f: Poly, ring) -> Poly:
    if f.ring == ring:
        return f
    if f.ring == ZZ:
        return f.to_ring(ring)
    raise RingMismatch(f"polynomial over {f.ring} cannot act on {ring}")


def mat_eval(f: Poly, M: Matrix) -> Matrix:
    """f(M) by Horner's rule; integer polynomials act on any ring."""
    R = M.ring
    f = _poly_into(f, R)
    acc = Matrix.zero(M.n, R)
    for c in reversed(f.coeffs):
        acc = acc * M + Matrix.scalar(M.n, c, R)
    return acc


def _berkowitz_column(R, M):
    """Descending char-poly coefficients of the ring-element matrix M (list of lists)."""
    n = len(M)
    if n == 0:
        return [R.one]
    a = M[0][0]
    row = M[0][1:]
    col = [M[i][0] for i in range(1, n)]
    sub = [r[1:] for r in M[1:]]
    # Toeplitz first column: 1, -a, -row.col, -row.sub.col, ..., -row.sub^{n-2}.col
    toep = [R.one, R.neg(a)]
    v = col
    for _ in range(n - 1):
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = R.add(acc, R.mul(x, y))
        toep.append(R.neg(acc))
        v = [_dot(R, r, v) for r in sub]
    tail = _berkowitz_column(R, sub)
    out = []
    for i in range(n + 1):
        acc = 0
        for j in range(min(i, n - 1) + 1):
            t = toep[i - j]
            if t and tail[j]:
                acc = R.add(acc, R.mul(t, tail[j]))
        out.append(acc)
    return out


def _dot(R, r, v):
    acc = 0
    for x, y in zip(r, v):
        if x and y:
            acc = R.add(acc, R.mul(x, y))
    return acc


def char_poly(M: Matrix) -> Poly:
    """det(X*I - M) by Berkowitz's algorithm (no divisions, valid over Z/m)."""
    desc = _berkowitz_column(M.ring, [list(r) for r in M.rows])
    return Poly(list(reversed(desc)), M.ring)


def det(M: Matrix):
    c0 = char_poly(M)[0]
    return c0 if M.n % 2 == 0 else M.ring.neg(c0)


def min_poly_field(M: Matrix) -> Poly:
    """Monic generator of {f : f(M) = 0} over a field: first dependency among I, M, M^2, ..."""
    R = M.ring

    def powers():
        P = Matrix.identity(M.n, R)
        while True:
            yield P.flat()
            P = P * M

    return Poly(first_dependency(powers(), R), R)


def enumerate_matrices(n: int, R):
    """Every n x n matrix over the finite ring R, row-major in code order."""
    q = R.order
    check_enum(q ** (n * n), "matrices")
    for flat in product(range(q), repeat=n * n):
        yield Matrix.from_flat(reversed(flat), n, R)


def nilpotency_index(M: Matrix, nu_max: int | None = None):
    """Least k >= 1 with M^k = 0, or None if none is found up to n * nu_max.

    ``nu_max`` bounds the nilpotency of the entries' ideal; it defaults to
    the modulus of the coefficient ring.
    """
    if nu_max is None:
        nu_max = M.ring.order if M.ring.order else M.n
    bound = M.n * nu_max
    P = M
    for k in range(1, bound + 1):
        if P.is_zero():
            return k
        P = P * M
    return None
