"""Finite-rank associative unital algebras given by structure constants.

An algebra of rank r over a coefficient ring R has basis b_0..b_{r-1} with
b_i * b_j = sum_k c[i][j][k] b_k.  Elements are coordinate tuples.  Over a
finite ring, :meth:`StructAlgebra.elements` lists the algebra with the first
coordinate varying fastest (the same convention as ring elements).

Algebra-spec JSON::

    {"rank": r, "ring": "Z" | "Zmod:m" | "Fq:p,e",
     "unit": [...], "constants": [[i, j, k, c], ...]}

Over F_q with e > 1 the numbers in "unit" and "constants" are element codes.
"""

from __future__ import annotations

import json
from itertools import product

import numpy as np

from ._linalg import first_dependency
from .errors import AlgebraError, BadDimension, BadDivisor, NonMonic, RingMismatch
from .matalg import Matrix
from .poly import Poly, least_irreducible, monic_divmod, parse_poly
from .rings import ZZ, ModRing, check_enum, is_prime, parse_ring, ring_name

_CHUNK = 1 << 15


class StructAlgebra:
    def __init__(self, ring, rank, constants, unit, *, name="", basis_matrices=None, basis_names=None,
                 check=True):
        if rank < 1:
            raise BadDimension("rank must be >= 1")
        merged: dict[tuple[int, int, int], int] = {}
        for i, j, k, c in constants:
            if not (0 <= i < rank and 0 <= j < rank and 0 <= k < rank):
                raise AlgebraError(f"structure constant index out of range: {(i, j, k)}")
            key = (i, j, k)
            merged[key] = ring.add(merged.get(key, 0), ring.canon(c))
        self.ring = ring
        self.rank = rank
        self.constants = tuple((i, j, k, c) for (i, j, k), c in sorted(merged.items()) if c)
        self.unit = tuple(ring.canon(u) for u in unit)
        if len(self.unit) != rank:
            raise AlgebraError("unit vector has the wrong length")
        self.name = name
        self.basis_matrices = tuple(basis_matrices) if basis_matrices is not None else None
        self.basis_names = tuple(basis_names) if basis_names is not None else None
        if check:
            self.check_unit()
            self.check_associative()

    def __repr__(self):
        label = self.name or "algebra"
        return f"<StructAlgebra {label} rank {self.rank} over {self.ring!r}>"

    # elements
    def zero(self):
        return (0,) * self.rank

    def basis(self, i):
        return tuple(self.ring.one if k == i else 0 for k in range(self.rank))

    def elem(self, coords):
        coords = tuple(self.ring.canon(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError("wrong number of coordinates")
        return coords

    def add(self, x, y):
        R = self.ring
        return tuple(R.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        R = self.ring
        return tuple(R.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(self.ring.neg(a) for a in x)

    def scale(self, c, x):
        R = self.ring
        return tuple(R.mul(c, a) for a in x)

    def mul(self, x, y):
        R = self.ring
        z = [0] * self.rank
        if R.int_like:
            for i, j, k, c in self.constants:
                xi, yj = x[i], y[j]
                if xi and yj:
                    z[k] += xi * yj * c
            return tuple(R.canon(a) for a in z)
        for i, j, k, c in self.constants:
            xi, yj = x[i], y[j]
            if xi and yj:
                z[k] = R.add(z[k], R.mul(R.mul(xi, yj), c))
        return tuple(z)

    def pow(self, x, k: int):
        result = self.unit
        while k:
            if k & 1:
                result = self.mul(result, x)
            k >>= 1
            if k:
                x = self.mul(x, x)
        return result

    def is_zero(self, x):
        return not any(x)

    def _poly_coeffs(self, f: Poly):
        if f.ring == self.ring:
            return f.coeffs
        if f.ring == ZZ:
            return tuple(self.ring.from_int(c) for c in f.coeffs)
        raise RingMismatch(f"polynomial over {f.ring} cannot act on an algebra over {self.ring}")

    def eval(self, f: Poly, x):
        """f(x) by Horner's rule; scalars act through the unit."""
        cs = self._poly_coeffs(f)
        acc = self.zero()
        for c in reversed(cs):
            acc = self.add(self.mul(acc, x), self.scale(c, self.unit))
        return acc

    @property
    def order(self):
        if self.ring.order is None:
            return None
        return self.ring.order**self.rank

    def elements(self):
        """Every element of a finite algebra, first coordinate fastest."""
        q = self.ring.order
        if q is None:
            raise AlgebraError("cannot enumerate an algebra over ZZ; reduce it first")
        check_enum(q**self.rank, "algebra elements")
        for coords in product(range(q), repeat=self.rank):
            yield coords[::-1]

    # structure checks
    def check_unit(self):
        for i in range(self.rank):
            b = self.basis(i)
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                raise AlgebraError(f"unit fails on basis element {i}")

    def check_associative(self):
        basis = [self.basis(i) for i in range(self.rank)]
        prods = [[self.mul(a, b) for b in basis] for a in basis]
        for i in range(self.rank):
            for j in range(self.rank):
                for k in range(self.rank):
                    if self.mul(prods[i][j], basis[k]) != self.mul(basis[i], prods[j][k]):
                        raise AlgebraError(f"associativity fails on basis triple {(i, j, k)}")

    def is_commutative(self):
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.mul(self.basis(i), self.basis(j)) != self.mul(self.basis(j), self.basis(i)):
                    return False
        return True

    def to_matrix(self, x) -> Matrix:
        if self.basis_matrices is None:
            raise AlgebraError("algebra has no matrix embedding")
        R = self.ring
        n = self.basis_matrices[0].n
        acc = Matrix.zero(n, R)
        for c, B in zip(x, self.basis_matrices):
            if c:
                acc = acc + B * c
        return acc

    def format_elem(self, x) -> str:
        if self.basis_matrices is not None:
            return str(self.to_matrix(x))
        if self.basis_names is not None:
            return _format_named(self.ring, x, self.basis_names)
        return ",".join(self.ring.format(c) for c in x)

    # change of rings
    def base_change(self, ring) -> "StructAlgebra":
        """Tensor with the coefficient ring ``ring`` (along Z -> ring)."""
        if ring == self.ring:
            return self
        if not self.ring.int_like:
            raise RingMismatch(f"cannot base-change from {self.ring}")
        if self.ring.characteristic and ring.characteristic % self.ring.characteristic:
            raise RingMismatch(f"no ring map {self.ring} -> {ring}")
        mats = None
        if self.basis_matrices is not None:
            mats = [Matrix([[ring.from_int(x) for x in r] for r in B.rows], ring) for B in self.basis_matrices]
        return StructAlgebra(
            ring, self.rank,
            [(i, j, k, ring.from_int(c)) for i, j, k, c in self.constants],
            [ring.from_int(u) for u in self.unit],
            name=self.name, basis_matrices=mats, basis_names=self.basis_names, check=False,
        )

    # JSON
    def to_dict(self):
        return {
            "rank": self.rank,
            "ring": ring_name(self.ring),
            "unit": list(self.unit),
            "constants": [list(t) for t in self.constants],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data, name=""):
        try:
            ring = parse_ring(data["ring"])
            return cls(ring, int(data["rank"]), [tuple(t) for t in data["constants"]], data["unit"],
                       name=data.get("name", name))
        except (KeyError, TypeError) as exc:
            raise AlgebraError(f"malformed algebra spec: {exc}") from exc

    # vectorised arithmetic over Z/m (used by the exhaustive scans)
    def _np_dtype(self):
        m = self.ring.order
        if m is None or not self.ring.int_like:
            raise AlgebraError("vectorised arithmetic needs a finite residue ring")
        return np.int64 if m < 2**31 else object

    def element_chunks(self, chunk=_CHUNK):
        """Yield (start, array) blocks of all elements in enumeration order."""
        m = self.ring.order
        dtype = self._np_dtype()
        total = m**self.rank
        check_enum(total, "algebra elements")
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            if dtype is object:
                codes = np.array(range(start, stop), dtype=object)
            else:
                codes = np.arange(start, stop, dtype=np.int64)
            X = np.empty((stop - start, self.rank), dtype=dtype)
            for i in range(self.rank):
                X[:, i] = codes % m
                codes = codes // m
            yield start, X

    def batch_mul(self, X, Y):
        m = self.ring.order
        Z = np.zeros_like(X)
        for i, j, k, c in self.constants:
            Z[:, k] = (Z[:, k] + (X[:, i] * Y[:, j] % m) * c) % m
        return Z

    def batch_unit(self, count):
        U = np.zeros((count, self.rank), dtype=self._np_dtype())
        U[:] = np.array(self.unit, dtype=U.dtype)
        return U

    def batch_eval(self, f: Poly, X):
        m = self.ring.order
        cs = self._poly_coeffs(f)
        U = self.batch_unit(X.shape[0])
        acc = np.zeros_like(X)
        for c in reversed(cs):
            acc = self.batch_mul(acc, X)
            if c:
                acc = (acc + U * c) % m
        return acc

    def batch_powers(self, X, top):
        """[X^0, X^1, ..., X^top] as arrays."""
        P = [self.batch_unit(X.shape[0])]
        for _ in range(top):
            P.append(self.batch_mul(P[-1], X))
        return P


def elem_eval(f: Poly, a, A: StructAlgebra):
    return A.eval(f, a)


def min_poly_elem(a, A: StructAlgebra) -> Poly:
    """Monic least-degree annihilator of a over a field: first dependency among 1, a, a^2, ..."""
    R = A.ring

    def powers():
        x = A.unit
        while True:
            yield x
            x = A.mul(x, a)

    return Poly(first_dependency(powers(), R), R)


# --- constructors --------------------------------------------------------------

def alg_matrix(n: int, R=ZZ) -> StructAlgebra:
    """M_n(R) with matrix-unit basis e_{ab} at index a*n + b."""
    if n < 1:
        raise BadDimension("n must be >= 1")
    consts = []
    for a in range(n):
        for b in range(n):
            for d in range(n):
                consts.append((a * n + b, b * n + d, a * n + d, R.one))
    unit = [R.one if a == b else 0 for a in range(n) for b in range(n)]
    mats = [_unit_matrix(n, a, b, R) for a in range(n) for b in range(n)]
    return StructAlgebra(R, n * n, consts, unit, name=f"matrix:{n}", basis_matrices=mats, check=False)


def _unit_matrix(n, a, b, R):
    return Matrix([[R.one if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)], R)


_QUAT = {
    (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def alg_quaternion(R=ZZ) -> StructAlgebra:
    """Basis 1, i, j, k with i^2 = j^2 = -1 and ij = k = -ji."""
    consts = []
    for x in range(4):
        consts.append((0, x, x, R.one))
        if x:
            consts.append((x, 0, x, R.one))
    for (x, y), (z, s) in _QUAT.items():
        consts.append((x, y, z, R.from_int(s)))
    return StructAlgebra(R, 4, consts, [R.one, 0, 0, 0], name="quaternion", basis_names="1ijk")


def alg_quotient_ring(mu: Poly) -> StructAlgebra:
    """Z[X]/(mu) with power basis 1, x, ..., x^{d-1}."""
    if mu.ring != ZZ:
        raise RingMismatch("alg_quotient_ring expects an integer polynomial")
    if not mu.is_monic() or mu.degree < 1:
        raise NonMonic(f"{mu} is not monic of degree >= 1")
    d = mu.degree
    consts = []
    for i in range(d):
        for j in range(d):
            r = monic_divmod(Poly.monomial(i + j), mu)[1]
            for k, c in enumerate(r.coeffs):
                if c:
                    consts.append((i, j, k, c))
    names = ["1", "x"] + [f"x^{k}" for k in range(2, d)]
    return StructAlgebra(ZZ, d, consts, [1] + [0] * (d - 1), name=f"quotient:{mu}", basis_names=names[:d])


def _format_named(R, x, names):
    """Element as a linear combination, e.g. "2 + i" or "x - 1" over Z."""
    parts = []
    for c, b in zip(x, names):
        if not c:
            continue
        neg = R.characteristic == 0 and c < 0
        mag = R.format(-c if neg else c)
        if b == "1":
            body = mag
        elif mag == "1":
            body = b
        else:
            body = (f"({mag})" if " " in mag else mag) + b
        if parts:
            parts.append((" - " if neg else " + ") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return "".join(parts) or "0"


def alg_direct_sum(A: StructAlgebra, B: StructAlgebra) -> StructAlgebra:
    if A.ring != B.ring:
        raise RingMismatch(f"{A.ring} vs {B.ring}")
    r = A.rank
    consts = list(A.constants) + [(i + r, j + r, k + r, c) for i, j, k, c in B.constants]
    return StructAlgebra(A.ring, r + B.rank, consts, A.unit + B.unit,
                         name=f"({A.name or 'A'})+({B.name or 'B'})", check=False)


def alg_from_matrix_basis(mats, R, name="") -> StructAlgebra:
    """Subalgebra of M_n(R) spanned by ``mats``.

    Each basis matrix needs a pivot entry equal to 1 where every other basis
    matrix vanishes; coordinates are read off at the pivots and every
    product is checked to lie back in the span.
    """
    mats = list(mats)
    r = len(mats)
    n = mats[0].n
    pivots = []
    for idx, B in enumerate(mats):
        for pos in product(range(n), range(n)):
            if B[pos] == R.one and all(C[pos] == 0 for t, C in enumerate(mats) if t != idx):
                pivots.append(pos)
                break
        else:
            raise AlgebraError(f"basis matrix {idx} has no pivot entry")

    def coords(M):
        x = tuple(M[pos] for pos in pivots)
        back = Matrix.zero(n, R)
        for c, B in zip(x, mats):
            if c:
                back = back + B * c
        if back != M:
            raise AlgebraError("matrix span is not closed under multiplication")
        return x

    consts = []
    for i, Bi in enumerate(mats):
        for j, Bj in enumerate(mats):
            for k, c in enumerate(coords(Bi * Bj)):
                if c:
                    consts.append((i, j, k, c))
    unit = coords(Matrix.identity(n, R))
    return StructAlgebra(R, r, consts, unit, name=name, basis_matrices=mats, check=False)


def alg_stabilizer(n: int, m: int, R=ZZ) -> StructAlgebra:
    """Matrices preserving W = span(e_1..e_m): block upper triangular."""
    if not 0 < m < n:
        raise BadDimension(f"need 0 < m < n, got n={n}, m={m}")
    mats = [_unit_matrix(n, a, b, R) for a in range(n) for b in range(n) if not (a >= m and b < m)]
    return alg_from_matrix_basis(mats, R, name=f"stabilizer:{n},{m}")


def companion(mu: Poly, ring=None) -> Matrix:
    """Companion matrix with C e_t = e_{t+1} and last column -mu_0..-mu_{l-1}."""
    R = ring if ring is not None else mu.ring
    l = mu.degree
    rows = [[0] * l for _ in range(l)]
    for t in range(l - 1):
        rows[t + 1][t] = R.one
    for t in range(l):
        rows[t][l - 1] = R.neg(mu[t])
    return Matrix(rows, R)


def alg_centralizer(n: int, l: int, fq, lift: bool = False) -> StructAlgebra:
    """Matrices in M_n(F_q) commuting with a block-diagonal copy of F_{q^l}.

    The copy is generated by the companion matrix C of the least monic
    irreducible of degree l over F_q, repeated n/l times on the diagonal;
    the basis is E_{rs} (x) C^t.  With ``lift`` (prime fields only) the same
    basis is taken over ZZ using the integer lift of the modulus, giving a
    Z-order whose reduction mod p is the centralizer.
    """
    if not is_prime(l) or n % l:
        raise BadDivisor(f"l={l} must be a prime dividing n={n}")
    mu = least_irreducible(fq, l)
    if lift:
        if not fq.int_like:
            raise RingMismatch("only centralizers over a prime field lift to ZZ")
        R = ZZ
        C = companion(mu.lift(symmetric=True))
    else:
        R = fq
        C = companion(mu)
    powers = [Matrix.identity(l, R)]
    for _ in range(l - 1):
        powers.append(powers[-1] * C)
    blocks = n // l
    mats = []
    for r in range(blocks):
        for s in range(blocks):
            for P in powers:
                rows = [[0] * n for _ in range(n)]
                for a in range(l):
                    for b in range(l):
                        rows[r * l + a][s * l + b] = P[a, b]
                mats.append(Matrix(rows, R))
    alg = alg_from_matrix_basis(mats, R, name=f"centralizer:{n},{l}")
    alg.generator = _block_diag(C, blocks)
    return alg


def _block_diag(C: Matrix, copies: int) -> Matrix:
    l = C.n
    n = l * copies
    rows = [[0] * n for _ in range(n)]
    for b in range(copies):
        for i in range(l):
            for j in range(l):
                rows[b * l + i][b * l + j] = C[i, j]
    return Matrix(rows, C.ring)


def alg_integers(k: int = 1) -> StructAlgebra:
    """ZZ^k with componentwise product (k = 1 gives ZZ itself)."""
    if k < 1:
        raise BadDimension("k must be >= 1")
    return StructAlgebra(ZZ, k, [(i, i, i, 1) for i in range(k)], [1] * k,
                         name="z" if k == 1 else f"dsum:{k}")


def reduce_algebra(A: StructAlgebra, d: int) -> StructAlgebra:
    """A/dA over Z/d."""
    if A.ring != ZZ:
        raise RingMismatch("reduce_algebra expects an algebra over ZZ")
    return A.base_change(ModRing(d))


def builtin(name: str, prime: int | None = None, ring=None) -> StructAlgebra:
    """Named algebras: z, zi, matrix:n, quaternion, dsum:k, stabilizer:n,m,
    centralizer:n,l, quotient:<poly>.

    ``ring`` (a finite field) builds the field-level object directly;
    otherwise the algebra is over ZZ.  ``centralizer`` over ZZ needs
    ``prime`` to fix which residue field it lifts.
    """
    kind, _, arg = name.partition(":")
    if kind == "centralizer":
        n, l = (int(s) for s in arg.split(","))
        if ring is not None:
            return alg_centralizer(n, l, ring)
        if prime is None:
            raise BadDimension("centralizer over ZZ needs a prime")
        from .rings import make_fq
        return alg_centralizer(n, l, make_fq(prime), lift=True)
    if kind == "z":
        A = alg_integers(1)
    elif kind == "zi":
        A = alg_quotient_ring(Poly((1, 0, 1)))
        A.name = "zi"
        A.basis_names = ("1", "i")
    elif kind == "matrix":
        A = alg_matrix(int(arg))
    elif kind == "quaternion":
        A = alg_quaternion()
    elif kind == "dsum":
        A = alg_integers(int(arg))
    elif kind == "stabilizer":
        n, m = (int(s) for s in arg.split(","))
        A = alg_stabilizer(n, m)
    elif kind == "quotient":
        A = alg_quotient_ring(parse_poly(arg))
    else:
        raise BadDimension(f"unknown builtin algebra {name!r}")
    return A if ring is None else A.base_change(ring)


BUILTIN_NAMES = ("z", "zi", "matrix:n", "quaternion", "dsum:k", "stabilizer:n,m",
                 "centralizer:n,l", "quotient:<poly>")
