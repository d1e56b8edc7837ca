"""Null ideals and integer-valued polynomials on finite-rank Z-algebras.

Membership of g/d in Int_Q(A) is decided through the residue algebra:
g/d maps A into A exactly when g kills every element of A/dA.  Scans
over A/dA split d into prime powers and run vectorised over Z/p^e.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import kernel_mod_prime_power
from .algebra import StructAlgebra, alg_matrix, alg_quaternion, min_poly_elem, reduce_algebra
from .errors import BadModulus, EvenPrime, InputError, NonPrime, RingMismatch, VerificationError
from .matalg import Matrix, det
from .poly import Poly, RatPoly, divides, gcd_lcm, monic_polys, phi
from .rings import ZZ, ModRing, check_enum, factorize, is_prime


# --- null ideals over a field ---------------------------------------------------

@dataclass(frozen=True)
class NullIdealGen:
    """Monic generator of the null ideal of a finite algebra over a field."""

    generator: Poly
    algebra: str
    enum_count: int
    distinct_min_polys: int


def null_ideal_field(A: StructAlgebra) -> NullIdealGen:
    """lcm of the minimal polynomials of all elements of A (A over a finite field)."""
    R = A.ring
    if not R.is_field or R.order is None:
        raise RingMismatch(f"null_ideal_field needs a finite field, got {R}")
    seen = set()
    gen = Poly((R.one,), R)
    count = 0
    for a in A.elements():
        count += 1
        mp = min_poly_elem(a, A)
        if mp not in seen:
            seen.add(mp)
            gen = gcd_lcm(gen, mp)[1]
    return NullIdealGen(gen, A.name, count, len(seen))


# --- membership -------------------------------------------------------------------

@dataclass
class MembershipVerdict:
    member: bool
    modulus: int
    enum_count: int = 0
    counterexample: tuple | None = None
    value: tuple | None = None
    counterexample_text: str | None = None
    value_text: str | None = None


def _scan_first_nonzero(Ab: StructAlgebra, g: Poly):
    """First element x of the finite algebra Ab with g(x) != 0, and the count scanned."""
    scanned = 0
    for start, X in Ab.element_chunks():
        Y = Ab.batch_eval(g, X)
        bad = np.flatnonzero((Y != 0).any(axis=1))
        if bad.size:
            i = int(bad[0])
            return tuple(int(c) for c in X[i]), scanned + i + 1
        scanned += X.shape[0]
    return None, scanned


def _check_integral_algebra(A: StructAlgebra):
    if A.ring != ZZ:
        raise RingMismatch(f"expected an algebra over ZZ, got one over {A.ring}")


def is_null_mod(g: Poly, A: StructAlgebra, d: int) -> MembershipVerdict:
    """Does g kill every element of A/dA?  On failure the verdict carries a witness."""
    _check_integral_algebra(A)
    if g.ring != ZZ:
        raise RingMismatch("is_null_mod expects an integer polynomial")
    if not isinstance(d, int) or d < 2:
        raise BadModulus(f"d must be >= 2, got {d!r}")
    fac = factorize(d)
    for p, e in fac.items():
        check_enum((p**e) ** A.rank, "algebra elements")
    total = 0
    for p, e in sorted(fac.items()):
        pe = p**e
        x, scanned = _scan_first_nonzero(reduce_algebra(A, pe), g)
        total += scanned
        if x is not None:
            rest = d // pe
            lift = rest * pow(rest, -1, pe) % d if rest > 1 else 1
            Ad = reduce_algebra(A, d)
            xd = tuple(c * lift % d for c in x)
            val = Ad.eval(g, xd)
            return MembershipVerdict(False, d, total, xd, val, Ad.format_elem(xd), Ad.format_elem(val))
    return MembershipVerdict(True, d, total)


def int_member(f: RatPoly, A: StructAlgebra) -> MembershipVerdict:
    """Is f in Int_Q(A)?  Decided by is_null_mod on the numerator at the denominator."""
    _check_integral_algebra(A)
    if f.den == 1:
        return MembershipVerdict(True, 1, 0)
    return is_null_mod(f.num, A, f.den)


# --- witnesses of nontriviality -----------------------------------------------

@dataclass(frozen=True)
class WitnessSpec:
    """Conductor data a = p^e, b = 1 over ZZ; nil(Z/p^e) has nilpotency bound t = e."""

    p: int
    e: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        if self.e < 1 or self.n < 1:
            raise InputError("e and n must be >= 1")

    @property
    def t(self) -> int:
        return self.e


def witness(spec: WitnessSpec, verify: bool = True, exponent: int | None = None) -> RatPoly:
    """phi_{p,n}^t / p^e, an element of Int_Q(M_n(Z)) outside Z[X].

    A product of t matrices with entries in pZ/p^eZ has entries in p^t Z/p^e Z,
    so t = e factors of phi suffice.
    """
    m = spec.t if exponent is None else exponent
    f = RatPoly(phi(spec.p, spec.n) ** m, spec.p**spec.e)
    if verify:
        if f.is_integral():
            raise VerificationError(f"{f} lies in Z[X]")
        verdict = int_member(f, alg_matrix(spec.n))
        if not verdict.member:
            raise VerificationError(f"{f} fails on {verdict.counterexample_text}")
    return f


def minimal_witness_exponent(spec: WitnessSpec) -> int:
    """Least m <= t for which phi_{p,n}^m / p^e still verifies."""
    A = alg_matrix(spec.n)
    for m in range(1, spec.t + 1):
        if int_member(RatPoly(phi(spec.p, spec.n) ** m, spec.p**spec.e), A).member:
            return m
    raise VerificationError(f"no exponent <= {spec.t} verifies for {spec}")


def divisible_by_all_monics(g: Poly, d: int, n: int) -> bool:
    """Is g mod d divisible by every monic degree-n polynomial over Z/d?"""
    if g.ring != ZZ:
        raise RingMismatch("divisible_by_all_monics expects an integer polynomial")
    R = ModRing(d)
    gm = g.to_ring(R)
    return all(divides(h, gm) for h in monic_polys(R, n))


# --- split criterion ------------------------------------------------------------

def split_obstruction(A: StructAlgebra, p: int):
    """None if A/pA is a product of copies of F_p, otherwise a short reason."""
    _check_integral_algebra(A)
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    Ap = reduce_algebra(A, p)
    check_enum(p**A.rank, "algebra elements")
    for i in range(A.rank):
        for j in range(i + 1, A.rank):
            x, y = Ap.basis(i), Ap.basis(j)
            if Ap.mul(x, y) != Ap.mul(y, x):
                return {"reason": "not commutative", "element": Ap.format_elem(x),
                        "other": Ap.format_elem(y)}
    xp = Poly.monomial(p) - Poly.x()
    x, _ = _scan_first_nonzero(Ap, xp)
    if x is not None:
        return {"reason": f"x^{p} != x", "element": Ap.format_elem(x)}
    return None


def is_split_at(A: StructAlgebra, p: int) -> bool:
    """A/pA commutative with x^p = x everywhere, i.e. A/pA is a sum of copies of F_p."""
    return split_obstruction(A, p) is None


# --- comparing null ideals ----------------------------------------------------

@dataclass
class NullComparison:
    d: int
    equal: bool
    method: str
    bound: int | None
    separator: Poly | None = None
    kills: str | None = None
    generators: tuple | None = None


def _distinct_rows(rows: np.ndarray, m: int) -> np.ndarray:
    width = rows.shape[1]
    if m ** width < 2**63:
        # pack each row into one int64 key; 1-d unique is much faster than axis=0
        keys = np.zeros(rows.shape[0], dtype=np.int64)
        for c in range(width):
            keys = keys * m + rows[:, c]
        _, idx = np.unique(keys, return_index=True)
        return rows[np.sort(idx)]
    return np.unique(rows, axis=0)


def _power_rows(Ab: StructAlgebra, top: int) -> np.ndarray:
    """Distinct rows (coord_k(x^0), ..., coord_k(x^top)) over all x in Ab and all k."""
    m = Ab.ring.order
    blocks = []
    for _, X in Ab.element_chunks():
        P = np.stack(Ab.batch_powers(X, top), axis=2)  # (N, rank, top + 1)
        blocks.append(_distinct_rows(P.reshape(-1, top + 1), m))
    return _distinct_rows(np.concatenate(blocks), m)


def _kills_rows(rows: np.ndarray, c, m: int) -> bool:
    vec = np.array(c, dtype=np.int64)
    return not (rows @ vec % m).any()


def _compare_prime(A, B, p):
    Ap, Bp = reduce_algebra(A, p), reduce_algebra(B, p)
    gA = null_ideal_field(Ap).generator
    gB = null_ideal_field(Bp).generator
    bound = max(gA.degree, gB.degree)
    sep = kills = None
    if _scan_first_nonzero(Bp, gA)[0] is not None:
        sep, kills = gA, "A"
    elif _scan_first_nonzero(Ap, gB)[0] is not None:
        sep, kills = gB, "B"
    return NullComparison(p, sep is None, "generator", bound, sep, kills, (gA, gB))


def _compare_prime_power(A, B, p, e, bound):
    if bound is None:
        raise InputError(f"a degree bound is required to compare null ideals mod {p}^{e}")
    m = p**e
    R = ModRing(m)
    Am, Bm = reduce_algebra(A, m), reduce_algebra(B, m)
    rows_A, rows_B = _power_rows(Am, bound), _power_rows(Bm, bound)
    for label, kernel_rows, other_rows in (("A", rows_A, rows_B), ("B", rows_B, rows_A)):
        for c in kernel_mod_prime_power(kernel_rows, p, e):
            if not _kills_rows(other_rows, c, m):
                return NullComparison(m, False, "kernel", bound, Poly(c, R), label)
    return NullComparison(m, True, "kernel", bound)


def compare_null_ideals(A: StructAlgebra, B: StructAlgebra, ds, degree_bound: int | None = None):
    """Per modulus d, do A/dA and B/dB have the same null ideal over Z/d?

    Prime d compares the monic field generators exactly.  For d = p^e with
    e > 1 the null ideal is not principal; the polynomials of degree
    <= degree_bound killing each algebra form a Z/p^e-module, and every
    generator of one module is tested against the other algebra.  Composite
    d is split by CRT.  A separator kills the algebra named in ``kills``
    but not the other.
    """
    _check_integral_algebra(A)
    _check_integral_algebra(B)
    out = []
    for d in ds:
        if not isinstance(d, int) or d < 2:
            raise BadModulus(f"d must be >= 2, got {d!r}")
        fac = sorted(factorize(d).items())
        for p, e in fac:
            check_enum((p**e) ** max(A.rank, B.rank), "algebra elements")
        parts = []
        for p, e in fac:
            parts.append(_compare_prime(A, B, p) if e == 1 else _compare_prime_power(A, B, p, e, degree_bound))
        if len(parts) == 1:
            out.append(parts[0])
            continue
        bounds = [c.bound for c in parts if c.bound is not None]
        res = NullComparison(d, all(c.equal for c in parts), "crt", max(bounds) if bounds else None)
        for c in parts:
            if not c.equal:
                rest = d // c.d
                lift = rest * pow(rest, -1, c.d) % d
                res.separator = Poly([x * lift for x in c.separator.coeffs], ModRing(d))
                res.kills = c.kills
                break
        out.append(res)
    return out


# --- quaternion splitting -------------------------------------------------------

@dataclass
class QuaternionSplitting:
    p: int
    k: int
    a: int
    b: int
    images: dict = field(default_factory=dict)
    verified: bool = False

    @property
    def modulus(self):
        return self.p**self.k


def _sum_of_two_squares_minus_one(p):
    for b in range(p):
        for a in range(p):
            if (a * a + b * b + 1) % p == 0:
                return a, b
    raise VerificationError(f"no solution of a^2 + b^2 = -1 mod {p}")  # impossible for odd p


def hensel_split_quaternion(p: int, k: int = 1) -> QuaternionSplitting:
    """Explicit isomorphism from the quaternions mod p^k onto M_2(Z/p^k).

    Solve a^2 + b^2 = -1 mod p, lift by Newton steps in a coordinate whose
    partial derivative is a unit, then send i -> [[a, b], [b, -a]],
    j -> [[0, 1], [-1, 0]], k -> ij.
    """
    if p == 2:
        raise EvenPrime("the quaternions do not split at 2")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise InputError("k must be >= 1")
    a, b = _sum_of_two_squares_minus_one(p)
    for j in range(2, k + 1):
        mod = p**j
        f = a * a + b * b + 1
        if a % p:
            a = (a - f * pow(2 * a, -1, mod)) % mod
        else:
            b = (b - f * pow(2 * b, -1, mod)) % mod
    m = p**k
    R = ModRing(m)
    I = Matrix([[a, b], [b, -a]], R)
    J = Matrix([[0, 1], [-1, 0]], R)
    images = {"1": Matrix.identity(2, R), "i": I, "j": J, "k": I * J}
    result = QuaternionSplitting(p, k, a, b, images)
    _verify_splitting(result)
    result.verified = True
    return result


def _verify_splitting(s: QuaternionSplitting):
    m = s.modulus
    R = ModRing(m)
    H = reduce_algebra(alg_quaternion(), m)
    ims = list(s.images.values())

    def image(x):
        acc = Matrix.zero(2, R)
        for c, M in zip(x, ims):
            if c:
                acc = acc + M * c
        return acc

    for i in range(4):
        for j in range(4):
            if ims[i] * ims[j] != image(H.mul(H.basis(i), H.basis(j))):
                raise VerificationError(f"product of basis elements {i},{j} not respected")
    square = Matrix([M.flat() for M in ims], R)
    if np.gcd(int(det(square)), s.p) != 1:
        raise VerificationError("images do not span M_2")


# --- nontriviality --------------------------------------------------------------

@dataclass
class NontrivialityCertificate:
    p: int
    nontrivial: bool
    generator: Poly
    certificate: RatPoly
    verdict: MembershipVerdict


def nontriviality_check(A: StructAlgebra, p: int) -> NontrivialityCertificate:
    """Certificate g/p in Int_Q(A) minus Z[X], with g a monic lift of the null generator of A/pA.

    Coefficients are lifted symmetrically into (-p/2, p/2].
    """
    _check_integral_algebra(A)
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    gen = null_ideal_field(reduce_algebra(A, p)).generator
    cert = RatPoly(gen.lift(symmetric=True), p)
    verdict = int_member(cert, A)
    if not verdict.member or cert.is_integral():
        raise VerificationError(f"certificate {cert} does not verify")
    return NontrivialityCertificate(p, True, gen, cert, verdict)
