"""Univariate polynomials over ZZ, Z/mZ and F_q, plus rational polynomials g/d.

A :class:`Poly` stores its coefficient ring and an ascending coefficient
tuple without trailing zeros; ``Poly((0, -1, 1))`` is X^2 - X over ZZ.
The zero polynomial has the empty tuple and degree ``-inf``.

Two text forms are understood everywhere (CLI, JSON):

* ascending coefficient lists ``"0,-1,1"``
* pretty form ``"X^2 - X"``, as produced by ``str()``
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product

from .errors import BadModulus, DegreeTooLarge, NonMonicDivisor, NotAField, ParseError, RingMismatch
from .rings import ZZ, ModRing, check_enum, digits, prime_power

DEG_ZERO = -math.inf
PHI_MAX_DEGREE = 10**5


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs=(), ring=ZZ):
        cs = [ring.canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs, ring):
        # coeffs already canonical and trimmed
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, ring=ZZ):
        return cls._raw((0, 1), ring)

    @classmethod
    def constant(cls, c, ring=ZZ):
        return cls((c,), ring)

    @classmethod
    def monomial(cls, k, ring=ZZ):
        return cls._raw((0,) * k + (1,), ring)

    # basic properties
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and self.ring.int_like:
            return self == Poly((other,), self.ring)
        return isinstance(other, Poly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.key, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, {self.ring!r})"

    def __str__(self):
        return format_poly(self)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return Poly((self.ring.from_int(other),), self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        if R.int_like:
            for i, c in enumerate(b):
                out[i] = R.canon(out[i] + c)
        else:
            for i, c in enumerate(b):
                out[i] = R.add(out[i], c)
        return Poly(out, R)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return Poly._raw([R.neg(c) for c in self.coeffs], R)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), R)
        if R.int_like:
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly(out, R)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = R.add(out[i + j], R.mul(x, y))
        return Poly(out, R)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly((self.ring.one,), self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        R = self.ring
        return Poly([R.mul(c, x) for x in self.coeffs], R)

    def shift(self, k: int):
        """Multiply by X**k."""
        if not self.coeffs:
            return self
        return Poly._raw((0,) * k + self.coeffs, self.ring)

    def __call__(self, x):
        """Horner evaluation at an element of the coefficient ring."""
        R = self.ring
        acc = 0
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, x), c)
        return acc

    def compose(self, g: "Poly") -> "Poly":
        """self(g(X))."""
        g = self._coerce(g)
        acc = Poly._raw((), self.ring)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly._raw((c,), self.ring)
        return acc

    def derivative(self):
        R = self.ring
        return Poly([R.mul(R.from_int(i), c) for i, c in enumerate(self.coeffs)][1:], R)

    def divmod_monic(self, g: "Poly"):
        return monic_divmod(self, g)

    def __mod__(self, g):
        return monic_divmod(self, g)[1]

    def monic(self):
        """Scale to leading coefficient one (field coefficients only)."""
        if not self.coeffs:
            return self
        return self.scale(self.ring.inv(self.lc))

    def to_ring(self, ring) -> "Poly":
        """Map coefficients along the canonical map Z -> ring.

        Defined for integer-like source rings (ZZ, Z/m, F_p); the target
        must receive the source characteristic.
        """
        if not self.ring.int_like:
            if ring == self.ring:
                return self
            raise RingMismatch(f"cannot map {self.ring} into {ring}")
        src = self.ring.characteristic
        if src and ring.characteristic and src % ring.characteristic:
            raise RingMismatch(f"no ring map {self.ring} -> {ring}")
        if src and not ring.characteristic:
            raise RingMismatch(f"no ring map {self.ring} -> {ring}")
        return Poly([ring.from_int(c) for c in self.coeffs], ring)

    def lift(self, symmetric: bool = False) -> "Poly":
        """Integer pullback of a residue polynomial, coefficients in [0, m) or (-m/2, m/2]."""
        R = self.ring
        if R == ZZ:
            return self
        if not R.int_like:
            raise RingMismatch(f"cannot lift from {R}")
        m = R.order
        out = []
        for c in self.coeffs:
            if symmetric and 2 * c > m:
                c -= m
            out.append(c)
        return Poly._raw(out, ZZ)

    def content(self) -> int:
        if self.ring != ZZ:
            raise RingMismatch("content is defined over ZZ")
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


# --- division, gcd ---------------------------------------------------------

def monic_divmod(f: Poly, g: Poly):
    """(q, r) with f = q*g + r and deg r < deg g; exact because g is monic."""
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    if not g.is_monic():
        raise NonMonicDivisor(f"divisor {g} is not monic")
    R = f.ring
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return Poly._raw((), R), f
    quot = [0] * (len(rem) - dg)
    gc = g.coeffs
    if R.int_like:
        for k in range(len(rem) - 1, dg - 1, -1):
            c = R.canon(rem[k])
            if c:
                quot[k - dg] = c
                for i in range(dg):
                    rem[k - dg + i] -= c * gc[i]
            rem[k] = 0
        return Poly(quot, R), Poly(rem[:dg], R)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            quot[k - dg] = c
            for i in range(dg):
                if gc[i]:
                    rem[k - dg + i] = R.sub(rem[k - dg + i], R.mul(c, gc[i]))
        rem[k] = 0
    return Poly(quot, R), Poly(rem[:dg], R)


def _field_divmod(f: Poly, g: Poly):
    inv = f.ring.inv(g.lc)
    q, r = monic_divmod(f, g.scale(inv))
    return q.scale(inv), r


def _require_field(R):
    if not R.is_field:
        raise NotAField(f"{R} is not a field")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    _require_field(f.ring)
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    while g.coeffs:
        f, g = g, _field_divmod(f, g)[1]
    return f.monic()


def gcd_lcm(f: Poly, g: Poly):
    """Monic gcd and monic lcm over a field."""
    _require_field(f.ring)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    d = poly_gcd(f, g)
    if f.is_zero() or g.is_zero():
        return d, Poly._raw((), f.ring)
    lcm = monic_divmod(f.monic() * g.monic(), d)[0]
    return d, lcm


def divides(d: Poly, f: Poly) -> bool:
    """True if the monic polynomial d divides f."""
    return monic_divmod(f, d)[1].is_zero()


def pow_mod(base: Poly, k: int, mod: Poly) -> Poly:
    result = Poly((base.ring.one,), base.ring) % mod
    base = base % mod
    while k:
        if k & 1:
            result = (result * base) % mod
        k >>= 1
        if k:
            base = (base * base) % mod
    return result


def is_irreducible(f: Poly) -> bool:
    """Ben-Or test over a finite field."""
    R = f.ring
    _require_field(R)
    n = f.degree
    if n < 1:
        return False
    f = f.monic()
    q = R.order
    x = Poly.x(R)
    h = x % f
    for _ in range(n // 2):
        h = pow_mod(h, q, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


def monic_polys(R, n: int):
    """All monic degree-n polynomials over a finite ring, in code order."""
    q = R.order
    check_enum(q**n, "monic polynomials")
    for low in product(range(q), repeat=n):
        yield Poly._raw(tuple(reversed(low)) + (R.one,), R)


def least_irreducible(R, n: int) -> Poly:
    """Least monic irreducible of degree n, lower coefficients ordered as a base-q number."""
    _require_field(R)
    q = R.order
    for code in range(q**n):
        f = Poly._raw(tuple(digits(code, q, n)) + (R.one,), R)
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")  # impossible over a finite field


def reduce_mod(g: Poly, m: int) -> Poly:
    """Coefficientwise reduction of an integer polynomial into (Z/m)[X]."""
    if not isinstance(m, int) or m < 2:
        raise BadModulus(f"modulus must be >= 2, got {m!r}")
    if g.ring != ZZ:
        raise RingMismatch("reduce_mod expects an integer polynomial")
    return g.to_ring(ModRing(m))


# --- the annihilator polynomials -------------------------------------------

def phi(q: int, n: int, max_degree: int = PHI_MAX_DEGREE) -> Poly:
    """(X^{q^n} - X)(X^{q^{n-1}} - X) ... (X^q - X) expanded over ZZ."""
    prime_power(q)  # raises NotPrimePower
    if n < 1:
        raise ValueError("n must be >= 1")
    degree = sum(q**i for i in range(1, n + 1))
    if degree > max_degree:
        raise DegreeTooLarge(f"phi({q},{n}) has degree {degree} > {max_degree}")
    terms = {0: 1}
    for i in range(1, n + 1):
        big = q**i
        new: dict[int, int] = {}
        for k, c in terms.items():
            new[k + big] = new.get(k + big, 0) + c
            new[k + 1] = new.get(k + 1, 0) - c
        terms = {k: c for k, c in new.items() if c}
    coeffs = [0] * (degree + 1)
    for k, c in terms.items():
        coeffs[k] = c
    return Poly._raw(coeffs, ZZ)


def all_monic_lcm_oracle(F, n: int) -> Poly:
    """lcm of every monic degree-n polynomial over the finite field F (brute force)."""
    _require_field(F)
    acc = Poly((F.one,), F)
    for h in monic_polys(F, n):
        acc = gcd_lcm(acc, h)[1]
    return acc


# --- rational polynomials ----------------------------------------------------

@dataclass(frozen=True)
class RatPoly:
    """f = num / den with den >= 1 coprime to the content of num."""

    num: Poly
    den: int = 1

    def __post_init__(self):
        if self.num.ring != ZZ:
            raise RingMismatch("RatPoly numerator must be an integer polynomial")
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.content(), den)
        if g > 1:
            num = Poly._raw([c // g for c in num.coeffs], ZZ)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_integral(self) -> bool:
        return self.den == 1

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


# --- text formats ------------------------------------------------------------

def _coeff_text(R, c):
    s = R.format(c)
    return f"({s})" if " " in s else s


def format_poly(f: Poly) -> str:
    R = f.ring
    if not f.coeffs:
        return "0"
    signed = R == ZZ
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        neg = signed and c < 0
        mag = -c if neg else c
        mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
        if mono and mag == 1:
            body = mono
        else:
            body = _coeff_text(R, mag) + mono
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)\*?(?:([Xx])(?:\^(\d+))?)?")


def parse_poly(text: str, ring=ZZ) -> Poly:
    """Parse ``"c0,c1,..."`` or ``"X^2 - 5X - 2"`` style text into a Poly over ring."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ParseError("empty polynomial")
    if "," in s or re.fullmatch(r"-?\d+", s):
        try:
            vals = [int(c) for c in s.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad coefficient list {text!r}") from exc
        return Poly([ring.from_int(v) for v in vals], ring)
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if not num and not var:
            raise ParseError(f"dangling sign in {text!r}")
        if pos > 0 and not sign:
            raise ParseError(f"missing operator in {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if var else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    dense = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] = c
    return Poly([ring.from_int(c) for c in dense], ring)


def parse_ratpoly(text: str) -> RatPoly:
    s = text.strip()
    if "/" in s:
        head, _, tail = s.rpartition("/")
        try:
            den = int(tail)
        except ValueError as exc:
            raise ParseError(f"bad denominator in {text!r}") from exc
        return RatPoly(parse_poly(head), den)
    return RatPoly(parse_poly(s), 1)


__all__ = [
    "DEG_ZERO", "Poly", "RatPoly", "monic_divmod", "gcd_lcm", "poly_gcd", "divides",
    "reduce_mod", "phi", "all_monic_lcm_oracle", "is_irreducible", "least_irreducible",
    "monic_polys", "pow_mod", "format_poly", "parse_poly", "parse_ratpoly",
]
