"""Exact coefficient rings: ZZ, the residue rings Z/mZ and finite fields F_q.

Every ring element is a plain Python ``int``.  Rings are context objects
that know how to add and multiply their elements, in the style of::

    R = ModRing(9)
    R.mul(4, 7)   # -> 1

An element c_0 + c_1 t + ... + c_{e-1} t^{e-1} of F_q = F_p[t]/(m(t)) is
encoded by the integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}.  Iterating
``range(q)`` therefore lists the field with the first coordinate varying
fastest, e.g. F_4 comes out as 0, 1, t, t+1.

F_p built by :func:`make_fq` compares equal to ``ModRing(p)``: the two
contexts share encoding and arithmetic.
"""

from __future__ import annotations

import contextlib
import contextvars
import math

from .errors import BadModulus, DegreeTooLarge, EnumerationTooLarge, NonPrime, NotAField, NotPrimePower

DEFAULT_MAX_ENUM = 10**7

_max_enum = contextvars.ContextVar("max_enum", default=DEFAULT_MAX_ENUM)


def max_enum() -> int:
    return _max_enum.get()


def set_max_enum(n: int) -> None:
    if n < 1:
        raise ValueError("max_enum must be >= 1")
    _max_enum.set(n)


@contextlib.contextmanager
def enumeration_limit(n: int):
    """Temporarily change the exhaustive-enumeration bound."""
    if n < 1:
        raise ValueError("max_enum must be >= 1")
    token = _max_enum.set(n)
    try:
        yield
    finally:
        _max_enum.reset(token)


def check_enum(count: int, what: str = "elements") -> None:
    bound = max_enum()
    if count > bound:
        raise EnumerationTooLarge(f"{count} {what} exceeds enumeration bound {bound}")


# --- small number theory -------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; only meant for desk-size moduli."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return p, e


def digits(x: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        x, r = divmod(x, base)
        out.append(r)
    return out


def undigits(cs, base: int) -> int:
    x = 0
    for c in reversed(cs):
        x = x * base + c
    return x


# --- rings ----------------------------------------------------------------

class _Ring:
    """Shared helpers.  Subclasses provide add/sub/mul/neg/canon/from_int."""

    zero = 0
    one = 1
    # int_like: elements add and multiply as integers followed by canon().
    int_like = True
    order: int | None = None
    is_field = False

    def __eq__(self, other):
        return isinstance(other, _Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def is_zero(self, a: int) -> bool:
        return a == 0

    def elements(self) -> range:
        if self.order is None:
            raise EnumerationTooLarge(f"{self} is infinite")
        check_enum(self.order)
        return range(self.order)

    def format(self, a: int) -> str:
        return str(a)


class IntegerRing(_Ring):
    key = ("Z",)
    characteristic = 0

    def canon(self, a):
        return int(a)

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in ZZ")

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


class ModRing(_Ring):
    """The residue ring Z/mZ with canonical residues in [0, m)."""

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 2:
            raise BadModulus(f"modulus must be an integer >= 2, got {m!r}")
        self.m = m
        self.order = m
        self.characteristic = m
        self.is_field = is_prime(m)
        self.key = ("Zmod", m)

    def canon(self, a):
        return a % self.m

    def from_int(self, n):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def neg(self, a):
        return -a % self.m

    def mul(self, a, b):
        return a * b % self.m

    def inv(self, a):
        return pow(a, -1, self.m)

    def lift(self, a: int, symmetric: bool = False) -> int:
        """Integer representative; symmetric picks (-m/2, m/2]."""
        a %= self.m
        if symmetric and 2 * a > self.m:
            a -= self.m
        return a

    def __repr__(self):
        return f"Z/{self.m}"


class FqCtx(_Ring):
    """F_q = F_p[t]/(modulus) with q = p**e.

    ``modulus`` is the ascending coefficient tuple of a monic irreducible
    polynomial of degree e over F_p.  Use :func:`make_fq` rather than
    calling this directly; the constructor trusts its input unless
    ``verify`` is set.
    """

    _TABLE_LIMIT = 1 << 16

    def __init__(self, p: int, e: int, modulus, verify: bool = True):
        modulus = tuple(c % p for c in modulus)
        if verify:
            if not is_prime(p):
                raise NonPrime(f"{p} is not prime")
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            from .poly import Poly, is_irreducible
            if not is_irreducible(Poly(modulus, ModRing(p))):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.order = self.q
        self.characteristic = p
        self.modulus = modulus
        self.is_field = True
        self.int_like = e == 1
        self.key = ("Zmod", p) if e == 1 else ("Fq", p, modulus)
        self._log = self._exp = None
        if e > 1 and self.q <= self._TABLE_LIMIT:
            self._build_tables()

    # coordinates
    def coords(self, a: int) -> tuple[int, ...]:
        return tuple(digits(a, self.p, self.e))

    def from_coords(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.e:
            raise ValueError("too many coordinates")
        return undigits([c % self.p for c in cs], self.p)

    def canon(self, a):
        if self.e == 1:
            return a % self.p
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of F_{self.q}")
        return a

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        p = self.p
        if self.e == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, place = 0, 1
        while a or b:
            out += ((a + b) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a):
        p = self.p
        if self.e == 1:
            return -a % p
        if p == 2:
            return a
        out, place = 0, 1
        while a:
            out += (-a % p) * place
            a //= p
            place *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def _mul_slow(self, a, b):
        p, e, mod = self.p, self.e, self.modulus
        x = digits(a, p, e)
        y = digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * mod[i]
            prod[k] = 0
        return undigits([c % p for c in prod[:e]], p)

    def _build_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [1] * (q - 1)
            x = 1
            ok = True
            for i in range(1, q - 1):
                x = self._mul_slow(x, g)
                if x == 1:
                    ok = False
                    break
                exp[i] = x
            if ok:
                break
        else:  # q == 2 handled by e == 1; unreachable for a field
            raise AssertionError("no primitive element found")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp, self._log = exp, log

    def format(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        terms = []
        for i, c in enumerate(digits(a, self.p, self.e)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(reversed(terms)) if terms else "0"

    def __repr__(self):
        return f"F_{self.q}" if self.e > 1 else f"F_{self.p}"


def make_fq(p: int, e: int = 1, max_order: int | None = None) -> FqCtx:
    """F_{p^e} with the least monic irreducible modulus of degree e.

    Candidates are ordered by their lower coefficients read as a base-p
    number (first coefficient fastest), matching element order.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    bound = max_order if max_order is not None else max_enum()
    if p**e > bound:
        raise DegreeTooLarge(f"{p}^{e} exceeds the bound {bound}")
    return _make_fq_cached(p, e)


_FQ_CACHE: dict[tuple[int, int], FqCtx] = {}


def _make_fq_cached(p, e):
    ctx = _FQ_CACHE.get((p, e))
    if ctx is None:
        if e == 1:
            modulus = (0, 1)
        else:
            from .poly import least_irreducible
            modulus = least_irreducible(ModRing(p), e).coeffs
        ctx = FqCtx(p, e, modulus, verify=False)
        _FQ_CACHE[(p, e)] = ctx
    return ctx


def enumerate_elements(R) -> range:
    """All elements of a finite ring, each once, in code order."""
    return R.elements()


def frobenius_power(ctx: _Ring, x: int, k: int) -> int:
    """x ** (p ** k); exponent reduced modulo q - 1 for nonzero x."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if x == 0:
        return 0
    exp = ctx.characteristic**k
    if ctx.is_field and ctx.order is not None:
        exp %= ctx.order - 1
        if exp == 0:
            exp = ctx.order - 1
    return ctx.pow(x, exp)


def parse_ring(text: str) -> _Ring:
    """Parse 'Z', 'Zmod:m' or 'Fq:p,e' (algebra-spec ring field)."""
    text = text.strip()
    if text == "Z":
        return ZZ
    kind, _, arg = text.partition(":")
    if kind == "Zmod":
        return ModRing(int(arg))
    if kind == "Fq":
        p, e = (int(s) for s in arg.split(","))
        return make_fq(p, e)
    raise ValueError(f"unknown ring {text!r}")


def ring_name(R: _Ring) -> str:
    if R.key == ("Z",):
        return "Z"
    if isinstance(R, FqCtx):
        return f"Fq:{R.p},{R.e}"
    return f"Zmod:{R.m}"


def require_field(R: _Ring) -> None:
    if not R.is_field:
        raise NotAField(f"{R} is not a field")


def lcm_int(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)
