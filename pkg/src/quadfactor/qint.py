"""Exact arithmetic in imaginary quadratic orders Z[w], w = sqrt(d).

Elements are a + b*w with integer a, b and d < 0 squarefree.  The norm
a^2 + |d|*b^2 is multiplicative, vanishes only at 0, and bounds every
divisor of an element, so divisibility, irreducibility and primality are
all decidable by finite enumeration.  Only d < 0 is supported: the unit
group is then finite ({1, -1}, plus {w, -w} when d = -1), which makes
"up to associates" a finite canonical notion.

Associate classes get a canonical representative: the unit multiple
minimizing (-sign(a), |a|, -sign(b), |b|) lexicographically, i.e. positive
rational part preferred, then small, then positive w-part.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import DomainError

MAX_ABS_D = 100

# Class numbers of Q(sqrt(d)) for the maximal orders we ship metadata for,
# from the standard tables of imaginary quadratic fields.  Orders whose d
# is missing report None.
_CLASS_NUMBERS = {
    -1: 1, -2: 1, -5: 2, -6: 2, -10: 2, -13: 2, -14: 4,
    -17: 4, -21: 4, -22: 2,
}


def _is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class RingCfg:
    """Immutable description of one order Z[sqrt(d)]."""

    d: int
    is_maximal: bool
    class_number: int | None
    is_ufd: bool

    def el(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(a, b, self)

    def __repr__(self) -> str:
        return f"RingCfg(d={self.d})"


@functools.lru_cache(maxsize=None)
def ring(d: int) -> RingCfg:
    """Validated configuration for Z[sqrt(d)], d < 0 squarefree, |d| <= 100."""
    if d >= 0:
        raise DomainError(f"d must be negative, got {d}")
    if abs(d) > MAX_ABS_D:
        raise DomainError(f"|d| must be <= {MAX_ABS_D}, got {d}")
    if not _is_squarefree(-d):
        raise DomainError(f"d must be squarefree, got {d}")
    # Z[sqrt(d)] is the maximal order iff d is not 1 mod 4 (e.g. d = -3
    # misses (1+sqrt(-3))/2, so it is a proper suborder of index 2).
    maximal = d % 4 != 1
    h = _CLASS_NUMBERS.get(d) if maximal else None
    return RingCfg(d=d, is_maximal=maximal, class_number=h,
                   is_ufd=maximal and h == 1)


class QuadInt:
    """An element a + b*w of Z[w], w = sqrt(d)."""

    __slots__ = ("a", "b", "cfg")

    def __init__(self, a: int, b: int, cfg: RingCfg):
        self.a = a
        self.b = b
        self.cfg = cfg

    def norm(self) -> int:
        return self.a * self.a - self.cfg.d * self.b * self.b

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b, self.cfg)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def _check(self, other: "QuadInt") -> None:
        if self.cfg.d != other.cfg.d:
            raise DomainError("mixed rings")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.cfg)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.a - other.a, self.b - other.b, self.cfg)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.cfg)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        d = self.cfg.d
        return QuadInt(self.a * other.a + d * self.b * other.b,
                       self.a * other.b + self.b * other.a, self.cfg)

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            raise DomainError("negative powers leave the order")
        out = QuadInt(1, 0, self.cfg)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuadInt) and self.a == other.a
                and self.b == other.b and self.cfg.d == other.cfg.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.cfg.d))

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b}, d={self.cfg.d})"

    def __str__(self) -> str:
        return format_coords(self.a, self.b)


def format_coords(a, b) -> str:
    """Render a + b*w; shared by integral and fractional scalar types."""
    if b == 0:
        return str(a)
    mag = "w" if abs(b) == 1 else f"{abs(b)}*w"
    wpart = mag if b > 0 else f"-{mag}"
    if a == 0:
        return wpart
    return f"{a}+{mag}" if b > 0 else f"{a}-{mag}"


def norm(x: QuadInt) -> int:
    return x.norm()


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def try_div(x: QuadInt, y: QuadInt) -> QuadInt | None:
    """Exact quotient x / y in Z[w], or None when y does not divide x.

    x / y = x * conj(y) / norm(y), so divisibility is two integer
    divisibility checks; no floating point is involved.
    """
    if y.is_zero():
        raise DomainError("division by zero")
    n = y.norm()
    t = x * y.conj()
    if t.a % n or t.b % n:
        return None
    return QuadInt(t.a // n, t.b // n, x.cfg)


def units(cfg: RingCfg) -> list[QuadInt]:
    """All units: exactly the elements of norm 1."""
    out = [cfg.el(1), cfg.el(-1)]
    if cfg.d == -1:
        out += [cfg.el(0, 1), cfg.el(0, -1)]
    return out


def assoc_key(x: QuadInt):
    """Order key realizing the canonical-representative rule."""
    sa = 0 if x.a > 0 else (1 if x.a == 0 else 2)
    sb = 0 if x.b > 0 else (1 if x.b == 0 else 2)
    return (sa, abs(x.a), sb, abs(x.b))


def canonical_associate(x: QuadInt) -> QuadInt:
    return min((x * u for u in units(x.cfg)), key=assoc_key)


def order_key(x: QuadInt):
    """Deterministic total order on elements (used to sort multisets)."""
    return (x.norm(), x.a, x.b)


@functools.lru_cache(maxsize=None)
def _elements_of_norm(n: int, cfg: RingCfg) -> tuple[QuadInt, ...]:
    if n == 0:
        return (cfg.el(0),)
    found = set()
    dd = -cfg.d
    bmax = math.isqrt(n // dd)
    for b in range(bmax + 1):
        r = n - dd * b * b
        a = math.isqrt(r)
        if a * a != r:
            continue
        for sa in ((1, -1) if a else (1,)):
            for sb in ((1, -1) if b else (1,)):
                found.add(canonical_associate(cfg.el(sa * a, sb * b)))
    return tuple(sorted(found, key=assoc_key))


def elements_of_norm(n: int, cfg: RingCfg) -> tuple[QuadInt, ...]:
    """One representative per associate class with norm exactly n."""
    if n < 0:
        raise DomainError("norms are non-negative")
    return _elements_of_norm(n, cfg)


@functools.lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return tuple(sorted(out))


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _require_factorable(x: QuadInt) -> None:
    if x.is_zero():
        raise DomainError("zero has no factorization data")
    if x.is_unit():
        raise DomainError("units have no factorization data")


@functools.lru_cache(maxsize=None)
def _is_irreducible_canonical(x: QuadInt) -> bool:
    n = x.norm()
    for m in _divisors(n):
        if 1 < m < n:
            for y in elements_of_norm(m, x.cfg):
                if try_div(x, y) is not None:
                    return False
    return True


def is_irreducible(x: QuadInt) -> bool:
    """No factorization into two nonunits; decided by scanning all
    associate classes whose norm properly divides norm(x)."""
    _require_factorable(x)
    return _is_irreducible_canonical(canonical_associate(x))


def is_prime(x: QuadInt) -> bool:
    """Whether (x) is a prime ideal.

    R/(x) is finite, so (x) is prime iff R/(x) is a field.  That happens
    exactly when norm(x) is a rational prime (then R/(x) has prime order),
    or x is an associate of a rational prime p that stays inert, i.e.
    t^2 - d is irreducible mod p.  For p = 2 the polynomial t^2 - d is a
    square mod 2, so 2 never qualifies; for odd p inertness is the
    Euler-criterion test d^((p-1)/2) = -1 mod p.
    """
    _require_factorable(x)
    if _is_rational_prime(x.norm()):
        return True
    c = canonical_associate(x)
    if c.b == 0:
        p = c.a
        if _is_rational_prime(p) and p != 2 and x.cfg.d % p != 0:
            if pow(x.cfg.d % p, (p - 1) // 2, p) == p - 1:
                return True
    return False


def common_nonunit_divisor(elems: list[QuadInt]) -> QuadInt | None:
    """Smallest-norm canonical nonunit dividing every element, or None.

    A common divisor of minimal norm > 1 is automatically irreducible:
    any proper factor of it would be a smaller common divisor.
    """
    if not elems:
        raise DomainError("empty element list")
    cfg = elems[0].cfg
    nonzero = [e for e in elems if not e.is_zero()]
    if not nonzero:
        # everything is divisible by 0's divisors; report the smallest
        # irreducible of the ring
        n = 2
        while True:
            for c in elements_of_norm(n, cfg):
                if _is_irreducible_canonical(c):
                    return c
            n += 1
    g = 0
    for e in nonzero:
        g = math.gcd(g, e.norm())
    for m in _divisors(g):
        if m > 1:
            for c in elements_of_norm(m, cfg):
                if all(try_div(e, c) is not None for e in nonzero):
                    return c
    return None


def irreducible_common_divisors(elems: list[QuadInt]) -> list[QuadInt]:
    """All canonical irreducibles dividing every element of the list."""
    cfg = elems[0].cfg
    nonzero = [e for e in elems if not e.is_zero()]
    if not nonzero:
        raise DomainError("all elements are zero")
    g = 0
    for e in nonzero:
        g = math.gcd(g, e.norm())
    out = []
    for m in _divisors(g):
        if m > 1:
            for c in elements_of_norm(m, cfg):
                if _is_irreducible_canonical(c) and \
                        all(try_div(e, c) is not None for e in nonzero):
                    out.append(c)
    return out
