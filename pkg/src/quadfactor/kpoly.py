"""Exact arithmetic in K = Q(sqrt(d)) and factorization in K[x].

Scalars are u + v*w with rational u, v (`KElem`); polynomials (`KPoly`)
keep coefficients low-to-high.  Everything runs on `fractions.Fraction`,
so results are exact.

Rational polynomials are factored by Kronecker's interpolation method:
a degree-k divisor of f is determined by its values at k+1 points, and
each value g(x_i) must divide f(x_i), so finitely many divisor
combinations exhaust all candidates.  The method is slow in the worst
case but dependency-free, exact, and comfortably fast at the degrees the
guards admit.  Evaluation points are taken as 0, 1, -1, 2, -2, ...
skipping roots of f (a root found on the way is itself a factor).

K[x] factorization reduces to Q[x] by norm descent: shift f by s*w until
N(x) = g*conj(g) is squarefree, factor N over Q, and read each K-factor
off as gcd(g, h_i).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .qint import QuadInt, RingCfg, format_coords, units

FACTOR_Q_MAX_DEG = 8
FACTOR_K_MAX_DEG = 6
_SHIFT_LIMIT = 20


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class KElem:
    """A field element u + v*w of Q(sqrt(d))."""

    u: Fraction
    v: Fraction
    cfg: RingCfg

    @staticmethod
    def of(u, v, cfg: RingCfg) -> "KElem":
        return KElem(_frac(u), _frac(v), cfg)

    @staticmethod
    def from_quadint(x: QuadInt) -> "KElem":
        return KElem(Fraction(x.a), Fraction(x.b), x.cfg)

    def normk(self) -> Fraction:
        return self.u * self.u - self.cfg.d * self.v * self.v

    def conj(self) -> "KElem":
        return KElem(self.u, -self.v, self.cfg)

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def is_integral(self) -> bool:
        """Whether the element lies in the order Z[w]."""
        return self.u.denominator == 1 and self.v.denominator == 1

    def to_quadint(self) -> QuadInt:
        if not self.is_integral():
            raise DomainError(f"{self} is not in Z[w]")
        return QuadInt(int(self.u), int(self.v), self.cfg)

    def __add__(self, o: "KElem") -> "KElem":
        return KElem(self.u + o.u, self.v + o.v, self.cfg)

    def __sub__(self, o: "KElem") -> "KElem":
        return KElem(self.u - o.u, self.v - o.v, self.cfg)

    def __neg__(self) -> "KElem":
        return KElem(-self.u, -self.v, self.cfg)

    def __mul__(self, o: "KElem") -> "KElem":
        d = self.cfg.d
        return KElem(self.u * o.u + d * self.v * o.v,
                     self.u * o.v + self.v * o.u, self.cfg)

    def inv(self) -> "KElem":
        n = self.normk()
        if n == 0:
            raise DomainError("division by zero in K")
        return KElem(self.u / n, -self.v / n, self.cfg)

    def __truediv__(self, o: "KElem") -> "KElem":
        return self * o.inv()

    def __str__(self) -> str:
        den = math.lcm(self.u.denominator, self.v.denominator)
        inner = format_coords(int(self.u * den), int(self.v * den))
        if den == 1:
            return inner
        if any(ch in inner[1:] for ch in "+-"):
            return f"({inner})/{den}"
        return f"{inner}/{den}"

    def __repr__(self) -> str:
        return f"KElem({self.u}, {self.v}, d={self.cfg.d})"


def kelem_order_key(z: KElem):
    return (z.normk(), z.u, z.v)


def _kelem_assoc_key(z: KElem):
    su = 0 if z.u > 0 else (1 if z.u == 0 else 2)
    sv = 0 if z.v > 0 else (1 if z.v == 0 else 2)
    return (su, abs(z.u), sv, abs(z.v))


def canonical_associate_k(z: KElem) -> KElem:
    """Same representative rule as for Z[w], applied inside K."""
    us = [KElem.from_quadint(u) for u in units(z.cfg)]
    return min((z * u for u in us), key=_kelem_assoc_key)


def _rat_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a = math.isqrt(q.numerator)
    b = math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def sqrt_in_field(z: KElem) -> KElem | None:
    """A square root of z inside K = Q(sqrt(d)), or None.

    For z = u + v*w with v != 0, (p + q*w)^2 = z forces q = v/(2p) and
    p^2 = (u +- sqrt(normk(z)))/2, so z is a square iff normk(z) is a
    rational square and one of those two rationals is a positive square.
    """
    cfg = z.cfg
    if z.is_zero():
        return z
    if z.v == 0:
        r = _rat_sqrt(z.u)
        if r is not None:
            return KElem(r, Fraction(0), cfg)
        r = _rat_sqrt(z.u / cfg.d)  # (t*w)^2 = t^2 * d
        if r is not None:
            return KElem(Fraction(0), r, cfg)
        return None
    s = _rat_sqrt(z.normk())
    if s is None:
        return None
    for p2 in ((z.u + s) / 2, (z.u - s) / 2):
        if p2 > 0:
            p = _rat_sqrt(p2)
            if p is not None:
                root = KElem(p, z.v / (2 * p), cfg)
                assert root * root == z
                return root
    return None


class KPoly:
    """A polynomial over Q(sqrt(d)); coefficient i multiplies x^i."""

    __slots__ = ("coeffs", "cfg")

    def __init__(self, coeffs, cfg: RingCfg):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.cfg = cfg

    @staticmethod
    def const(z: KElem) -> "KPoly":
        return KPoly([z], z.cfg)

    @staticmethod
    def from_rationals(vals, cfg: RingCfg) -> "KPoly":
        return KPoly([KElem.of(v, 0, cfg) for v in vals], cfg)

    def zero_elem(self) -> KElem:
        return KElem(Fraction(0), Fraction(0), self.cfg)

    def one_elem(self) -> KElem:
        return KElem(Fraction(1), Fraction(0), self.cfg)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return self.degree() == 0

    def lc(self) -> KElem:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> KElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero_elem()

    def is_rational(self) -> bool:
        return all(c.v == 0 for c in self.coeffs)

    def __add__(self, o: "KPoly") -> "KPoly":
        n = max(len(self.coeffs), len(o.coeffs))
        return KPoly([self.coeff(i) + o.coeff(i) for i in range(n)], self.cfg)

    def __sub__(self, o: "KPoly") -> "KPoly":
        n = max(len(self.coeffs), len(o.coeffs))
        return KPoly([self.coeff(i) - o.coeff(i) for i in range(n)], self.cfg)

    def __neg__(self) -> "KPoly":
        return KPoly([-c for c in self.coeffs], self.cfg)

    def __mul__(self, o: "KPoly") -> "KPoly":
        if self.is_zero() or o.is_zero():
            return KPoly([], self.cfg)
        out = [self.zero_elem()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(o.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return KPoly(out, self.cfg)

    def scale(self, z: KElem) -> "KPoly":
        return KPoly([c * z for c in self.coeffs], self.cfg)

    def monic(self) -> "KPoly":
        return self.scale(self.lc().inv())

    def divmod(self, g: "KPoly") -> tuple["KPoly", "KPoly"]:
        if g.is_zero():
            raise DomainError("polynomial division by zero")
        q = [self.zero_elem()] * max(len(self.coeffs) - len(g.coeffs) + 1, 0)
        rem = list(self.coeffs)
        glc = g.lc().inv()
        gdeg = g.degree()
        while len(rem) - 1 >= gdeg and rem:
            c = rem[-1] * glc
            k = len(rem) - 1 - gdeg
            q[k] = c
            for i, gc in enumerate(g.coeffs):
                rem[k + i] = rem[k + i] - c * gc
            while rem and rem[-1].is_zero():
                rem.pop()
        return KPoly(q, self.cfg), KPoly(rem, self.cfg)

    def evaluate(self, z: KElem) -> KElem:
        acc = self.zero_elem()
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "KPoly":
        return KPoly([KElem.of(i, 0, self.cfg) * c
                      for i, c in enumerate(self.coeffs)][1:], self.cfg)

    def conj_coeffs(self) -> "KPoly":
        return KPoly([c.conj() for c in self.coeffs], self.cfg)

    def shifted(self, t: KElem) -> "KPoly":
        """f(x + t), computed by Horner over K[x]."""
        x_plus_t = KPoly([t, self.one_elem()], self.cfg)
        acc = KPoly([], self.cfg)
        for c in reversed(self.coeffs):
            acc = acc * x_plus_t + KPoly.const(c)
        return acc

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, KPoly) and self.coeffs == other.coeffs
                and self.cfg.d == other.cfg.d)

    def __hash__(self) -> int:
        return hash((self.coeffs, self.cfg.d))

    def __repr__(self) -> str:
        return f"KPoly({self!s}, d={self.cfg.d})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            neg = False
            cs = str(c)
            if cs.startswith("-"):
                neg = True
                cs = str(-c)
            composite = (any(ch in cs[1:] for ch in "+-")
                         and not cs.startswith("("))
            if k == 0:
                # a trailing "+a-b*w" parses the same without parens;
                # only "-(a-b*w)" genuinely needs them
                body = f"({cs})" if neg and composite else cs
            else:
                if composite:
                    cs = f"({cs})"
                xpow = "x" if k == 1 else f"x^{k}"
                body = xpow if cs == "1" else f"{cs}*{xpow}"
            parts.append(("-" if neg else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += sign + body
        return out


def poly_order_key(p: KPoly):
    return (p.degree(), tuple(kelem_order_key(c) for c in reversed(p.coeffs)))


def poly_gcd(f: KPoly, g: KPoly) -> KPoly:
    """Monic gcd in K[x] by the Euclidean algorithm (field coefficients)."""
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic()


# ---------------------------------------------------------------------------
# Kronecker factorization of integer polynomials
# ---------------------------------------------------------------------------

def _int_eval(F: list[int], x: int) -> int:
    acc = 0
    for c in reversed(F):
        acc = acc * x + c
    return acc


@functools.lru_cache(maxsize=None)
def _signed_divisors(n: int) -> tuple[int, ...]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.extend((i, -i, n // i, -(n // i)))
        i += 1
    return tuple(sorted(set(out), key=lambda t: (abs(t), t < 0)))


def _points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _lagrange(pts: list[int], vals: list[int]) -> list[Fraction]:
    """Interpolating polynomial (coefficients low-to-high, Fractions)."""
    n = len(pts)
    acc = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            # multiply basis by (x - pts[j])
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= pts[j] * basis[k + 1]
            denom *= pts[i] - pts[j]
        scale = Fraction(vals[i]) / denom
        for k in range(len(basis)):
            acc[k] += scale * basis[k]
    while acc and acc[-1] == 0:
        acc.pop()
    return acc


def _frac_divmod(F: list[int], G: list[int]) -> tuple[list[Fraction], list[Fraction]]:
    q = [Fraction(0)] * max(len(F) - len(G) + 1, 0)
    rem = [Fraction(c) for c in F]
    while len(rem) >= len(G) and rem:
        c = rem[-1] / G[-1]
        k = len(rem) - len(G)
        q[k] = c
        for i, gc in enumerate(G):
            rem[k + i] -= c * gc
        while rem and rem[-1] == 0:
            rem.pop()
    return q, rem


def _exact_int_quotient(F: list[int], G: list[int]) -> list[int] | None:
    q, r = _frac_divmod(F, G)
    if r:
        return None
    if any(c.denominator != 1 for c in q):
        return None
    return [int(c) for c in q]


def _compatible_combos(pts: list[int], divlists: list[tuple[int, ...]]):
    """Divisor tuples with d_i = d_j mod (x_i - x_j) for all pairs.

    Any integer polynomial g satisfies g(x_i) = g(x_j) mod (x_i - x_j),
    so incompatible tuples cannot interpolate to an integer divisor and
    are pruned before interpolation.
    """
    chosen: list[int] = []

    def rec(i: int):
        if i == len(pts):
            yield tuple(chosen)
            return
        for cand in divlists[i]:
            if all((cand - chosen[j]) % (pts[i] - pts[j]) == 0
                   for j in range(i)):
                chosen.append(cand)
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


def _kronecker(F: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive integer polynomial, lc > 0.

    Factors of minimal degree are found first, which certifies their
    irreducibility: any proper factor would already have shown up at a
    smaller k.
    """
    n = len(F) - 1
    if n == 1:
        return [F[:]]
    kmax = n // 2
    pts: list[int] = []
    vals: list[int] = []
    gen = _points()
    while len(pts) < kmax + 1:
        x = next(gen)
        fx = _int_eval(F, x)
        if fx == 0:
            g = [-x, 1]
            q = _exact_int_quotient(F, g)
            assert q is not None
            return sorted([g] + _kronecker(q),
                          key=lambda h: (len(h), tuple(reversed(h))))
        pts.append(x)
        vals.append(fx)
    for k in range(1, kmax + 1):
        p = pts[:k + 1]
        divlists = [_signed_divisors(v) for v in vals[:k + 1]]
        # g and -g interpolate from opposite sign tuples; fixing the first
        # divisor positive halves the search without losing candidates
        divlists[0] = tuple(t for t in divlists[0] if t > 0)
        for combo in _compatible_combos(p, divlists):
            cand = _lagrange(p, list(combo))
            if len(cand) - 1 != k or any(c.denominator != 1 for c in cand):
                continue
            g = [int(c) for c in cand]
            if g[-1] < 0:
                g = [-c for c in g]
            q = _exact_int_quotient(F, g)
            if q is not None:
                return sorted(_kronecker(g) + _kronecker(q),
                              key=lambda h: (len(h), tuple(reversed(h))))
    return [F[:]]


def _rational_factors(p: KPoly) -> tuple[Fraction, list[KPoly]]:
    """content * product-of-primitive-integer-irreducibles for rational p."""
    denl = 1
    for c in p.coeffs:
        denl = math.lcm(denl, c.u.denominator)
    ints = [int(c.u * denl) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    sign = 1 if ints[-1] > 0 else -1
    F = [c // (g * sign) for c in ints]
    content = Fraction(g * sign, denl)
    if len(F) == 1:
        return content, []
    factors = [KPoly.from_rationals(h, p.cfg) for h in _kronecker(F)]
    return content, sorted(factors, key=poly_order_key)


def factor_q(f: KPoly) -> tuple[KElem, list[KPoly]]:
    """Factor a rational polynomial into unit * irreducible integer
    polynomials (primitive, positive leading coefficient).
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if not f.is_rational():
        raise DomainError("factor_q expects rational coefficients")
    if f.degree() > FACTOR_Q_MAX_DEG:
        raise ResourceLimitError(
            f"degree {f.degree()} exceeds factor_q guard {FACTOR_Q_MAX_DEG}")
    content, factors = _rational_factors(f)
    return KElem.of(content, 0, f.cfg), factors


def _trager(h: KPoly) -> list[KPoly]:
    """Distinct monic irreducible K[x]-factors of monic squarefree h.

    Shift h by s*w until N = g * conj(g) is squarefree over Q; then the
    rational irreducible factors of N are exactly the norms of the
    K-factors of g, and each K-factor is recovered as a gcd.
    """
    cfg = h.cfg
    if h.degree() <= 1:
        return [h]
    shifts = [0]
    for s in range(1, _SHIFT_LIMIT + 1):
        shifts.extend((s, -s))
    for s in shifts:
        t = KElem.of(0, -s, cfg)  # g(x) = h(x - s*w)
        g = h.shifted(t)
        normpoly = g * g.conj_coeffs()
        assert normpoly.is_rational()
        if poly_gcd(normpoly, normpoly.derivative()).degree() != 0:
            continue
        _, rats = _rational_factors(normpoly)
        out = []
        back = KElem.of(0, s, cfg)
        for hi in rats:
            q = poly_gcd(g, hi)
            if q.degree() >= 1:
                out.append(q.shifted(back).monic())
        assert sum(q.degree() for q in out) == h.degree()
        return sorted(out, key=poly_order_key)
    raise RuntimeError("no squarefree norm shift found; input unexpected")


def factor_k(f: KPoly) -> tuple[KElem, list[KPoly]]:
    """Complete factorization in K[x]: unit * monic irreducibles
    (repeated according to multiplicity).
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if f.degree() > FACTOR_K_MAX_DEG:
        raise ResourceLimitError(
            f"degree {f.degree()} exceeds factor_k guard {FACTOR_K_MAX_DEG}")
    unit = f.lc()
    m = f.monic()
    if m.degree() == 0:
        return unit, []
    sqf = m.divmod(poly_gcd(m, m.derivative()))[0].monic()
    distinct = _trager(sqf)
    out = []
    rem = m
    for q in distinct:
        while True:
            quo, r = rem.divmod(q)
            if not r.is_zero():
                break
            out.append(q)
            rem = quo
    prod = KPoly.const(unit)
    for q in out:
        prod = prod * q
    assert prod == f, "factorization must multiply back exactly"
    return unit, sorted(out, key=poly_order_key)
