"""Polynomials over R = Z[w]: irreducibility, factorizations, elasticity,
and the splitting-behaviour witness search.

A nonunit f in R[x] factors through K[x]: any factorization of f groups
the K[x]-irreducible factors of f and rescales each group by a constant.
For a two-way split f = g*h with deg g >= 1, g is lam * g0 for some
subproduct g0 of the monic K-factors and some lam in K*.  The admissible
lam form a finite, computable set (see lambda_candidates), which makes
irreducibility and the full factorization tree decidable.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DomainError, ResourceLimitError
from .factor import Elasticity, FactorizationSet, _factor_multisets
from .kpoly import (FACTOR_K_MAX_DEG, KElem, KPoly, canonical_associate_k,
                    factor_k, kelem_order_key, sqrt_in_field)
from .qint import (QuadInt, RingCfg, _divisors, assoc_key,
                   canonical_associate, common_nonunit_divisor,
                   elements_of_norm, irreducible_common_divisors,
                   is_irreducible, norm, order_key, try_div, units)

log = logging.getLogger(__name__)

MAX_DEG = FACTOR_K_MAX_DEG
MAX_COEFF_NORM = 10 ** 6
WITNESS_MAX_DEG = 2


class RPoly:
    """Polynomial with coefficients in Z[w], low degree first."""

    __slots__ = ("coeffs", "cfg")

    def __init__(self, coeffs, cfg: RingCfg):
        cs = [c if isinstance(c, QuadInt) else cfg.el(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.cfg = cfg

    @staticmethod
    def const(c: QuadInt) -> "RPoly":
        return RPoly([c], c.cfg)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return self.degree() == 0 and self.coeffs[0].is_unit()

    def lc(self) -> QuadInt:
        return self.coeffs[-1]

    def coeff(self, i: int) -> QuadInt:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.cfg.el(0)

    def to_kpoly(self) -> KPoly:
        return KPoly([KElem.from_quadint(c) for c in self.coeffs], self.cfg)

    @staticmethod
    def from_kpoly(p: KPoly) -> "RPoly":
        for i, c in enumerate(p.coeffs):
            if not c.is_integral():
                raise DomainError(
                    f"coefficient of x^{i} is {c}, not in Z[w]")
        return RPoly([c.to_quadint() for c in p.coeffs], p.cfg)

    def add(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly([self.coeff(i) + other.coeff(i) for i in range(n)],
                     self.cfg)

    def sub(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly([self.coeff(i) - other.coeff(i) for i in range(n)],
                     self.cfg)

    def mul(self, other: "RPoly") -> "RPoly":
        if self.is_zero() or other.is_zero():
            return RPoly([], self.cfg)
        out = [self.cfg.el(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RPoly(out, self.cfg)

    def scale(self, c: QuadInt) -> "RPoly":
        return RPoly([a * c for a in self.coeffs], self.cfg)

    def try_scale_div(self, c: QuadInt) -> "RPoly | None":
        """self / c if every coefficient is divisible, else None."""
        out = []
        for a in self.coeffs:
            q = try_div(a, c)
            if q is None:
                return None
            out.append(q)
        return RPoly(out, self.cfg)

    def __mul__(self, other):
        return self.mul(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RPoly) and self.cfg is other.cfg
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.cfg.d, "RPoly"))

    def __str__(self) -> str:
        return str(self.to_kpoly())

    def __repr__(self) -> str:
        return f"RPoly({self}, d={self.cfg.d})"


def rpoly_order_key(f: RPoly):
    return (f.degree(), tuple(order_key(c) for c in reversed(f.coeffs)))


def canonical_poly(f: RPoly) -> RPoly:
    """Unit-rescale so the leading coefficient is canonical."""
    target = canonical_associate(f.lc())
    for u in units(f.cfg):
        if f.lc() * u == target:
            return f.scale(u)
    raise AssertionError("unit orbit must contain the canonical associate")


@dataclass(frozen=True)
class GroupingCertificate:
    """Witness that f is reducible: f = g * h with g, h nonunits of R[x].

    subset gives the indices of the K[x]-factors of f grouped into g
    (empty for a constant split), lam the rescaling constant with
    g = lam * g0."""

    subset: tuple
    lam: KElem
    g: RPoly
    h: RPoly


def lambda_candidates(g0: KPoly, h0: KPoly) -> list[KElem]:
    """All lam in K*, up to associates, with lam*g0 and lam^-1*h0 both
    integral.

    Completeness: write the leading coefficient of g0 as C/m in lowest
    terms (C in R, m in Z minimal).  If lam*g0 is integral then lam*C/m
    = s lies in R, so lam = m*s/C.  If additionally lam^-1*h0 is
    integral then for any nonzero coefficient e of h0, e/lam is
    integral, hence normk(lam) <= normk(e); taking E as the least such
    norm gives normk(s) = normk(lam)*normk(C)/m^2 <= E*normk(C)/m^2.
    Enumerating s over that finite ball and verifying both containments
    is therefore exhaustive.  Each verified lam is recorded by its
    canonical associate (unit rescalings give the same grouping).
    """
    if g0.is_zero() or h0.is_zero():
        raise DomainError("cannot regroup a zero factor")
    if not (g0 * h0).is_integral():
        raise DomainError("product of the groups must lie in R[x]")
    cfg = g0.cfg
    c = g0.lc()
    m = lcm(c.u.denominator, c.v.denominator)
    big_c = KElem.of(c.u * m, c.v * m, cfg).to_quadint()
    e_min = min(e.normk() for e in h0.coeffs if not e.is_zero())
    bound = Fraction(norm(big_c)) * e_min / (m * m)
    k_m = KElem.of(m, 0, cfg)
    k_c = KElem.from_quadint(big_c)
    out = []
    seen = set()
    n = 1
    # associate classes of lam biject with those of s = lam*C/m, so
    # canonical representatives s cover every class exactly once
    while n <= bound:
        for s in elements_of_norm(n, cfg):
            lam = KElem.from_quadint(s) * k_m / k_c
            if g0.scale(lam).is_integral() and \
                    h0.scale(lam.inv()).is_integral():
                best = canonical_associate_k(lam)
                key = (best.u, best.v)
                if key not in seen:
                    seen.add(key)
                    out.append(best)
        n += 1
    out.sort(key=kelem_order_key)
    return out


def _guard(f: RPoly) -> None:
    if f.is_zero():
        raise DomainError("zero polynomial has no factorizations")
    if f.is_unit():
        raise DomainError("units have no factorizations")
    if f.degree() > MAX_DEG:
        raise ResourceLimitError(
            f"degree {f.degree()} exceeds guard {MAX_DEG}")
    if any(norm(c) > MAX_COEFF_NORM for c in f.coeffs):
        raise ResourceLimitError(
            f"coefficient norm exceeds guard {MAX_COEFF_NORM}")


def _submultisets(ks: list):
    """Nonempty proper sub-multisets of ks as index tuples, deterministic.

    Equal factors are grouped so each distinct sub-multiset appears once."""
    groups = []
    for i, q in enumerate(ks):
        if groups and groups[-1][0] == q:
            groups[-1][1].append(i)
        else:
            groups.append((q, [i]))
    ranges = [range(len(idx) + 1) for _, idx in groups]
    for counts in itertools.product(*ranges):
        total = sum(counts)
        if total == 0 or total == len(ks):
            continue
        subset = []
        for (_, idx), k in zip(groups, counts):
            subset.extend(idx[:k])
        yield tuple(subset)


def _grouped(ks: list, unit_k: KElem, subset: tuple):
    """(g0, h0) for a subset: g0 monic subproduct, h0 the cofactor with
    the K[x] unit folded in, so g0 * h0 is the original polynomial."""
    cfg = unit_k.cfg
    g0 = KPoly.const(KElem.of(1, 0, cfg))
    h0 = KPoly.const(unit_k)
    chosen = set(subset)
    for i, q in enumerate(ks):
        if i in chosen:
            g0 = g0 * q
        else:
            h0 = h0 * q
    return g0, h0


def is_irreducible_rx(f: RPoly):
    """-> (bool, GroupingCertificate | None for the reducible case).

    Reducibility is witnessed either by a common nonunit constant
    divisor or by a grouping of the K[x]-factors rescaled into R[x]."""
    _guard(f)
    if f.degree() == 0:
        c = f.coeffs[0]
        if is_irreducible(c):
            return True, None
        div = common_nonunit_divisor([c])
        cert = GroupingCertificate(
            subset=(), lam=KElem.from_quadint(div),
            g=RPoly.const(div), h=RPoly.const(try_div(c, div)))
        return False, cert
    content = common_nonunit_divisor(list(f.coeffs))
    if content is not None:
        cert = GroupingCertificate(
            subset=(), lam=KElem.from_quadint(content),
            g=RPoly.const(content), h=f.try_scale_div(content))
        return False, cert
    unit_k, ks = factor_k(f.to_kpoly())
    if len(ks) == 1:
        return True, None
    tried = 0
    for subset in _submultisets(ks):
        g0, h0 = _grouped(ks, unit_k, subset)
        tried += 1
        for lam in lambda_candidates(g0, h0):
            g = RPoly.from_kpoly(g0.scale(lam))
            h = RPoly.from_kpoly(h0.scale(lam.inv()))
            return False, GroupingCertificate(subset, lam, g, h)
    log.debug("irreducible after %d groupings: %s", tried, f)
    return True, None


@functools.lru_cache(maxsize=4096)
def _poly_multisets(f: RPoly) -> frozenset:
    """f canonical, nonzero, nonunit; frozenset of sorted RPoly tuples."""
    cfg = f.cfg
    if f.degree() == 0:
        return frozenset(
            tuple(RPoly.const(c) for c in m)
            for m in _factor_multisets(canonical_associate(f.coeffs[0])))
    out = set()
    for c in irreducible_common_divisors(list(f.coeffs)):
        q = f.try_scale_div(c)
        for rest in _poly_multisets(canonical_poly(q)):
            out.add(tuple(sorted((RPoly.const(c),) + rest,
                                 key=rpoly_order_key)))
    unit_k, ks = factor_k(f.to_kpoly())
    groups = list(_submultisets(ks))
    groups.append(tuple(range(len(ks))))  # constant cofactor route
    for subset in groups:
        g0, h0 = _grouped(ks, unit_k, subset)
        for lam in lambda_candidates(g0, h0):
            g = RPoly.from_kpoly(g0.scale(lam))
            if not is_irreducible_rx(g)[0]:
                continue
            h = RPoly.from_kpoly(h0.scale(lam.inv()))
            gc = canonical_poly(g)
            if h.is_unit():
                out.add((gc,))
                continue
            for rest in _poly_multisets(canonical_poly(h)):
                out.add(tuple(sorted((gc,) + rest, key=rpoly_order_key)))
    return frozenset(out)


def factorizations_rx(f: RPoly) -> FactorizationSet:
    """Every factorization of f in R[x] into irreducibles, up to
    associates and order."""
    _guard(f)
    return FactorizationSet(
        element=f, factorizations=_poly_multisets(canonical_poly(f)))


def length_set_rx(f: RPoly) -> set[int]:
    return {len(m) for m in factorizations_rx(f).factorizations}


def elasticity_rx(f: RPoly) -> Elasticity:
    return factorizations_rx(f).elasticity()


def _elements_by_norm(cfg: RingCfg, max_norm: int, with_zero: bool):
    out = [cfg.el(0)] if with_zero else []
    ranked = []
    for n in range(1, max_norm + 1):
        for rep in elements_of_norm(n, cfg):
            for u in units(cfg):
                ranked.append(rep * u)
    ranked = sorted(set(ranked), key=lambda z: (norm(z), assoc_key(z)))
    return out + ranked


def _quad_disc_sqrt(f: RPoly) -> KElem | None:
    """sqrt of the discriminant of a quadratic when it lies in K.

    norm of a square is a perfect square, so an integer isqrt test
    rejects most non-squares before building any fractions."""
    c2, c1, c0 = f.coeff(2), f.coeff(1), f.coeff(0)
    disc = c1 * c1 - c2 * c0 * f.cfg.el(4)
    dn = norm(disc)
    r = math.isqrt(dn)
    if r * r != dn:
        return None
    return sqrt_in_field(KElem.from_quadint(disc))


def _quad_splits_in_rx(f: RPoly, s: KElem) -> bool:
    """For a primitive quadratic with discriminant square root s: is
    there a split into two linear factors of R[x]?

    Any such split is lam*(x-r1) times (c2/lam)*(x-r2) over the roots
    r1, r2, so lam divides c2 and only the four integrality conditions
    below matter.  Both root pairings are tried."""
    cfg = f.cfg
    c2 = f.coeff(2)
    c2k = KElem.from_quadint(c2)
    c1k = KElem.from_quadint(f.coeff(1))
    half = KElem.of(Fraction(1, 2), 0, cfg)
    r1 = (-c1k + s) * half / c2k
    r2 = (-c1k - s) * half / c2k
    for m in _divisors(norm(c2)):
        for lam_q in elements_of_norm(m, cfg):
            cof = try_div(c2, lam_q)
            if cof is None:
                continue
            lam = KElem.from_quadint(lam_q)
            cofk = KElem.from_quadint(cof)
            if (lam * r1).is_integral() and (cofk * r2).is_integral():
                return True
            if (lam * r2).is_integral() and (cofk * r1).is_integral():
                return True
    return False


def _splits_in_k(f: RPoly) -> bool:
    if f.degree() == 2:
        # quadratic splits iff the discriminant is a square in K
        return _quad_disc_sqrt(f) is not None
    return len(factor_k(f.to_kpoly())[1]) > 1


def property_p_witness(cfg: RingCfg, max_norm: int = 20,
                       max_deg: int = WITNESS_MAX_DEG):
    """First polynomial (degree ascending, then leading coefficient and
    remaining coefficients by norm then sign pattern) that is
    irreducible in R[x] but splits in K[x]; None if the search space
    holds no witness.

    Degrees 0 and 1 cannot witness (constants have no K[x] splitting,
    linear polynomials are K-irreducible), so the scan starts at 2."""
    if max_norm < 1 or max_deg < 1:
        raise DomainError("bounds must be positive")
    if max_deg > WITNESS_MAX_DEG:
        raise ResourceLimitError(
            f"witness search supports degree <= {WITNESS_MAX_DEG}")
    leads = sorted((z for n in range(1, max_norm + 1)
                    for z in elements_of_norm(n, cfg)),
                   key=lambda z: (norm(z), assoc_key(z)))
    inner = _elements_by_norm(cfg, max_norm, with_zero=True)
    for deg in range(2, max_deg + 1):
        for lead in leads:
            for rest in itertools.product(inner, repeat=deg):
                f = RPoly(list(reversed(rest)) + [lead], cfg)
                if deg == 2:
                    s = _quad_disc_sqrt(f)
                    if s is None:
                        continue
                    if common_nonunit_divisor(list(f.coeffs)) is not None:
                        continue
                    if _quad_splits_in_rx(f, s):
                        continue
                    # shortcut says witness; the full test has the
                    # final word
                    if is_irreducible_rx(f)[0]:
                        return f
                    continue
                if not _splits_in_k(f):
                    continue
                if is_irreducible_rx(f)[0]:
                    return f
    return None
