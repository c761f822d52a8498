"""The intermediate rings D1 = R + x*K[x] and D2 = R + R*x + x^2*K[x].

Membership is a condition on low-order coefficients only: the constant
term (and for D2 also the linear term) must lie in R = Z[w]; all higher
coefficients may be arbitrary elements of K.

Factorization in D1 is driven by the normal form g = c * x^v * u(x)
with u(0) = 1: the classification below is exact, and for elements with
c in R the factorizations into (constants of R) * (copies of x) *
(K-irreducible one-plus-tail factors) enumerate the distinct atom
multisets of the normal form.  In D2 the square x^2 * (unit tail) of a
single atom acquires arbitrarily long rival factorizations through
pi^(2n) * (1 - x^2/pi^(2n)), which is what d2_witness_verify checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .factor import (Elasticity, FactorizationSet, factorizations,
                     _factor_multisets)
from .kpoly import KElem, KPoly, factor_k, poly_order_key
from .qint import (QuadInt, canonical_associate, common_nonunit_divisor,
                   is_irreducible)
from .rpoly import lambda_candidates

D2_MAX_POWER = 6


def _levels() -> dict:
    return {"D1": 1, "D2": 2}


@dataclass(frozen=True)
class ExtElem:
    """Element of D1 or D2, carried as the underlying K[x] polynomial."""

    poly: KPoly
    level: str

    def __post_init__(self):
        depth = _levels().get(self.level)
        if depth is None:
            raise DomainError(f"unknown ring level {self.level!r}")
        for i in range(depth):
            c = self.poly.coeff(i)
            if not c.is_integral():
                raise DomainError(
                    f"coefficient of x^{i} is {c}, not in Z[w]; "
                    f"element lies outside {self.level}")

    def __str__(self) -> str:
        return str(self.poly)


def _trailing_zeros(p: KPoly) -> int:
    v = 0
    while p.coeff(v).is_zero():
        v += 1
    return v


def d1_classify(g: ExtElem) -> str:
    """One of: unit, constant, associate_of_x, one_plus_tail, reducible.

    `constant` means a nonunit constant of R; `one_plus_tail` an
    element r*(1 + x*f) with r a unit and the tail irreducible in K[x].
    Every other nonzero nonunit is genuinely a product of two nonunits
    of D1."""
    if g.level != "D1":
        raise DomainError("classification applies to D1 elements")
    p = g.poly
    if p.is_zero():
        raise DomainError("zero is not classified")
    if p.degree() == 0:
        return "unit" if p.coeff(0).to_quadint().is_unit() else "constant"
    r = p.coeff(0)
    if r.is_zero():
        if p.degree() == 1 and p.coeff(1).is_integral() and \
                p.coeff(1).to_quadint().is_unit():
            return "associate_of_x"
        # g = x * (g/x) and g/x is a nonunit of D1
        return "reducible"
    if not r.to_quadint().is_unit():
        return "reducible"
    tail = p.scale(r.inv())
    if len(factor_k(tail)[1]) == 1:
        return "one_plus_tail"
    return "reducible"


def _one_plus_tail_factors(u: KPoly) -> list[KPoly]:
    """K-irreducible factors of u (with u(0) = 1), each normalized to
    constant term 1; their product is exactly u."""
    _, ks = factor_k(u)
    out = []
    for q in ks:
        c0 = q.coeff(0)
        if c0.is_zero():
            raise AssertionError("tail factors cannot vanish at 0")
        out.append(q.scale(c0.inv()))
    return out


def d1_factorizations(g: ExtElem) -> FactorizationSet:
    """All factorizations of g in D1 under the normal form
    g = c * x^v * u(x), u(0) = 1: the x^v and tail atoms are rigid, and
    the constant part contributes its Z[w] factorizations.

    Requires the constant part c to lie in R (it always does when v = 0;
    for v > 0 membership of g in D1 does not force it)."""
    if g.level != "D1":
        raise DomainError("factorization model applies to D1 elements")
    p = g.poly
    if p.is_zero():
        raise DomainError("zero polynomial has no factorizations")
    v = _trailing_zeros(p)
    c = p.coeff(v)
    if not c.is_integral():
        raise DomainError(
            f"constant part {c} of the normal form is not in Z[w]; "
            "factorizations are not enumerable for this element")
    cq = c.to_quadint()
    if v == 0 and p.degree() == 0 and cq.is_unit():
        raise DomainError("units have no factorizations")
    tail = KPoly(p.coeffs[v:], p.cfg).scale(c.inv())
    atoms = []
    atoms.extend([KPoly([KElem.of(0, 0, p.cfg), KElem.of(1, 0, p.cfg)],
                        p.cfg)] * v)
    if tail.degree() >= 1:
        atoms.extend(_one_plus_tail_factors(tail))
    if cq.is_unit():
        consts = [()]
    else:
        consts = [
            tuple(KPoly.const(KElem.from_quadint(z)) for z in m)
            for m in _factor_multisets(canonical_associate(cq))]
    out = set()
    for cm in consts:
        out.add(tuple(sorted(cm + tuple(atoms), key=poly_order_key)))
    return FactorizationSet(element=g, factorizations=frozenset(out))


def d1_length_set(g: ExtElem) -> set[int]:
    return {len(m) for m in d1_factorizations(g).factorizations}


def d1_elasticity(g: ExtElem) -> Elasticity:
    return d1_factorizations(g).elasticity()


def d2_is_irreducible(g: ExtElem) -> bool:
    """Irreducibility in D2 for elements of degree <= 2.

    A split g = A*B in D2 either has a constant factor (then some
    nonunit of R divides both low coefficients, and the cofactor's low
    coefficients stay in R) or is a product of two linear polynomials,
    necessarily in R[x] since degree-1 elements of D2 have both
    coefficients in R."""
    if g.level != "D2":
        raise DomainError("this test applies to D2 elements")
    p = g.poly
    if p.is_zero():
        raise DomainError("zero is not classified")
    if p.degree() > 2:
        raise DomainError("test supports degree <= 2 only")
    g0, g1 = p.coeff(0), p.coeff(1)
    if p.degree() == 0 and g0.to_quadint().is_unit():
        raise DomainError("units are not classified")
    low = [z.to_quadint() for z in (g0, g1)]
    nonzero = [z for z in low if not z.is_zero()]
    if not nonzero:
        # g = a*x^2 splits as c * (a/c)*x^2 for any nonunit constant c
        return False
    c = common_nonunit_divisor(nonzero)
    if c is not None:
        # cofactor low coefficients are low/c, still in R; higher
        # coefficients are unconstrained for D2 membership
        if p.degree() == 0:
            return is_irreducible(low[0])
        return False
    if p.degree() <= 1:
        return True
    if not p.coeff(2).is_integral():
        # a (1,1)-split would need both linear factors in R[x], whose
        # product has leading coefficient in R
        return True
    unit_k, ks = factor_k(p)
    if len(ks) != 2 or any(q.degree() != 1 for q in ks):
        return True
    seen = set()
    for pick in (0, 1):
        if ks[pick] in seen:
            continue
        seen.add(ks[pick])
        g0k = ks[pick]
        h0k = ks[1 - pick].scale(unit_k)
        if lambda_candidates(g0k, h0k):
            return False
    return True


@dataclass(frozen=True)
class D2WitnessReport:
    """Outcome of the pi^(2n) length-jump construction in D2."""

    pi: QuadInt
    n: int
    identity_holds: bool
    factors_irreducible: bool
    lengths: tuple[int, int]
    elasticity_lower_bound: Fraction
    observed_lengths: tuple[int, ...]

    def ok(self) -> bool:
        return self.identity_holds and self.factors_irreducible


def d2_witness_verify(pi: QuadInt, n: int) -> D2WitnessReport:
    """Check pi^(2n) * (1 - x^2/pi^(2n)) = (pi^n + x) * (pi^n - x) in D2
    and that the three non-constant pieces plus pi are irreducible,
    giving the element factorization lengths 2 and 2n+1."""
    if not is_irreducible(pi):
        raise DomainError(f"{pi} is not irreducible in Z[w]")
    if not 1 <= n <= D2_MAX_POWER:
        raise ResourceLimitError(f"power must be between 1 and {D2_MAX_POWER}")
    cfg = pi.cfg
    pn = KElem.from_quadint(pi ** n)
    p2n = KElem.from_quadint(pi ** (2 * n))
    one = KElem.of(1, 0, cfg)
    f1 = KPoly([pn, one], cfg)
    f2 = KPoly([pn, -one], cfg)
    tail = KPoly([one, KElem.of(0, 0, cfg), -p2n.inv()], cfg)
    lhs = f1 * f2
    rhs = tail.scale(p2n)
    identity = lhs == rhs
    factors_ok = (d2_is_irreducible(ExtElem(f1, "D2"))
                  and d2_is_irreducible(ExtElem(f2, "D2"))
                  and d2_is_irreducible(ExtElem(tail, "D2")))
    fs = factorizations(pi ** (2 * n))
    power = tuple([canonical_associate(pi)] * (2 * n))
    if power not in fs.factorizations:
        factors_ok = False
    observed = tuple(sorted({2} | {len(m) + 1 for m in fs.factorizations}))
    return D2WitnessReport(
        pi=pi, n=n,
        identity_holds=identity,
        factors_irreducible=factors_ok,
        lengths=(2, 2 * n + 1),
        elasticity_lower_bound=Fraction(2 * n + 1, 2),
        observed_lengths=observed)
