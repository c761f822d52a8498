"""Fractional ideals of Z[w] as integer lattices, and the divisorial
operations built on them.

A nonzero fractional ideal is (1/m) * L for a full rank-2 sublattice
L <= Z^2 (coordinates over the basis {1, w}) closed under multiplication
by w.  L is kept in Hermite normal form L = Z*(a,0) + Z*(b,c) with a > 0,
c > 0, 0 <= b < a, and m minimal.  This representation is unique, so
ideal equality is representation equality.

The colon ideal (R : I) is computed by pure integer linear algebra (a
kernel over Z), never by inversion formulas: in a non-maximal order some
ideals are not invertible, and (R : I) must still come out right there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .kpoly import KElem, _kelem_assoc_key, canonical_associate_k
from .qint import QuadInt, RingCfg, canonical_associate, common_nonunit_divisor


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf2(vecs: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Hermite form (a, b, c) of the lattice spanned by integer vectors:
    lattice = Z*(a,0) + Z*(b,c), a > 0, c > 0, 0 <= b < a.
    """
    xs = []
    piv = None  # running combination with nonzero y-coordinate
    for x, y in vecs:
        if y == 0:
            xs.append(x)
            continue
        if piv is None:
            piv = (x, y)
            continue
        g, s, t = _xgcd(piv[1], y)
        leftover = (y // g) * piv[0] - (piv[1] // g) * x
        piv = (s * piv[0] + t * x, g)
        xs.append(leftover)
    a = 0
    for x in xs:
        a = math.gcd(a, x)
    if piv is None or a == 0:
        raise DomainError("lattice is not full rank")
    b, c = piv
    if c < 0:
        b, c = -b, -c
    b %= a
    return a, b, c


def _int_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the integer kernel {v : A v = 0} for the matrix with the
    given rows, via column elimination with a unimodular transform."""
    r = len(rows)
    n = len(rows[0])
    B = [[rows[j][i] for j in range(r)] for i in range(n)]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(r):
        while True:
            nz = [i for i in range(rank, n) if B[i][col] != 0]
            if len(nz) <= 1:
                break
            i, j = nz[0], nz[1]
            bi, bj = B[i][col], B[j][col]
            g, s, t = _xgcd(bi, bj)
            Bi, Bj, Ui, Uj = B[i][:], B[j][:], U[i][:], U[j][:]
            B[i] = [s * p + t * q for p, q in zip(Bi, Bj)]
            U[i] = [s * p + t * q for p, q in zip(Ui, Uj)]
            B[j] = [(bi // g) * q - (bj // g) * p for p, q in zip(Bi, Bj)]
            U[j] = [(bi // g) * q - (bj // g) * p for p, q in zip(Ui, Uj)]
        nz = [i for i in range(rank, n) if B[i][col] != 0]
        if nz:
            i = nz[0]
            B[rank], B[i] = B[i], B[rank]
            U[rank], U[i] = U[i], U[rank]
            rank += 1
    return [U[i] for i in range(rank, n)]


@dataclass(frozen=True)
class FracIdeal:
    """Fractional ideal (1/denom) * (Z*(a,0) + Z*(b,c)) of Z[w]."""

    a: int
    b: int
    c: int
    denom: int
    cfg: RingCfg

    def __post_init__(self):
        assert self.a > 0 and self.c > 0 and 0 <= self.b < self.a
        assert self.denom > 0
        assert math.gcd(math.gcd(self.a, self.b),
                        math.gcd(self.c, self.denom)) == 1
        # closure under the w-action (x, y) -> (d*y, x)
        assert self._lattice_member(0, self.a)
        assert self._lattice_member(self.cfg.d * self.c, self.b)

    def _lattice_member(self, x: int, y: int) -> bool:
        if y % self.c:
            return False
        return (x - (y // self.c) * self.b) % self.a == 0

    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, 0), (self.b, self.c))

    def generators(self) -> list[KElem]:
        m = self.denom
        return [KElem.of(Fraction(self.a, m), 0, self.cfg),
                KElem.of(Fraction(self.b, m), Fraction(self.c, m), self.cfg)]

    def contains(self, z: KElem) -> bool:
        t_u = z.u * self.denom
        t_v = z.v * self.denom
        if t_u.denominator != 1 or t_v.denominator != 1:
            return False
        return self._lattice_member(int(t_u), int(t_v))

    def norm(self) -> Fraction:
        """Index-based norm a*c / denom^2 (the module index [R : I],
        extended multiplicatively to fractional ideals)."""
        return Fraction(self.a * self.c, self.denom * self.denom)

    def __str__(self) -> str:
        g1, g2 = self.generators()
        return f"<{g1}; {g2}>"


def _make(vectors: list[tuple[int, int]], denom: int, cfg: RingCfg) -> FracIdeal:
    a, b, c = hnf2(vectors)
    g = math.gcd(math.gcd(a, b), math.gcd(c, denom))
    return FracIdeal(a // g, (b // g) % (a // g), c // g, denom // g, cfg)


def unit_ideal(cfg: RingCfg) -> FracIdeal:
    return FracIdeal(1, 0, 1, 1, cfg)


def ideal_from_gens(gens: list[KElem]) -> FracIdeal:
    """The fractional R-module generated by the given field elements."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise DomainError("the zero ideal is not representable")
    cfg = gens[0].cfg
    m = 1
    for g in gens:
        m = math.lcm(m, math.lcm(g.u.denominator, g.v.denominator))
    vecs = []
    for g in gens:
        x, y = int(g.u * m), int(g.v * m)
        vecs.append((x, y))
        vecs.append((cfg.d * y, x))  # w * g
    return _make(vecs, m, cfg)


def ideal_from_quadints(gens: list[QuadInt]) -> FracIdeal:
    return ideal_from_gens([KElem.from_quadint(g) for g in gens])


def mul(I: FracIdeal, J: FracIdeal) -> FracIdeal:
    """Product ideal; generated by pairwise products of lattice bases
    (both factors are already w-closed, so four products suffice)."""
    if I.cfg.d != J.cfg.d:
        raise DomainError("mixed rings")
    d = I.cfg.d
    vecs = []
    for x1, y1 in I.basis():
        for x2, y2 in J.basis():
            vecs.append((x1 * x2 + d * y1 * y2, x1 * y2 + y1 * x2))
    return _make(vecs, I.denom * J.denom, I.cfg)


def colon(I: FracIdeal) -> FracIdeal:
    """(R : I) = {z in K : z*I <= R}, by integer linear algebra.

    Write I = (1/m)L with L spanned by u1 = (a,0), u2 = (b,c).  A field
    element z = p + q*w multiplies u1 into mR iff p, q lie in (m/a)Z, so
    z = (m/a)(s + t*w) with integer s, t.  The u2 condition then reads
    s*b + t*d*c = 0 and s*c + t*b = 0 mod a, i.e. (s,t) lies in the
    projection of the integer kernel of [[b, d*c, -a, 0], [c, b, 0, -a]].
    That projection is injective onto the solution set, so the two kernel
    basis vectors span it, and (R : I) = (m/a) * span.
    """
    d = I.cfg.d
    a, b, c, m = I.a, I.b, I.c, I.denom
    rows = [[b, d * c, -a, 0],
            [c, b, 0, -a]]
    kern = _int_kernel(rows)
    assert len(kern) == 2
    vecs = [(m * v[0], m * v[1]) for v in kern]
    return _make(vecs, a, I.cfg)


def v_closure(I: FracIdeal) -> FracIdeal:
    """Divisorial closure I_v = (R : (R : I))."""
    return colon(colon(I))


def _points_of_normk(I: FracIdeal, target: int):
    """Lattice numerator vectors (x, y) with x^2 + |d|y^2 = target."""
    dd = -I.cfg.d
    jmax = math.isqrt(target // (dd * I.c * I.c))
    for j in range(-jmax, jmax + 1):
        y = I.c * j
        r = target - dd * y * y
        x0 = math.isqrt(r)
        if x0 * x0 != r:
            continue
        for x in {x0, -x0}:
            if (x - j * I.b) % I.a == 0:
                yield (x, y)


def is_principal(I: FracIdeal) -> KElem | None:
    """A generator if I = gR for some g in K, else None.

    gR = I forces normk(g) to equal the index norm of I, so candidates
    are the finitely many lattice points of that norm; each is checked by
    exact ideal equality, so a None answer is definitive.
    """
    target = I.a * I.c  # normk(g) * denom^2 must equal a*c
    best = None
    for x, y in _points_of_normk(I, target):
        g = KElem.of(Fraction(x, I.denom), Fraction(y, I.denom), I.cfg)
        if ideal_from_gens([g]) == I:
            g = canonical_associate_k(g)
            if best is None or _kelem_assoc_key(g) < _kelem_assoc_key(best):
                best = g
    return best


# ---------------------------------------------------------------------------
# content ideals of polynomials over Z[w]
# ---------------------------------------------------------------------------

def _coeff_list(f) -> list[QuadInt]:
    coeffs = list(f.coeffs)
    if not coeffs or all(c.is_zero() for c in coeffs):
        raise DomainError("zero polynomial has no content ideal")
    return coeffs


def content_ideal(f) -> FracIdeal:
    """A_f: the ideal generated by the coefficients of f over Z[w]."""
    return ideal_from_quadints([c for c in _coeff_list(f) if not c.is_zero()])


def is_primitive(f) -> bool:
    """No single nonunit of Z[w] divides every coefficient."""
    return common_nonunit_divisor(_coeff_list(f)) is None


def is_superprimitive(f) -> tuple[bool, KElem | None]:
    """Whether (R : A_f) = R; when it is not, also return a witness
    z with z*A_f <= R and z outside R.

    (R : A_f) always contains R; it equals R exactly when the reduced
    denominator of the colon ideal is 1.  Otherwise some basis vector is
    non-integral, its norm bounds a finite search, and the witness is the
    smallest offender: canonical associate minimizing (normk, |u|, v).
    """
    C = colon(content_ideal(f))
    if C.denom == 1:
        return True, None
    cfg = C.cfg
    m = C.denom
    bound = None
    for x, y in C.basis():
        z = KElem.of(Fraction(x, m), Fraction(y, m), cfg)
        if not z.is_integral():
            n = z.normk()
            bound = n if bound is None or n < bound else bound
    assert bound is not None
    target_max = int(bound * m * m)
    cands = set()
    for t in range(1, target_max + 1):
        for x, y in _points_of_normk(C, t):
            z = KElem.of(Fraction(x, m), Fraction(y, m), cfg)
            if not z.is_integral():
                cands.add(canonical_associate_k(z))
    assert cands
    witness = min(cands, key=lambda z: (z.normk(), abs(z.u), z.v))
    return False, witness


def gcd_v(elems: list[QuadInt]) -> QuadInt | None:
    """Greatest common divisor in the divisor-theoretic sense: g such
    that the common divisors of the input are exactly the divisors of g.
    Exists iff the divisorial closure of the generated ideal is
    principal; None when it is not."""
    nz = [e for e in elems if not e.is_zero()]
    if not nz:
        raise DomainError("gcd of zeros is undefined")
    g = is_principal(v_closure(ideal_from_quadints(nz)))
    if g is None:
        return None
    return canonical_associate(g.to_quadint())


def gcd_distributivity_check(elems: list[QuadInt], b: QuadInt) -> bool | None:
    """Instance check of [b*a1, ..., b*an] = b * [a1, ..., an].

    Returns None when [a1, ..., an] does not exist (the identity is then
    inapplicable rather than false); otherwise True/False.  Any False
    certifies that primitive polynomials with non-superprimitive behavior
    exist over this ring."""
    if b.is_zero():
        raise DomainError("scaling by zero")
    g = gcd_v(elems)
    if g is None:
        return None
    scaled = gcd_v([b * e for e in elems if not e.is_zero()])
    if scaled is None:
        return False
    return canonical_associate(b * g) == scaled


def gauss_product_check(f, g) -> bool:
    """For primitive f, g over Z[w]: is f*g primitive?

    True instances are consistent with the Gauss lemma; a False instance
    certifies its failure over this ring."""
    if not (is_primitive(f) and is_primitive(g)):
        raise DomainError("gauss_product_check expects primitive inputs")
    fc, gc = list(f.coeffs), list(g.coeffs)
    cfg = fc[0].cfg
    prod = [QuadInt(0, 0, cfg) for _ in range(len(fc) + len(gc) - 1)]
    for i, ci in enumerate(fc):
        for j, cj in enumerate(gc):
            prod[i + j] = prod[i + j] + ci * cj
    return common_nonunit_divisor(prod) is None


def gamma_check(B: FracIdeal, C: FracIdeal) -> bool:
    """Instance of the implication: (B*C)_v = R  ==>  B_v principal."""
    if v_closure(mul(B, C)) != unit_ideal(B.cfg):
        return True
    return is_principal(v_closure(B)) is not None
