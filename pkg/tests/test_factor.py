import random
from fractions import Fraction

import pytest

from quadfactor.errors import DomainError, ResourceLimitError
from quadfactor.factor import (Elasticity, elasticity_elem, factorizations,
                               length_set, ring_elasticity_lower_bound,
                               verify_factorization_set)
from quadfactor.qint import ring


def classes(x):
    """Factorizations as a set of string tuples, for readable asserts."""
    return {tuple(str(y) for y in m) for m in factorizations(x).factorizations}


def test_factor_six_two_ways():
    cfg = ring(-5)
    assert classes(cfg.el(6)) == {("2", "3"), ("1-w", "1+w")}
    assert length_set(cfg.el(6)) == {2}
    assert elasticity_elem(cfg.el(6)) == 1


def test_factor_squares():
    cfg = ring(-5)
    assert classes(cfg.el(4)) == {("2", "2")}
    assert classes(cfg.el(9)) == {("3", "3"), ("2-w", "2+w")}
    assert classes(cfg.el(21)) == {
        ("1-2*w", "1+2*w"), ("4-w", "4+w"), ("3", "7")}


def test_factor_81_two_lengths():
    cfg = ring(-14)
    assert classes(cfg.el(81)) == {("5-2*w", "5+2*w"), ("3", "3", "3", "3")}
    assert length_set(cfg.el(81)) == {2, 4}
    assert elasticity_elem(cfg.el(81)) == 2


def test_factor_18_unequal_lengths():
    # 18 = 2*3*3 = (2+w)(2-w): the smallest-norm witness at d = -14
    # that factorization lengths can differ
    cfg = ring(-14)
    assert classes(cfg.el(18)) == {("2", "3", "3"), ("2-w", "2+w")}
    assert elasticity_elem(cfg.el(18)) == Fraction(3, 2)


def test_length_singleton():
    cfg = ring(-5)
    assert length_set(cfg.el(36)) == {4}


def test_irreducible_element():
    cfg = ring(-5)
    fs = factorizations(cfg.el(1, 1))
    assert fs.factorizations == frozenset({(cfg.el(1, 1),)})
    assert fs.lengths() == [1]
    assert elasticity_elem(cfg.el(1, 1)) == 1


def test_unit_input_rescaled():
    cfg = ring(-5)
    assert classes(cfg.el(-6)) == {("2", "3"), ("1-w", "1+w")}
    cfg1 = ring(-1)
    assert classes(cfg1.el(0, 2)) == {("1+w", "1+w")}


def test_elasticity_symbols():
    assert Elasticity.finite(Fraction(5, 3)).as_json() == {"num": 5, "den": 3}
    assert Elasticity.infinite().as_json() == "infinite"
    assert Elasticity.undefined().as_json() == "undefined"
    assert Elasticity.from_lengths([2, 3, 5]) == Fraction(5, 2)
    assert Elasticity.from_lengths([]) == Elasticity.undefined()
    assert str(Elasticity.finite(Fraction(3, 2))) == "3/2"
    assert str(Elasticity.infinite()) == "infinite"


def test_ring_elasticity_lower_bound():
    # norm(18) = 324, so a bound of 400 sees the 3/2 witness; norm(81)
    # = 6561 brings the {2, 4} length set into range
    got = ring_elasticity_lower_bound(ring(-14), 400)
    assert got.kind == "finite" and got.value >= Fraction(3, 2)
    got = ring_elasticity_lower_bound(ring(-14), 6561)
    assert got.value >= 2
    got1 = ring_elasticity_lower_bound(ring(-1), 100)
    assert got1 == 1
    with pytest.raises(DomainError):
        ring_elasticity_lower_bound(ring(-5), 1)


def test_domain_guards():
    cfg = ring(-5)
    with pytest.raises(DomainError):
        factorizations(cfg.el(0))
    with pytest.raises(DomainError):
        factorizations(cfg.el(1))
    with pytest.raises(DomainError):
        factorizations(cfg.el(-1))
    with pytest.raises(ResourceLimitError):
        factorizations(cfg.el(10 ** 5))


def test_verify_random_factorizations():
    rng = random.Random(13)
    for _ in range(150):
        cfg = ring(rng.choice((-1, -2, -3, -5, -6, -10, -14)))
        x = cfg.el(rng.randint(-40, 40), rng.randint(-15, 15))
        if x.is_zero() or x.is_unit():
            continue
        fs = factorizations(x)
        assert fs.complete
        assert fs.factorizations
        assert verify_factorization_set(fs)
        # lengths() and elasticity() agree with the raw multiset data
        lens = {len(m) for m in fs.factorizations}
        assert fs.lengths() == sorted(lens)
        assert fs.elasticity() == Fraction(max(lens), min(lens))
