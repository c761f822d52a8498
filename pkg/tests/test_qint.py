import random

import pytest

from quadfactor.errors import DomainError
from quadfactor.qint import (QuadInt, canonical_associate,
                             common_nonunit_divisor, conj, elements_of_norm,
                             irreducible_common_divisors, is_irreducible,
                             is_prime, norm, ring, try_div, units)

RINGS = (-1, -2, -3, -5, -6, -10, -13, -14)


def test_ring_flags():
    assert ring(-1).is_maximal and ring(-1).is_ufd
    assert ring(-2).is_maximal and ring(-2).is_ufd
    assert not ring(-3).is_maximal and not ring(-3).is_ufd
    assert ring(-5).is_maximal and not ring(-5).is_ufd
    assert ring(-5).class_number == 2
    assert ring(-14).class_number == 4
    assert not ring(-7).is_maximal
    assert ring(-7).class_number is None
    assert ring(-97).is_maximal


@pytest.mark.parametrize("bad", [0, 1, -4, -9, -12, -101, -100])
def test_ring_rejects(bad):
    with pytest.raises(DomainError):
        ring(bad)


def test_arithmetic():
    cfg = ring(-5)
    x = cfg.el(1, 2)
    y = cfg.el(3, -1)
    assert x * y == cfg.el(13, 5)
    assert x + y == cfg.el(4, 1)
    assert x - y == cfg.el(-2, 3)
    assert (-x) == cfg.el(-1, -2)
    assert x ** 3 == x * x * x
    assert norm(x) == 21
    assert conj(x) == cfg.el(1, -2)
    assert str(x) == "1+2*w"
    assert str(cfg.el(0, -1)) == "-w"
    assert str(cfg.el(-3)) == "-3"


def test_norm_multiplicative():
    rng = random.Random(1)
    for _ in range(1000):
        cfg = ring(rng.choice(RINGS))
        x = cfg.el(rng.randint(-30, 30), rng.randint(-15, 15))
        y = cfg.el(rng.randint(-30, 30), rng.randint(-15, 15))
        assert norm(x * y) == norm(x) * norm(y)


def test_try_div():
    cfg = ring(-5)
    assert try_div(cfg.el(6), cfg.el(1, 1)) == cfg.el(1, -1)
    assert try_div(cfg.el(3), cfg.el(2)) is None
    assert try_div(cfg.el(0), cfg.el(7)) == cfg.el(0)
    with pytest.raises(DomainError):
        try_div(cfg.el(3), cfg.el(0))
    rng = random.Random(2)
    for _ in range(300):
        cfg = ring(rng.choice(RINGS))
        x = cfg.el(rng.randint(-9, 9), rng.randint(-4, 4))
        y = cfg.el(rng.randint(-9, 9), rng.randint(-4, 4))
        if y.is_zero():
            continue
        q = try_div(x * y, y)
        assert q == x


def test_units_and_canonical():
    assert [str(u) for u in units(ring(-1))] == ["1", "-1", "w", "-w"]
    assert [str(u) for u in units(ring(-5))] == ["1", "-1"]
    cfg = ring(-1)
    assert canonical_associate(cfg.el(0, 3)) == cfg.el(3)
    assert canonical_associate(cfg.el(-2, 1)) == cfg.el(1, 2)
    cfg5 = ring(-5)
    assert canonical_associate(cfg5.el(-1, 1)) == cfg5.el(1, -1)
    rng = random.Random(3)
    for _ in range(200):
        cfg = ring(rng.choice(RINGS))
        x = cfg.el(rng.randint(-20, 20), rng.randint(-10, 10))
        c = canonical_associate(x)
        assert canonical_associate(c) == c
        assert any(c == x * u for u in units(cfg))


def test_elements_of_norm():
    cfg = ring(-14)
    assert [str(z) for z in elements_of_norm(81, cfg)] == \
        ["5+2*w", "5-2*w", "9"]
    assert elements_of_norm(2, ring(-5)) == ()
    assert elements_of_norm(1, ring(-5)) == (ring(-5).el(1),)
    assert elements_of_norm(0, ring(-5)) == (ring(-5).el(0),)
    for n in range(1, 60):
        for z in elements_of_norm(n, cfg):
            assert norm(z) == n
            assert canonical_associate(z) == z


def test_irreducible_examples():
    cfg = ring(-5)
    for val in (cfg.el(2), cfg.el(3), cfg.el(1, 1), cfg.el(1, -1),
                cfg.el(0, 1), cfg.el(11)):
        assert is_irreducible(val)
    for val in (cfg.el(4), cfg.el(6), cfg.el(9), cfg.el(21), cfg.el(2, 2)):
        assert not is_irreducible(val)
    with pytest.raises(DomainError):
        is_irreducible(cfg.el(0))
    with pytest.raises(DomainError):
        is_irreducible(cfg.el(-1))


def test_prime_examples():
    cfg = ring(-5)
    assert is_prime(cfg.el(11))          # inert
    assert is_prime(cfg.el(0, 1))        # norm 5 is a rational prime
    # norm 21 = 3*7, so (1+2w) splits as an ideal: irreducible, not prime
    assert is_irreducible(cfg.el(1, 2))
    assert not is_prime(cfg.el(1, 2))
    assert not is_prime(cfg.el(2))       # irreducible but not prime
    assert not is_prime(cfg.el(3))
    assert is_irreducible(cfg.el(2))
    cfg14 = ring(-14)
    assert is_irreducible(cfg14.el(2)) and not is_prime(cfg14.el(2))
    assert is_irreducible(cfg14.el(3)) and not is_prime(cfg14.el(3))


def test_prime_matches_splitting_witnesses():
    """Independent certification: for a rational prime p, a solution of
    r^2 = d (mod p) yields the witness p | (r-w)(r+w) with p dividing
    neither factor, so p is not prime; with no solution and p not
    dividing d, p must be prime (the random product test backs this)."""
    for d in RINGS:
        cfg = ring(d)
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            root = next((r for r in range(p) if (r * r - d) % p == 0), None)
            pe = cfg.el(p)
            if root is not None:
                lhs = cfg.el(root, -1) * cfg.el(root, 1)
                assert try_div(lhs, pe) is not None
                if try_div(cfg.el(root, -1), pe) is None and \
                        try_div(cfg.el(root, 1), pe) is None:
                    assert not is_prime(pe)
                else:
                    # p divides a factor: the witness is void (p | w
                    # never happens, so this needs r = 0 and p | d
                    # with w/p integral, impossible)
                    raise AssertionError("witness construction broke")
            else:
                assert is_prime(pe)


def test_prime_divides_factor_property():
    rng = random.Random(4)
    for d in (-1, -2, -3, -5, -14):
        cfg = ring(d)
        primes = [z for n in range(2, 50)
                  for z in elements_of_norm(n, cfg) if is_prime(z)]
        for _ in range(300):
            p = rng.choice(primes)
            y = cfg.el(rng.randint(-12, 12), rng.randint(-5, 5))
            z = cfg.el(rng.randint(-12, 12), rng.randint(-5, 5))
            if try_div(y * z, p) is not None:
                assert try_div(y, p) is not None or \
                    try_div(z, p) is not None


def test_irreducible_iff_prime_in_ufd():
    cfg = ring(-1)
    for n in range(2, 10001):
        for z in elements_of_norm(n, cfg):
            assert is_irreducible(z) == is_prime(z)


def test_common_divisors():
    cfg = ring(-5)
    assert common_nonunit_divisor(
        [cfg.el(4), cfg.el(4), cfg.el(6)]) == cfg.el(2)
    assert common_nonunit_divisor([cfg.el(2), cfg.el(1, 1)]) is None
    assert common_nonunit_divisor([cfg.el(0), cfg.el(0)]) == cfg.el(2)
    assert irreducible_common_divisors([cfg.el(6)]) == \
        [cfg.el(2), cfg.el(1, 1), cfg.el(1, -1), cfg.el(3)]
    with pytest.raises(DomainError):
        common_nonunit_divisor([])


def test_str_parse_forms():
    cfg = ring(-5)
    assert str(cfg.el(5, 2)) == "5+2*w"
    assert str(cfg.el(5, -2)) == "5-2*w"
    assert str(cfg.el(0, 0)) == "0"
    assert str(cfg.el(0, 2)) == "2*w"
    assert str(cfg.el(-1, 1)) == "-1+w"
