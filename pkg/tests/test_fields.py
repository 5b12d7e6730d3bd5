from __future__ import annotations

from fractions import Fraction

import pytest

from diagideal.errors import DomainError
from diagideal.fields import PrimeField, RationalField, is_prime, make_field


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
    for n in range(-3, 42):
        assert is_prime(n) == (n in primes)


def test_is_prime_larger():
    assert is_prime(32003)
    assert is_prime((1 << 61) - 1)
    assert not is_prime(32001)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_rational_field_ops():
    field = RationalField()
    assert field.characteristic == 0
    half = field.normalize(Fraction(1, 2))
    assert field.add(half, half) == field.one
    assert field.mul(field.normalize(3), field.invert(field.normalize(3))) == field.one
    assert field.is_zero(field.sub(half, half))
    assert field.neg(field.one) == field.normalize(-1)
    with pytest.raises(DomainError):
        field.invert(field.zero)


def test_prime_field_ops():
    field = PrimeField(7)
    assert field.characteristic == 7
    assert field.normalize(10) == 3
    assert field.add(5, 4) == 2
    assert field.mul(3, 5) == 1
    assert field.invert(3) == 5
    assert field.neg(2) == 5
    assert field.is_zero(field.normalize(14))
    with pytest.raises(DomainError):
        field.invert(0)


def test_prime_field_validation():
    with pytest.raises(DomainError):
        PrimeField(1)
    with pytest.raises(DomainError):
        PrimeField(32001)
    with pytest.raises(DomainError):
        PrimeField(1 << 62)  # too large even if prime candidates exist up there


def test_make_field():
    assert make_field(0).characteristic == 0
    assert make_field(32003).characteristic == 32003
    with pytest.raises(DomainError):
        make_field(6)
    with pytest.raises(DomainError):
        make_field(-2)


def test_field_equality_and_hash():
    assert make_field(0) == RationalField()
    assert make_field(7) == PrimeField(7)
    assert make_field(7) != make_field(11)
    assert len({make_field(0), RationalField(), PrimeField(5), make_field(5)}) == 2
