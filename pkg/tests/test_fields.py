"""Scalar arithmetic over the rationals and prime fields."""

import pytest

from nkoszul.fields import GF, QQ, PrimeField, field_from_name, field_name


def test_rational_basics():
    half = QQ.coerce("1/2")
    third = QQ.coerce("1/3")
    assert QQ.add(half, third) == QQ.coerce("5/6")
    assert QQ.mul(half, third) == QQ.coerce("1/6")
    assert QQ.sub(half, half) == QQ.zero
    assert QQ.div(QQ.one, QQ.coerce(4)) == QQ.coerce("1/4")
    assert QQ.neg(half) == QQ.coerce("-1/2")
    assert QQ.inv(QQ.coerce(-3)) == QQ.coerce("-1/3")


def test_rational_exactness():
    # 1/3 summed three times is exactly 1, never 0.999...
    third = QQ.div(QQ.one, QQ.coerce(3))
    assert QQ.add(QQ.add(third, third), third) == QQ.one


def test_prime_field_arithmetic():
    F7 = GF(7)
    assert F7.add(5, 4) == 2
    assert F7.mul(3, 5) == 1
    assert F7.inv(3) == 5
    assert F7.neg(2) == 5
    assert F7.coerce(-1) == 6
    assert F7.coerce("2/3") == F7.mul(2, F7.inv(3))


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        GF(10)
    with pytest.raises(ValueError):
        GF(1)
    # a big prime is fine
    assert GF(32003).p == 32003


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)


def test_field_names_round_trip():
    assert field_from_name("rational") is QQ
    F = field_from_name("gf:11")
    assert isinstance(F, PrimeField) and F.p == 11
    assert field_name(QQ) == "rational"
    assert field_name(F) == "gf:11"
    with pytest.raises(ValueError):
        field_from_name("gf:12")
    with pytest.raises(ValueError):
        field_from_name("real")


def test_prime_fields_cache_and_compare():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ != GF(5)
