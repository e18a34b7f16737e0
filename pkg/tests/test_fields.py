from fractions import Fraction

import pytest

from freeproj.errors import ParseError
from freeproj.fields import GF, QQ, field_from_spec


def test_qq_arithmetic_is_exact():
    third = QQ.div(1, 3)
    assert third * 3 == 1
    assert QQ.add(third, QQ.div(2, 3)) == 1
    assert QQ.mul(Fraction(1, 2), 2) == 1


def test_qq_prefers_ints():
    assert isinstance(QQ.div(4, 2), int)
    assert QQ.coerce(Fraction(6, 3)) == 2
    assert QQ.from_str("-1/2") == Fraction(-1, 2)
    assert QQ.to_str(Fraction(-1, 2)) == "-1/2"


def test_gf_inverses_total_on_nonzero():
    F = GF(7)
    for a in range(1, 7):
        assert F.mul(a, F.invert(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.invert(0)


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)


def test_gf_coerces_fractions():
    F = GF(5)
    assert F.coerce(Fraction(1, 2)) == 3  # 2*3 = 6 = 1 mod 5


@pytest.mark.parametrize("spec,expected", [("QQ", QQ), ("GF(5)", GF(5)), ("GF:5", GF(5))])
def test_field_from_spec(spec, expected):
    assert field_from_spec(spec) == expected


def test_field_from_spec_rejects_garbage():
    with pytest.raises(ParseError):
        field_from_spec("ZZ")
    with pytest.raises(ParseError):
        field_from_spec("GF(4)")
