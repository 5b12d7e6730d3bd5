from __future__ import annotations

import pytest

from diagideal.errors import DomainError, FormatError, ShapeMismatchError
from diagideal.monomials import (
    GridMonomial,
    GridShape,
    compare,
    monomial_from_triples,
    parse_monomial,
)


def test_shape_validation():
    GridShape(1, 1)
    GridShape(3, 8)
    with pytest.raises(DomainError):
        GridShape(0, 3)
    with pytest.raises(DomainError):
        GridShape(4, 3)
    with pytest.raises(DomainError):
        GridShape(2, 0)


def test_shape_helpers():
    shape = GridShape(2, 3)
    assert shape.variable_count == 6
    assert shape.contains(1, 1) and shape.contains(2, 3)
    assert not shape.contains(3, 1) and not shape.contains(0, 2)
    assert list(shape.variables()) == [
        (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3),
    ]


def test_unit_and_variable():
    shape = GridShape(2, 2)
    one = GridMonomial.unit(shape)
    assert one.is_unit and one.degree == 0 and str(one) == "1"
    x11 = GridMonomial.variable(shape, 1, 1)
    assert x11.degree == 1 and str(x11) == "x[1,1]"
    with pytest.raises(DomainError):
        GridMonomial.variable(shape, 3, 1)


def test_multiplication_and_exact_division():
    shape = GridShape(2, 3)
    a = parse_monomial(shape, "x[1,1]*x[2,2]")
    b = parse_monomial(shape, "x[1,1]*x[2,3]")
    prod = a * b
    assert str(prod) == "x[1,1]^2*x[2,2]*x[2,3]"
    assert prod / a == b
    with pytest.raises(DomainError):
        a / b


def test_divides_matches_exponentwise_definition():
    shape = GridShape(2, 2)
    monos = [
        GridMonomial(shape, exps)
        for exps in [(0, 0, 0, 0), (1, 0, 0, 0), (2, 1, 0, 3), (1, 1, 1, 1), (0, 2, 0, 1)]
    ]
    for a in monos:
        for b in monos:
            expected = all(x <= y for x, y in zip(a.exps, b.exps))
            assert a.divides(b) == expected


def test_gcd_lcm_colon():
    shape = GridShape(1, 3)
    a = parse_monomial(shape, "x[1,1]^2*x[1,2]")
    b = parse_monomial(shape, "x[1,1]*x[1,2]^3*x[1,3]")
    assert str(a.gcd(b)) == "x[1,1]*x[1,2]"
    assert str(a.lcm(b)) == "x[1,1]^2*x[1,2]^3*x[1,3]"
    # colon divides out the shared part only
    assert str(a.colon(b)) == "x[1,1]"
    assert str(b.colon(a)) == "x[1,2]^2*x[1,3]"


def test_order_is_lex_on_row_major_ranks():
    shape = GridShape(2, 2)
    x11 = GridMonomial.variable(shape, 1, 1)
    x12 = GridMonomial.variable(shape, 1, 2)
    x21 = GridMonomial.variable(shape, 2, 1)
    x22 = GridMonomial.variable(shape, 2, 2)
    assert x11 > x12 > x21 > x22
    # lex: any power of an earlier variable beats later variables
    assert x11 > x12 * x21 * x22
    assert x11 * x22 > x12 * x21
    assert compare(x11, x11) == 0
    assert compare(x12, x11) == -1


def test_cross_shape_comparison_rejected():
    a = GridMonomial.unit(GridShape(2, 2))
    b = GridMonomial.unit(GridShape(2, 3))
    with pytest.raises(ShapeMismatchError):
        _ = a < b
    with pytest.raises(ShapeMismatchError):
        _ = a * b


def test_parse_rejects_garbage():
    shape = GridShape(2, 2)
    for bad in ("", "y[1,1]", "x[1,1)*x[2,2]", "x[0,1]", "x[1,3]", "x[1,1]^"):
        with pytest.raises((FormatError, DomainError)):
            parse_monomial(shape, bad)


def test_parse_str_round_trip():
    shape = GridShape(3, 4)
    texts = ["1", "x[1,1]", "x[2,3]^4", "x[1,2]*x[2,3]*x[3,4]", "x[1,1]^2*x[3,4]^3"]
    for text in texts:
        assert str(parse_monomial(shape, text)) == text


def test_triples_round_trip():
    shape = GridShape(2, 3)
    m = parse_monomial(shape, "x[1,2]^2*x[2,1]")
    assert m.to_triples() == [[1, 2, 2], [2, 1, 1]]
    assert monomial_from_triples(shape, m.to_triples()) == m


def test_support_and_squarefree():
    shape = GridShape(2, 2)
    m = parse_monomial(shape, "x[1,1]*x[2,2]")
    assert m.is_squarefree and m.support() == ((1, 1), (2, 2))
    assert not (m * m).is_squarefree
