from __future__ import annotations

from dataclasses import replace

import pytest

from diagideal.caps import DEFAULT_CAPS
from diagideal.errors import DomainError, ResourceLimitError
from diagideal.ideals import MonomialIdeal, parse_ideal
from diagideal.monomials import GridShape, parse_monomial
from diagideal.resolution import (
    BettiTable,
    betti_table,
    has_linear_resolution,
    koszul_complex,
    mapping_cone_betti,
    regularity,
)
from diagideal.windows import Window, WindowChain, diagonal_ideal, window_product_ideal


def two_window_product_1x3():
    shape = GridShape(1, 3)
    return window_product_ideal(shape, [Window(1, 2), Window(2, 3)])


def test_betti_of_two_window_product_both_oracles():
    ideal = two_window_product_1x3()
    cone = mapping_cone_betti(ideal)
    assert cone.totals() == {0: 4, 1: 4, 2: 1}
    assert cone.regularity == 2
    for char in (0, 2):
        table = betti_table(ideal, characteristic=char)
        assert table.totals() == {0: 4, 1: 4, 2: 1}
        assert table.regularity == 2
        assert cone.same_entries(table)


def test_betti_principal_ideal():
    shape = GridShape(2, 2)
    ideal = parse_ideal(shape, "<x[1,1]*x[2,2]>")
    table = betti_table(ideal)
    assert table.totals() == {0: 1}
    assert table.beta(0, 2) == 1
    assert table.regularity == 2
    cone = mapping_cone_betti(ideal)
    assert cone.same_entries(table)


def test_betti_two_variables_is_koszul():
    shape = GridShape(1, 2)
    ideal = parse_ideal(shape, "<x[1,1], x[1,2]>")
    table = betti_table(ideal)
    assert table.beta(0, 1) == 2
    assert table.beta(1, 2) == 1
    assert table.totals() == {0: 2, 1: 1}
    assert table.regularity == 1


def test_betti_two_coprime_quadrics():
    shape = GridShape(1, 4)
    ideal = parse_ideal(shape, "<x[1,1]*x[1,2], x[1,3]*x[1,4]>")
    table = betti_table(ideal)
    assert table.beta(0, 2) == 2
    assert table.beta(1, 4) == 1
    assert table.regularity == 3
    assert not has_linear_resolution(ideal)


def test_window_ideal_cross_check():
    shape = GridShape(3, 8)
    ideal = diagonal_ideal(shape, Window(2, 6))
    cone = mapping_cone_betti(ideal)
    table = betti_table(ideal)
    assert cone.totals() == {0: 10, 1: 15, 2: 6}
    assert cone.same_entries(table)
    assert table.regularity == 3
    assert table.projective_dimension == 2


def test_mapping_cone_requires_certificate():
    shape = GridShape(1, 4)
    ideal = parse_ideal(shape, "<x[1,1]*x[1,2], x[1,3]*x[1,4]>")
    with pytest.raises(DomainError):
        mapping_cone_betti(ideal)


def test_betti_table_json_shape():
    table = betti_table(two_window_product_1x3())
    obj = table.to_json_obj()
    assert obj["char"] == 0
    assert obj["reg"] == 2
    assert obj["rows"] == sorted(obj["rows"], key=lambda r: (r["i"], r["j"]))
    assert all(set(r) == {"i", "j", "beta"} for r in obj["rows"])


def test_betti_equality_tracks_characteristic():
    ideal = two_window_product_1x3()
    a = betti_table(ideal, characteristic=0)
    b = betti_table(ideal, characteristic=2)
    assert a.same_entries(b)
    assert a != b  # entries equal but fields differ
    assert a == betti_table(ideal, characteristic=0)


def test_characteristic_agreement_on_corpus():
    shape = GridShape(2, 5)
    corpus = [
        diagonal_ideal(shape, Window(1, 4)),
        diagonal_ideal(shape, Window(2, 5)),
        window_product_ideal(shape, [Window(1, 3), Window(2, 4)]),
        parse_ideal(shape, "<x[1,1]*x[2,2], x[1,2]*x[2,1]>"),
        parse_ideal(shape, "<x[1,1], x[2,2], x[1,2]*x[2,1]>"),
    ]
    for ideal in corpus:
        assert betti_table(ideal, characteristic=0).same_entries(
            betti_table(ideal, characteristic=2)
        )


def test_zero_ideal_rejected():
    with pytest.raises(DomainError):
        betti_table(MonomialIdeal.zero(GridShape(1, 2)))


def test_generator_cap():
    shape = GridShape(3, 8)
    ideal = diagonal_ideal(shape, Window(1, 8))  # 56 generators
    with pytest.raises(ResourceLimitError):
        betti_table(ideal)
    small_cap = replace(DEFAULT_CAPS, max_oracle_gens=4)
    with pytest.raises(ResourceLimitError):
        betti_table(two_window_product_1x3() * two_window_product_1x3(), caps=small_cap)


def test_regularity_of_windows_equals_rows():
    for rows, cols, window in ((2, 4, (1, 4)), (2, 5, (2, 5)), (3, 6, (2, 6))):
        shape = GridShape(rows, cols)
        ideal = diagonal_ideal(shape, Window(*window))
        assert regularity(ideal) == rows
        assert has_linear_resolution(ideal)


def test_regularity_of_sorted_products():
    shape = GridShape(2, 5)
    product = window_product_ideal(shape, [Window(1, 3), Window(2, 5)])
    assert regularity(product) == 4
    assert has_linear_resolution(product)


def test_has_linear_resolution_rejects_mixed_degrees():
    shape = GridShape(1, 3)
    mixed = parse_ideal(shape, "<x[1,1], x[1,2]*x[1,3]>")
    with pytest.raises(DomainError):
        has_linear_resolution(mixed)


def test_koszul_complex_structure():
    ideal = two_window_product_1x3()
    shape = ideal.shape
    inside = parse_monomial(shape, "x[1,1]*x[1,2]*x[1,3]")
    complex_ = koszul_complex(ideal, inside)
    faces = complex_.faces()
    # simplicial: subsets of faces are faces
    for face in faces:
        for vertex in face:
            assert face - {vertex} in faces
    assert frozenset() in faces
    outside = parse_monomial(shape, "x[1,1]")
    assert koszul_complex(ideal, outside).faces() == frozenset()


def test_euler_characteristic_consistency():
    # alternating sum of face counts equals alternating sum of reduced
    # homology dimensions, multidegree by multidegree
    ideals = [
        two_window_product_1x3(),
        diagonal_ideal(GridShape(2, 5), Window(1, 4)),
        parse_ideal(GridShape(1, 4), "<x[1,1]*x[1,2], x[1,2]*x[1,3], x[1,3]*x[1,4]>"),
    ]
    from diagideal.resolution import _candidate_multidegrees

    for ideal in ideals:
        for b in _candidate_multidegrees(ideal, DEFAULT_CAPS):
            complex_ = koszul_complex(ideal, b)
            counts = complex_.face_counts()
            homology = complex_.homology_dimensions(0)
            lhs = sum((-1) ** d * c for d, c in counts.items())
            rhs = sum((-1) ** d * h for d, h in homology.items())
            assert lhs == rhs


def test_betti_table_value_object():
    table = BettiTable(0, {(0, 2): 3, (1, 3): 2})
    assert table.beta(0, 2) == 3
    assert table.beta(5, 9) == 0
    assert table.totals() == {0: 3, 1: 2}
    assert table.regularity == 2
    assert table.projective_dimension == 1
