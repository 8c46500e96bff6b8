"""JSON round-trips and input validation."""

from fractions import Fraction

import pytest

from equivar import (
    MultiPoly,
    ParseError,
    PolyVectorField,
    ReducedSystem,
    RatMatrix,
    invariant_ring_generators,
    molien,
    variables,
)
from equivar import serialize as sz


def test_frac_round_trip():
    for c in (Fraction(3), Fraction(-1, 2), Fraction(0), Fraction(22, 7)):
        assert sz.frac_from_json(sz.frac_to_str(c)) == c
    assert sz.frac_from_json(5) == 5


def test_frac_rejects_floats_and_decimals():
    with pytest.raises(ParseError):
        sz.frac_from_json(1.5)
    with pytest.raises(ParseError):
        sz.frac_from_json("1.5")
    with pytest.raises(ParseError):
        sz.frac_from_json("1e-3")
    with pytest.raises(ParseError):
        sz.frac_from_json(True)


def test_poly_round_trip():
    x, y = variables(2)
    p = Fraction(1, 2) * x**2 - 3 * x * y + MultiPoly.constant(2, 7)
    doc = sz.poly_to_doc(p)
    assert doc["nvars"] == 2
    assert all(isinstance(t["c"], str) for t in doc["terms"])
    assert sz.poly_from_doc(doc) == p


def test_poly_terms_sorted_descending():
    x, y = variables(2)
    doc = sz.poly_to_doc(y**2 + x**2 + x * y)
    assert [t["e"] for t in doc["terms"]] == [[2, 0], [1, 1], [0, 2]]


def test_poly_doc_validation():
    with pytest.raises(ParseError):
        sz.poly_from_doc({"terms": []})
    with pytest.raises(ParseError):
        sz.poly_from_doc({"nvars": 2, "terms": [{"c": "1", "e": [1]}]})
    with pytest.raises(ParseError):
        sz.poly_from_doc({"nvars": 1, "terms": [{"c": "1", "e": [-1]}]})


def test_field_round_trip():
    x1, x2 = variables(2)
    v = PolyVectorField([x2, x1**3])
    assert sz.field_from_doc(sz.field_to_doc(v)) == v
    with pytest.raises(ParseError):
        sz.field_from_doc({"n": 2, "comps": [sz.poly_to_doc(x1)]})


def test_group_doc(z2_diag):
    doc = {"n": 2, "generators": [[["-1", "0"], ["0", "-1"]]]}
    g = sz.group_from_doc(doc)
    assert g.order == 2
    assert g.elements == z2_diag.elements


def test_group_doc_accepts_ints_and_cap():
    doc = {"n": 1, "generators": [[[-1]]], "cap": 10}
    assert sz.group_from_doc(doc).order == 2
    with pytest.raises(ParseError):
        sz.group_from_doc({"n": 1, "generators": []})
    with pytest.raises(ParseError):
        sz.group_from_doc({"n": 1, "generators": [[[0.5]]]})


def test_matrix_doc_round_trip():
    m = RatMatrix.from_rows([[Fraction(1, 2), -1], [0, 3]])
    assert sz.matrix_from_doc(sz.matrix_to_doc(m), 2) == m


def test_invariant_gens_round_trip(swap2):
    inv = invariant_ring_generators(swap2)
    doc = sz.invariant_gens_to_doc(inv, molien(swap2), bound=2)
    back = sz.invariant_gens_from_doc(doc, swap2)
    assert back.gens == inv.gens
    assert back.degrees == inv.degrees
    assert doc["dimensions"][2] == {"degree": 2, "dim": 2}


def test_reduced_round_trip():
    comps = [MultiPoly(2, {(1, 0): 2, (2, 0): -2}), MultiPoly.zero(2)]
    rs = ReducedSystem(comps)
    assert sz.reduced_from_doc(sz.reduced_to_doc(rs)) == rs


def test_dumps_canonical():
    text = sz.dumps({"b": 1, "a": [1, 2]})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_parse_rational_vector():
    assert sz.parse_rational_vector("1/2,-3, 5") == [
        Fraction(1, 2),
        Fraction(-3),
        Fraction(5),
    ]
    with pytest.raises(ParseError):
        sz.parse_rational_vector("1.5")
    with pytest.raises(ParseError):
        sz.parse_rational_vector("")


def test_equivariant_gens_round_trip(swap2):
    from equivar import equivariant_module_generators, molien_equivariant

    inv = invariant_ring_generators(swap2)
    eg = equivariant_module_generators(swap2, inv)
    doc = sz.equivariant_gens_to_doc(eg, molien_equivariant(swap2), bound=1)
    back = sz.equivariant_gens_from_doc(doc, swap2, inv)
    assert back.vgens == eg.vgens
    assert back.degrees == eg.degrees
