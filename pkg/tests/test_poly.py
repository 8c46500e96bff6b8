"""Core polynomial arithmetic: worked examples plus algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equivar import DimensionMismatch, MultiPoly, RatMatrix, variables
from equivar.poly import grlex_key, monomials_of_degree, poly_to_vector, vector_to_poly


def test_add_cancels_to_zero():
    x, = variables(1)
    assert (x**2 + (-(x**2))).is_zero


def test_add_disjoint_supports():
    x, y = variables(2)
    assert x**2 + x * y + y**2 == MultiPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})


def test_add_coefficient_arithmetic():
    x, = variables(1)
    half = MultiPoly(1, {(1,): Fraction(1, 2)})
    assert half + half == x


def test_add_rejects_mismatched_vars():
    x, = variables(1)
    y2 = MultiPoly.variable(2, 1)
    with pytest.raises(DimensionMismatch):
        x + y2


def test_mul_difference_of_squares():
    x, y = variables(2)
    assert (x + y) * (x - y) == x**2 - y**2


def test_mul_identity():
    x, y = variables(2)
    p = 3 * x**2 - y + MultiPoly.constant(2, Fraction(1, 7))
    assert p * MultiPoly.constant(2, 1) == p


def test_mul_monomials():
    x, y = variables(2)
    assert (x**2) * (y**2) == MultiPoly(2, {(2, 2): 1})


def test_mul_degree_additive():
    x, y = variables(2)
    a = x**3 + y
    b = x * y - y**2
    assert (a * b).total_degree() == a.total_degree() + b.total_degree()


def test_compose_linear_even_poly():
    x, = variables(1)
    neg = RatMatrix.from_rows([[-1]])
    assert (x**2).compose_linear(neg) == x**2
    assert x.compose_linear(neg) == -x


def test_compose_linear_swap_symmetric():
    x, y = variables(2)
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert (x * y).compose_linear(swap) == x * y
    assert x.compose_linear(swap) == y


def test_compose_linear_dimension_error():
    x, = variables(1)
    with pytest.raises(DimensionMismatch):
        x.compose_linear(RatMatrix.identity(2))


def test_diff_examples():
    x, y = variables(2)
    assert (x**2 * y).diff(0) == 2 * x * y
    assert (y**3).diff(0).is_zero
    assert (x**2 + x * y).diff(1) == x


def test_diff_index_out_of_range():
    x, = variables(1)
    with pytest.raises(IndexError):
        x.diff(1)


def test_homogeneous_part_examples():
    x, = variables(1)
    p = MultiPoly.constant(1, 1) + x + x**2
    assert p.homogeneous_part(1) == x
    x2, y2 = variables(2)
    q = x2**2 * y2 + y2**3
    assert q.homogeneous_part(3) == q
    assert (x**2).homogeneous_part(5).is_zero


def test_evaluate_examples():
    x, y = variables(2)
    assert (x**2 + y**2).evaluate([3, 4]) == 25
    assert (x * y).evaluate([Fraction(1, 2), Fraction(2, 3)]) == Fraction(1, 3)
    assert MultiPoly.zero(2).evaluate([7, 9]) == 0


def test_monomials_of_degree_descending_grlex():
    monos = monomials_of_degree(2, 2)
    assert monos == [(2, 0), (1, 1), (0, 2)]
    assert monos == sorted(monos, key=grlex_key, reverse=True)
    assert monomials_of_degree(3, 2)[0] == (2, 0, 0)


def test_vector_round_trip():
    x, y = variables(2)
    p = x**2 - 3 * x * y
    basis = monomials_of_degree(2, 2)
    assert vector_to_poly(poly_to_vector(p, basis), basis, 2) == p


def test_leading_term_and_monic():
    x, y = variables(2)
    p = 2 * x * y + 4 * y**2
    assert p.leading_term() == ((1, 1), Fraction(2))
    assert p.monic() == x * y + 2 * y**2


# -- algebraic laws ----------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def polys(nvars: int, max_degree: int = 4):
    exps = st.tuples(*([st.integers(min_value=0, max_value=max_degree)] * nvars)).filter(
        lambda e: sum(e) <= max_degree
    )
    return st.dictionaries(exps, coeffs, max_size=6).map(lambda d: MultiPoly(nvars, d))


small_mats = st.lists(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2),
    min_size=2,
    max_size=2,
).map(RatMatrix.from_rows)


@settings(max_examples=60, deadline=None)
@given(polys(2), polys(2))
def test_canonical_form_matches_evaluation(a, b):
    # equal canonical forms iff equal as functions: check many rational points
    s = a + b
    points = [(Fraction(i, 3), Fraction(j, 2)) for i in range(-5, 6) for j in range(-5, 6)]
    for pt in points[:40]:
        assert s.evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@settings(max_examples=60, deadline=None)
@given(polys(2), small_mats, small_mats)
def test_compose_linear_is_multiplicative(p, a, b):
    # q = p(A.) then q(B.) substitutes x -> Bx into p(A.), giving p((AB)x)
    assert p.compose_linear(a).compose_linear(b) == p.compose_linear(a @ b)


@settings(max_examples=60, deadline=None)
@given(polys(3))
def test_mixed_partials_commute(p):
    assert p.diff(0).diff(2) == p.diff(2).diff(0)


@settings(max_examples=60, deadline=None)
@given(polys(2))
def test_homogeneous_parts_sum_to_poly(p):
    total = MultiPoly.zero(2)
    for d in range(p.total_degree() + 1):
        total = total + p.homogeneous_part(d)
    assert total == p


@settings(max_examples=40, deadline=None)
@given(polys(2), polys(2), polys(2))
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
