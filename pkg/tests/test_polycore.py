import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_product, from_sympy, pmap, random_multipoly, to_sympy
from polyfiber.parser import parse_poly
from polyfiber.polycore import (
    NEG_INFINITY,
    MultiPoly,
    PolyMap,
    add,
    determinant,
    evaluate,
    is_homogeneous,
    jacobian_determinant,
    jacobian_matrix,
    leading_form,
    linear_substitution,
    multiply,
    partial_derivative,
    power,
    substitute,
    total_degree,
)


def P(s, n=2):
    return parse_poly(s, n)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert multiply(P("x+y"), P("x-y")) == P("x^2-y^2")

    def test_power_against_sympy(self):
        p = P("x^2*y - x + 1")
        expected = from_sympy(to_sympy(p) ** 2, 2)
        assert power(p, 2) == expected
        assert power(p, 2) == P("x^4*y^2 - 2*x^3*y + 2*x^2*y + x^2 - 2*x + 1")

    def test_add_zero(self):
        p = P("3*x*y - 7/2")
        assert add(p, MultiPoly.zero(2)) == p

    def test_mismatched_nvars(self):
        with pytest.raises(ValueError):
            add(P("x"), P("x", 3))

    def test_power_zero_is_one(self):
        assert power(P("x+y"), 0) == MultiPoly.constant(2, 1)

    def test_no_zero_coefficients_stored(self):
        p = P("x") - P("x")
        assert p.is_zero() and len(p.terms) == 0

    def test_random_against_dense_oracle(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 3)
            p = random_multipoly(rng, n, 3)
            q = random_multipoly(rng, n, 3)
            assert dict(multiply(p, q).terms) == dense_product(p, q)
            assert add(p, q) == from_sympy(to_sympy(p) + to_sympy(q), n)
            assert power(p, 2) == from_sympy(to_sympy(p) ** 2, n)


class TestDegree:
    def test_examples(self):
        assert total_degree(P("x^6*y^4 - 2*x^5*y^3")) == 10
        assert total_degree(MultiPoly.zero(2)) is NEG_INFINITY
        assert total_degree(MultiPoly.constant(2, Fraction(7, 2))) == 0

    def test_sentinel_ordering(self):
        assert NEG_INFINITY < -10**9
        assert NEG_INFINITY + 3 is NEG_INFINITY
        assert max(NEG_INFINITY, 0) == 0

    def test_leading_forms(self):
        assert leading_form(P("x^3 - x")) == P("x^3")
        s = P("1 + x*(x*y - 1)")
        assert leading_form(s) == P("x^2*y")
        assert leading_form(MultiPoly.zero(2)).is_zero()


class TestCalculus:
    def test_partials(self):
        assert partial_derivative(P("x^6*y^4"), 0) == P("6*x^5*y^4")
        assert partial_derivative(P("x^6*y^4"), 1) == P("4*x^6*y^3")
        assert partial_derivative(P("5"), 0).is_zero()

    def test_partial_index_error(self):
        with pytest.raises(IndexError):
            partial_derivative(P("x"), 2)

    def test_substitute(self):
        u, v = MultiPoly.variables(2)
        assert substitute(P("x^2 + y^2"), [u + v, u - v]) == P("2*x^2 + 2*y^2")
        p = P("x^3*y - 2*y + 1")
        assert substitute(p, list(MultiPoly.variables(2))) == p

    def test_substitute_builds_h(self):
        t = P("x*y - 1")
        s = P("1") + P("x") * t
        h = substitute(P("x*y", 2), [t, s])
        assert total_degree(h) == 5

    def test_substitute_length_mismatch(self):
        with pytest.raises(ValueError):
            substitute(P("x"), [P("x")])

    def test_evaluate(self):
        assert evaluate(P("x^3 - x"), [2, 0]) == 6
        assert evaluate(P("x*y - 1"), [1, 1]) == 0
        assert evaluate(MultiPoly.zero(2), [3, 4]) == 0
        with pytest.raises(ValueError):
            evaluate(P("x"), [1])


class TestJacobian:
    def test_examples(self):
        assert jacobian_determinant(pmap("x", "y")) == MultiPoly.constant(2, 1)
        assert jacobian_determinant(pmap("x + y^3", "y - x^3")) == P("1 + 9*x^2*y^2")
        assert jacobian_determinant(pmap("x^2", "y")) == P("2*x")

    def test_matrix_layout(self):
        J = jacobian_matrix(pmap("x^2*y", "y"))
        assert J[0][0] == P("2*x*y")  # d p1 / dx
        assert J[1][0] == P("x^2")  # d p1 / dy
        assert J[0][1].is_zero()

    def test_chain_rule_with_linear_change(self):
        rng = random.Random(11)
        for _ in range(20):
            f = PolyMap([random_multipoly(rng, 2, 3) for _ in range(2)])
            a = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
            det_a = a[0][0] * a[1][1] - a[0][1] * a[1][0]
            images = linear_substitution(a)
            composed = PolyMap([substitute(p, images) for p in f])
            lhs = jacobian_determinant(composed)
            rhs = substitute(jacobian_determinant(f), images) * det_a
            assert lhs == rhs

    def test_determinant_three_by_three(self):
        m = [[P(s, 3) for s in row] for row in
             (("x", "1", "0"), ("0", "y", "1"), ("1", "0", "z"))]
        assert determinant(m) == P("x*y*z + 1", 3)

    def test_polymap_must_be_square(self):
        with pytest.raises(ValueError):
            PolyMap([P("x")])


coeffs = st.integers(-20, 20)
monos = st.tuples(st.integers(0, 4), st.integers(0, 4))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monos, coeffs, max_size=6))
    return MultiPoly(2, terms)


@settings(max_examples=150, deadline=None)
@given(polys(), polys())
def test_leading_form_multiplicative(p, q):
    if p.is_zero() or q.is_zero():
        return
    assert leading_form(p * q) == leading_form(p) * leading_form(q)


@settings(max_examples=150, deadline=None)
@given(polys())
def test_leading_form_properties(p):
    if p.is_zero():
        return
    lf = leading_form(p)
    assert is_homogeneous(lf, total_degree(p))
    assert total_degree(p - lf) < total_degree(p)
