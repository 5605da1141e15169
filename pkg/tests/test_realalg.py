import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import float_root_count, random_unipoly, sympy_real_root_count, sympy_resultant
from polyfiber.parser import parse_poly
from polyfiber.polycore import MultiPoly
from polyfiber.realalg import (
    Field,
    RootOf,
    Status,
    UniPoly,
    binary_form_real_projective_zero,
    bareiss_determinant,
    complex_only_zero,
    gcd_univariate,
    isolate_real_roots,
    real_only_zero,
    refine_isolation,
    squarefree_part,
    sturm_count,
    sylvester_resultant,
    verify_witness,
)
from polyfiber.systems import HomogSystem


def U(*coeffs):
    return UniPoly(list(coeffs))


def forms(*texts, n=2):
    polys = [parse_poly(t, n) for t in texts]
    from polyfiber.polycore import total_degree
    return HomogSystem(n, polys, [total_degree(p) for p in polys])


def projectively_equal(a, b):
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    k = next(i for i, v in enumerate(b) if v)
    if not a[k]:
        return False
    r = a[k] / b[k]
    return all(x == r * y for x, y in zip(a, b))


class TestSturm:
    def test_examples(self):
        assert sturm_count(U(0, -1, 0, 1)) == 3
        assert sturm_count(U(1, 0, 1)) == 0
        assert sturm_count(U(-6, -1, 0, 1)) == 1

    def test_half_open_interval(self):
        p = U(0, -1, 0, 1)
        assert sturm_count(p, Fraction(-1), Fraction(1)) == 2
        assert sturm_count(p, Fraction(-2), Fraction(0)) == 2

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            sturm_count(UniPoly([]))

    def test_against_float_subdivision(self):
        rng = random.Random(1)
        checked = 0
        while checked < 200:
            p = random_unipoly(rng)
            if squarefree_part(p).degree != p.degree:
                continue
            assert sturm_count(p) == float_root_count(p.coeffs)
            checked += 1


class TestIsolation:
    def test_three_roots(self):
        isos = isolate_real_roots(U(0, -1, 0, 1))
        assert len(isos) == 3
        for iso, root in zip(isos, (-1, 0, 1)):
            assert iso.contains(root)
        assert all(a.disjoint(b) for a, b in zip(isos, isos[1:]))

    def test_double_root_exact(self):
        (iso,) = isolate_real_roots(U(0, 0, 1))
        assert iso.exact_root == 0 and iso.lo == iso.hi == 0

    def test_refines_to_exact(self):
        p = U(-6, -1, 0, 1)
        (iso,) = isolate_real_roots(p)
        assert iso.contains(2)
        fine = refine_isolation(p, iso, Fraction(1, 10**6))
        assert fine.exact_root == 2 or fine.width <= Fraction(1, 10**6)
        assert fine.contains(2)

    def test_random_against_sympy(self):
        rng = random.Random(2)
        for _ in range(60):
            p = random_unipoly(rng, 7)
            isos = isolate_real_roots(p)
            assert len(isos) == sympy_real_root_count(p)
            sf = squarefree_part(p)
            for iso in isos:
                if iso.exact_root is not None:
                    assert p(iso.exact_root) == 0
                else:
                    assert sturm_count(sf, iso.lo, iso.hi) == 1


class TestGcdResultant:
    def test_gcd_examples(self):
        assert gcd_univariate(U(-1, 0, 1), U(-1, 1)) == U(-1, 1)
        assert gcd_univariate(U(1, 0, 0, 1), U(-1, 0, 0, 1)) == U(1)
        assert gcd_univariate(U(2, 4), UniPoly([])) == U(Fraction(1, 2), 1)
        with pytest.raises(ValueError):
            gcd_univariate(UniPoly([]), UniPoly([]))

    def test_resultant_examples(self):
        assert sylvester_resultant(U(1, 0, 0, 1), U(-1, 0, 0, 1)) == -8
        assert sylvester_resultant(U(-1, 1), U(1, 1)) == 2
        assert sylvester_resultant(U(-1, 0, 1), U(-1, 1)) == 0

    def test_bareiss(self):
        assert bareiss_determinant([[2, 1], [1, 3]]) == 5
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3

    def test_resultant_vs_gcd(self):
        rng = random.Random(4)
        for k in range(200):
            p = random_unipoly(rng, 5)
            q = random_unipoly(rng, 5)
            if k < 50:
                common = random_unipoly(rng, 2)
                p, q = p * common, q * common
            r = sylvester_resultant(p, q)
            assert (r == 0) == (gcd_univariate(p, q).degree >= 1)
            assert r == sympy_resultant(p, q)


class TestBinaryForms:
    def test_single_form(self):
        assert binary_form_real_projective_zero(parse_poly("x^2 + y^2", 2)).status is Status.ONLY_ZERO
        v = binary_form_real_projective_zero(parse_poly("x^2 - y^2", 2))
        assert v.status is Status.NONZERO_WITNESS
        assert projectively_equal(v.point, (1, 1)) or projectively_equal(v.point, (1, -1))
        v = binary_form_real_projective_zero(parse_poly("x^3 + y^3", 2))
        assert projectively_equal(v.point, (1, -1))

    def test_zero_and_y_divisible(self):
        v = binary_form_real_projective_zero(MultiPoly.zero(2))
        assert v.status is Status.NONZERO_WITNESS and v.point == (1, 0)
        v = binary_form_real_projective_zero(parse_poly("x^2*y", 2))
        assert projectively_equal(v.point, (1, 0))

    def test_irrational_witness_verifies(self):
        v = binary_form_real_projective_zero(parse_poly("x^2 - 2*y^2", 2))
        assert v.status is Status.NONZERO_WITNESS
        assert any(isinstance(c, RootOf) for c in v.point)
        assert verify_witness([parse_poly("x^2 - 2*y^2", 2)], v.point)

    def test_non_homogeneous_rejected(self):
        with pytest.raises(ValueError):
            binary_form_real_projective_zero(parse_poly("x^2 + y", 2))

    def test_real_systems(self):
        assert real_only_zero(forms("x^3 + 2*y^3", "3*x - y")).status is Status.ONLY_ZERO
        v = real_only_zero(forms("x^11*y^8", "x^12*y^7"))
        assert v.status is Status.NONZERO_WITNESS
        assert projectively_equal(v.point, (1, 0)) or projectively_equal(v.point, (0, 1))

    def test_three_variables_never_only_zero(self):
        v = real_only_zero(forms("x^2 + y^2 + z^2", n=3))
        assert v.status is Status.INCONCLUSIVE and v.reason

    def test_three_variable_witness(self):
        sys = forms("x*y - z^2", "x - y", "x^3 - x*z^2", n=3)
        v = real_only_zero(sys)
        assert v.status is Status.NONZERO_WITNESS
        assert verify_witness(sys.forms, v.point)

    def test_linear_systems_decided_exactly(self):
        assert real_only_zero(forms("x + y", "y - z", "x - z + 2*y + w", "w", n=4)).status is Status.NONZERO_WITNESS
        sys = forms("x + y", "y - z", "x + 2*z", n=3)
        assert real_only_zero(sys).status is Status.ONLY_ZERO
        assert complex_only_zero(sys).status is Status.ONLY_ZERO
        sing = forms("x + y", "y - z", "x + z", n=3)
        v = real_only_zero(sing)
        assert v.status is Status.NONZERO_WITNESS and verify_witness(sing.forms, v.point)

    def test_complex_systems(self):
        assert complex_only_zero(forms("x^3 + y^3", "x^3 - y^3")).status is Status.ONLY_ZERO
        v = complex_only_zero(forms("x^2 - y^2", "x - y"))
        assert v.status is Status.NONZERO_WITNESS and projectively_equal(v.point, (1, 1))
        assert complex_only_zero(forms("x^3", "y")).status is Status.ONLY_ZERO
        assert complex_only_zero(forms("x^2 + y^2", "x^3 + x*y^2")).field is Field.COMPLEX

    def test_empty_system(self):
        with pytest.raises(ValueError):
            real_only_zero(HomogSystem(2, [], []))

    def test_complex_only_zero_implies_real(self):
        rng = random.Random(6)
        for _ in range(100):
            terms = []
            for _ in range(2):
                d = rng.randint(1, 4)
                t = {(d - i, i): rng.randint(-3, 3) for i in range(d + 1)}
                terms.append(MultiPoly(2, t))
            if any(t.is_zero() for t in terms):
                continue
            from polyfiber.polycore import total_degree
            sys = HomogSystem(2, terms, [total_degree(t) for t in terms])
            c, r = complex_only_zero(sys), real_only_zero(sys)
            if c.status is Status.ONLY_ZERO:
                assert r.status is Status.ONLY_ZERO
            for v in (c, r):
                if v.status is Status.NONZERO_WITNESS:
                    assert verify_witness(sys.forms, v.point, real=v.field is Field.REAL)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=5), st.integers(1, 9))
def test_positive_scaling_changes_no_verdict(coeffs, scale):
    d = len(coeffs) - 1
    f = MultiPoly(2, {(d - i, i): c for i, c in enumerate(coeffs)})
    g = parse_poly("x - 2*y", 2)
    if f.is_zero():
        return
    from polyfiber.polycore import total_degree
    a = HomogSystem(2, [f, g], [total_degree(f), 1])
    b = HomogSystem(2, [f * scale, g], [total_degree(f), 1])
    assert real_only_zero(a).status == real_only_zero(b).status
    assert complex_only_zero(a).status == complex_only_zero(b).status
