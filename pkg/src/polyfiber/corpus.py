"""Named example maps and seeded random families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from polyfiber.polycore import MultiPoly, PolyMap, leading_form, total_degree


@dataclass(frozen=True)
class PinchukMap:
    p: MultiPoly
    q: MultiPoly
    t: MultiPoly
    s: MultiPoly
    h: MultiPoly
    f: MultiPoly
    u: MultiPoly
    A: MultiPoly
    B: MultiPoly

    @property
    def map(self) -> PolyMap:
        return PolyMap([self.p, self.q])


def build_pinchuk() -> PinchukMap:
    """Expand the planar map ``(p, q)`` from its defining chain ``t, s, h, f, u``.

    ``B`` keeps both h^2 terms (``6h^2 + h^2/2``) as the chain is usually printed.
    """
    x, y = MultiPoly.variables(2)
    one = MultiPoly.constant(2, 1)
    t = x * y - 1
    s = one + x * t
    h = t * s
    f = s ** 2 * (t ** 2 + y)
    p = h + f
    c = MultiPoly.constant(2, 13) + h * 15
    A = h + c ** 3 * Fraction(1, 45)
    B = h ** 3 * 4 + h ** 2 * 6 + h ** 2 * Fraction(1, 2) + c ** 4 * Fraction(1, 2700)
    u = A * f + B
    q = -(t ** 2) - t * h * (h + 1) * 6 - u

    assert (total_degree(h), total_degree(f), total_degree(p), total_degree(q)) == (5, 10, 10, 25)
    assert leading_form(p) == MultiPoly.monomial((6, 4))
    lead_q = leading_form(q)
    assert set(lead_q.terms) == {(15, 10)} and abs(lead_q.coefficient((15, 10))) == 75
    return PinchukMap(p, q, t, s, h, f, u, A, B)


def build_remark16_odd_diagonal(a: Sequence[Sequence], b: Sequence[int]) -> PolyMap:
    """Component j is ``sum_i a[i][j] * X_i^(2 b_j + 1)``."""
    n = len(b)
    if any(len(row) != n for row in a) or len(a) != n:
        raise ValueError("coefficient matrix must be n x n")
    if any(bj < 0 for bj in b):
        raise ValueError("exponents must be non-negative")
    comps = []
    for j in range(n):
        e = 2 * b[j] + 1
        terms = {}
        for i in range(n):
            if a[i][j]:
                exp = [0] * n
                exp[i] = e
                terms[tuple(exp)] = Fraction(a[i][j])
        comps.append(MultiPoly(n, terms))
    return PolyMap(comps)


def random_lower_terms(rng: random.Random, nvars: int, below: int, count: int = 3,
                       coeff_range: int = 5) -> MultiPoly:
    """A few monomials of total degree ``< below`` with integer coefficients in ``[-5, 5]``."""
    terms: dict = {}
    if below <= 0:
        return MultiPoly.zero(nvars)
    for _ in range(count):
        d = rng.randrange(below)
        exp = [0] * nvars
        for _ in range(d):
            exp[rng.randrange(nvars)] += 1
        terms[tuple(exp)] = Fraction(rng.randint(-coeff_range, coeff_range))
    return MultiPoly(nvars, terms)


def _nonzero_rational(rng: random.Random, bound: int = 9) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, 4))


def random_sign_pattern_map(rng: random.Random, opposite: bool = True, max_k: int = 2,
                            noise: bool = True) -> tuple[PolyMap, tuple]:
    """``(aX^(2k+1) + bY^(2k+1), cX^(2j+1) + dY^(2j+1))`` plus optional lower-order noise.

    With ``opposite`` the coefficients satisfy ``sgn(ad) = -sgn(bc)``, else ``sgn(ad) = sgn(bc)``.
    Returns the map and ``(a, b, c, d, k, j)``.
    """
    a, b, c, d = (_nonzero_rational(rng) for _ in range(4))
    same = (a * d > 0) == (b * c > 0)
    if same == opposite:
        d = -d
    k, j = rng.randint(0, max_k), rng.randint(0, max_k)
    f = build_remark16_odd_diagonal([[a, c], [b, d]], [k, j])
    if noise:
        f = PolyMap([f[0] + random_lower_terms(rng, 2, 2 * k + 1),
                     f[1] + random_lower_terms(rng, 2, 2 * j + 1)])
    return f, (a, b, c, d, k, j)


def random_odd_map(rng: random.Random, max_degree: int = 3, nvars: int = 2,
                   coeff_range: int = 5) -> PolyMap:
    """Dense random map whose components have odd total degree."""
    comps = []
    for _ in range(nvars):
        d = rng.choice([k for k in range(1, max_degree + 1) if k % 2])
        top = {}
        while not top:
            for i in range(d + 1):
                c = rng.randint(-coeff_range, coeff_range)
                if c and nvars == 2:
                    top[(d - i, i)] = Fraction(c)
                elif c:
                    exp = [0] * nvars
                    for _ in range(d):
                        exp[rng.randrange(nvars)] += 1
                    top[tuple(exp)] = Fraction(c)
        comps.append(MultiPoly(nvars, top) + random_lower_terms(rng, nvars, d, coeff_range=coeff_range))
    return PolyMap(comps)


def random_linear_map(rng: random.Random, n: int, singular: bool = False,
                      coeff_range: int = 6) -> PolyMap:
    """Integer linear map ``x -> Mx + c``; singular maps repeat a scaled row."""
    while True:
        rows = [[rng.randint(-coeff_range, coeff_range) for _ in range(n)] for _ in range(n)]
        if singular:
            k = rng.randrange(1, n) if n > 1 else 0
            scale = rng.choice([-2, -1, 1, 2])
            rows[k] = [scale * v for v in rows[0]] if n > 1 else [0]
        if _int_det(rows) != 0 or singular:
            if any(any(r) for r in rows):
                break
    xs = MultiPoly.variables(n)
    comps = []
    for r in rows:
        acc = MultiPoly.constant(n, rng.randint(-3, 3))
        for coeff, xv in zip(r, xs):
            acc = acc + xv * coeff
        comps.append(acc)
    return PolyMap(comps)


def _int_det(rows) -> Fraction:
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            ratio = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= ratio * m[c][k]
    return det


BUILTINS = {"pinchuk": lambda: build_pinchuk().map}
