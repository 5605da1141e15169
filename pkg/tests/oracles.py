"""Independent reference computations used to check the exact library."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import sympy as sp

from polyfiber.polycore import MultiPoly
from polyfiber.realalg import UniPoly

SYMS = sp.symbols("x1:6")


def to_sympy(p: MultiPoly):
    xs = SYMS[: p.nvars]
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        mono = sp.Rational(c.numerator, c.denominator)
        for v, k in zip(xs, e):
            mono *= v ** k
        expr += mono
    return expr


def from_sympy(expr, nvars: int) -> MultiPoly:
    xs = SYMS[:nvars]
    poly = sp.Poly(sp.expand(expr), *xs)
    return MultiPoly(nvars, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c != 0})


def dense_product(p: MultiPoly, q: MultiPoly) -> dict:
    """Schoolbook product on a dense exponent grid."""
    n = p.nvars
    dp = max((max(e) for e in p.terms), default=0)
    dq = max((max(e) for e in q.terms), default=0)
    size = dp + dq + 1
    grid = {}
    for idx in np.ndindex(*([size] * n)):
        grid[idx] = Fraction(0)
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            grid[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return {k: v for k, v in grid.items() if v}


def float_root_count(coeffs, samples: int = 400001) -> int:
    """Sign changes of a squarefree polynomial sampled on a fine grid over its Cauchy bound."""
    c = [float(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    lead = abs(c[-1])
    bound = 1 + max(abs(v) / lead for v in c[:-1]) if len(c) > 1 else 1
    xs = np.linspace(-bound - 0.5, bound + 0.5, samples)
    vals = np.polynomial.polynomial.polyval(xs, c)
    signs = np.sign(vals[vals != 0])
    return int(np.sum(signs[1:] != signs[:-1]))


def sympy_real_root_count(u: UniPoly) -> int:
    x = sp.Symbol("t")
    expr = sum(sp.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(u.coeffs))
    return len(set(sp.Poly(expr, x).real_roots()))


def sympy_resultant(p: UniPoly, q: UniPoly):
    """Determinant of the Sylvester matrix, evaluated by sympy."""
    a = [sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)]
    b = [sp.Rational(c.numerator, c.denominator) for c in reversed(q.coeffs)]
    m, n = len(a) - 1, len(b) - 1
    rows = [[0] * k + a + [0] * (n - 1 - k) for k in range(n)]
    rows += [[0] * k + b + [0] * (m - 1 - k) for k in range(m)]
    r = sp.Rational(sp.Matrix(rows).det())
    return Fraction(int(r.p), int(r.q))


def random_multipoly(rng: random.Random, nvars: int, max_deg: int, nterms: int = 5,
                     coeff=10) -> MultiPoly:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_deg)
        e = [0] * nvars
        for _ in range(d):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-coeff, coeff), rng.choice([1, 1, 2, 3]))
    return MultiPoly(nvars, terms)


def random_unipoly(rng: random.Random, max_deg: int = 8, coeff: int = 10) -> UniPoly:
    d = rng.randint(1, max_deg)
    cs = [rng.randint(-coeff, coeff) for _ in range(d)] + [rng.choice([v for v in range(-coeff, coeff + 1) if v])]
    return UniPoly(cs)


def fiber_oracle_triangular(u: UniPoly, a) -> int:
    """Real solutions of ``u(x) = a, y - v(x) = b``: one per real root of ``u - a``."""
    return sympy_real_root_count(u - UniPoly([a]))


def pmap(*components, nvars=None):
    from polyfiber.parser import parse_poly
    from polyfiber.polycore import PolyMap

    n = nvars or len(components)
    return PolyMap([parse_poly(c, n) for c in components])


def real_solutions_2d(p: MultiPoly, q: MultiPoly, tol: float = 1e-7):
    """Approximate real common zeros via a lex Groebner basis and numeric back-substitution."""
    x, y = SYMS[:2]
    ep, eq = to_sympy(p), to_sympy(q)
    basis = sp.groebner([ep, eq], y, x, order="lex")
    elim = [g for g in basis.exprs if not g.has(y)]
    xs = [complex(r) for r in sp.Poly(elim[0], x).nroots(n=30)] if elim and elim[0].has(x) else []
    out = []
    for xr in xs:
        if abs(xr.imag) > 1e-9:
            continue
        ys = sp.Poly(ep.subs(x, sp.Float(xr.real, 30)), y).nroots(n=30)
        for yr in map(complex, ys):
            if abs(yr.imag) < 1e-9 and abs(complex(eq.subs({x: xr.real, y: yr.real}))) < tol:
                if all(abs(yr.real - b) > 1e-6 or abs(xr.real - a) > 1e-6 for a, b in out):
                    out.append((xr.real, yr.real))
    return out


def binary_forms_share_real_line(forms) -> bool:
    """Common nonzero real zero of binary forms via sympy gcd and real roots."""
    t = sp.Symbol("t")
    x, y = SYMS[:2]
    exprs = [to_sympy(f) for f in forms]
    if all(sp.expand(e.subs({x: 1, y: 0})) == 0 for e in exprs):
        return True
    g = sp.Integer(0)
    for e in exprs:
        g = sp.gcd(g, sp.expand(e.subs({x: t, y: 1})))
    g = sp.Poly(g, t)
    return g.degree() > 0 and len(g.real_roots()) > 0
