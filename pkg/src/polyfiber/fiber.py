"""Exact real fibers of planar polynomial maps.

``solve_fiber`` works in sheared coordinates ``x = u + c*v, y = v`` with
``c`` chosen so that both shifted components have constant leading
coefficient in ``v`` and every root of the eliminant ``R(u)`` carries a
single common root ``v = -s10(u) / s11(u)`` read off the first
subresultant.  In that position the real fiber points correspond one to
one with the distinct real roots of ``R``, so counting is exact and every
box is certified by construction.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from polyfiber.polycore import (
    MultiPoly,
    PolyMap,
    leading_form,
    scale_to_integers,
    substitute,
    total_degree,
)
from polyfiber.realalg import (
    Isolation,
    UniPoly,
    bareiss_determinant,
    gcd_univariate,
    isolate_real_roots,
    rational_root_in,
    refine_isolation,
    squarefree_part,
)
from polyfiber.systems import build_combined


class FiberRefinementError(RuntimeError):
    """Boxes could not be separated within the refinement cap."""


class FiberStatus(str, enum.Enum):
    FINITE = "Finite"
    INFINITE_OVER_C = "InfiniteOverC"
    EMPTY = "Empty"


class Parity(str, enum.Enum):
    ODD = "Odd"
    EVEN = "Even"
    NA = "N/A"


# --- bivariate integer polynomials as coefficient lists -----------------------

def _int_coeff_lists(p: MultiPoly, var: int) -> list[list[int]]:
    """Coefficients of ``L*p`` in ``var``: entry k is a list (lowest first) in the other variable."""
    other = 1 - var
    ints = scale_to_integers(p)
    dv = max(e[var] for e in ints)
    du = max(e[other] for e in ints)
    out = [[0] * (du + 1) for _ in range(dv + 1)]
    for e, c in ints.items():
        out[e[var]][e[other]] = c
    for row in out:
        while row and row[-1] == 0:
            row.pop()
    return out


def _int_eval(poly: list[int], t: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = acc * t + c
    return acc


def _subresultant_matrix(P: Sequence, Q: Sequence, j: int, i: int) -> list[list]:
    """Matrix whose determinant is the coefficient of ``v^i`` in the j-th subresultant.

    ``P`` and ``Q`` are coefficient lists (lowest first) of formal degrees
    ``m = len(P) - 1`` and ``n = len(Q) - 1``.
    """
    m, n = len(P) - 1, len(Q) - 1
    width = m + n - j
    rows = []
    for poly, reps, deg in ((P, n - j, m), (Q, m - j, n)):
        for k in range(reps - 1, -1, -1):
            rows.append([poly[e - k] if 0 <= e - k <= deg else 0 for e in range(width)])
    cols = [width - 1 - c for c in range(m + n - 2 * j - 1)] + [i]
    return [[row[e] for e in cols] for row in rows]


def _interpolate(nodes: Sequence[int], values: Sequence[int]) -> UniPoly:
    """Exact Newton interpolation through ``(nodes[k], values[k])``."""
    coef = [Fraction(v) for v in values]
    n = len(nodes)
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            coef[k] = (coef[k] - coef[k - 1]) / (nodes[k] - nodes[k - level])
    out = UniPoly([coef[-1]])
    for k in range(n - 2, -1, -1):
        out = out * UniPoly([-nodes[k], 1]) + coef[k]
    return out


def _specialized_dets(Pc, Qc, specs, bound: int) -> list[UniPoly]:
    """Interpolate determinants of subresultant matrices over the other variable.

    ``specs`` is a list of ``(j, i)`` pairs; all share the node set.
    """
    nodes = [k - bound // 2 for k in range(bound + 1)]
    values = [[] for _ in specs]
    m, n = len(Pc) - 1, len(Qc) - 1
    for t in nodes:
        P = [_int_eval(c, t) for c in Pc]
        Q = [_int_eval(c, t) for c in Qc]
        for slot, (j, i) in enumerate(specs):
            if j == 0 and (m == 0 or n == 0):
                # resultant with a constant: P^n or Q^m
                values[slot].append(P[0] ** n if m == 0 else Q[0] ** m)
            else:
                values[slot].append(bareiss_determinant(_subresultant_matrix(P, Q, j, i)))
    return [_interpolate(nodes, vals) for vals in values]


def _u_degree(coeff_lists) -> int:
    return max((len(c) - 1 for c in coeff_lists if c), default=0)


def eliminate(p: MultiPoly, q: MultiPoly, var: int) -> UniPoly:
    """Resultant of ``p`` and ``q`` with respect to variable ``var`` (0 or 1).

    The result is a polynomial in the other variable; it vanishes
    identically exactly when ``p`` and ``q`` share a factor of positive
    degree in ``var``.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise ValueError("elimination is implemented for two variables")
    if p.is_zero() or q.is_zero():
        raise ValueError("cannot eliminate with a zero polynomial")
    Pc, Qc = _int_coeff_lists(p, var), _int_coeff_lists(q, var)
    m, n = len(Pc) - 1, len(Qc) - 1
    if m == 0 and n == 0:
        return UniPoly([1])
    bound = n * _u_degree(Pc) + m * _u_degree(Qc)
    (res,) = _specialized_dets(Pc, Qc, [(0, 0)], bound)
    # undo the integer scaling: res(Lp*p, Lq*q) = Lp^n * Lq^m * res(p, q)
    lp = _scale_factor(p)
    lq = _scale_factor(q)
    return res * (Fraction(1) / (lp**n * lq**m))


def _scale_factor(p: MultiPoly) -> Fraction:
    e, c = next(iter(p.terms.items()))
    return Fraction(scale_to_integers(p)[e]) / c


# --- interval helpers ----------------------------------------------------------

def _interval_eval(poly: UniPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of ``poly`` over ``[lo, hi]`` by interval Horner."""
    a = b = Fraction(0)
    for c in reversed(poly.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def _interval_div(n: tuple, d: tuple) -> tuple[Fraction, Fraction]:
    qs = [x / y for x in n for y in d]
    return min(qs), max(qs)


@dataclass(frozen=True)
class FiberPoint:
    """An isolating box ``x × y`` around one real fiber point."""

    x: Isolation
    y: Isolation
    _root_poly: UniPoly = field(repr=False, compare=False, default=None)
    _u: Isolation = field(repr=False, compare=False, default=None)
    _s11: UniPoly = field(repr=False, compare=False, default=None)
    _s10: UniPoly = field(repr=False, compare=False, default=None)
    _shear: Fraction = field(repr=False, compare=False, default=Fraction(0))

    @property
    def exact(self) -> tuple[Fraction, Fraction] | None:
        if self.x.exact_root is not None and self.y.exact_root is not None:
            return self.x.exact_root, self.y.exact_root
        return None

    def contains(self, point) -> bool:
        return self.x.contains(point[0]) and self.y.contains(point[1])

    def disjoint(self, other: "FiberPoint") -> bool:
        return self.x.disjoint(other.x) or self.y.disjoint(other.y)

    def refine(self, width=None) -> "FiberPoint":
        """A box for the same point with the parameter interval at most half as wide."""
        if self._u is None or self._u.exact_root is not None:
            return self
        width = self._u.width / 2 if width is None else width
        u = refine_isolation(self._root_poly, self._u, width)
        return _box_from_u(self._root_poly, u, self._s11, self._s10, self._shear)


def _iso(lo, hi) -> Isolation:
    return Isolation(lo, hi, lo) if lo == hi else Isolation(lo, hi)


def _box_from_u(root_poly, u: Isolation, s11, s10, c, max_refine: int = 64) -> FiberPoint:
    if u.exact_root is None:
        r = rational_root_in(root_poly, u)
        if r is not None:
            u = Isolation(r, r, r)
    if u.exact_root is not None:
        ur = u.exact_root
        v = -s10(ur) / s11(ur)
        x = ur + c * v
        return FiberPoint(Isolation(x, x, x), Isolation(v, v, v), root_poly, u, s11, s10, c)
    for _ in range(max_refine):
        den = _interval_eval(s11, u.lo, u.hi)
        if den[0] > 0 or den[1] < 0:
            num = _interval_eval(s10, u.lo, u.hi)
            vlo, vhi = _interval_div(num, den)
            vlo, vhi = -vhi, -vlo
            xlo = u.lo + min(c * vlo, c * vhi)
            xhi = u.hi + max(c * vlo, c * vhi)
            return FiberPoint(_iso(xlo, xhi), _iso(vlo, vhi), root_poly, u, s11, s10, c)
        u = refine_isolation(root_poly, u, u.width / 2)
        if u.exact_root is not None:
            return _box_from_u(root_poly, u, s11, s10, c)
    raise FiberRefinementError("could not separate the subresultant denominator from zero")


@dataclass(frozen=True)
class FiberReport:
    target: tuple[Fraction, Fraction]
    status: FiberStatus
    points: tuple[FiberPoint, ...]
    parity: Parity
    bezout: int
    eliminant: UniPoly | None = field(default=None, repr=False)
    shear: Fraction | None = None

    @property
    def count(self) -> int | None:
        return None if self.status is FiberStatus.INFINITE_OVER_C else len(self.points)


def _shear_candidates():
    yield Fraction(0)
    for k in itertools.count(1):
        for c in (Fraction(k), Fraction(-k), Fraction(1, k + 1), Fraction(-1, k + 1)):
            yield c


def _report(target, status, points, bezout, eliminant=None, shear=None) -> FiberReport:
    if status is FiberStatus.INFINITE_OVER_C:
        parity = Parity.NA
    else:
        parity = Parity.ODD if len(points) % 2 else Parity.EVEN
    return FiberReport(tuple(target), status, tuple(points), parity, bezout, eliminant, shear)


def _fiber_bezout(f: PolyMap) -> int:
    out = 1
    for d in f.degrees():
        out *= d if isinstance(d, int) else 0
    return out


def solve_fiber(f: PolyMap, target: Sequence, width=None, max_refine: int = 64,
                max_shears: int = 60) -> FiberReport:
    """All real solutions of ``f(x, y) = target``, each in an isolating box.

    With ``width`` set, boxes are refined until both sides are at most that wide.
    """
    if f.nvars != 2:
        raise ValueError("fiber computation is implemented for planar maps only")
    target = tuple(Fraction(t) for t in target)
    if len(target) != 2:
        raise ValueError("target must have two coordinates")
    bezout = _fiber_bezout(f)
    P = f[0] - target[0]
    Q = f[1] - target[1]
    if P.is_zero() or Q.is_zero():
        other = Q if P.is_zero() else P
        if not other.is_zero() and other.is_constant():
            return _report(target, FiberStatus.EMPTY, (), bezout)
        return _report(target, FiberStatus.INFINITE_OVER_C, (), bezout)
    if P.is_constant() or Q.is_constant():
        return _report(target, FiberStatus.EMPTY, (), bezout)

    lp, lq = leading_form(P), leading_form(Q)
    u_, v_ = MultiPoly.variables(2)
    tried = 0
    for c in _shear_candidates():
        # constant leading coefficient in v after the shear
        if lp(c, 1) == 0 or lq(c, 1) == 0:
            continue
        tried += 1
        if tried > max_shears:
            break
        images = [u_ + v_ * c, v_]
        Ps = substitute(P, images) if c else P
        Qs = substitute(Q, images) if c else Q
        Pc, Qc = _int_coeff_lists(Ps, 1), _int_coeff_lists(Qs, 1)
        m, n = len(Pc) - 1, len(Qc) - 1
        dP, dQ = total_degree(P), total_degree(Q)
        r_bound = min(dP * dQ, n * _u_degree(Pc) + m * _u_degree(Qc))
        (R,) = _specialized_dets(Pc, Qc, [(0, 0)], r_bound)
        if R.is_zero():
            return _report(target, FiberStatus.INFINITE_OVER_C, (), bezout, R, c)
        if R.degree == 0:
            return _report(target, FiberStatus.EMPTY, (), bezout, R, c)
        if min(m, n) == 1:
            lin = Pc if m == 1 else Qc
            s11 = UniPoly(lin[1])
            s10 = UniPoly(lin[0])
        else:
            s_bound = (n - 1) * _u_degree(Pc) + (m - 1) * _u_degree(Qc)
            s11, s10 = _specialized_dets(Pc, Qc, [(1, 1), (1, 0)], s_bound)
        Rs = squarefree_part(R)
        if s11.is_zero() or gcd_univariate(Rs, s11).degree >= 1:
            continue
        points = [_box_from_u(Rs, iso, s11, s10, c, max_refine) for iso in isolate_real_roots(Rs)]
        points = _separate(points, max_refine)
        if width is not None:
            points = [_shrink(b, Fraction(width), max_refine) for b in points]
        points.sort(key=lambda b: (b.x.lo, b.y.lo))
        status = FiberStatus.FINITE if points else FiberStatus.EMPTY
        return _report(target, status, points, bezout, R, c)
    raise FiberRefinementError("no shear put the system in generic position")


def _shrink(box: FiberPoint, width: Fraction, max_refine: int) -> FiberPoint:
    for _ in range(4 * max_refine):
        if box.x.width <= width and box.y.width <= width:
            return box
        box = box.refine()
    raise FiberRefinementError("box did not shrink to the requested width")


def _separate(points: list[FiberPoint], max_refine: int) -> list[FiberPoint]:
    for _ in range(max_refine):
        clash = set()
        for a, b in itertools.combinations(range(len(points)), 2):
            if not points[a].disjoint(points[b]):
                clash.update((a, b))
        if not clash:
            return points
        for k in clash:
            points[k] = points[k].refine()
    raise FiberRefinementError(f"boxes still overlap after {max_refine} refinements")


def bezout_number(f: PolyMap, spec=None) -> int:
    """Product of the degrees of the combined equations (identity weights by default)."""
    if spec is None:
        degrees = f.degrees()
    else:
        degrees = build_combined(spec).degrees
    out = 1
    for d in degrees:
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"equation degree {d} is not positive")
        out *= d
    return out
