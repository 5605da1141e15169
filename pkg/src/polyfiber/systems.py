"""Derived polynomial systems attached to a map and its auxiliary data.

Each builder takes a :class:`~polyfiber.parser.ProblemSpec` (or a map and
its matrix) and returns either a :class:`CombinedSystem` of ordinary
equations or a :class:`HomogSystem` of homogeneous forms.  When a
builder's degree preconditions fail it raises :class:`NotApplicable`,
which the certification layer turns into a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from polyfiber.polycore import (
    NEG_INFINITY,
    Degree,
    MultiPoly,
    PolyMap,
    is_homogeneous,
    is_odd_degree,
    leading_form,
    partial_derivative,
    specialize,
    total_degree,
)


class NotApplicable(Exception):
    """A degree or parity precondition of a construction does not hold."""

    def __init__(self, reason: str, row: int | None = None):
        self.reason = reason
        self.row = row
        super().__init__(reason if row is None else f"row {row + 1}: {reason}")


@dataclass(frozen=True)
class HomogSystem:
    nvars: int
    forms: tuple[MultiPoly, ...]
    degrees: tuple[Degree, ...]

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.forms) != len(self.degrees):
            raise ValueError("one degree per form")
        for f, d in zip(self.forms, self.degrees):
            if f.nvars != self.nvars:
                raise ValueError("form variable count mismatch")
            if not is_homogeneous(f, d):
                raise ValueError(f"form {f} is not homogeneous of degree {d}")

    def __len__(self):
        return len(self.forms)


@dataclass(frozen=True)
class CombinedSystem:
    nvars: int
    equations: tuple[MultiPoly, ...]
    degrees: tuple[Degree, ...]
    target: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.equations) != self.nvars:
            raise ValueError("a combined system has one equation per variable")


def build_combined(spec, shift_by_target: bool = False) -> CombinedSystem:
    """Row i is ``sum_j (p_j - a_j)^alpha_j * g_ij``, with ``a = 0`` unless shifting."""
    n = spec.nvars
    target = spec.target if shift_by_target else (Fraction(0),) * n
    powers = [(spec.map[j] - target[j]) ** spec.alpha[j] for j in range(n)]
    eqs = []
    for i in range(n):
        acc = MultiPoly.zero(n)
        for j in range(n):
            g = spec.gmatrix[i][j]
            if not g.is_zero():
                acc = acc + powers[j] * g
        eqs.append(acc)
    return CombinedSystem(n, eqs, [total_degree(e) for e in eqs],
                          tuple(target) if shift_by_target else None)


def induced_homogeneous(sys: CombinedSystem) -> HomogSystem:
    forms = [leading_form(e) for e in sys.equations]
    return HomogSystem(sys.nvars, forms, [total_degree(e) for e in sys.equations])


def homogenize_poly(p: MultiPoly, degree: int) -> MultiPoly:
    """``X_{n+1}^degree * p(X/X_{n+1})`` in ``n + 1`` variables."""
    return MultiPoly(p.nvars + 1, {e + (degree - sum(e),): c for e, c in p.terms.items()})


def homogenize(sys: CombinedSystem) -> HomogSystem:
    forms = []
    for i, (eq, d) in enumerate(zip(sys.equations, sys.degrees)):
        if d is NEG_INFINITY:
            raise ValueError(f"equation {i + 1} is zero; it has no homogenization")
        forms.append(homogenize_poly(eq, d))
    return HomogSystem(sys.nvars + 1, forms, sys.degrees)


def set_last_variable(p: MultiPoly, value) -> MultiPoly:
    """Fix the last variable and drop it from the variable list."""
    q = specialize(p, {p.nvars - 1: value})
    return MultiPoly(p.nvars - 1, {e[:-1]: c for e, c in q.terms.items()})


def build_cor13_system(spec) -> tuple[HomogSystem, tuple[int, ...]]:
    """Products of leading forms picked by each row's unique odd maximal degree.

    Row i compares ``alpha_j * deg p_j + deg g_ij`` over j; the winner
    j(i) contributes ``lead(p_j(i)) * lead(g_i,j(i))``.
    """
    n = spec.nvars
    pdeg = [total_degree(p) for p in spec.map]
    forms, degrees, selector = [], [], []
    for i in range(n):
        weights = [spec.alpha[j] * pdeg[j] + total_degree(spec.gmatrix[i][j]) for j in range(n)]
        top = max(weights)
        if top is NEG_INFINITY:
            raise NotApplicable("every entry of the row is zero", i)
        winners = [j for j, w in enumerate(weights) if w == top]
        if len(winners) > 1:
            raise NotApplicable(f"maximal degree {top} attained by columns "
                                f"{', '.join(str(j + 1) for j in winners)} (tie)", i)
        if top % 2 == 0:
            raise NotApplicable(f"maximal degree {top} is even", i)
        j = winners[0]
        form = leading_form(spec.map[j]) * leading_form(spec.gmatrix[i][j])
        forms.append(form)
        degrees.append(total_degree(form))
        selector.append(j)
    return HomogSystem(n, forms, degrees), tuple(selector)


def build_thm17_system(gmatrix: Sequence[Sequence[MultiPoly]], j0: int) -> HomogSystem:
    """Leading forms of column ``j0`` (0-based); every entry must have odd degree."""
    n = len(gmatrix)
    if not 0 <= j0 < n:
        raise IndexError(f"column {j0} out of range")
    column = [gmatrix[i][j0] for i in range(n)]
    for i, g in enumerate(column):
        d = total_degree(g)
        if not is_odd_degree(d):
            raise NotApplicable(f"degree {d} of column entry is not odd", i)
    return HomogSystem(n, [leading_form(g) for g in column], [total_degree(g) for g in column])


def build_thm18_system(f: PolyMap, j: int) -> HomogSystem:
    """Forms ``lead(p_j) * lead(d p_j / d X_i)`` for i = 1..n."""
    p = f[j]
    if p.is_constant():
        raise NotApplicable(f"component {j + 1} is constant")
    lp = leading_form(p)
    forms = [lp * leading_form(partial_derivative(p, i)) for i in range(f.nvars)]
    return HomogSystem(f.nvars, forms, [total_degree(q) for q in forms])


def gradient_power_equations(f: PolyMap, alpha: Sequence[int]) -> list[MultiPoly]:
    """Row i is ``sum_j alpha_j * p_j^(alpha_j - 1) * d p_j / d X_i``."""
    n = f.nvars
    powers = [f[j] ** (alpha[j] - 1) * alpha[j] for j in range(n)]
    return [
        sum((powers[j] * partial_derivative(f[j], i) for j in range(n)), MultiPoly.zero(n))
        for i in range(n)
    ]


def build_thm19_system(f: PolyMap, alpha: Sequence[int]) -> HomogSystem:
    if len(alpha) != f.nvars:
        raise ValueError("alpha length differs from the number of components")
    for j, a in enumerate(alpha):
        if a < 2 or a % 2:
            raise NotApplicable(f"exponent {a} is not an even integer >= 2", j)
    eqs = gradient_power_equations(f, alpha)
    return HomogSystem(f.nvars, [leading_form(e) for e in eqs], [total_degree(e) for e in eqs])
