"""Surjectivity and fiber-parity certificates for polynomial maps.

Every public ``certify_*`` / ``check_*`` function returns a
:class:`Certificate`; failures are verdicts, never exceptions.  A
``Surjective`` certificate can only be constructed when all recorded
gates passed, the matrix determinant is known (or assumed) not to vanish,
and no sub-verdict is inconclusive.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from polyfiber.polycore import (
    MultiPoly,
    PolyMap,
    determinant,
    is_odd_degree,
    jacobian_matrix,
    specialize,
    total_degree,
)
from polyfiber.realalg import (
    RootOf,
    Status,
    UniPoly,
    ZeroSolutionVerdict,
    complex_only_zero,
    isolate_real_roots,
    rational_root_in,
    real_only_zero,
    squarefree_part,
    verify_witness,
)
from polyfiber.systems import (
    HomogSystem,
    NotApplicable,
    build_combined,
    build_cor13_system,
    build_thm17_system,
    build_thm18_system,
    build_thm19_system,
    homogenize,
    induced_homogeneous,
)

LEADING_FORMS = "leading-forms"
DOMINANT_TERMS = "dominant-terms"
COMBINED_SYSTEM = "combined-system"
COMBINED_PARITY = "combined-system-parity"
GRADIENT_POWERS = "gradient-powers"
MATRIX_COLUMN = "matrix-column"
JACOBIAN_PRODUCTS = "jacobian-products"


class DetKind(str, enum.Enum):
    CONSTANT_NONZERO = "ConstantNonzero"
    POSITIVE_BY_MONOMIAL_TEST = "PositiveByMonomialTest"
    VANISH_WITNESS = "VanishWitness"
    ASSUMED_NONVANISHING = "AssumedNonvanishing"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DetStatus:
    kind: DetKind
    determinant: MultiPoly
    value: Fraction | None = None
    point: tuple | None = None

    @property
    def nonvanishing(self) -> bool:
        return self.kind in (DetKind.CONSTANT_NONZERO, DetKind.POSITIVE_BY_MONOMIAL_TEST,
                             DetKind.ASSUMED_NONVANISHING)


class Verdict(str, enum.Enum):
    SURJECTIVE = "Surjective"
    ODD_FIBER_PARITY = "OddFiberParity"
    NECESSARY_CONDITION_HOLDS = "NecessaryConditionHolds"
    VIOLATION = "TheoremViolatedOrHypothesisFails"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class Evidence:
    systems: dict = field(default_factory=dict)
    subverdicts: dict[str, ZeroSolutionVerdict] = field(default_factory=dict)
    gates: dict[str, bool] = field(default_factory=dict)
    det_status: DetStatus | None = None
    bezout: int | None = None
    parity: Verdict | None = None
    notes: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    via: str
    evidence: Evidence = field(default_factory=Evidence)
    reason: str | None = None
    witness: tuple | None = None
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict is Verdict.SURJECTIVE:
            ev = self.evidence
            failed = [g for g, ok in ev.gates.items() if not ok]
            if failed:
                raise ValueError(f"Surjective claimed with failed gates: {failed}")
            if any(v.status is Status.INCONCLUSIVE for v in ev.subverdicts.values()):
                raise ValueError("Surjective claimed with an inconclusive sub-verdict")
            if ev.det_status is not None and not ev.det_status.nonvanishing:
                raise ValueError("Surjective claimed without a nonvanishing determinant")
            if (ev.det_status is not None and ev.det_status.kind is DetKind.ASSUMED_NONVANISHING
                    and not self.assumptions):
                raise ValueError("an assumed hypothesis must be listed")

    @property
    def decisive(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE


# --- determinant classification -------------------------------------------------

_GRID_VALUES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3))


def _sign_definite_by_monomials(det: MultiPoly) -> bool:
    c0 = det.constant_term()
    if not c0:
        return False
    for e, c in det.terms.items():
        if any(k % 2 for k in e):
            return False
        if (c > 0) != (c0 > 0):
            return False
    return True


def _line_witness(det: MultiPoly, k: int, fixed: dict) -> tuple | None:
    u = UniPoly.from_multipoly(specialize(det, fixed), k)
    if u.degree is None or not isinstance(u.degree, int) or u.degree < 1:
        return None
    isos = isolate_real_roots(u)
    if not isos:
        return None
    sf = squarefree_part(u)
    for iso in isos:
        r = rational_root_in(sf, iso)
        if r is not None:
            return tuple(r if i == k else fixed[i] for i in range(det.nvars))
    return tuple(RootOf(sf, isos[0]) if i == k else fixed[i] for i in range(det.nvars))


def find_vanishing_point(det: MultiPoly, budget: int = 4000) -> tuple | None:
    """Search for an exact real zero of ``det``: a rational grid, then coordinate lines."""
    n = det.nvars
    if det.is_zero():
        return (Fraction(0),) * n
    if det.is_constant():
        return None
    for count, point in enumerate(itertools.product(_GRID_VALUES, repeat=n)):
        if count >= budget:
            break
        if det(*point) == 0:
            return point
    offsets = _GRID_VALUES[:3]
    for k in range(n):
        others = [i for i in range(n) if i != k]
        for values in itertools.product(offsets, repeat=n - 1):
            point = _line_witness(det, k, dict(zip(others, values)))
            if point is not None and verify_witness([det], point, real=True):
                return point
    return None


def det_status(gmatrix: Sequence[Sequence[MultiPoly]], assume: bool = False) -> DetStatus:
    """Classify whether ``det(gmatrix)`` can vanish on real points."""
    n = len(gmatrix)
    if any(len(row) != n for row in gmatrix):
        raise ValueError("matrix must be square")
    det = determinant(gmatrix)
    if det.is_constant() and not det.is_zero():
        return DetStatus(DetKind.CONSTANT_NONZERO, det, value=det.constant_term())
    if _sign_definite_by_monomials(det):
        return DetStatus(DetKind.POSITIVE_BY_MONOMIAL_TEST, det)
    point = find_vanishing_point(det)
    if point is not None:
        return DetStatus(DetKind.VANISH_WITNESS, det, point=point)
    if assume:
        return DetStatus(DetKind.ASSUMED_NONVANISHING, det)
    return DetStatus(DetKind.UNKNOWN, det)


_ASSUMED = "the matrix determinant never vanishes on real points (assumed, not verified)"


def _det_gate(ev: Evidence, ds: DetStatus):
    """Return ``(verdict, reason, witness)`` for a failing determinant gate, else ``None``."""
    ev.det_status = ds
    ev.gates["determinant never vanishes"] = ds.nonvanishing
    if ds.kind is DetKind.VANISH_WITNESS:
        return Verdict.NOT_APPLICABLE, "the matrix determinant vanishes at a real point", ds.point
    if ds.kind is DetKind.UNKNOWN:
        return (Verdict.INCONCLUSIVE,
                "could not decide whether the matrix determinant vanishes; "
                "rerun with the nonvanishing assumption to proceed", None)
    return None


def _assumptions(ds: DetStatus | None) -> tuple[str, ...]:
    if ds is not None and ds.kind is DetKind.ASSUMED_NONVANISHING:
        return (_ASSUMED,)
    return ()


def _finish(via, ev, failures, real: ZeroSolutionVerdict | None, success=Verdict.SURJECTIVE):
    """Pick the verdict: decisive failures first, then inconclusive ones, then success."""
    decisive = [f for f in failures if f and f[0] is not Verdict.INCONCLUSIVE]
    pending = [f for f in failures if f and f[0] is Verdict.INCONCLUSIVE]
    if decisive:
        v, reason, witness = decisive[0]
        return Certificate(v, via, ev, reason, witness, _assumptions(ev.det_status))
    if real is not None and real.status is Status.NONZERO_WITNESS:
        return Certificate(Verdict.NOT_APPLICABLE, via, ev,
                           "the homogeneous system has a nonzero real solution", real.point,
                           _assumptions(ev.det_status))
    if pending:
        v, reason, witness = pending[0]
        return Certificate(v, via, ev, reason, witness, _assumptions(ev.det_status))
    if real is not None and real.status is Status.INCONCLUSIVE:
        return Certificate(Verdict.INCONCLUSIVE, via, ev, real.reason, None, _assumptions(ev.det_status))
    return Certificate(success, via, ev, None, None, _assumptions(ev.det_status))


def _odd_gate(ev: Evidence, degrees) -> tuple | None:
    bad = [(i, d) for i, d in enumerate(degrees) if not is_odd_degree(d)]
    ev.gates["equation degrees odd"] = not bad
    if bad:
        i, d = bad[0]
        return Verdict.NOT_APPLICABLE, f"equation {i + 1} has degree {d}, which is not odd", None
    return None


def _record_parity(ev: Evidence, forms_sys: HomogSystem, bezout: int | None):
    cv = complex_only_zero(forms_sys)
    ev.subverdicts["complex"] = cv
    if cv.status is Status.ONLY_ZERO:
        ev.parity = Verdict.ODD_FIBER_PARITY
        ev.bezout = bezout


def certify_thm12a(spec, seed: int = 0) -> Certificate:
    """Surjectivity from the combined system's leading forms having only the trivial real zero."""
    ev = Evidence()
    failures = [_det_gate(ev, det_status(spec.gmatrix, spec.assume_det_nonvanishing))]
    comb = build_combined(spec)
    ev.systems["combined"] = comb
    failures.insert(0, _odd_gate(ev, comb.degrees))
    real = None
    if all(not f.is_zero() for f in comb.equations):
        hs = induced_homogeneous(comb)
        ev.systems["induced"] = hs
        real = real_only_zero(hs, seed=seed)
        ev.subverdicts["real"] = real
        if all(is_odd_degree(d) for d in comb.degrees):
            ev.bezout = prod(comb.degrees)
    return _finish(COMBINED_SYSTEM, ev, failures, real)


def certify_thm12b(spec, target: Sequence | None = None, seed: int = 0) -> Certificate:
    """Odd real fiber cardinality at ``target`` (or an infinite complex fiber)."""
    target = spec.target if target is None else tuple(Fraction(t) for t in target)
    ev = Evidence()
    ev.notes["target"] = tuple(target)
    ds = det_status(spec.gmatrix, spec.assume_det_nonvanishing)
    failures = [_det_gate(ev, ds)]
    comb = build_combined(spec)
    ev.systems["combined"] = comb
    failures.insert(0, _odd_gate(ev, comb.degrees))
    ev.notes["infinite_branch_justified"] = ds.kind is DetKind.CONSTANT_NONZERO
    if any(f.is_zero() for f in comb.equations):
        return _finish(COMBINED_PARITY, ev, failures, None)
    hs = induced_homogeneous(comb)
    ev.systems["induced"] = hs
    shifted = build_combined(spec.with_target(target), shift_by_target=True)
    if all(not e.is_zero() for e in shifted.equations):
        ev.systems["homogenized"] = homogenize(shifted)
    cv = complex_only_zero(hs)
    ev.subverdicts["complex"] = cv
    if all(is_odd_degree(d) for d in comb.degrees):
        ev.bezout = prod(comb.degrees)
    if cv.status is Status.NONZERO_WITNESS:
        failures.append((Verdict.NOT_APPLICABLE,
                         "the homogeneous system has a nonzero complex solution", cv.point))
    elif cv.status is Status.INCONCLUSIVE:
        failures.append((Verdict.INCONCLUSIVE, cv.reason, None))
    cert = _finish(COMBINED_PARITY, ev, failures, None, success=Verdict.ODD_FIBER_PARITY)
    if cert.verdict is Verdict.ODD_FIBER_PARITY:
        ev.parity = Verdict.ODD_FIBER_PARITY
    return cert


def certify_cor13(spec, seed: int = 0) -> Certificate:
    """Surjectivity from the products of leading forms that dominate each row."""
    ev = Evidence()
    try:
        hs, selector = build_cor13_system(spec)
    except NotApplicable as exc:
        ev.gates["unique odd maximal degree per row"] = False
        return Certificate(Verdict.NOT_APPLICABLE, DOMINANT_TERMS, ev, str(exc))
    ev.gates["unique odd maximal degree per row"] = True
    ev.systems["dominant"] = hs
    ev.notes["selector"] = tuple(j + 1 for j in selector)
    failures = [_det_gate(ev, det_status(spec.gmatrix, spec.assume_det_nonvanishing))]
    real = real_only_zero(hs, seed=seed)
    ev.subverdicts["real"] = real
    pdeg = [total_degree(p) for p in spec.map]
    row_degrees = [spec.alpha[j] * pdeg[j] + total_degree(spec.gmatrix[i][j])
                   for i, j in enumerate(selector)]
    if ev.det_status.nonvanishing:
        _record_parity(ev, hs, prod(row_degrees))
    return _finish(DOMINANT_TERMS, ev, failures, real)


def certify_cor14(f: PolyMap, seed: int = 0) -> Certificate:
    """Surjectivity from odd component degrees and the leading forms' trivial real zero set."""
    ev = Evidence()
    degrees = f.degrees()
    odd = all(is_odd_degree(d) for d in degrees)
    ev.gates["product of degrees odd"] = odd
    if not odd:
        shown = " * ".join(str(d) for d in degrees)
        return Certificate(Verdict.NOT_APPLICABLE, LEADING_FORMS, ev,
                           f"product of component degrees {shown} is not odd")
    hs = HomogSystem(f.nvars, f.leading_forms(), degrees)
    ev.systems["leading"] = hs
    real = real_only_zero(hs, seed=seed)
    ev.subverdicts["real"] = real
    _record_parity(ev, hs, prod(degrees))
    return _finish(LEADING_FORMS, ev, [], real)


def certify_thm19(f: PolyMap, alpha: Sequence[int], assume_jacobian: bool = False,
                  seed: int = 0) -> Certificate:
    """Surjectivity from the leading forms of the gradient of ``sum_j p_j^alpha_j``."""
    ev = Evidence()
    ev.notes["alpha"] = tuple(alpha)
    try:
        hs = build_thm19_system(f, alpha)
    except NotApplicable as exc:
        ev.gates["exponents even"] = False
        return Certificate(Verdict.NOT_APPLICABLE, GRADIENT_POWERS, ev, str(exc))
    ev.gates["exponents even"] = True
    ev.systems["gradient"] = hs
    failures = [_det_gate(ev, det_status(jacobian_matrix(f), assume_jacobian))]
    real = None
    if any(not form.is_zero() for form in hs.forms):
        real = real_only_zero(hs, seed=seed)
        ev.subverdicts["real"] = real
    else:
        failures.append((Verdict.NOT_APPLICABLE, "every gradient equation vanishes", None))
    return _finish(GRADIENT_POWERS, ev, failures, real)


def check_thm17(gmatrix: Sequence[Sequence[MultiPoly]], j0: int, seed: int = 0) -> Certificate:
    """Odd-degree column of a nonvanishing-determinant matrix must have a real common zero."""
    ev = Evidence()
    ev.notes["column"] = j0 + 1
    try:
        hs = build_thm17_system(gmatrix, j0)
    except NotApplicable as exc:
        ev.gates["column degrees odd"] = False
        return Certificate(Verdict.NOT_APPLICABLE, MATRIX_COLUMN, ev, str(exc))
    ev.gates["column degrees odd"] = True
    ev.systems["column"] = hs
    ds = det_status(gmatrix)
    ev.det_status = ds
    real = real_only_zero(hs, seed=seed)
    ev.subverdicts["real"] = real
    return _necessary(MATRIX_COLUMN, ev, [real], ds)


def check_thm18(f: PolyMap, seed: int = 0) -> Certificate:
    """Each ``lead(p_j) * lead(dp_j/dX_i)`` system must have a nonzero real solution."""
    ev = Evidence()
    ds = det_status(jacobian_matrix(f))
    ev.det_status = ds
    verdicts = []
    for j in range(f.nvars):
        try:
            hs = build_thm18_system(f, j)
        except NotApplicable as exc:
            ev.gates[f"component {j + 1} nonconstant"] = False
            return Certificate(Verdict.NOT_APPLICABLE, JACOBIAN_PRODUCTS, ev, str(exc))
        ev.systems[f"products[{j + 1}]"] = hs
        v = real_only_zero(hs, seed=seed)
        ev.subverdicts[f"real[{j + 1}]"] = v
        verdicts.append(v)
    return _necessary(JACOBIAN_PRODUCTS, ev, verdicts, ds)


def _necessary(via, ev, verdicts, ds: DetStatus) -> Certificate:
    only_zero = [k for k, v in enumerate(verdicts) if v.status is Status.ONLY_ZERO]
    if only_zero:
        if ds.kind is DetKind.VANISH_WITNESS:
            reason = "a system has only the zero real solution; the determinant must vanish, and it does"
        elif ds.nonvanishing:
            reason = "a system has only the zero real solution although the determinant never vanishes"
        else:
            reason = "a system has only the zero real solution; the determinant must vanish somewhere"
        return Certificate(Verdict.VIOLATION, via, ev, reason, ds.point)
    if all(v.status is Status.NONZERO_WITNESS for v in verdicts):
        return Certificate(Verdict.NECESSARY_CONDITION_HOLDS, via, ev, None, verdicts[0].point)
    pending = next(v for v in verdicts if v.status is Status.INCONCLUSIVE)
    return Certificate(Verdict.INCONCLUSIVE, via, ev, pending.reason)


def default_even_alpha(spec) -> tuple[int, ...]:
    if all(a % 2 == 0 for a in spec.alpha):
        return spec.alpha
    return (2,) * spec.nvars


def analyze(spec, seed: int = 0) -> list[Certificate]:
    """Run every surjectivity pipeline, cheapest and most specific first."""
    return [
        certify_cor14(spec.map, seed=seed),
        certify_cor13(spec, seed=seed),
        certify_thm12a(spec, seed=seed),
        certify_thm12b(spec, spec.target, seed=seed),
        certify_thm19(spec.map, default_even_alpha(spec), spec.assume_det_nonvanishing, seed=seed),
    ]


def first_surjective(certs: Sequence[Certificate]) -> Certificate | None:
    return next((c for c in certs if c.verdict is Verdict.SURJECTIVE), None)
