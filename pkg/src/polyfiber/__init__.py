"""Exact surjectivity certificates and real fiber counts for polynomial maps."""

from polyfiber.certify import (
    Certificate,
    DetKind,
    DetStatus,
    Verdict,
    analyze,
    certify_cor13,
    certify_cor14,
    certify_thm12a,
    certify_thm12b,
    certify_thm19,
    check_thm17,
    check_thm18,
    det_status,
)
from polyfiber.corpus import build_pinchuk, build_remark16_odd_diagonal
from polyfiber.fiber import FiberReport, FiberStatus, Parity, bezout_number, eliminate, solve_fiber
from polyfiber.parser import ParseError, ProblemSpec, parse_poly, parse_problem_file, render
from polyfiber.polycore import NEG_INFINITY, MultiPoly, PolyMap, leading_form, total_degree
from polyfiber.realalg import (
    UniPoly,
    complex_only_zero,
    isolate_real_roots,
    real_only_zero,
    sturm_count,
    sylvester_resultant,
)
from polyfiber.systems import HomogSystem, NotApplicable

__all__ = [name for name in dir() if not name.startswith("_")]
