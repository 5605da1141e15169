"""Acceptance criteria; each test records one PASS/FAIL line shown after the run."""

import random
import time
from fractions import Fraction

from oracles import float_root_count, random_multipoly, random_unipoly
from polyfiber.certify import Verdict, certify_cor13, certify_cor14, check_thm18, DetKind
from polyfiber.corpus import build_pinchuk, random_linear_map, random_odd_map, random_sign_pattern_map
from polyfiber.fiber import FiberStatus, solve_fiber
from polyfiber.parser import ProblemSpec, parse_poly
from polyfiber.polycore import MultiPoly, PolyMap, leading_form, total_degree
from polyfiber.realalg import (
    Status,
    gcd_univariate,
    real_only_zero,
    squarefree_part,
    sturm_count,
    sylvester_resultant,
    verify_witness,
)
from polyfiber.systems import (
    build_combined,
    build_thm18_system,
    homogenize,
    induced_homogeneous,
    set_last_variable,
)


def _target(rng):
    return (Fraction(rng.randint(-40, 40), rng.randint(1, 8)), Fraction(rng.randint(-40, 40), rng.randint(1, 8)))


def _monomial_up_to_positive_scalar(form, exps):
    return set(form.terms) == {exps} and form.coefficient(exps) > 0


def test_criterion_1_pinchuk_golden(record_criterion):
    """Exact golden values of the Pinchuk map; limit 5 s."""
    start = time.perf_counter()
    m = build_pinchuk()
    checks = {}
    checks["degrees h,f,p,q = 5,10,10,25"] = [total_degree(v) for v in (m.h, m.f, m.p, m.q)] == [5, 10, 10, 25]
    checks["lead p = x^6*y^4"] = leading_form(m.p) == MultiPoly.monomial((6, 4))
    coeff = m.p.coefficient((5, 3))
    checks[f"coefficient of x^5*y^3 in p = -2 (got {coeff})"] = coeff == -2
    lq = leading_form(m.q)
    checks["lead q on x^15*y^10 with |coefficient| 75"] = set(lq.terms) == {(15, 10)} and abs(lq.coefficient((15, 10))) == 75
    p_sys, q_sys = build_thm18_system(m.map, 0), build_thm18_system(m.map, 1)
    checks["products for p ~ {x^11*y^8, x^12*y^7}"] = (
        _monomial_up_to_positive_scalar(p_sys.forms[0], (11, 8))
        and _monomial_up_to_positive_scalar(p_sys.forms[1], (12, 7)))
    checks["products for q ~ {x^29*y^20, x^30*y^19}"] = (
        _monomial_up_to_positive_scalar(q_sys.forms[0], (29, 20))
        and _monomial_up_to_positive_scalar(q_sys.forms[1], (30, 19)))
    cert = check_thm18(m.map)
    axis = cert.witness is not None and sum(1 for c in cert.witness if c == 0) == 1
    checks["gradient products condition holds with an axis witness"] = (
        cert.verdict is Verdict.NECESSARY_CONDITION_HOLDS and axis)
    elapsed = time.perf_counter() - start
    checks[f"runtime {elapsed:.2f}s < 5s"] = elapsed < 5
    failed = [k for k, ok in checks.items() if not ok]
    record_criterion(1, not failed, "Pinchuk golden values" + (f"; failed: {'; '.join(failed)}" if failed else ""))
    assert not failed, failed


def test_criterion_2_sign_pattern_family(record_criterion):
    """100 maps with sgn(ad) = -sgn(bc): all Surjective, 10 nonempty fibers each; limit 60 s."""
    start = time.perf_counter()
    rng = random.Random(1006)
    certified = empty = 0
    for _ in range(100):
        f, (a, b, c, d, k, j) = random_sign_pattern_map(rng, opposite=True, max_k=2, noise=True)
        cert = certify_cor14(f)
        if cert.verdict is not Verdict.SURJECTIVE:
            cert = certify_cor13(ProblemSpec(2, f))
        certified += cert.verdict is Verdict.SURJECTIVE
        for _ in range(10):
            rep = solve_fiber(f, _target(rng))
            empty += rep.status is FiberStatus.EMPTY or rep.count == 0
    elapsed = time.perf_counter() - start
    ok = certified == 100 and empty == 0 and elapsed < 60
    record_criterion(2, ok, f"{certified}/100 certified, {empty} empty fibers, {elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_3_fiber_parity(record_criterion):
    """30 maps passing the complex leading-form test, 10 targets each: finite counts odd; limit 120 s."""
    start = time.perf_counter()
    rng = random.Random(1202)
    maps = violations = finite = 0
    while maps < 30:
        f = random_odd_map(rng, max_degree=5)
        cert = certify_cor14(f)
        if cert.evidence.subverdicts.get("complex") is None or \
                cert.evidence.subverdicts["complex"].status is not Status.ONLY_ZERO:
            continue
        maps += 1
        for _ in range(10):
            rep = solve_fiber(f, _target(rng))
            if rep.status is FiberStatus.FINITE:
                finite += 1
                violations += rep.count % 2 == 0
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 120
    record_criterion(3, ok, f"{violations} even counts among {finite} finite fibers over {maps} maps, "
                            f"{elapsed:.1f}s (limit 120s)")
    assert ok


def test_criterion_4_oracle_equivalence(record_criterion):
    """Sturm vs float subdivision; resultant zero iff nonconstant gcd; limit 30 s."""
    start = time.perf_counter()
    rng = random.Random(4004)
    sturm_mismatch = checked = 0
    while checked < 200:
        p = random_unipoly(rng, 8)
        if squarefree_part(p).degree != p.degree:
            continue
        checked += 1
        sturm_mismatch += sturm_count(p) != float_root_count(p.coeffs)
    res_mismatch = 0
    for k in range(200):
        p, q = random_unipoly(rng, 6), random_unipoly(rng, 6)
        if k < 50:
            common = random_unipoly(rng, 3)
            p, q = p * common, q * common
        res_mismatch += (sylvester_resultant(p, q) == 0) != (gcd_univariate(p, q).degree >= 1)
    elapsed = time.perf_counter() - start
    ok = sturm_mismatch == 0 and res_mismatch == 0 and elapsed < 30
    record_criterion(4, ok, f"Sturm mismatches {sturm_mismatch}/200, resultant-gcd mismatches {res_mismatch}/200, "
                            f"{elapsed:.1f}s (limit 30s)")
    assert ok


def test_criterion_5_linear_maps(record_criterion):
    """50 nonsingular maps certified; 10 singular maps get a witness and no certificate; limit 10 s."""
    start = time.perf_counter()
    rng = random.Random(1005)
    certified = 0
    for _ in range(50):
        f = random_linear_map(rng, rng.randint(1, 4))
        certified += certify_cor14(f).verdict is Verdict.SURJECTIVE
    rejected = 0
    for _ in range(10):
        f = random_linear_map(rng, rng.randint(2, 4), singular=True)
        cert = certify_cor14(f)
        real = cert.evidence.subverdicts["real"]
        rejected += (cert.verdict is not Verdict.SURJECTIVE and real.status is Status.NONZERO_WITNESS
                     and verify_witness(f.leading_forms(), real.point))
    elapsed = time.perf_counter() - start
    ok = certified == 50 and rejected == 10 and elapsed < 10
    record_criterion(5, ok, f"{certified}/50 nonsingular certified, {rejected}/10 singular rejected with witness, "
                            f"{elapsed:.1f}s (limit 10s)")
    assert ok


def test_criterion_6_contrapositive(record_criterion):
    """(x^2 + y^2, y): product system only zero, violation backed by a zero of det J = 2x; limit 1 s."""
    start = time.perf_counter()
    f = PolyMap([parse_poly("x^2 + y^2", 2), parse_poly("y", 2)])
    only_zero = real_only_zero(build_thm18_system(f, 0)).status is Status.ONLY_ZERO
    cert = check_thm18(f)
    ds = cert.evidence.det_status
    corroborated = (ds.kind is DetKind.VANISH_WITNESS and ds.determinant == parse_poly("2*x", 2)
                    and ds.point[0] == 0 and ds.determinant(*ds.point) == 0)
    elapsed = time.perf_counter() - start
    ok = only_zero and cert.verdict is Verdict.VIOLATION and corroborated and elapsed < 1
    record_criterion(6, ok, f"only-zero {only_zero}, verdict {cert.verdict.value}, "
                            f"determinant zero at {tuple(str(c) for c in ds.point)}, {elapsed:.2f}s (limit 1s)")
    assert ok


def test_criterion_7_homogenization(record_criterion):
    """Last variable := 1 gives the system back, := 0 gives its leading forms; limit 10 s."""
    start = time.perf_counter()
    rng = random.Random(7007)
    done = bad = 0
    while done < 100:
        n = rng.randint(1, 3)
        f = PolyMap([random_multipoly(rng, n, 4, nterms=4) + MultiPoly.variable(n, k) ** rng.randint(1, 3)
                     for k in range(n)])
        g = [[random_multipoly(rng, n, 2, nterms=2) for _ in range(n)] for _ in range(n)]
        spec = ProblemSpec(n, f, gmatrix=g, alpha=[rng.randint(1, 2) for _ in range(n)])
        comb = build_combined(spec)
        if any(e.is_zero() for e in comb.equations):
            continue
        done += 1
        h = homogenize(comb)
        bad += tuple(set_last_variable(form, 1) for form in h.forms) != comb.equations
        bad += tuple(set_last_variable(form, 0) for form in h.forms) != induced_homogeneous(comb).forms
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    record_criterion(7, ok, f"{bad} mismatches over {done} specs, {elapsed:.1f}s (limit 10s)")
    assert ok
