"""Exact real root machinery and only-zero-solution tests for homogeneous systems.

Univariate work happens on :class:`UniPoly` (dense, lowest degree first,
rational coefficients).  Sturm sequences are run on primitive integer
coefficient lists so that remainder sequences stay in the integers.

Witness points may contain at most one :class:`RootOf` coordinate: an
algebraic number given by a defining polynomial that divides every form
after the rational coordinates are plugged in.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence, Union

import numpy as np

from polyfiber.polycore import NEG_INFINITY, Degree, MultiPoly, evaluate, specialize, total_degree


class UniPoly:
    """Dense univariate polynomial over the rationals, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: int = 0) -> "UniPoly":
        """Coefficients of ``p`` in variable ``var``; every other exponent must be zero."""
        cs: dict[int, Fraction] = {}
        for e, c in p.terms.items():
            if any(k for i, k in enumerate(e) if i != var):
                raise ValueError("polynomial depends on more than one variable")
            cs[e[var]] = c
        if not cs:
            return cls()
        return cls([cs.get(k, 0) for k in range(max(cs) + 1)])

    def to_multipoly(self, nvars: int = 1, var: int = 0) -> MultiPoly:
        terms = {}
        for k, c in enumerate(self.coeffs):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return MultiPoly(nvars, terms)

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        from polyfiber.parser import render

        return f"UniPoly({render(self.to_multipoly())!r})" if self.coeffs else "UniPoly(0)"

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_uni(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        quot = [Fraction(0)] * (dq + 1)
        lc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lc
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quot), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UniPoly(c / lc for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        """Primitive integer coefficients of a positive multiple of ``self``."""
        return _primitive([c for c in self.coeffs])

    def compose_affine(self, a, b) -> "UniPoly":
        """``self(a*x + b)``."""
        out = UniPoly()
        lin = UniPoly((b, a))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out


def _as_uni(v) -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UniPoly([v])
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial")


def _primitive(coeffs: Sequence) -> list[int]:
    """Integer coefficients with content 1 and the same signs (positive scaling)."""
    if not coeffs:
        return []
    den = reduce(math.lcm, (Fraction(c).denominator for c in coeffs), 1)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = reduce(math.gcd, ints, 0)
    while ints and ints[-1] == 0:
        ints.pop()
    return [c // g for c in ints] if g else []


# --- integer polynomial helpers (lists, lowest degree first) ---------------

def _int_sign_at(p: list[int], x: Fraction) -> int:
    """Sign of ``p(x)`` for rational ``x`` using integer arithmetic only."""
    a, b = x.numerator, x.denominator
    d = len(p) - 1
    acc = 0
    bp = 1
    # evaluate sum c_i a^i b^(d-i) by Horner in a with powers of b
    for c in reversed(p):
        acc = acc * a + c * bp
        bp *= b
    return (acc > 0) - (acc < 0)


def _int_sign_at_inf(p: list[int], positive: bool) -> int:
    s = (p[-1] > 0) - (p[-1] < 0)
    if not positive and (len(p) - 1) % 2:
        s = -s
    return s


def _int_derivative(p: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(p) if k]


def _int_prem(a: list[int], b: list[int]) -> tuple[list[int], int]:
    """Pseudo-remainder: returns ``(r, s)`` with ``lc(b)**s * a = q*b + r``."""
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    steps = 0
    while len(r) - 1 >= db and r:
        coef = r[-1]
        shift = len(r) - 1 - db
        r = [lcb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= coef * bc
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    return r, steps


def _int_content_reduce(p: list[int]) -> list[int]:
    g = reduce(math.gcd, p, 0)
    return [c // g for c in p] if g > 1 else p


def sturm_sequence_int(p: list[int]) -> list[list[int]]:
    seq = [p, _int_content_reduce(_int_derivative(p))]
    while seq[-1]:
        a, b = seq[-2], seq[-1]
        if len(b) == 1:
            break
        r, steps = _int_prem(a, b)
        if not r:
            break
        sign = -1 if (b[-1] < 0 and steps % 2) else 1
        seq.append(_int_content_reduce([-sign * c for c in r]))
    return [s for s in seq if s]


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    while b:
        r, _ = _int_prem(a, b)
        a, b = b, _int_content_reduce(r)
    return _int_content_reduce(a)


def _squarefree_int(p: list[int]) -> list[int]:
    if len(p) <= 2:
        return p
    g = _int_gcd(p, _int_derivative(p))
    if len(g) <= 1:
        return p
    return _primitive((UniPoly(p) // UniPoly(g)).coeffs)


class _Sturm:
    """Sturm sequence of the squarefree part of a polynomial."""

    def __init__(self, p: UniPoly | list[int]):
        ints = p.integer_coeffs() if isinstance(p, UniPoly) else list(p)
        if not ints:
            raise ValueError("zero polynomial")
        self.poly = _squarefree_int(ints)
        self.seq = sturm_sequence_int(self.poly)

    def variations(self, x) -> int:
        if x is None or x == math.inf:
            return _variations(_int_sign_at_inf(s, True) for s in self.seq)
        if x == -math.inf:
            return _variations(_int_sign_at_inf(s, False) for s in self.seq)
        x = Fraction(x)
        return _variations(_int_sign_at(s, x) for s in self.seq)

    def count(self, lo, hi) -> int:
        lo = -math.inf if lo is None else lo
        hi = math.inf if hi is None else hi
        return self.variations(lo) - self.variations(hi)

    def sign(self, x: Fraction) -> int:
        return _int_sign_at(self.poly, x)


def sturm_count(p: UniPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` or ``+-math.inf`` stand for unbounded ends.

    >>> sturm_count(UniPoly([0, -1, 0, 1]))
    3
    """
    if _as_uni(p).is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    return _Sturm(p).count(lo, hi)


@dataclass(frozen=True)
class Isolation:
    """Closed interval ``[lo, hi]`` containing exactly one root."""

    lo: Fraction
    hi: Fraction
    exact_root: Fraction | None = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")
        if self.exact_root is not None and not (self.lo == self.hi == self.exact_root):
            raise ValueError("exact isolation must be a degenerate interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def disjoint(self, other: "Isolation") -> bool:
        return self.hi < other.lo or other.hi < self.lo


def root_bound(p: list[int]) -> Fraction:
    """A power of two strictly above every root modulus (Cauchy bound)."""
    lc = abs(p[-1])
    cb = 1 + Fraction(max(abs(c) for c in p[:-1]), lc) if len(p) > 1 else Fraction(1)
    b = Fraction(1)
    while b <= cb:
        b *= 2
    return b


def isolate_real_roots(p: UniPoly) -> list[Isolation]:
    """Disjoint isolating intervals for the distinct real roots, left to right."""
    st = _Sturm(p)
    poly = st.poly
    if len(poly) == 1:
        return []
    bound = root_bound(poly)
    out: list[Isolation] = []

    def split(lo, hi, n):
        # invariant: lo and hi are not roots; n = number of roots in (lo, hi)
        if n == 0:
            return
        mid = (lo + hi) / 2
        if n == 1:
            out.append(Isolation(mid, mid, mid) if st.sign(mid) == 0 else Isolation(lo, hi))
            return
        if st.sign(mid) == 0:
            out.append(Isolation(mid, mid, mid))
            delta = (hi - lo) / 4
            while st.sign(mid - delta) == 0 or st.sign(mid + delta) == 0 or st.count(mid - delta, mid + delta) != 1:
                delta /= 2
            left = st.count(lo, mid - delta)
            split(lo, mid - delta, left)
            split(mid + delta, hi, n - 1 - left)
            return
        left = st.count(lo, mid)
        split(lo, mid, left)
        split(mid, hi, n - left)

    split(-bound, bound, st.count(-bound, bound))
    out.sort(key=lambda iso: iso.lo)
    return out


def refine_isolation(p: UniPoly | list[int], iso: Isolation, width) -> Isolation:
    """Bisect ``iso`` (an isolation for ``p``) until narrower than ``width``."""
    if iso.exact_root is not None:
        return iso
    ints = p.integer_coeffs() if isinstance(p, UniPoly) else p
    ints = _squarefree_int(ints)
    lo, hi = iso.lo, iso.hi
    slo = _int_sign_at(ints, lo)
    if slo == 0:
        return Isolation(lo, lo, lo)
    if _int_sign_at(ints, hi) == 0:
        return Isolation(hi, hi, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _int_sign_at(ints, mid)
        if s == 0:
            return Isolation(mid, mid, mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return Isolation(lo, hi)


def rational_root_in(p: UniPoly, iso: Isolation) -> Fraction | None:
    """The root isolated by ``iso`` if it is rational, else ``None``."""
    if iso.exact_root is not None:
        return iso.exact_root
    ints = _squarefree_int(p.integer_coeffs())
    lead = abs(ints[-1])
    # distinct rationals with denominators <= lead are >= 1/lead^2 apart
    fine = refine_isolation(ints, iso, Fraction(1, 2 * lead * lead + 1))
    if fine.exact_root is not None:
        return fine.exact_root
    cand = fine.midpoint.limit_denominator(lead)
    if fine.contains(cand) and _int_sign_at(ints, cand) == 0:
        return cand
    return None


def gcd_univariate(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    p, q = _as_uni(p), _as_uni(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero() or q.is_zero():
        return (p if q.is_zero() else q).monic()
    g = _int_gcd(p.integer_coeffs(), q.integer_coeffs())
    return UniPoly(g).monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    g = gcd_univariate(p, p.derivative()) if p.degree > 0 else UniPoly([1])
    return (p // g).monic()


def bareiss_determinant(matrix: Sequence[Sequence]) -> object:
    """Fraction-free determinant; entries must support exact division.

    Works over the integers, the rationals, and :class:`UniPoly`.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    one = m[0][0] * 0 + 1
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return m[0][0] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = m[i][k] * 0
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        return q
    if isinstance(a, UniPoly):
        q, r = divmod(a, _as_uni(b))
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        return q
    return a / b


def sylvester_matrix(p: Sequence, q: Sequence) -> list[list]:
    """Sylvester matrix of coefficient lists given highest degree first."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    zero = p[0] * 0
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(p) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(q) + [zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Determinant of the Sylvester matrix of ``p`` and ``q``.

    >>> sylvester_resultant(UniPoly([-1, 1]), UniPoly([1, 1]))
    Fraction(2, 1)
    """
    p, q = _as_uni(p), _as_uni(q)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with a zero polynomial")
    return Fraction(bareiss_determinant(sylvester_matrix(p.coeffs[::-1], q.coeffs[::-1])))


# --- witnesses and verdicts ---------------------------------------------------

@dataclass(frozen=True)
class RootOf:
    """A root of ``poly``; real and inside ``interval`` when one is given."""

    poly: UniPoly
    interval: Isolation | None = None

    def __str__(self):
        from polyfiber.parser import render

        body = render(self.poly.to_multipoly(), ["t"])
        if self.interval is None:
            return f"RootOf({body})"
        return f"RootOf({body}, [{self.interval.lo}, {self.interval.hi}])"


Coordinate = Union[Fraction, RootOf]


class Status(str, enum.Enum):
    ONLY_ZERO = "OnlyZero"
    NONZERO_WITNESS = "NonzeroWitness"
    INCONCLUSIVE = "Inconclusive"


class Field(str, enum.Enum):
    REAL = "Real"
    COMPLEX = "Complex"


@dataclass(frozen=True)
class ZeroSolutionVerdict:
    status: Status
    field: Field
    point: tuple[Coordinate, ...] | None = None
    reason: str | None = None

    @property
    def only_zero(self) -> bool:
        return self.status is Status.ONLY_ZERO


def _coordinate_is_zero(c: Coordinate) -> bool:
    if isinstance(c, RootOf):
        if c.poly(Fraction(0)) != 0:
            return False
        return c.interval is not None and c.interval.lo == c.interval.hi == 0
    return c == 0


def verify_witness(forms: Sequence[MultiPoly], point: Sequence[Coordinate], real: bool = True) -> bool:
    """Exactly check that ``point`` is a nonzero common zero of ``forms``."""
    point = list(point)
    if all(_coordinate_is_zero(c) for c in point):
        # a RootOf with root 0 elsewhere in its interval would still be zero
        return False
    algebraic = [i for i, c in enumerate(point) if isinstance(c, RootOf)]
    if not algebraic:
        return all(evaluate(f, point) == 0 for f in forms)
    if len(algebraic) > 1:
        raise ValueError("at most one algebraic coordinate is supported")
    k = algebraic[0]
    root = point[k]
    if root.poly.degree < 1:
        return False
    if real:
        if root.interval is None:
            return False
        iso = root.interval
        inside = sturm_count(root.poly, iso.lo, iso.hi) + (root.poly(iso.lo) == 0)
        if inside < 1:
            return False
        if all(_coordinate_is_zero(c) for i, c in enumerate(point) if i != k):
            # the point is nonzero only if the algebraic coordinate is
            if iso.contains(0) and root.poly(Fraction(0)) == 0:
                return False
    fixed = {i: c for i, c in enumerate(point) if i != k}
    for f in forms:
        u = UniPoly.from_multipoly(specialize(f, fixed), k)
        if u % root.poly:
            return False
    return True


def _binary_dehomogenize(F: MultiPoly) -> UniPoly:
    cs: dict[int, Fraction] = {}
    for (a, _b), c in F.terms.items():
        cs[a] = c
    if not cs:
        return UniPoly()
    return UniPoly([cs.get(k, 0) for k in range(max(cs) + 1)])


def _vanishes_at_infinity(F: MultiPoly) -> bool:
    # F(1, 0) == 0, i.e. Y divides F
    return all(b > 0 for (_a, b) in F.terms)


def _root_witness(G: UniPoly, real: bool) -> Coordinate | None:
    isos = isolate_real_roots(G)
    for iso in isos:
        r = rational_root_in(G, iso)
        if r is not None:
            return r
    if isos:
        return RootOf(squarefree_part(G), isos[0])
    if real:
        return None
    return RootOf(G.monic())


def _check_homogeneous(forms: Sequence[MultiPoly]):
    for f in forms:
        if not f.is_zero() and len({sum(e) for e in f.terms}) != 1:
            raise ValueError(f"form {f} is not homogeneous")


def binary_form_real_projective_zero(F: MultiPoly) -> ZeroSolutionVerdict:
    """Decide whether a binary form has a nonzero real zero."""
    if F.nvars != 2:
        raise ValueError("binary forms have two variables")
    _check_homogeneous([F])
    return _binary_system([F], real=True)


def _binary_system(forms: Sequence[MultiPoly], real: bool) -> ZeroSolutionVerdict:
    field = Field.REAL if real else Field.COMPLEX
    nonzero = [F for F in forms if not F.is_zero()]
    if not nonzero or all(_vanishes_at_infinity(F) for F in nonzero):
        return ZeroSolutionVerdict(Status.NONZERO_WITNESS, field, (Fraction(1), Fraction(0)))
    polys = [_binary_dehomogenize(F) for F in nonzero]
    if not real and len(polys) == 2 and polys[0].degree >= 0 and polys[1].degree >= 0:
        if sylvester_resultant(polys[0], polys[1]) != 0:
            return ZeroSolutionVerdict(Status.ONLY_ZERO, field)
    G = reduce(gcd_univariate, polys)
    if G.degree >= 1:
        root = _root_witness(G, real)
        if root is not None:
            return ZeroSolutionVerdict(Status.NONZERO_WITNESS, field, (root, Fraction(1)))
    return ZeroSolutionVerdict(Status.ONLY_ZERO, field)


def _project(f: MultiPoly, keep: Sequence[int]) -> MultiPoly:
    """Restrict to the coordinate subspace spanned by ``keep`` (others set to 0)."""
    terms = {}
    for e, c in f.terms.items():
        if all(k == 0 for i, k in enumerate(e) if i not in keep):
            terms[tuple(e[i] for i in keep)] = c
    return MultiPoly(len(keep), terms)


def _lift(point, keep, n):
    out = [Fraction(0)] * n
    for i, c in zip(keep, point):
        out[i] = c
    return tuple(out)


def _int_forms(forms):
    from polyfiber.polycore import scale_to_integers

    return [list(scale_to_integers(f).items()) for f in forms if not f.is_zero()]


def _int_eval(terms, point) -> int:
    total = 0
    for e, c in terms:
        t = c
        for v, k in zip(point, e):
            if k:
                t *= v**k
        total += t
    return total


def grid_points(n: int, max_norm: int = 8):
    """Primitive integer vectors up to sign, ordered by max-norm then lexicographically."""
    for m in range(1, max_norm + 1):
        for v in itertools.product(range(-m, m + 1), repeat=n):
            if max(abs(c) for c in v) != m:
                continue
            first = next(c for c in v if c)
            if first < 0:
                continue
            if reduce(math.gcd, v, 0) != 1:
                continue
            yield v


def _witness_search(forms: Sequence[MultiPoly], n: int, seed: int, budget: int) -> tuple | None:
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        return (Fraction(1),) + (Fraction(0),) * (n - 1)
    # coordinate planes: exact binary decisions
    for keep in itertools.combinations(range(n), 2):
        sub = [_project(f, keep) for f in nonzero]
        verdict = _binary_system(sub, real=True)
        if verdict.status is Status.NONZERO_WITNESS:
            return _lift(verdict.point, keep, n)
    # integer grid on the faces of the cube
    ints = _int_forms(nonzero)
    for count, v in enumerate(grid_points(n)):
        if count >= budget:
            break
        if all(_int_eval(t, v) == 0 for t in ints):
            return tuple(Fraction(c) for c in v)
    return _descent_witness(nonzero, n, seed)


def _descent_witness(forms, n, seed, starts: int = 12) -> tuple | None:
    from scipy.optimize import minimize

    rng = np.random.default_rng(seed)
    data = []
    for f in forms:
        exps = np.array(list(f.terms.keys()), dtype=float)
        coef = np.array([float(c) for c in f.terms.values()])
        scale = np.max(np.abs(coef))
        data.append((exps, coef / scale))

    def objective(x):
        x = x / np.linalg.norm(x)
        return sum(float(np.sum(c * np.prod(x**e, axis=1))) ** 2 for e, c in data)

    for _ in range(starts):
        x0 = rng.standard_normal(n)
        res = minimize(objective, x0, method="BFGS", options={"gtol": 1e-14, "maxiter": 500})
        if res.fun > 1e-12:
            continue
        x = res.x / np.max(np.abs(res.x))
        for den in (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 64, 100, 128, 1000):
            cand = tuple(Fraction(float(c)).limit_denominator(den) for c in x)
            if any(cand) and all(evaluate(f, cand) == 0 for f in forms):
                return cand
    return None


def _linear_kernel_vector(forms: Sequence[MultiPoly], n: int) -> tuple | None | bool:
    """For systems of linear forms: ``None`` if only the origin solves them, else a kernel vector.

    Returns ``False`` when some form is not linear.
    """
    rows = []
    for f in forms:
        if f.is_zero():
            continue
        if total_degree(f) != 1:
            return False
        rows.append([f.coefficient(tuple(int(i == k) for i in range(n))) for k in range(n)])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                k = rows[i][c]
                rows[i] = [a - k * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) == n:
        return None
    free = next(c for c in range(n) if c not in pivots)
    vec = [Fraction(0)] * n
    vec[free] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -rows[i][free]
    return tuple(vec)


def real_only_zero(sys, seed: int = 0, budget: int = 20000) -> ZeroSolutionVerdict:
    """Does the homogeneous system have only the trivial real solution?

    Exact for one or two variables.  With three or more variables the
    search can only produce a witness; otherwise the verdict is
    ``Inconclusive``.
    """
    forms = list(sys.forms)
    if not forms:
        raise ValueError("empty system")
    _check_homogeneous(forms)
    n = sys.nvars
    if n == 1:
        if all(f.is_zero() for f in forms):
            return ZeroSolutionVerdict(Status.NONZERO_WITNESS, Field.REAL, (Fraction(1),))
        return ZeroSolutionVerdict(Status.ONLY_ZERO, Field.REAL)
    if n == 2:
        return _binary_system(forms, real=True)
    linear = _linear_kernel_vector(forms, n)
    if linear is None:
        return ZeroSolutionVerdict(Status.ONLY_ZERO, Field.REAL)
    if linear is not False:
        return ZeroSolutionVerdict(Status.NONZERO_WITNESS, Field.REAL, linear)
    point = _witness_search(forms, n, seed, budget)
    if point is not None:
        return ZeroSolutionVerdict(Status.NONZERO_WITNESS, Field.REAL, point)
    return ZeroSolutionVerdict(
        Status.INCONCLUSIVE, Field.REAL,
        reason=f"no real witness found in {n} variables; exact decision needs two variables")


def complex_only_zero(sys) -> ZeroSolutionVerdict:
    """Does the homogeneous system have only the trivial complex solution?"""
    forms = list(sys.forms)
    if not forms:
        raise ValueError("empty system")
    _check_homogeneous(forms)
    n = sys.nvars
    if n == 1:
        if all(f.is_zero() for f in forms):
            return ZeroSolutionVerdict(Status.NONZERO_WITNESS, Field.COMPLEX, (Fraction(1),))
        return ZeroSolutionVerdict(Status.ONLY_ZERO, Field.COMPLEX)
    if n == 2:
        return _binary_system(forms, real=False)
    linear = _linear_kernel_vector(forms, n)
    if linear is None:
        return ZeroSolutionVerdict(Status.ONLY_ZERO, Field.COMPLEX)
    if linear is not False:
        return ZeroSolutionVerdict(Status.NONZERO_WITNESS, Field.COMPLEX, linear)
    return ZeroSolutionVerdict(
        Status.INCONCLUSIVE, Field.COMPLEX,
        reason=f"complex decision in {n} variables is not supported")
