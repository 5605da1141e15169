"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` stores a map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Values are immutable; every
operation returns a new polynomial.  Variable indices are 0-based.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class _NegInfinity:
    """Degree of the zero polynomial.

    Compares below every integer, absorbs addition and multiplication by
    positive integers.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INFINITY"

    def __str__(self):
        return "-inf"

    def __reduce__(self):
        return (_NegInfinity, ())

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, k):
        if isinstance(k, int) and k > 0:
            return self
        raise ValueError("NEG_INFINITY can only be scaled by a positive integer")

    __rmul__ = __mul__

    def __hash__(self):
        return hash("NEG_INFINITY")


NEG_INFINITY = _NegInfinity()
Degree = Union[int, _NegInfinity]


def is_odd_degree(d: Degree) -> bool:
    return isinstance(d, int) and d % 2 == 1


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Polynomial in ``nvars`` variables over the rationals.

    >>> x, y = MultiPoly.variables(2)
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has length != {nvars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = Fraction(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical (no zeros, tuples of right length)
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def variables(cls, nvars: int) -> tuple["MultiPoly", ...]:
        return tuple(cls.variable(nvars, i) for i in range(nvars))

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Scalar = 1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c})

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, *point):
        return evaluate(self, point)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        from polyfiber.parser import render

        return render(self)


def _check_same(p: MultiPoly, q: MultiPoly):
    if p.nvars != q.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {q.nvars}")


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same(p, q)
    return p + q


def multiply(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same(p, q)
    return p * q


def power(p: MultiPoly, k: int) -> MultiPoly:
    return p**k


def total_degree(p: MultiPoly) -> Degree:
    if p.is_zero():
        return NEG_INFINITY
    return max(sum(e) for e in p._terms)


def degree_in(p: MultiPoly, i: int) -> Degree:
    if p.is_zero():
        return NEG_INFINITY
    return max(e[i] for e in p._terms)


def leading_form(p: MultiPoly) -> MultiPoly:
    """Sum of the terms of maximal total degree."""
    d = total_degree(p)
    return MultiPoly._raw(p.nvars, {e: c for e, c in p._terms.items() if sum(e) == d})


def is_homogeneous(p: MultiPoly, degree: Degree | None = None) -> bool:
    if p.is_zero():
        return degree is None or degree is NEG_INFINITY
    sums = {sum(e) for e in p._terms}
    if len(sums) != 1:
        return False
    return degree is None or sums == {degree}


def partial_derivative(p: MultiPoly, i: int) -> MultiPoly:
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p._terms.items():
        if e[i]:
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[ne] = c * e[i]
    return MultiPoly._raw(p.nvars, out)


def substitute(p: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    """Compose ``p(images[0], ..., images[n-1])``."""
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if not images:
        raise ValueError("no images")
    m = images[0].nvars
    if any(q.nvars != m for q in images):
        raise ValueError("images must share a variable count")
    cache: dict[tuple[int, int], MultiPoly] = {}

    def pw(i, k):
        key = (i, k)
        if key not in cache:
            if k == 0:
                cache[key] = MultiPoly.constant(m, 1)
            elif k == 1:
                cache[key] = images[i]
            else:
                half = pw(i, k // 2)
                sq = half * half
                cache[key] = sq * images[i] if k % 2 else sq
        return cache[key]

    out = MultiPoly.zero(m)
    for e, c in p._terms.items():
        t = MultiPoly.constant(m, c)
        for i, k in enumerate(e):
            if k:
                t = t * pw(i, k)
        out = out + t
    return out


def evaluate(p: MultiPoly, point: Sequence[Scalar]) -> Fraction:
    if len(point) != p.nvars:
        raise ValueError(f"point has length {len(point)}, expected {p.nvars}")
    point = [Fraction(v) for v in point]
    total = Fraction(0)
    for e, c in p._terms.items():
        t = c
        for v, k in zip(point, e):
            if k:
                t *= v**k
        total += t
    return total


def specialize(p: MultiPoly, values: Mapping[int, Scalar]) -> MultiPoly:
    """Fix the variables in ``values``; the variable count is unchanged."""
    out: dict = {}
    for e, c in p._terms.items():
        ne = list(e)
        for i, v in values.items():
            if ne[i]:
                c = c * Fraction(v) ** ne[i]
                ne[i] = 0
        if c:
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
    return MultiPoly._raw(p.nvars, {e: c for e, c in out.items() if c})


def scale_to_integers(p: MultiPoly) -> dict[tuple[int, ...], int]:
    """Integer coefficients of ``L * p`` for the least positive ``L`` clearing denominators."""
    from math import lcm

    den = 1
    for c in p._terms.values():
        den = lcm(den, c.denominator)
    return {e: int(c * den) for e, c in p._terms.items()}


class PolyMap:
    """A polynomial map ``(p_1, ..., p_n)`` from n-space to itself."""

    __slots__ = ("nvars", "components")

    def __init__(self, components: Iterable[MultiPoly]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a polynomial map needs at least one component")
        n = comps[0].nvars
        if any(c.nvars != n for c in comps):
            raise ValueError("components must share a variable count")
        if len(comps) != n:
            raise ValueError(f"map is not square: {len(comps)} components in {n} variables")
        self.nvars = n
        self.components = comps

    def __len__(self):
        return self.nvars

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, j):
        return self.components[j]

    def __eq__(self, other):
        return isinstance(other, PolyMap) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __call__(self, *point):
        return tuple(evaluate(p, point) for p in self.components)

    def __repr__(self):
        return "PolyMap(" + ", ".join(str(p) for p in self.components) + ")"

    def degrees(self) -> tuple[Degree, ...]:
        return tuple(total_degree(p) for p in self.components)

    def leading_forms(self) -> tuple[MultiPoly, ...]:
        return tuple(leading_form(p) for p in self.components)


def identity_matrix(nvars: int) -> tuple[tuple[MultiPoly, ...], ...]:
    return tuple(
        tuple(MultiPoly.constant(nvars, 1 if i == j else 0) for j in range(nvars))
        for i in range(nvars)
    )


def jacobian_matrix(f: PolyMap) -> tuple[tuple[MultiPoly, ...], ...]:
    """Entry ``[i][j]`` is the derivative of component j in variable i."""
    n = f.nvars
    return tuple(tuple(partial_derivative(f[j], i) for j in range(n)) for i in range(n))


def determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant by cofactor expansion with memoized minors."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    nv = matrix[0][0].nvars
    memo: dict[tuple[int, ...], MultiPoly] = {}

    # minor on rows k..n-1 and the given columns, expanded along row k
    def minor(cols: tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.constant(nv, 1)
        if cols in memo:
            return memo[cols]
        k = n - len(cols)
        acc = MultiPoly.zero(nv)
        for pos, c in enumerate(cols):
            entry = matrix[k][c]
            if entry.is_zero():
                continue
            term = entry * minor(cols[:pos] + cols[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def jacobian_determinant(f: PolyMap) -> MultiPoly:
    return determinant(jacobian_matrix(f))


def linear_substitution(matrix: Sequence[Sequence[Scalar]]) -> list[MultiPoly]:
    """Images ``X_j = sum_i a_ij U_i`` for a square rational matrix ``a``."""
    n = len(matrix)
    us = MultiPoly.variables(n)
    return [sum((us[i] * Fraction(matrix[i][j]) for i in range(n)), MultiPoly.zero(n)) for j in range(n)]


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree at most ``degree``."""
    for exps in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exps) <= degree:
            yield exps
