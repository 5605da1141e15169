"""Polynomial expression parser, problem-file reader, and canonical renderer.

Grammar (whitespace-insensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := ('-' | '+') factor | base ('^' uint)?
    base     := rational | var | '(' expr ')'
    rational := uint ('/' uint)?
    var      := 'x' | 'y' | 'z' | 'w' | 'x' uint

``x, y, z, w`` are aliases for ``x1 .. x4``.  Extra aliases can be passed
to :func:`parse_poly`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from polyfiber.polycore import MultiPoly, PolyMap, identity_matrix

_SHORT_NAMES = ("x", "y", "z", "w")


class ParseError(ValueError):
    """Syntax or semantic error at a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


class ProblemFileError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))", re.S)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "" and m.end() == len(text):
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                tokens.append(("bad", ch, start))
            else:
                tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def variable_index(name: str, nvars: int, aliases: Mapping[str, int] | None = None) -> int | None:
    if aliases and name in aliases:
        idx = aliases[name]
    elif name in _SHORT_NAMES:
        idx = _SHORT_NAMES.index(name)
    else:
        m = re.fullmatch(r"x(\d+)", name)
        if not m or int(m.group(1)) < 1:
            return None
        idx = int(m.group(1)) - 1
    return idx if 0 <= idx < nvars else None


class _Parser:
    def __init__(self, text, nvars, aliases, line_offset=0, col_offset=0):
        self.text = text
        self.nvars = nvars
        self.aliases = aliases
        self.tokens = _tokenize(text)
        self.i = 0
        self.line_offset = line_offset
        self.col_offset = col_offset

    def error(self, message, offset):
        line, col = _line_col(self.text, offset)
        if line == 1:
            col += self.col_offset
        raise ParseError(message, line + self.line_offset, col)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def describe(self, tok):
        return "end of input" if tok[0] == "end" else repr(tok[1])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression", 0)
        for kind, val, off in self.tokens:
            if kind == "bad":
                self.error(f"unexpected character {val!r}", off)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.error(f"unexpected {self.describe(tok)}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        value = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer literal", tok[2])
            value = value ** int(tok[1])
        return value

    def base(self):
        tok = self.take()
        kind, val, off = tok
        if kind == "int":
            num = int(val)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "int":
                    self.error("denominator must be an unsigned integer literal", den_tok[2])
                den = int(den_tok[1])
                if den == 0:
                    self.error("division by zero", den_tok[2])
                return MultiPoly.constant(self.nvars, Fraction(num, den))
            return MultiPoly.constant(self.nvars, num)
        if kind == "name":
            idx = variable_index(val, self.nvars, self.aliases)
            if idx is None:
                self.error(f"unknown variable {val!r}", off)
            return MultiPoly.variable(self.nvars, idx)
        if kind == "(":
            value = self.expr()
            close = self.take()
            if close[0] != ")":
                self.error(f"expected ')' but found {self.describe(close)}", close[2])
            return value
        self.error(f"unexpected {self.describe(tok)}", off)


def parse_poly(text: str, nvars: int, aliases: Mapping[str, int] | None = None) -> MultiPoly:
    """Parse ``text`` into an expanded :class:`MultiPoly`.

    ``aliases`` maps extra variable names to 0-based indices.

    >>> str(parse_poly("(x + 1)^2", 1))
    'x^2 + 2*x + 1'
    """
    return _Parser(text, nvars, aliases).parse()


def variable_names(nvars: int) -> list[str]:
    if nvars <= len(_SHORT_NAMES):
        return list(_SHORT_NAMES[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


def render_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: MultiPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text in descending graded-lex order; parses back to ``p``."""
    if p.is_zero():
        return "0"
    names = list(names) if names is not None else variable_names(p.nvars)
    pieces = []
    for exps, c in p.sorted_terms():
        factors = []
        for name, k in zip(names, exps):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = render_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = render_rational(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append("-" + body if c < 0 else body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


@dataclass(frozen=True)
class ProblemSpec:
    """Everything needed to run the certification pipelines on one map."""

    nvars: int
    map: PolyMap
    gmatrix: tuple[tuple[MultiPoly, ...], ...] = None
    alpha: tuple[int, ...] = None
    target: tuple[Fraction, ...] = None
    assume_det_nonvanishing: bool = False
    defaults_applied: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.nvars
        defaults = list(self.defaults_applied)
        if self.map.nvars != n:
            raise ValueError("map variable count differs from nvars")
        if self.gmatrix is None:
            object.__setattr__(self, "gmatrix", identity_matrix(n))
            defaults.append("gmatrix")
        else:
            g = tuple(tuple(row) for row in self.gmatrix)
            if len(g) != n or any(len(row) != n for row in g):
                raise ValueError(f"gmatrix must be {n}x{n}")
            if any(e.nvars != n for row in g for e in row):
                raise ValueError("gmatrix entries must share nvars with the map")
            object.__setattr__(self, "gmatrix", g)
        if self.alpha is None:
            object.__setattr__(self, "alpha", (1,) * n)
            defaults.append("alpha")
        else:
            alpha = tuple(int(a) for a in self.alpha)
            if len(alpha) != n:
                raise ValueError(f"alpha must have {n} entries")
            if any(a < 1 for a in alpha):
                raise ValueError("alpha entries must be >= 1")
            object.__setattr__(self, "alpha", alpha)
        if self.target is None:
            object.__setattr__(self, "target", (Fraction(0),) * n)
            defaults.append("target")
        else:
            target = tuple(Fraction(a) for a in self.target)
            if len(target) != n:
                raise ValueError(f"target must have {n} entries")
            object.__setattr__(self, "target", target)
        object.__setattr__(self, "defaults_applied", tuple(dict.fromkeys(defaults)))

    def with_target(self, target) -> "ProblemSpec":
        return ProblemSpec(
            self.nvars, self.map, self.gmatrix, self.alpha, tuple(target),
            self.assume_det_nonvanishing,
            tuple(d for d in self.defaults_applied if d != "target"),
        )


_KEY_RE = re.compile(r"^(n|alpha|target|assume_det_nonvanishing|p(\d+)|g(\d+)(?:_(\d+))?)$")


def _parse_int_list(value: str, key: str, lineno: int) -> list[int]:
    try:
        return [int(v) for v in value.split(",")]
    except ValueError:
        raise ProblemFileError(f"{key} must be a comma-separated list of integers", lineno, 1) from None


def parse_problem_file(text: str) -> ProblemSpec:
    """Read the line-oriented ``key = value`` problem format.

    Keys: ``n``, ``p<k>`` (1-based), optional ``g<i><j>`` (or ``g<i>_<j>``),
    ``alpha``, ``target``, ``assume_det_nonvanishing``; ``#`` starts a comment.
    """
    entries: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise ProblemFileError("expected 'key = value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        key, value = line.split("=", 1)
        key = key.strip()
        if not _KEY_RE.match(key):
            raise ProblemFileError(f"unknown key {key!r}", lineno, raw.index(key) + 1)
        if key in entries:
            raise ProblemFileError(f"duplicate key {key!r}", lineno, raw.index(key) + 1)
        value_col = line.index("=") + 1
        value_col += len(value) - len(value.lstrip())
        entries[key] = (value.strip(), lineno, value_col)

    if "n" not in entries:
        raise ProblemFileError("missing required key 'n'", 1, 1)
    nval, nline, _ = entries.pop("n")
    try:
        n = int(nval)
    except ValueError:
        raise ProblemFileError("n must be a positive integer", nline, 1) from None
    if n < 1:
        raise ProblemFileError("n must be a positive integer", nline, 1)

    def expr(key):
        value, lineno, col = entries[key]
        return _Parser(value, n, None, line_offset=lineno - 1, col_offset=col).parse()

    comps: dict[int, MultiPoly] = {}
    gentries: dict[tuple[int, int], MultiPoly] = {}
    for key in list(entries):
        m = _KEY_RE.match(key)
        if m.group(2) is not None:
            k = int(m.group(2))
            if not 1 <= k <= n:
                raise ProblemFileError(f"component index {k} outside 1..{n}", entries[key][1], 1)
            comps[k - 1] = expr(key)
        elif m.group(3) is not None:
            if m.group(4) is not None:
                i, j = int(m.group(3)), int(m.group(4))
            else:
                digits = m.group(3)
                if len(digits) != 2:
                    raise ProblemFileError(
                        f"ambiguous matrix key {key!r}; use g<i>_<j>", entries[key][1], 1)
                i, j = int(digits[0]), int(digits[1])
            if not (1 <= i <= n and 1 <= j <= n):
                raise ProblemFileError(f"matrix index ({i},{j}) outside 1..{n}", entries[key][1], 1)
            if (i - 1, j - 1) in gentries:
                raise ProblemFileError(f"duplicate matrix entry ({i},{j})", entries[key][1], 1)
            gentries[(i - 1, j - 1)] = expr(key)

    if len(comps) != n:
        missing = [f"p{k + 1}" for k in range(n) if k not in comps]
        raise ProblemFileError(f"expected {n} components, missing {', '.join(missing)}", nline, 1)

    gmatrix = None
    if gentries:
        if len(gentries) != n * n:
            missing = [f"g{i + 1}{j + 1}" for i in range(n) for j in range(n) if (i, j) not in gentries]
            raise ProblemFileError(
                f"malformed matrix block: missing {', '.join(missing)}", min(v[1] for k, v in entries.items() if k.startswith("g")), 1)
        gmatrix = tuple(tuple(gentries[(i, j)] for j in range(n)) for i in range(n))

    alpha = None
    if "alpha" in entries:
        value, lineno, _ = entries["alpha"]
        alpha = _parse_int_list(value, "alpha", lineno)
        if len(alpha) != n:
            raise ProblemFileError(f"alpha has {len(alpha)} entries, expected {n}", lineno, 1)
        if any(a < 1 for a in alpha):
            raise ProblemFileError("alpha entries must be positive", lineno, 1)

    target = None
    if "target" in entries:
        value, lineno, _ = entries["target"]
        try:
            target = [Fraction(v.strip()) for v in value.split(",")]
        except (ValueError, ZeroDivisionError):
            raise ProblemFileError("target must be a comma-separated list of rationals", lineno, 1) from None
        if len(target) != n:
            raise ProblemFileError(f"target has {len(target)} entries, expected {n}", lineno, 1)

    assume = False
    if "assume_det_nonvanishing" in entries:
        value, lineno, _ = entries["assume_det_nonvanishing"]
        if value.lower() not in ("true", "false"):
            raise ProblemFileError("assume_det_nonvanishing must be true or false", lineno, 1)
        assume = value.lower() == "true"

    return ProblemSpec(
        nvars=n,
        map=PolyMap(comps[k] for k in range(n)),
        gmatrix=gmatrix,
        alpha=alpha,
        target=target,
        assume_det_nonvanishing=assume,
    )


def format_problem(spec: ProblemSpec, comment: str | None = None) -> str:
    """Write ``spec`` in the problem-file format (omitting defaulted keys)."""
    n = spec.nvars
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n = {n}")
    for k, p in enumerate(spec.map, start=1):
        lines.append(f"p{k} = {render(p)}")
    if "gmatrix" not in spec.defaults_applied:
        sep = "" if n < 10 else "_"
        for i in range(n):
            for j in range(n):
                lines.append(f"g{i + 1}{sep}{j + 1} = {render(spec.gmatrix[i][j])}")
    if "alpha" not in spec.defaults_applied:
        lines.append("alpha = " + ",".join(str(a) for a in spec.alpha))
    if "target" not in spec.defaults_applied:
        lines.append("target = " + ",".join(render_rational(a) for a in spec.target))
    if spec.assume_det_nonvanishing:
        lines.append("assume_det_nonvanishing = true")
    return "\n".join(lines) + "\n"
