"""Polynomial expressions and fixture files.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'

A fixture file holds ``key: value`` header lines followed by the expression,
which may span several lines.  ``#`` starts a comment.  Recognised keys are
``vars``, ``degree``, ``name``, ``candidate_points``, ``singular_lines``,
``hypothesis`` and ``expect``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .poly import MPoly

MAX_EXPONENT = 1000

NO_LINE_HYPOTHESIS = "no-line-of-mult-(d-1)"
FINITE_HYPOTHESIS = "finite-mult-(d-1)"
KNOWN_HYPOTHESES = (NO_LINE_HYPOTHESIS, FINITE_HYPOTHESIS)
EXPECT_KEYS = ("g_F", "g_F_plus", "g_F_times", "max_nilpotent_rank", "is_cone", "sebastiani_thom",
               "quasi_vertices")
HEADER_KEYS = ("vars", "degree", "name", "candidate_points", "singular_lines", "hypothesis", "expect")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1, source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


@dataclass(frozen=True)
class PolySource:
    variables: tuple[str, ...]
    expression: str
    degree: int | None = None
    first_line: int = 1

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for v in self.variables:
            if not _NAME_RE.fullmatch(v):
                raise ValueError(f"invalid variable name {v!r}")


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)")


@dataclass
class _Tok:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    line: int
    col: int


def _tokenize(text: str, first_line: int) -> list[_Tok]:
    toks = []
    for lineno, line in enumerate(text.split("\n"), start=first_line):
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(line, pos)
            col = pos + 1
            if m.group(1):
                toks.append(_Tok("int", m.group(1), lineno, col))
            elif m.group(2):
                toks.append(_Tok("name", m.group(2), lineno, col))
            else:
                ch = m.group(3)
                if ch not in "+-*/^()":
                    raise ParseError(f"unexpected character {ch!r}", lineno, col)
                toks.append(_Tok("op", ch, lineno, col))
            pos = m.end()
    last_line = first_line + text.count("\n")
    toks.append(_Tok("end", "", last_line, len(text.split("\n")[-1]) + 1))
    return toks


class _Parser:
    def __init__(self, src: PolySource):
        self.vars = {name: i for i, name in enumerate(src.variables)}
        self.n = len(src.variables)
        self.toks = _tokenize(src.expression, src.first_line)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def parse(self) -> MPoly:
        if self.peek().kind == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("int", "name") or tok.text == "(":
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected {tok.text!r}")
        return p

    def expr(self) -> MPoly:
        p = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MPoly:
        p = self.unary()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> MPoly:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("-", "+"):
            self.take()
            q = self.unary()
            return -q if tok.text == "-" else q
        return self.power()

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.peek()
            if tok.kind != "int":
                self.error("exponent must be a non-negative integer literal")
            self.take()
            e = int(tok.text)
            if e > MAX_EXPONENT:
                self.error(f"exponent {e} exceeds the limit {MAX_EXPONENT}", tok)
            if self.peek().kind == "op" and self.peek().text == "^":
                self.error("chained exponents are ambiguous; use parentheses")
            return base ** e
        return base

    def atom(self) -> MPoly:
        tok = self.take()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                den = self.peek()
                if den.kind != "int":
                    self.error("'/' is only allowed between integer literals")
                self.take()
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value = value / int(den.text)
            return MPoly.constant(self.n, value)
        if tok.kind == "name":
            if tok.text not in self.vars:
                self.error(f"undeclared variable {tok.text!r}", tok)
            return MPoly.variable(self.n, self.vars[tok.text])
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            close = self.peek()
            if not (close.kind == "op" and close.text == ")"):
                self.error("expected ')'")
            self.take()
            return p
        if tok.kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(src: PolySource) -> MPoly:
    p = _Parser(src).parse()
    if src.degree is not None:
        if p.is_zero() or not p.is_homogeneous(src.degree):
            raise ParseError(f"polynomial is not homogeneous of degree {src.degree}",
                             src.first_line, 1)
    return p


def parse(expression: str, variables: Sequence[str] | str, degree: int | None = None) -> MPoly:
    """Shorthand: ``parse("x0*x1^2", "x0 x1")``."""
    if isinstance(variables, str):
        variables = variables.split()
    return parse_polynomial(PolySource(tuple(variables), expression, degree))


def _format_coeff(c: Fraction) -> str:
    return str(c)


def render_polynomial(p: MPoly, variables: Sequence[str]) -> str:
    if len(variables) != p.nvars:
        raise ValueError(f"expected {p.nvars} variable names, got {len(variables)}")
    if p.is_zero():
        return "0"
    parts = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        factors = []
        for name, e in zip(variables, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# -- fixtures ---------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    """A polynomial plus the metadata that gates conditional checks."""

    name: str
    variables: tuple[str, ...]
    polynomial: MPoly
    degree: int | None = None
    candidate_points: tuple[tuple[Fraction, ...], ...] = ()
    singular_lines: tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...] = ()
    hypotheses: frozenset = frozenset()
    expect: dict = field(default_factory=dict)
    path: str | None = None

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def has(self, hypothesis: str) -> bool:
        return hypothesis in self.hypotheses

    def render(self) -> str:
        """Canonical fixture text (header lines, then the expression)."""
        lines = [f"name: {self.name}", "vars: " + " ".join(self.variables)]
        if self.degree is not None:
            lines.append(f"degree: {self.degree}")
        if self.candidate_points:
            lines.append("candidate_points: " + ", ".join(_fmt_point(p) for p in self.candidate_points))
        if self.singular_lines:
            lines.append("singular_lines: " + ", ".join(
                f"{_fmt_point(a)}-{_fmt_point(b)}" for a, b in self.singular_lines))
        if self.hypotheses:
            lines.append("hypothesis: " + " ".join(sorted(self.hypotheses)))
        if self.expect:
            lines.append("expect: " + " ".join(f"{k}={_fmt_expect(v)}" for k, v in sorted(self.expect.items())))
        lines.append(render_polynomial(self.polynomial, self.variables))
        return "\n".join(lines) + "\n"


def _fmt_point(p) -> str:
    return "(" + ":".join(str(v) for v in p) + ")"


def _fmt_expect(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ";".join(_fmt_point(p) for p in v) if v else "none"
    return str(v)


_POINT_RE = re.compile(r"\(([^()]*)\)")


def _parse_point(text: str, n: int, line: int, col: int) -> tuple[Fraction, ...]:
    parts = [s.strip() for s in text.split(":")]
    if len(parts) != n:
        raise ParseError(f"point ({text}) has {len(parts)} coordinates, expected {n}", line, col)
    try:
        coords = tuple(Fraction(s) for s in parts)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coordinate in point ({text})", line, col) from None
    if not any(coords):
        raise ParseError("the zero vector is not a projective point", line, col)
    return coords


def _parse_points(value: str, n: int, line: int, col0: int) -> list[tuple[Fraction, ...]]:
    pts = []
    rest = value
    for m in _POINT_RE.finditer(value):
        pts.append(_parse_point(m.group(1), n, line, col0 + m.start()))
    leftover = _POINT_RE.sub("", rest).replace(",", "").replace("-", "").strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r} in point list", line, col0)
    return pts


def _parse_lines(value: str, n: int, line: int, col0: int):
    out = []
    for chunk in value.split(","):
        if not chunk.strip():
            continue
        pts = [_parse_point(m.group(1), n, line, col0 + m.start()) for m in _POINT_RE.finditer(chunk)]
        if len(pts) != 2 or "-" not in _POINT_RE.sub("", chunk):
            raise ParseError(f"line must be written (p)-(q), got {chunk.strip()!r}", line, col0)
        out.append((pts[0], pts[1]))
    return out


def _parse_expect(value: str, n: int, line: int, col0: int) -> dict:
    out = {}
    for item in value.split():
        if "=" not in item:
            raise ParseError(f"expectation {item!r} must be key=value", line, col0)
        k, v = item.split("=", 1)
        if k not in EXPECT_KEYS:
            raise ParseError(f"unknown expectation key {k!r}", line, col0)
        if k in ("is_cone", "sebastiani_thom"):
            if v not in ("true", "false"):
                raise ParseError(f"{k} expects true or false", line, col0)
            out[k] = v == "true"
        elif k == "quasi_vertices":
            out[k] = tuple(_parse_points(v.replace(";", ","), n, line, col0)) if v != "none" else ()
        else:
            try:
                out[k] = int(v)
            except ValueError:
                raise ParseError(f"{k} expects an integer", line, col0) from None
    return out


def parse_fixture(text: str, name: str = "fixture", path: str | None = None) -> Fixture:
    header: dict[str, tuple[str, int, int]] = {}
    expr_lines: list[str] = []
    first_expr_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        # keep column positions stable for error messages
        if first_expr_line is None:
            m = re.match(r"\s*([A-Za-z_]+)\s*:(.*)$", line)
            if m:
                key = m.group(1)
                if key not in HEADER_KEYS:
                    raise ParseError(f"unknown header key {key!r}", lineno, m.start(1) + 1, path)
                if key in header:
                    raise ParseError(f"duplicate header key {key!r}", lineno, m.start(1) + 1, path)
                header[key] = (m.group(2).strip(), lineno, m.start(2) + 1)
                continue
            if not line.strip():
                continue
            first_expr_line = lineno
        expr_lines.append(line)
    try:
        if "vars" not in header:
            raise ParseError("missing 'vars:' header", 1, 1)
        variables = tuple(header["vars"][0].split())
        if not variables:
            raise ParseError("'vars:' lists no variables", header["vars"][1], header["vars"][2])
        if len(set(variables)) != len(variables):
            raise ParseError("duplicate variable names", header["vars"][1], header["vars"][2])
        for v in variables:
            if not _NAME_RE.fullmatch(v):
                raise ParseError(f"invalid variable name {v!r}", header["vars"][1], header["vars"][2])
        n = len(variables)
        degree = None
        if "degree" in header:
            val, ln, col = header["degree"]
            if not val.isdigit() or int(val) < 1:
                raise ParseError("degree must be a positive integer", ln, col)
            degree = int(val)
        if first_expr_line is None:
            raise ParseError("fixture has no polynomial expression", len(text.splitlines()) or 1, 1)
        poly = parse_polynomial(PolySource(variables, "\n".join(expr_lines), degree, first_expr_line))
        cands: list = []
        if "candidate_points" in header:
            cands = _parse_points(*header["candidate_points"][:1], n, *header["candidate_points"][1:])
        lines: list = []
        if "singular_lines" in header:
            lines = _parse_lines(header["singular_lines"][0], n, *header["singular_lines"][1:])
        hyps = frozenset()
        if "hypothesis" in header:
            val, ln, col = header["hypothesis"]
            hyps = frozenset(val.replace(",", " ").split())
            for h in hyps:
                if h not in KNOWN_HYPOTHESES:
                    raise ParseError(f"unknown hypothesis {h!r}", ln, col)
        expect = {}
        if "expect" in header:
            expect = _parse_expect(header["expect"][0], n, *header["expect"][1:])
    except ParseError as exc:
        if exc.source is None and path is not None:
            raise ParseError(exc.message, exc.line, exc.column, path) from None
        raise
    fname = header["name"][0] if "name" in header else name
    return Fixture(fname, variables, poly, degree, tuple(cands), tuple(lines), hyps, expect, path)


def load_fixture(path: str | Path) -> Fixture:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_fixture(text, name=path.stem, path=str(path))
