"""Sparse multivariate polynomials over the rationals.

An :class:`MPoly` maps exponent tuples to nonzero :class:`fractions.Fraction`
coefficients.  Values are immutable and hashable, so they can be cached and
shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple  # tuple[int, ...] of length nvars


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, graded-lex descending.

    ``x0`` is the largest variable, so for two variables and degree 2 the
    order is ``x0^2, x0*x1, x1^2``.
    """
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    # combinations_with_replacement is already lex-descending on exponents
    return out


def glex_key(mono: Monomial):
    """Sort key putting monomials in graded-lex *descending* order."""
    return (-sum(mono), tuple(-e for e in mono))


class MPoly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        self.nvars = nvars
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: glex_key(kv[0]))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self._terms}
        if len(degs) > 1:
            return False
        if degree is None or not degs:
            return True
        return degs == {degree}

    def coefficient_vector(self, monomials: Sequence[Monomial]) -> list[Fraction]:
        return [self._terms.get(m, Fraction(0)) for m in monomials]

    def variables_used(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "MPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "MPoly":
        c = as_fraction(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MPoly._raw(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MPoly.constant(self.nvars, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .parser import render_polynomial

        names = [f"x{i}" for i in range(self.nvars)]
        return f"MPoly({render_polynomial(self, names)!r}, nvars={self.nvars})"

    # -- calculus and evaluation ------------------------------------------
    def diff(self, i: int) -> "MPoly":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = c * e
        return MPoly._raw(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [as_fraction(v) for v in point]
        powers: dict = {}
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = pt[i] ** e
                    term *= powers[key]
                    if not term:
                        break
            total += term
        return total

    def substitute_linear(self, M) -> "MPoly":
        """Compose with a linear map given by rows of images.

        ``M`` has one row per *new* variable and ``self.nvars`` columns; row
        ``r`` is the image of the new basis vector ``y_r`` in the old
        coordinates, so ``x_j = sum_r M[r][j] * y_r``.
        """
        rows = _rows_of(M)
        if not rows:
            raise ValueError("substitution needs at least one new variable")
        if any(len(r) != self.nvars for r in rows):
            raise ValueError(f"substitution matrix must have {self.nvars} columns")
        k = len(rows)
        forms = [MPoly.linear_form([rows[r][j] for r in range(k)]) for j in range(self.nvars)]
        cache: dict = {}

        def power(j, e):
            key = (j, e)
            if key not in cache:
                cache[key] = forms[j] ** e
            return cache[key]

        out = MPoly.zero(k)
        for m, c in self._terms.items():
            term = MPoly.constant(k, c)
            for j, e in enumerate(m):
                if e:
                    term = term * power(j, e)
                    if not term:
                        break
            out = out + term
        return out


def _rows_of(M) -> list[list[Fraction]]:
    rows = getattr(M, "rows", M)
    return [[as_fraction(v) for v in r] for r in rows]


def poly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: MPoly, i: int) -> MPoly:
    return p.diff(i)


def evaluate(p: MPoly, point: Sequence) -> Fraction:
    return p.evaluate(point)


def substitute_linear(p: MPoly, M) -> MPoly:
    return p.substitute_linear(M)


def directional_derivative(p: MPoly, direction: Sequence) -> MPoly:
    """``sum_i direction[i] * dp/dx_i``."""
    out = MPoly.zero(p.nvars)
    for i, v in enumerate(direction):
        v = as_fraction(v)
        if v:
            out = out + p.diff(i).scale(v)
    return out


def partials_of_order(p: MPoly, k: int) -> dict[tuple, MPoly]:
    """All order-``k`` partial derivatives keyed by sorted variable multiset."""
    layer = {(): p}
    for _ in range(k):
        nxt = {}
        for key, q in layer.items():
            start = key[-1] if key else 0
            for i in range(start, p.nvars):
                nxt[key + (i,)] = q.diff(i)
        layer = nxt
    return layer


def homogeneous_degree(p: MPoly) -> int:
    """Degree of a nonzero homogeneous polynomial, else ``ValueError``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    if not p.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    return p.degree


def sum_polys(polys: Iterable[MPoly], nvars: int) -> MPoly:
    out = MPoly.zero(nvars)
    for q in polys:
        out = out + q
    return out
