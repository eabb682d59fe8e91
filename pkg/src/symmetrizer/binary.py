"""Univariate rational polynomials as coefficient lists, lowest degree first.

Used for dehomogenized binary forms when solving for rank-one members of a
pencil or quasi-vertices along a line.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from .poly import as_fraction


def trim(f: Sequence) -> list[Fraction]:
    f = [as_fraction(c) for c in f]
    while f and not f[-1]:
        f.pop()
    return f


def degree(f: Sequence) -> int:
    return len(trim(f)) - 1


def monic(f: Sequence) -> list[Fraction]:
    f = trim(f)
    if not f:
        return f
    lead = f[-1]
    return [c / lead for c in f]


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] -= c * bc
        r = trim(r)
    return trim(q), r


def gcd_poly(a: Sequence, b: Sequence) -> list[Fraction]:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def gcd_many(polys: Sequence[Sequence]) -> list[Fraction]:
    g: list[Fraction] = []
    for p in polys:
        g = gcd_poly(g, p) if g else monic(p)
        if degree(g) == 0:
            break
    return g


def evaluate(f: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(trim(f)):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(f: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Distinct rational roots of ``f`` and the cofactor without them.

    The cofactor has no rational roots; its degree counts the remaining
    roots (with multiplicity) over the algebraic closure.
    """
    f = trim(f)
    if not f:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    # factor out x
    while len(f) > 1 and not f[0]:
        f = f[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(f) <= 1:
        return sorted(roots), monic(f) if f else f
    den = lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    cands = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        if evaluate(f, r) == 0:
            roots.append(r)
            while evaluate(f, r) == 0 and degree(f) > 0:
                f = divmod_poly(f, [-r, 1])[0]
    return sorted(roots), monic(f)


def render(f: Sequence, var: str = "s") -> str:
    f = trim(f)
    if not f:
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
