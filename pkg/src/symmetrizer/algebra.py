"""Symmetrizer algebras of homogeneous forms.

A matrix ``A`` is a symmetrizer of ``P`` when ``H_P @ A`` is a symmetric
polynomial matrix, ``H_P`` being the Hessian.  The symmetrizers form a
linear space ``g_F``; for non-cones it is a commutative unital matrix algebra
and its nilpotent elements form the radical of the trace form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial
from typing import Sequence

from . import binary
from .linalg import (
    QMatrix,
    Subspace,
    linear_combination,
    matrices_of,
    nilpotency_index,
    nullspace,
    rank,
    span_of_matrices,
    trace_gram,
)
from .poly import MPoly, as_fraction, monomials_of_degree

DEFAULT_SEED = 1729


class ConeError(ValueError):
    """Raised when an operation needs a hypersurface that is not a cone."""


class CertificationError(RuntimeError):
    """A runtime certificate failed; some precondition must have been violated."""


def check_form(P: MPoly, min_degree: int = 3, min_vars: int = 3) -> int:
    """Validate the standing assumptions and return the degree."""
    if P.is_zero() or not P.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous polynomial")
    d = P.degree
    if d < min_degree:
        raise ValueError(f"degree {d} < {min_degree}")
    if P.nvars < min_vars:
        raise ValueError(f"{P.nvars} variables < {min_vars}")
    return d


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[MPoly, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> MPoly:
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i + 1, n))

    def times_constant(self, A: QMatrix) -> "PolyMatrix":
        n = self.size
        if A.shape != (n, n):
            raise ValueError("size mismatch")
        nv = self.entries[0][0].nvars
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = MPoly.zero(nv)
                for k in range(n):
                    if A[k, j]:
                        acc = acc + self.entries[i][k].scale(A[k, j])
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(tuple(rows))


def hessian_matrix(P: MPoly) -> PolyMatrix:
    check_form(P)
    n = P.nvars
    first = [P.diff(i) for i in range(n)]
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = first[i].diff(j)
    return PolyMatrix(tuple(tuple(r) for r in rows))


def jacobian_span(P: MPoly) -> tuple[int, Subspace]:
    """Rank and canonical row space of the partials in degree-(d-1) coordinates."""
    d = check_form(P)
    monos = monomials_of_degree(P.nvars, d - 1)
    rows = [P.diff(i).coefficient_vector(monos) for i in range(P.nvars)]
    space = Subspace.span(rows, len(monos))
    return space.dim, space


def is_cone(P: MPoly) -> bool:
    return jacobian_span(P)[0] < P.nvars


def symmetrizer_system(P: MPoly) -> list[list[Fraction]]:
    """Coefficient rows of ``(H A)_ij - (H A)_ji = 0`` in the unknowns of ``A``.

    Unknowns are the entries of ``A`` in row-major order; equations are
    indexed by pairs ``i < j`` and then by degree-(d-2) monomials.
    """
    H = hessian_matrix(P)
    n = P.nvars
    d = P.degree
    monos = monomials_of_degree(n, d - 2)
    coeffs = [[H[i, k].coefficient_vector(monos) for k in range(n)] for i in range(n)]
    rows = []
    for i, j in combinations(range(n), 2):
        for mu in range(len(monos)):
            row = [Fraction(0)] * (n * n)
            # (H A)_ij = sum_k H_ik A_kj ; (H A)_ji = sum_k H_jk A_ki
            for k in range(n):
                row[k * n + j] += coeffs[i][k][mu]
                row[k * n + i] -= coeffs[j][k][mu]
            if any(row):
                rows.append(row)
    return rows


def hessian_commutes(P: MPoly, A: QMatrix) -> bool:
    """Direct check that ``H_P @ A`` is symmetric."""
    if A.shape != (P.nvars, P.nvars):
        raise ValueError("size mismatch")
    return hessian_matrix(P).times_constant(A).is_symmetric()


@dataclass(frozen=True)
class SymmetrizerAlgebra:
    polynomial: MPoly
    basis: tuple[QMatrix, ...]
    is_cone: bool
    radical_basis: tuple[QMatrix, ...] | None = None
    _space: Subspace | None = field(default=None, repr=False, compare=False)
    _radical_space: Subspace | None = field(default=None, repr=False, compare=False)

    @property
    def nvars(self) -> int:
        return self.polynomial.nvars

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def radical_dim(self) -> int | None:
        return None if self.radical_basis is None else len(self.radical_basis)

    @property
    def semisimple_dim(self) -> int | None:
        """``dim g_F^x``: the semisimple part modulo scalars."""
        if self.radical_basis is None:
            return None
        return self.dim - len(self.radical_basis) - 1

    @property
    def sebastiani_thom(self) -> bool | None:
        """True when the form splits as a sum in disjoint variables."""
        if self.radical_basis is None:
            return None
        return self.dim - len(self.radical_basis) >= 2

    def contains(self, A: QMatrix) -> bool:
        return self._space.contains(A.vec())

    def radical_contains(self, A: QMatrix) -> bool:
        if self._radical_space is None:
            raise ConeError("radical is only defined for non-cones")
        return self._radical_space.contains(A.vec())

    def dims(self) -> dict:
        return {"g_F": self.dim, "g_F_plus": self.radical_dim, "g_F_times": self.semisimple_dim}


def solve_symmetrizer_algebra(P: MPoly) -> SymmetrizerAlgebra:
    check_form(P)
    n = P.nvars
    space = nullspace(symmetrizer_system(P), n * n)
    basis = tuple(matrices_of(space, n))
    cone = is_cone(P)
    if cone:
        return SymmetrizerAlgebra(P, basis, True, None, space, None)
    G = trace_gram(list(basis))
    coeffs = nullspace(G.rows, len(basis))
    rad_mats = [linear_combination(c, basis) for c in coeffs.basis]
    rad_space = span_of_matrices(rad_mats, n)
    radical = tuple(matrices_of(rad_space, n))
    for R in radical:
        if nilpotency_index(R) is None:
            raise CertificationError("trace-form radical element is not nilpotent")
    return SymmetrizerAlgebra(P, basis, False, radical, space, rad_space)


# -- the tensor-definition oracle -------------------------------------------

def _symmetric_tensor(P: MPoly):
    """Coefficient lookup ``T(i1, ..., id)`` of the symmetric form of ``P``."""
    d = P.degree
    n = P.nvars
    terms = dict(P.items())
    dfact = factorial(d)

    def T(indices) -> Fraction:
        exps = [0] * n
        for i in indices:
            exps[i] += 1
        c = terms.get(tuple(exps))
        if not c:
            return Fraction(0)
        multinom = dfact
        for e in exps:
            multinom //= factorial(e)
        return c / multinom

    return T


def is_symmetrizer_oracle(P: MPoly, A: QMatrix) -> bool:
    """Check ``F(A v1, v2, ...) == F(v1, A v2, ...)`` on coefficient tensors.

    Comparing the first two slots suffices because ``F`` is symmetric.
    """
    n = P.nvars
    if A.shape != (n, n):
        raise ValueError("size mismatch")
    if P.is_zero():
        return True
    d = P.degree
    T = _symmetric_tensor(P)
    for rest in combinations_with_replacement(range(n), d - 2):
        for i1, i2 in combinations(range(n), 2):
            lhs = sum((A[k, i1] * T((k, i2) + rest) for k in range(n) if A[k, i1]), Fraction(0))
            rhs = sum((A[k, i2] * T((i1, k) + rest) for k in range(n) if A[k, i2]), Fraction(0))
            if lhs != rhs:
                return False
    return True


def apply_symmetrizer(P: MPoly, A: QMatrix) -> MPoly:
    """Polynomial of ``F^g``: ``x -> F(Ax, x, ..., x)``."""
    if not is_symmetrizer_oracle(P, A):
        raise ValueError("matrix is not a symmetrizer of the polynomial")
    d = check_form(P)
    n = P.nvars
    out = MPoly.zero(n)
    for i in range(n):
        Ax_i = MPoly.linear_form(A.rows[i])
        if Ax_i:
            out = out + Ax_i * P.diff(i)
    return out.scale(Fraction(1, d))


# -- rank-one elements of the radical ---------------------------------------

@dataclass(frozen=True)
class RankOneClass:
    element: QMatrix          # normalized: first nonzero entry 1
    image: tuple[Fraction, ...]  # projective point, first nonzero coordinate 1


@dataclass(frozen=True)
class IrrationalClasses:
    count: int
    minimal_polynomial: str   # in the pencil parameter s, element s*f1 + f2
    pencil: tuple[QMatrix, QMatrix]


@dataclass(frozen=True)
class RankOneLocus:
    classes: tuple[RankOneClass, ...]
    exactness: str            # "complete" or "heuristic"
    irrational: tuple[IrrationalClasses, ...] = ()

    @property
    def points(self) -> list[tuple[Fraction, ...]]:
        return [c.image for c in self.classes]


def canonical_point(v: Sequence) -> tuple[Fraction, ...]:
    v = [as_fraction(x) for x in v]
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    return tuple(x / lead for x in v)


def _rank_one_class(M: QMatrix) -> RankOneClass:
    col = next(M.col(j) for j in range(M.ncols) if any(M.col(j)))
    return RankOneClass(M.normalized(), canonical_point(col))


def _minor_forms(f1: QMatrix, f2: QMatrix) -> list[list[Fraction]]:
    """2x2 minors of ``s*f1 + t*f2`` as coefficient lists ``[t^2, s t, s^2]``.

    Dehomogenized at ``t = 1`` these read low-to-high in ``s``.
    """
    n = f1.nrows
    forms = []
    for (i, j) in combinations(range(n), 2):
        for (k, l) in combinations(range(n), 2):
            a_ik, a_jl, a_il, a_jk = f1[i, k], f1[j, l], f1[i, l], f1[j, k]
            b_ik, b_jl, b_il, b_jk = f2[i, k], f2[j, l], f2[i, l], f2[j, k]
            s2 = a_ik * a_jl - a_il * a_jk
            st = a_ik * b_jl + b_ik * a_jl - a_il * b_jk - b_il * a_jk
            t2 = b_ik * b_jl - b_il * b_jk
            if s2 or st or t2:
                forms.append([t2, st, s2])
    return forms


def pencil_rank_one(f1: QMatrix, f2: QMatrix):
    """Rank-one members ``s*f1 + t*f2`` of a pencil of independent matrices.

    Returns ``(rational_classes, irrational)``; irrational is None or a pair
    ``(count, monic minimal polynomial coefficients in s)``.
    """
    forms = _minor_forms(f1, f2)
    if not forms:
        raise CertificationError("every member of the pencil has rank <= 1")
    found = []
    # the point s:t = 1:0 is a root iff every form lacks its s^2 term
    if all(not f[2] for f in forms):
        found.append(f1)
    g = binary.gcd_many([binary.trim(f) for f in forms])
    irrational = None
    roots, leftover = binary.rational_roots(g)
    for s0 in roots:
        found.append(f1 * s0 + f2)
    if binary.degree(leftover) > 0:
        irrational = (binary.degree(leftover), binary.monic(leftover))
    classes = [_rank_one_class(M) for M in found if M.rank() == 1]
    return classes, irrational


def _dedupe(classes) -> list[RankOneClass]:
    seen = {}
    for c in classes:
        seen.setdefault(c.element, c)
    return sorted(seen.values(), key=lambda c: (c.image, c.element.vec()))


def rank_one_locus(alg: SymmetrizerAlgebra, seed: int = DEFAULT_SEED) -> RankOneLocus:
    if alg.radical_basis is None:
        raise ConeError("rank-one locus needs the radical, which is undefined for cones")
    rad = alg.radical_basis
    m = len(rad)
    if m == 0:
        return RankOneLocus((), "complete")
    if m == 1:
        cls = [_rank_one_class(rad[0])] if rad[0].rank() == 1 else []
        return RankOneLocus(tuple(cls), "complete")
    if m == 2:
        classes, irr = pencil_rank_one(rad[0], rad[1])
        extra = ()
        if irr is not None:
            extra = (IrrationalClasses(irr[0], binary.render(irr[1], "s"), (rad[0], rad[1])),)
        return RankOneLocus(tuple(_dedupe(classes)), "complete", extra)

    rng = random.Random(seed)
    candidates = list(rad)
    # powers of radical elements are radical; rank-one ones often show up here
    for R in rad:
        P = R @ R
        while not P.is_zero():
            candidates.append(P)
            P = P @ R
    found = [_rank_one_class(M) for M in candidates if M.rank() == 1]
    for a, b in combinations(candidates, 2):
        if span_of_matrices([a, b], alg.nvars).dim == 2:
            found += pencil_rank_one(a, b)[0]
    for _ in range(4 * m):
        a = linear_combination([rng.randint(-5, 5) for _ in range(m)], rad)
        b = linear_combination([rng.randint(-5, 5) for _ in range(m)], rad)
        if span_of_matrices([a, b], alg.nvars).dim == 2:
            found += pencil_rank_one(a, b)[0]
    return RankOneLocus(tuple(_dedupe(found)), "heuristic")


def max_rank(mats: Sequence[QMatrix], seed: int = DEFAULT_SEED, grid_limit: int = 20000) -> int:
    """Maximum rank over the linear span of ``mats``.

    The generic rank is attained somewhere on the grid ``{0..N}^m``: a
    nonzero polynomial of degree at most ``N`` in each variable cannot vanish
    on all of it.  Larger spans fall back to seeded random combinations.
    """
    if not mats:
        return 0
    n = mats[0].nrows
    m = len(mats)
    best = max(M.rank() for M in mats)
    if best == n:
        return best
    if (n + 1) ** m <= grid_limit:
        for coeffs in product(range(n + 1), repeat=m):
            if any(coeffs):
                best = max(best, rank(linear_combination(coeffs, mats)))
                if best == n:
                    break
        return best
    rng = random.Random(seed)
    for _ in range(64):
        coeffs = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(m)]
        best = max(best, rank(linear_combination(coeffs, mats)))
    return best


def random_dense_form(nvars: int, degree: int, seed: int = DEFAULT_SEED, bound: int = 9) -> MPoly:
    """A form with every monomial present and seeded nonzero integer coefficients."""
    rng = random.Random(seed)
    terms = {}
    for mono in monomials_of_degree(nvars, degree):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        terms[mono] = c
    return MPoly(nvars, terms)
