"""Point- and line-level singularity analysis of a projective hypersurface.

Points are rational projective points.  Every statement of the form "holds on
the whole line/subspace" is checked as a polynomial identity in fresh
parameters, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import binary
from .algebra import canonical_point, check_form, is_symmetrizer_oracle
from .linalg import QMatrix, Subspace, image, nullspace, rank
from .poly import MPoly, as_fraction, directional_derivative, monomials_of_degree, partials_of_order


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Sequence):
        object.__setattr__(self, "coords", canonical_point(coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def _point(x) -> ProjPoint:
    return x if isinstance(x, ProjPoint) else ProjPoint(x)


@dataclass(frozen=True)
class PointAnalysis:
    point: ProjPoint
    on_hypersurface: bool
    multiplicity: int
    hessian_rank: int
    corank: int
    is_quasi_vertex: bool
    is_cone_vertex: bool

    def as_dict(self) -> dict:
        return {
            "point": [str(c) for c in self.point.coords],
            "on_hypersurface": self.on_hypersurface,
            "multiplicity": self.multiplicity,
            "hessian_rank": self.hessian_rank,
            "corank": self.corank,
            "is_quasi_vertex": self.is_quasi_vertex,
            "is_cone_vertex": self.is_cone_vertex,
        }


def multiplicity_at(P: MPoly, x) -> int:
    """Order of vanishing of ``P`` at ``x`` (0 off the hypersurface).

    Expands ``P(s*xi + y)`` and returns the lowest total degree in ``y``.
    """
    d = check_form(P, min_degree=1, min_vars=1)
    xi = _point(x).coords
    n = P.nvars
    if len(xi) != n:
        raise ValueError("point dimension mismatch")
    # new variables: s, y_0..y_{n-1};  x = s*xi + y
    rows = [list(xi)] + [[int(i == j) for j in range(n)] for i in range(n)]
    T = P.substitute_linear(rows)
    return min((sum(m[1:]) for m, _ in T.items()), default=d)


def _hessian_image_rows(P: MPoly, xi: Sequence) -> list[list[Fraction]]:
    """Coefficient rows of ``u -> xi^t H_P u`` in degree-(d-2) monomials."""
    d = P.degree
    D = directional_derivative(P, xi)
    monos = monomials_of_degree(P.nvars, d - 2)
    return [D.diff(j).coefficient_vector(monos) for j in range(P.nvars)]


def hessian_rank_at(P: MPoly, x) -> int:
    check_form(P)
    return rank(_hessian_image_rows(P, _point(x).coords))


def hessian_kernel(P: MPoly, x) -> Subspace:
    """``ker h_F(xi)`` as a subspace of ``V``."""
    check_form(P)
    rows = _hessian_image_rows(P, _point(x).coords)
    # h(xi)(u) = sum_j u_j rows[j]; kernel = left kernel of the row matrix
    cols = [list(c) for c in zip(*rows)]
    return nullspace(cols, P.nvars)


def analyze_point(P: MPoly, x) -> PointAnalysis:
    check_form(P)
    pt = _point(x)
    n = P.nvars - 1
    on = P.evaluate(pt.coords) == 0
    mult = multiplicity_at(P, pt)
    r = hessian_rank_at(P, pt)
    return PointAnalysis(
        point=pt,
        on_hypersurface=on,
        multiplicity=mult,
        hessian_rank=r,
        corank=n - r,
        is_quasi_vertex=on and r == 1,
        is_cone_vertex=r == 0,
    )


def _generic_point(span: Subspace | Sequence[Sequence], nvars: int) -> tuple[list[list[Fraction]], int]:
    vecs = list(span.basis) if isinstance(span, Subspace) else [list(v) for v in span]
    if not vecs:
        raise ValueError("empty span")
    if any(len(v) != nvars for v in vecs):
        raise ValueError("span vectors have the wrong dimension")
    return [[as_fraction(c) for c in v] for v in vecs], len(vecs)


def subspace_multiplicity_at_least(P: MPoly, span, m: int) -> bool:
    """True iff every point of ``P(span)`` has multiplicity at least ``m``.

    Substitutes the generic combination ``sum a_i w_i`` into every order-(m-1)
    partial and tests identical vanishing in the ``a_i``.
    """
    check_form(P, min_degree=1, min_vars=1)
    if m < 1:
        raise ValueError("m must be at least 1")
    rows, _ = _generic_point(span, P.nvars)
    if m - 1 > P.degree:
        return P.is_zero()
    for D in partials_of_order(P, m - 1).values():
        if D and D.substitute_linear(rows):
            return False
    return True


def construct_rank_one_symmetrizer(P: MPoly, x) -> QMatrix:
    """The square-zero symmetrizer with image ``x`` built from ``ker h_F(xi)``.

    Extend a basis of the kernel hyperplane by one vector ``xi_n`` and send
    ``xi_n`` to ``xi``, everything else to zero.
    """
    check_form(P)
    pt = _point(x)
    xi = pt.coords
    if P.evaluate(xi) != 0:
        raise ValueError(f"{pt} is not on the hypersurface")
    K = hessian_kernel(P, pt)
    N = P.nvars
    if K.dim < N - 1:
        raise ValueError(f"Hessian rank at {pt} is {N - K.dim} > 1")
    if K.dim == N - 1:
        phi = K.orthogonal_complement().basis[0]
    else:
        # cone vertex: any hyperplane through xi will do
        phi = Subspace.span([xi], N).orthogonal_complement().basis[0]
    g = QMatrix([[a * b for b in phi] for a in xi])
    if not is_symmetrizer_oracle(P, g):
        raise RuntimeError("constructed matrix failed the symmetrizer certificate")
    return g


def hyperplane_of_lines(P: MPoly, x) -> MPoly:
    """Linear form cutting ``P(ker h_F(xi))``; lines through ``x`` in Z(P) lie there."""
    a = analyze_point(P, x)
    if not a.is_quasi_vertex:
        raise ValueError(f"{a.point} is not a quasi-vertex")
    phi = hessian_kernel(P, a.point).orthogonal_complement().basis[0]
    lead = next(c for c in phi if c)
    return MPoly.linear_form([c / lead for c in phi])


def line_in_hypersurface(P: MPoly, x, y) -> bool:
    """Whether the line through ``x`` and ``y`` lies in Z(P), symbolically."""
    rows = [list(_point(x).coords), list(_point(y).coords)]
    return P.substitute_linear(rows).is_zero()


def verify_power_image_line(P: MPoly, f: QMatrix) -> bool:
    """Check that the hyperplane section at ``P(im f^2)`` is ``d`` times ``P(im f)``.

    Restricts ``P`` to ``ker h_F(xi)`` and tests that the result is a nonzero
    scalar multiple of ``mu^d``, ``mu`` the form cutting ``P(im f)`` there.
    """
    d = check_form(P)
    if P.nvars != 4:
        raise ValueError("expected a surface in P^3")
    f2 = f @ f
    if f2.is_zero() or not (f2 @ f).is_zero():
        raise ValueError("need f^2 != 0 and f^3 = 0")
    if f2.rank() != 1:
        raise ValueError("need rank f^2 = 1")
    if not is_symmetrizer_oracle(P, f):
        raise ValueError("f is not a symmetrizer")
    xi = next(f2.col(j) for j in range(4) if any(f2.col(j)))
    K = hessian_kernel(P, xi)
    imf = image(f)
    if K.dim != 3 or not K.contains_subspace(imf) or imf.dim != 2:
        return False
    kb = [list(v) for v in K.basis]
    restricted = P.substitute_linear(kb)
    # coordinates of im f inside K, then the linear form on K vanishing on them
    coords = [K.coordinates(v) for v in imf.basis]
    mu_coeffs = nullspace(coords, 3).basis
    if len(mu_coeffs) != 1:
        return False
    mu = MPoly.linear_form(mu_coeffs[0])
    power = mu ** d
    if restricted.is_zero():
        return False
    mono, c = next(iter(restricted.items()))
    pc = power.coefficient(mono)
    if not pc:
        return False
    return restricted == power.scale(c / pc)


def rank_at_most_one_points_on_line(P: MPoly, x, y) -> tuple[list[ProjPoint], int]:
    """Rational points of the line ``xy`` with Hessian rank at most one that lie on Z(P).

    Returns the rational points and the number of further (irrational)
    solutions counted with multiplicity.
    """
    check_form(P)
    xi, eta = _point(x).coords, _point(y).coords
    if ProjPoint(xi) == ProjPoint(eta):
        raise ValueError("the two points coincide")
    A = _hessian_image_rows(P, xi)
    B = _hessian_image_rows(P, eta)
    N, M = len(A), len(A[0])
    # point z = s*xi + t*eta; matrix a*A + b*B, minors are binary quadratics
    forms = []
    for i, j in combinations(range(N), 2):
        for k, l in combinations(range(M), 2):
            s2 = A[i][k] * A[j][l] - A[i][l] * A[j][k]
            st = A[i][k] * B[j][l] + B[i][k] * A[j][l] - A[i][l] * B[j][k] - B[i][l] * A[j][k]
            t2 = B[i][k] * B[j][l] - B[i][l] * B[j][k]
            if s2 or st or t2:
                forms.append([t2, st, s2])
    on_line = P.substitute_linear([list(xi), list(eta)])  # variables (s, t)
    d = P.degree
    # low-to-high in s after setting t = 1
    pform = [on_line.coefficient((k, d - k)) for k in range(d + 1)]
    all_forms = forms + ([pform] if on_line else [])
    if not all_forms:
        raise ValueError("every point of the line has Hessian rank <= 1 and lies on Z(P)")
    pts = []
    # s:t = 1:0 (the point xi) is a root iff every form lacks its top s-power
    if all(not f[-1] for f in all_forms):
        pts.append(ProjPoint(xi))
    g = binary.gcd_many([binary.trim(f) for f in all_forms])
    roots, rest = binary.rational_roots(g)
    for s0 in roots:
        pts.append(ProjPoint([s0 * a + b for a, b in zip(xi, eta)]))
    return pts, max(binary.degree(rest), 0)


def quasi_vertices_on_line(P: MPoly, x, y) -> int:
    """Number of rational quasi-vertices on the line through ``x`` and ``y``."""
    pts, _ = rank_at_most_one_points_on_line(P, x, y)
    return sum(1 for p in pts if hessian_rank_at(P, p) == 1)
