"""Full analysis reports and the theorem-check suite for fixtures.

Each check returns :class:`Check` with status ``pass``, ``fail`` or
``skipped``.  A check whose hypothesis is not asserted in the fixture metadata
is skipped, never failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .algebra import (
    DEFAULT_SEED,
    RankOneLocus,
    SymmetrizerAlgebra,
    apply_symmetrizer,
    canonical_point,
    check_form,
    hessian_commutes,
    is_symmetrizer_oracle,
    jacobian_span,
    max_rank,
    rank_one_locus,
    solve_symmetrizer_algebra,
)
from .linalg import QMatrix, Subspace, image, kernel, linear_combination, nilpotency_index
from .parser import FINITE_HYPOTHESIS, NO_LINE_HYPOTHESIS, Fixture
from .poly import MPoly
from .singularity import (
    PointAnalysis,
    ProjPoint,
    analyze_point,
    construct_rank_one_symmetrizer,
    hyperplane_of_lines,
    line_in_hypersurface,
    multiplicity_at,
    rank_at_most_one_points_on_line,
    subspace_multiplicity_at_least,
    verify_power_image_line,
)

SCHEMA_VERSION = "1"
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Check:
    status: str
    reason: str = ""

    def as_dict(self) -> dict:
        out = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        return out


def _ok(cond: bool, failure: str, success: str = "") -> Check:
    return Check(PASS, success) if cond else Check(FAIL, failure)


def _skip(reason: str) -> Check:
    return Check(SKIPPED, reason)


def _pt(v) -> str:
    return "(" + ":".join(str(c) for c in canonical_point(v)) + ")"


@dataclass
class Context:
    fixture: Fixture
    P: MPoly
    d: int
    N: int
    alg: SymmetrizerAlgebra
    locus: RankOneLocus | None
    analyses: list[PointAnalysis]
    seed: int
    probes: int = 20
    _rng: random.Random | None = None

    @property
    def rng(self) -> random.Random:
        if self._rng is None:
            self._rng = random.Random(self.seed)
        return self._rng

    @property
    def radical(self) -> tuple[QMatrix, ...]:
        return self.alg.radical_basis or ()

    def candidate_quasi_vertices(self) -> list[ProjPoint]:
        return [a.point for a in self.analyses if a.is_quasi_vertex]

    def quasi_vertices(self) -> list[ProjPoint]:
        """Quasi-vertices known from either side of the correspondence."""
        pts = {a: None for a in self.candidate_quasi_vertices()}
        if self.locus is not None:
            for p in self.locus.points:
                pts.setdefault(ProjPoint(p), None)
        return sorted(pts, key=lambda p: p.coords)

    def random_radical_element(self, bound: int = 3) -> QMatrix:
        rad = self.radical
        if not rad:
            raise ValueError("g_F_plus is zero")
        while True:
            coeffs = [self.rng.randint(-bound, bound) for _ in rad]
            if any(coeffs):
                return linear_combination(coeffs, rad)

    def square_zero_elements(self) -> list[QMatrix]:
        """Nonzero square-zero radical elements: last nonzero powers of samples."""
        sources = list(self.radical) + [self.random_radical_element() for _ in range(4)]
        out = {}
        for h in sources:
            g = h
            while not (g @ h).is_zero():
                g = g @ h
            if (g @ g).is_zero() and not g.is_zero():
                out.setdefault(g.normalized(), None)
        return list(out)


# -- individual checks ------------------------------------------------------

def check_identity_membership(ctx: Context) -> Check:
    return _ok(ctx.alg.contains(QMatrix.identity(ctx.N)), "identity is not in g_F")


def check_oracle_agreement(ctx: Context) -> Check:
    for k, B in enumerate(ctx.alg.basis):
        if not is_symmetrizer_oracle(ctx.P, B) or not hessian_commutes(ctx.P, B):
            return Check(FAIL, f"basis element {k} rejected by the tensor oracle")
    trials = 0
    for _ in range(8):
        A = linear_combination([ctx.rng.randint(-3, 3) for _ in ctx.alg.basis], ctx.alg.basis)
        if ctx.rng.random() < 0.5:
            i, j = ctx.rng.randrange(ctx.N), ctx.rng.randrange(ctx.N)
            A = A + QMatrix.unit(ctx.N, i, j)
        member = ctx.alg.contains(A)
        if not (is_symmetrizer_oracle(ctx.P, A) == member == hessian_commutes(ctx.P, A)):
            return Check(FAIL, f"oracle and Hessian system disagree on {A}")
        trials += 1
    return Check(PASS, f"{len(ctx.alg.basis)} basis elements and {trials} random matrices agree")


def check_commutativity(ctx: Context) -> Check:
    B = ctx.alg.basis
    for a, b in combinations(B, 2):
        if a @ b != b @ a:
            return Check(FAIL, "two basis elements do not commute")
    return Check(PASS)


def check_closure(ctx: Context) -> Check:
    B = ctx.alg.basis
    for i, a in enumerate(B):
        for b in B[i:]:
            if not ctx.alg.contains(a @ b):
                return Check(FAIL, "a product of basis elements leaves g_F")
    return Check(PASS)


def check_radical(ctx: Context) -> Check:
    for R in ctx.radical:
        if nilpotency_index(R) is None:
            return Check(FAIL, "radical basis element is not nilpotent")
    for _ in range(4):
        if ctx.radical and nilpotency_index(ctx.random_radical_element()) is None:
            return Check(FAIL, "random radical combination is not nilpotent")
    outside = [B for B in ctx.alg.basis if not ctx.alg.radical_contains(B)]
    for B in outside:
        if nilpotency_index(B) is not None:
            return Check(FAIL, "nilpotent element of g_F outside the radical")
    for _ in range(4):
        if outside:
            A = linear_combination([ctx.rng.randint(-3, 3) for _ in ctx.alg.basis], ctx.alg.basis)
            if not ctx.alg.radical_contains(A) and nilpotency_index(A) is not None:
                return Check(FAIL, "nilpotent element of g_F outside the radical")
    return Check(PASS)


def check_fiber_invariance(ctx: Context) -> Check:
    base = jacobian_span(ctx.P)[1]
    done = 0
    for _ in range(6):
        A = QMatrix.identity(ctx.N) + linear_combination(
            [ctx.rng.randint(-2, 2) for _ in ctx.alg.basis], ctx.alg.basis)
        if A.rank() < ctx.N:
            continue
        Q = apply_symmetrizer(ctx.P, A)
        if jacobian_span(Q)[1] != base:
            return Check(FAIL, "an invertible symmetrizer moved the Jacobian span")
        done += 1
        if done == 2:
            break
    if not done:
        return _skip("no invertible sample found")
    return Check(PASS, f"{done} invertible symmetrizers preserve J(F)")


def check_square_zero_image(ctx: Context) -> Check:
    if not ctx.radical:
        return _skip("g_F_plus = 0")
    elems = ctx.square_zero_elements()
    for g in elems:
        im = image(g)
        if not subspace_multiplicity_at_least(ctx.P, im, ctx.d - 1):
            return Check(FAIL, f"P(im g) has a point of multiplicity < d-1 for g = {g}")
        samples = list(im.basis) + [tuple(sum(c) for c in zip(*im.basis))]
        for v in samples:
            if any(v):
                m = multiplicity_at(ctx.P, v)
                if m != ctx.d - 1:
                    return Check(FAIL, f"multiplicity {m} != d-1 at sample {_pt(v)}")
    return Check(PASS, f"{len(elems)} square-zero elements checked")


def check_multiplicity_probes(ctx: Context, count: int | None = None) -> Check:
    if not ctx.radical:
        return _skip("g_F_plus = 0")
    count = ctx.probes if count is None else count
    done = 0
    attempts = 0
    while done < count and attempts < 20 * count:
        attempts += 1
        g = ctx.random_radical_element()
        if ctx.rng.random() < 0.3:
            g = g @ g if not (g @ g).is_zero() else g
        v = [ctx.rng.randint(-3, 3) for _ in range(ctx.N)]
        w = g.apply(v)
        if not any(w):
            continue
        r, cur = 1, w
        while any(cur):
            cur = g.apply(cur)
            r += 1
        if r > ctx.d:
            continue
        m = multiplicity_at(ctx.P, w)
        if m < ctx.d - r + 1:
            return Check(FAIL, f"mult at {_pt(w)} is {m} < {ctx.d - r + 1} (r = {r})")
        done += 1
    if not done:
        return _skip("no probe with g v != 0 and g^r v = 0, r <= d")
    return Check(PASS, f"{done} probes")


def check_stabilized_eigenvector(ctx: Context) -> Check:
    qvs = ctx.quasi_vertices()
    if not qvs:
        return _skip("no quasi-vertex")
    for x in qvs:
        line = Subspace.span([x.coords], ctx.N)
        for g in ctx.alg.basis:
            if not line.contains(g.apply(x.coords)):
                return Check(FAIL, f"g does not stabilize quasi-vertex {x}")
    return Check(PASS, f"{len(qvs)} quasi-vertices stabilized")


def _rank_one_radical(ctx: Context) -> list[QMatrix]:
    out = {}
    if ctx.locus is not None:
        for c in ctx.locus.classes:
            out.setdefault(c.element, None)
    for x in ctx.candidate_quasi_vertices():
        out.setdefault(construct_rank_one_symmetrizer(ctx.P, x).normalized(), None)
    return list(out)


def check_rank_one_annihilation(ctx: Context) -> Check:
    elems = _rank_one_radical(ctx)
    if not elems:
        return _skip("no rank-one element in g_F_plus")
    for g in elems:
        for f in ctx.radical:
            if not (f @ g).is_zero():
                return Check(FAIL, "f g != 0 for a rank-one g")
    return Check(PASS, f"{len(elems)} rank-one elements")


def check_quasi_vertex_correspondence(ctx: Context) -> Check:
    locus = ctx.locus
    images = []
    for c in locus.classes:
        a = analyze_point(ctx.P, c.image)
        if not a.is_quasi_vertex:
            return Check(FAIL, f"rank-one class maps to {a.point}, which is not a quasi-vertex")
        images.append(a.point)
    if len(set(images)) != len(images):
        return Check(FAIL, "two rank-one classes share an image")
    for x in ctx.candidate_quasi_vertices():
        g = construct_rank_one_symmetrizer(ctx.P, x)
        if not ctx.alg.radical_contains(g) or g.rank() != 1:
            return Check(FAIL, f"quasi-vertex {x} has no rank-one element in g_F_plus")
    cands = set(ctx.candidate_quasi_vertices())
    if locus.exactness == "complete" and set(images) != cands:
        missing = sorted(str(p) for p in set(images) ^ cands)
        return Check(FAIL, f"symmetrizer and geometry sides differ at {', '.join(missing)}")
    detail = f"{len(images)} classes, {len(cands)} candidate quasi-vertices ({locus.exactness})"
    return Check(PASS, detail)


def check_quasi_vertex_uniqueness(ctx: Context) -> Check:
    if not ctx.fixture.has(NO_LINE_HYPOTHESIS):
        return _skip(f"hypothesis {NO_LINE_HYPOTHESIS} not asserted")
    qvs = ctx.quasi_vertices()
    if bool(ctx.radical) != bool(qvs):
        return Check(FAIL, f"dim g_F_plus = {len(ctx.radical)} but {len(qvs)} quasi-vertices")
    if qvs:
        if len(qvs) != 1:
            return Check(FAIL, f"{len(qvs)} quasi-vertices, expected a unique one")
        heavy = [a.point for a in ctx.analyses if a.on_hypersurface and a.multiplicity >= ctx.d - 1]
        if any(p != qvs[0] for p in heavy):
            return Check(FAIL, "another candidate point has multiplicity d-1")
    return Check(PASS)


def check_main_bound_nilpotent(ctx: Context, max_nil_rank: int) -> Check:
    if not ctx.fixture.has(NO_LINE_HYPOTHESIS):
        return _skip(f"hypothesis {NO_LINE_HYPOTHESIS} not asserted")
    m = len(ctx.radical)
    if m > 2:
        return Check(FAIL, f"dim g_F_plus = {m} > 2")
    if m and max_nil_rank != m:
        return Check(FAIL, f"max nilpotent rank {max_nil_rank} != dim g_F_plus {m}")
    return Check(PASS)


def check_main_bound_group(ctx: Context) -> Check:
    if not ctx.fixture.has(NO_LINE_HYPOTHESIS):
        return _skip(f"hypothesis {NO_LINE_HYPOTHESIS} not asserted")
    return _ok(ctx.alg.dim <= ctx.N, f"dim g_F = {ctx.alg.dim} > N = {ctx.N}")


def check_inequality_lemma(ctx: Context) -> Check:
    m = len(ctx.radical)
    for g in [QMatrix.zeros(ctx.N)] + list(ctx.radical):
        bound = ctx.N - g.rank() + m
        if ctx.alg.dim > bound:
            return Check(FAIL, f"dim g_F = {ctx.alg.dim} > {bound} for rank {g.rank()}")
    return Check(PASS)


def check_cube_zero(ctx: Context) -> Check:
    if not ctx.fixture.has(FINITE_HYPOTHESIS):
        return _skip(f"hypothesis {FINITE_HYPOTHESIS} not asserted")
    R = ctx.radical
    # f^3 = 0 on the whole span iff every triple product of basis elements vanishes
    for i in range(len(R)):
        for j in range(i, len(R)):
            for k in range(j, len(R)):
                if not (R[i] @ R[j] @ R[k]).is_zero():
                    return Check(FAIL, "some f in g_F_plus has f^3 != 0")
    return Check(PASS)


def check_nodal_forces_trivial(ctx: Context) -> Check:
    n = ctx.N - 1
    nodes = [a for a in ctx.analyses
             if a.on_hypersurface and a.multiplicity == ctx.d - 1 and a.hessian_rank == n]
    if not nodes:
        return _skip("no candidate point of multiplicity d-1 with Hessian rank n")
    return _ok(not ctx.radical, f"Hessian rank n at {nodes[0].point} but g_F_plus != 0",
               f"Hessian rank n at {nodes[0].point}")


def check_low_rank_multiplicity(ctx: Context) -> Check:
    pts = [a for a in ctx.analyses if a.on_hypersurface and a.hessian_rank <= 1]
    if not pts:
        return _skip("no candidate point with Hessian rank <= 1")
    for a in pts:
        if a.multiplicity < ctx.d - 1:
            return Check(FAIL, f"{a.point} has rank <= 1 but multiplicity {a.multiplicity}")
    return Check(PASS)


def check_point_records(ctx: Context) -> Check:
    for a in ctx.analyses:
        if not (a.is_cone_vertex == (a.hessian_rank == 0) == (a.multiplicity == ctx.d)):
            return Check(FAIL, f"cone-vertex invariant broken at {a.point}")
        if a.is_quasi_vertex != (a.on_hypersurface and a.hessian_rank == 1):
            return Check(FAIL, f"quasi-vertex flag inconsistent at {a.point}")
        if a.corank != ctx.N - 1 - a.hessian_rank:
            return Check(FAIL, f"corank inconsistent at {a.point}")
    return Check(PASS)


def check_quasi_vertex_lines(ctx: Context) -> Check:
    qvs = ctx.candidate_quasi_vertices()
    others = [a for a in ctx.analyses if a.on_hypersurface and a.multiplicity >= 2]
    pairs = [(x, a) for x in qvs for a in others if a.point != x]
    if not pairs:
        return _skip("no quasi-vertex together with another singular candidate")
    for x, a in pairs:
        if not subspace_multiplicity_at_least(ctx.P, [x.coords, a.point.coords], a.multiplicity):
            return Check(FAIL, f"line {x}-{a.point} drops below multiplicity {a.multiplicity}")
    return Check(PASS, f"{len(pairs)} lines")


def check_lines_through_quasi_vertex(ctx: Context) -> Check:
    qvs = ctx.candidate_quasi_vertices()
    if not qvs:
        return _skip("no candidate quasi-vertex")
    tested = 0
    for x in qvs:
        L = hyperplane_of_lines(ctx.P, x)
        for a in ctx.analyses:
            if a.point == x or not a.on_hypersurface:
                continue
            inside = line_in_hypersurface(ctx.P, x, a.point)
            if (L.evaluate(a.point.coords) == 0) != inside:
                return Check(FAIL, f"line {x}-{a.point} contradicts the hyperplane {L}")
            tested += 1
        for p, q in ctx.fixture.singular_lines:
            P1, P2 = ProjPoint(p), ProjPoint(q)
            if x in (P1, P2) and line_in_hypersurface(ctx.P, P1, P2):
                if L.evaluate(P1.coords) or L.evaluate(P2.coords):
                    return Check(FAIL, f"line {P1}-{P2} through {x} leaves the hyperplane")
                tested += 1
    return Check(PASS, f"{tested} lines tested")


def check_quasi_vertices_per_line(ctx: Context) -> Check:
    lines = [(p, q) for p, q in combinations(ctx.quasi_vertices(), 2)]
    lines += [(ProjPoint(p), ProjPoint(q)) for p, q in ctx.fixture.singular_lines]
    if not lines:
        return _skip("no line to test")
    for p, q in lines:
        pts, irr = rank_at_most_one_points_on_line(ctx.P, p, q)
        if len(pts) + irr > 2:
            return Check(FAIL, f"line {p}-{q} carries more than two quasi-vertices")
    return Check(PASS, f"{len(lines)} lines")


def check_declared_lines(ctx: Context) -> Check:
    lines = ctx.fixture.singular_lines
    if not lines:
        return _skip("no declared singular lines")
    no_line = ctx.fixture.has(NO_LINE_HYPOTHESIS)
    for p, q in lines:
        if not subspace_multiplicity_at_least(ctx.P, [p, q], 2):
            return Check(FAIL, f"declared line {_pt(p)}-{_pt(q)} is not singular")
        if no_line and subspace_multiplicity_at_least(ctx.P, [p, q], ctx.d - 1):
            return Check(FAIL, f"line {_pt(p)}-{_pt(q)} has multiplicity d-1, contradicting the hypothesis")
    return Check(PASS, f"{len(lines)} lines")


def check_jordan_blocks(ctx: Context) -> Check:
    if not ctx.radical:
        return _skip("g_F_plus = 0")
    elems = list(ctx.radical) + [ctx.random_radical_element() for _ in range(3)]
    for g in elems:
        k = g.rank() - (g @ g).rank()
        W = image(g).intersect(kernel(g))
        if W.dim != k:
            return Check(FAIL, "im g ∩ ker g does not match the block count")
        if k and not subspace_multiplicity_at_least(ctx.P, W, ctx.d - 1):
            return Check(FAIL, f"P(im g ∩ ker g) is not of multiplicity d-1 (k = {k})")
        if ctx.fixture.has(NO_LINE_HYPOTHESIS) and k > 1:
            return Check(FAIL, f"{k} nonzero Jordan blocks give a line of multiplicity d-1")
    return Check(PASS, f"{len(elems)} elements")


def _square_line_candidate(ctx: Context) -> QMatrix | None:
    R = list(ctx.radical)
    if not R:
        return None
    pool = R + [a + b for a, b in combinations(R, 2)] + [ctx.random_radical_element() for _ in range(4)]
    for f in pool:
        if not (f @ f).is_zero():
            return f
    return None


def check_square_line(ctx: Context) -> Check:
    if ctx.N != 4:
        return _skip("not a surface")
    f = _square_line_candidate(ctx)
    if f is None:
        return _skip("no f in g_F_plus with f^2 != 0")
    f2 = f @ f
    if not (f2 @ f).is_zero() or f2.rank() != 1:
        return _skip("f^3 != 0 or rank f^2 != 1")
    return _ok(verify_power_image_line(ctx.P, f), "hyperplane section at P(im f^2) is not d*L")


def check_expected(ctx: Context, dims: dict, max_nil: int | None, st, qv_points) -> Check:
    exp = ctx.fixture.expect
    if not exp:
        return _skip("no expectations declared")
    actual = dict(dims)
    actual.update(max_nilpotent_rank=max_nil, is_cone=ctx.alg.is_cone, sebastiani_thom=st)
    bad = []
    for k, v in sorted(exp.items()):
        if k == "quasi_vertices":
            want = sorted(ProjPoint(p) for p in v) if v else []
            got = sorted(qv_points or [], key=lambda p: p.coords)
            if [p.coords for p in sorted(want, key=lambda p: p.coords)] != [p.coords for p in got]:
                bad.append(f"quasi_vertices={[str(p) for p in got]}")
        elif actual.get(k) != v:
            bad.append(f"{k}={actual.get(k)} (expected {v})")
    return _ok(not bad, "; ".join(bad), f"{len(exp)} expectations")


# -- report -----------------------------------------------------------------

@dataclass
class AnalysisReport:
    source: str
    nvars: int
    degree: int
    is_cone: bool
    dims: dict
    max_nilpotent_rank: int | None
    sebastiani_thom: bool | None
    quasi_vertices: dict
    point_analyses: list[PointAnalysis]
    theorem_checks: dict[str, Check]
    seed: int = DEFAULT_SEED
    polynomial: str = ""

    @property
    def failures(self) -> list[str]:
        return [k for k, c in self.theorem_checks.items() if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.theorem_checks.values():
            out[c.status] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "source": self.source,
            "polynomial": self.polynomial,
            "nvars": self.nvars,
            "degree": self.degree,
            "seed": self.seed,
            "is_cone": self.is_cone,
            "dims": self.dims,
            "max_nilpotent_rank": self.max_nilpotent_rank,
            "sebastiani_thom": self.sebastiani_thom,
            "quasi_vertices": self.quasi_vertices,
            "point_analyses": [a.as_dict() for a in self.point_analyses],
            "theorem_checks": {k: c.as_dict() for k, c in self.theorem_checks.items()},
        }


def build_context(fx: Fixture, seed: int = DEFAULT_SEED, probes: int = 20) -> Context:
    P = fx.polynomial
    d = check_form(P)
    alg = solve_symmetrizer_algebra(P)
    locus = None if alg.is_cone else rank_one_locus(alg, seed)
    analyses = [analyze_point(P, p) for p in fx.candidate_points]
    return Context(fx, P, d, P.nvars, alg, locus, analyses, seed, probes)


def run_checks(ctx: Context, max_nil: int | None) -> dict[str, Check]:
    always: list[tuple[str, Callable[[Context], Check]]] = [
        ("identity_membership", check_identity_membership),
        ("oracle_agreement", check_oracle_agreement),
        ("point_records", check_point_records),
    ]
    noncone: list[tuple[str, Callable[[Context], Check]]] = [
        ("commutativity", check_commutativity),
        ("closure", check_closure),
        ("radical_nilpotent", check_radical),
        ("fiber_invariance", check_fiber_invariance),
        ("square_zero_image_multiplicity", check_square_zero_image),
        ("multiplicity_probes", check_multiplicity_probes),
        ("quasi_vertex_stabilized", check_stabilized_eigenvector),
        ("rank_one_annihilation", check_rank_one_annihilation),
        ("quasi_vertex_correspondence", check_quasi_vertex_correspondence),
        ("quasi_vertex_uniqueness", check_quasi_vertex_uniqueness),
        ("main_bound_nilpotent", lambda c: check_main_bound_nilpotent(c, max_nil)),
        ("main_bound_group", check_main_bound_group),
        ("inequality_lemma", check_inequality_lemma),
        ("cube_zero", check_cube_zero),
        ("nodal_forces_trivial", check_nodal_forces_trivial),
        ("low_rank_multiplicity", check_low_rank_multiplicity),
        ("quasi_vertex_line_multiplicity", check_quasi_vertex_lines),
        ("lines_through_quasi_vertex", check_lines_through_quasi_vertex),
        ("quasi_vertices_per_line", check_quasi_vertices_per_line),
        ("declared_singular_lines", check_declared_lines),
        ("jordan_blocks", check_jordan_blocks),
        ("square_line", check_square_line),
    ]
    out = {}
    for name, fn in always:
        out[name] = fn(ctx)
    for name, fn in noncone:
        out[name] = _skip("hypersurface is a cone") if ctx.alg.is_cone else fn(ctx)
    return dict(sorted(out.items()))


def analyze_fixture(fx: Fixture, seed: int = DEFAULT_SEED, probes: int = 20) -> AnalysisReport:
    from .parser import render_polynomial

    ctx = build_context(fx, seed, probes)
    alg = ctx.alg
    dims = alg.dims()
    if alg.is_cone:
        max_nil, st, qv = None, None, {"points": [], "exactness": "not-applicable", "irrational": []}
        qv_points = None
    else:
        max_nil = max_rank(list(alg.radical_basis), seed)
        st = alg.sebastiani_thom
        qv_points = [ProjPoint(p) for p in ctx.locus.points]
        qv = {
            "points": [[str(c) for c in p.coords] for p in qv_points],
            "exactness": ctx.locus.exactness,
            "irrational": [{"count": i.count, "minimal_polynomial": i.minimal_polynomial}
                           for i in ctx.locus.irrational],
        }
    checks = run_checks(ctx, max_nil)
    checks["expected_values"] = check_expected(ctx, dims, max_nil, st, qv_points)
    checks = dict(sorted(checks.items()))
    return AnalysisReport(
        source=fx.name,
        nvars=ctx.N,
        degree=ctx.d,
        is_cone=alg.is_cone,
        dims=dims,
        max_nilpotent_rank=max_nil,
        sebastiani_thom=st,
        quasi_vertices=qv,
        point_analyses=ctx.analyses,
        theorem_checks=checks,
        seed=seed,
        polynomial=render_polynomial(fx.polynomial, fx.variables),
    )


# -- pencils ----------------------------------------------------------------

@dataclass
class PencilExperiment:
    endpoints: tuple[str, str]
    samples: list[Fraction]
    dims_along_pencil: list[tuple[Fraction, int | None]]
    skipped: dict = field(default_factory=dict)

    @property
    def semicontinuous(self) -> bool:
        special = self.dims_along_pencil[0][1]
        if special is None:
            return True
        return all(v is None or special >= v for _, v in self.dims_along_pencil[1:])

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "endpoints": list(self.endpoints),
            "samples": [str(s) for s in self.samples],
            "dims_along_pencil": [
                {"t": str(t), "g_F_plus": v, **({"skipped": self.skipped[str(t)]} if str(t) in self.skipped else {})}
                for t, v in self.dims_along_pencil
            ],
            "semicontinuous": self.semicontinuous,
        }


def pencil_member(Pa: MPoly, Pb: MPoly, t) -> MPoly:
    t = Fraction(t)
    return Pa.scale(1 - t) + Pb.scale(t)


def run_pencil(fa: Fixture, fb: Fixture, samples) -> PencilExperiment:
    Pa, Pb = fa.polynomial, fb.polynomial
    if Pa.nvars != Pb.nvars:
        raise ValueError("pencil endpoints have different variable counts")
    da, db = check_form(Pa), check_form(Pb)
    if da != db:
        raise ValueError("pencil endpoints have different degrees")
    samples = [Fraction(s) for s in samples]
    ts = [Fraction(0)] + samples + [Fraction(1)]
    dims, skipped = [], {}
    for t in ts:
        Pt = pencil_member(Pa, Pb, t)
        if Pt.is_zero():
            dims.append((t, None))
            skipped[str(t)] = "zero polynomial"
            continue
        alg = solve_symmetrizer_algebra(Pt)
        if alg.is_cone:
            dims.append((t, None))
            skipped[str(t)] = "cone"
            continue
        dims.append((t, alg.radical_dim))
    return PencilExperiment((fa.name, fb.name), samples, dims, skipped)
