"""Exact symmetrizer algebras of homogeneous polynomials."""

from .algebra import (
    DEFAULT_SEED,
    CertificationError,
    ConeError,
    SymmetrizerAlgebra,
    apply_symmetrizer,
    hessian_matrix,
    is_cone,
    is_symmetrizer_oracle,
    jacobian_span,
    max_rank,
    random_dense_form,
    rank_one_locus,
    solve_symmetrizer_algebra,
)
from .linalg import QMatrix, Subspace, rref_nullspace
from .parser import Fixture, ParseError, PolySource, load_fixture, parse, parse_fixture, parse_polynomial, render_polynomial
from .poly import MPoly
from .singularity import PointAnalysis, ProjPoint, analyze_point, multiplicity_at
from .verify import AnalysisReport, PencilExperiment, analyze_fixture, run_pencil

__all__ = [
    "DEFAULT_SEED", "CertificationError", "ConeError", "SymmetrizerAlgebra", "apply_symmetrizer",
    "hessian_matrix", "is_cone", "is_symmetrizer_oracle", "jacobian_span", "max_rank",
    "random_dense_form", "rank_one_locus", "solve_symmetrizer_algebra", "QMatrix", "Subspace",
    "rref_nullspace", "Fixture", "ParseError", "PolySource", "load_fixture", "parse",
    "parse_fixture", "parse_polynomial", "render_polynomial", "MPoly", "PointAnalysis",
    "ProjPoint", "analyze_point", "multiplicity_at", "AnalysisReport", "PencilExperiment",
    "analyze_fixture", "run_pencil",
]
