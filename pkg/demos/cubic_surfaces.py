"""Nilpotent symmetrizers of singular cubic surfaces.

The dimension of g_F_plus separates E6 (2), D4/D5 (1) and surfaces with a
node (0).  Reads the fixture corpus, so run it from the repo root.
"""

from pathlib import Path

from symmetrizer import analyze_point, load_fixture, solve_symmetrizer_algebra

names = ["e6_cubic_surface", "d5_cubic_surface", "d4_cubic_surface", "nodal_cubic", "cayley_cubic",
         "fermat_cubic_surface", "random_dense_cubic"]
print(f"{'surface':22} {'g_F':>4} {'g_F+':>5}  singular candidates (mult, corank)")
for name in names:
    fx = load_fixture(Path("fixtures") / f"{name}.poly")
    alg = solve_symmetrizer_algebra(fx.polynomial)
    sing = [analyze_point(fx.polynomial, p) for p in fx.candidate_points]
    sing = [f"{a.point} ({a.multiplicity}, {a.corank})" for a in sing if a.multiplicity >= 2]
    print(f"{name:22} {alg.dim:>4} {alg.radical_dim:>5}  {', '.join(sing) or '-'}")
