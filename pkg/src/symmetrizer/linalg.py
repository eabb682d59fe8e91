"""Dense exact rational matrices.

Row reduction runs fraction-free (Bareiss) on integer rows and only drops to
fractions for the final back substitution, so canonical RREF forms come out
without intermediate coefficient blow-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .poly import as_fraction


class QMatrix:
    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_fraction(v) for v in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "QMatrix":
        n = m if n is None else n
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "QMatrix":
        """The matrix unit ``E_ij`` of size ``n``."""
        return cls([[int(r == i and c == j) for c in range(n)] for r in range(n)])

    @classmethod
    def from_vec(cls, vec: Sequence, n: int) -> "QMatrix":
        """Inverse of :meth:`vec` for an ``n x n`` matrix (row-major)."""
        if len(vec) != n * n:
            raise ValueError("vector length does not match matrix size")
        return cls([vec[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def column(cls, vec: Sequence) -> "QMatrix":
        return cls([[v] for v in vec])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def vec(self) -> tuple[Fraction, ...]:
        return tuple(v for r in self.rows for v in r)

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self.rows))

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c) -> "QMatrix":
        if isinstance(c, QMatrix):
            return self @ c
        c = as_fraction(c)
        return QMatrix([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return QMatrix([[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols]
                        for r in self.rows])

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix times a plain vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        v = [as_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"QMatrix([{body}])"

    def rank(self) -> int:
        return len(rref(self.rows)[1])

    def normalized(self) -> "QMatrix":
        """Scalar multiple whose first nonzero entry (row-major) is 1."""
        for v in self.vec():
            if v:
                return self * (1 / v)
        return self


# -- row reduction ----------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [as_fraction(v) for v in r]
        den = lcm(*(v.denominator for v in fr)) if fr else 1
        out.append([int(v * den) for v in fr])
    return out


def bareiss_echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the integer echelon rows (nonzero rows first) and the pivot
    columns.  Every division in the elimination is exact.
    """
    A = _integer_rows(rows)
    m = len(A)
    n = len(A[0]) if A else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        row_r = A[r]
        for i in range(r + 1, m):
            row_i = A[i]
            a_ic = row_i[c]
            for j in range(c + 1, n):
                num = piv * row_i[j] - a_ic * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return A, pivots


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form: (nonzero RREF rows, pivot columns)."""
    if not rows:
        return [], []
    A, pivots = bareiss_echelon(rows)
    R = [[Fraction(v) for v in A[k]] for k in range(len(pivots))]
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        inv = 1 / R[k][c]
        R[k] = [v * inv for v in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [a - f * b for a, b in zip(R[i], R[k])]
    return R, pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``Q^ambient_dim`` with its canonical RREF basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [tuple(as_fraction(v) for v in vec) for vec in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length does not match ambient dimension")
        if not vecs:
            return cls(ambient_dim, ())
        R, _ = rref(vecs)
        return cls(ambient_dim, tuple(tuple(r) for r in R))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = [as_fraction(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        return Subspace.span(list(self.basis) + [v], self.ambient_dim).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient_dim).dim == self.dim

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        """Coefficients of ``v`` in the canonical basis, or None if outside."""
        if not self.contains(v):
            return None
        _, pivots = rref(self.basis) if self.basis else ([], [])
        # RREF basis: the coefficient of basis[k] is v at pivot column k
        return [as_fraction(v[c]) for c in pivots]

    def vectors(self) -> list["QMatrix"]:
        return [QMatrix.column(b) for b in self.basis]

    def orthogonal_complement(self) -> "Subspace":
        """Annihilator under the standard pairing (linear forms vanishing here)."""
        if not self.basis:
            return Subspace.span(
                [[int(i == j) for j in range(self.ambient_dim)] for i in range(self.ambient_dim)],
                self.ambient_dim)
        return nullspace(self.basis, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the annihilator of the sum of annihilators."""
        ann = list(self.orthogonal_complement().basis) + list(other.orthogonal_complement().basis)
        if not ann:
            return Subspace.span(
                [[int(i == j) for j in range(self.ambient_dim)] for i in range(self.ambient_dim)],
                self.ambient_dim)
        return nullspace(ann, self.ambient_dim)


def nullspace(rows: Sequence[Sequence], ncols: int) -> Subspace:
    """Right kernel of the matrix with the given rows."""
    R, pivots = rref(rows) if rows else ([], [])
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R[k][f]
        vecs.append(v)
    return Subspace.span(vecs, ncols)


def rref_nullspace(M: QMatrix) -> tuple[int, Subspace]:
    R, pivots = rref(M.rows)
    return len(pivots), nullspace(M.rows, M.ncols)


def row_space(rows: Sequence[Sequence], ncols: int) -> Subspace:
    return Subspace.span(rows, ncols)


def rank(M: QMatrix | Sequence[Sequence]) -> int:
    rows = M.rows if isinstance(M, QMatrix) else M
    if not rows:
        return 0
    return len(bareiss_echelon(rows)[1])


def _require_square(A: QMatrix) -> int:
    if not A.is_square():
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A.nrows


def matrix_power(A: QMatrix, k: int) -> QMatrix:
    n = _require_square(A)
    if k < 0:
        raise ValueError("negative matrix power")
    result = QMatrix.identity(n)
    base = A
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def nilpotency_index(A: QMatrix) -> int | None:
    """Least ``k`` with ``A^k = 0``, or None when ``A`` is not nilpotent."""
    n = _require_square(A)
    P = A
    for k in range(1, n + 1):
        if P.is_zero():
            return k
        P = P @ A
    return None


def is_nilpotent(A: QMatrix) -> bool:
    return nilpotency_index(A) is not None


def jordan_block_profile(A: QMatrix) -> list[int]:
    """Jordan block sizes of a nilpotent matrix, largest first.

    The number of blocks of size at least ``s`` is
    ``rank(A^(s-1)) - rank(A^s)``.
    """
    n = _require_square(A)
    idx = nilpotency_index(A)
    if idx is None:
        raise ValueError("matrix is not nilpotent")
    ranks = [n]
    P = QMatrix.identity(n)
    for _ in range(idx):
        P = P @ A
        ranks.append(P.rank())
    at_least = [ranks[s - 1] - ranks[s] for s in range(1, idx + 1)] + [0]
    sizes = []
    for s in range(idx, 0, -1):
        sizes += [s] * (at_least[s - 1] - at_least[s])
    return sizes


def trace_gram(basis: Sequence[QMatrix]) -> QMatrix:
    if not basis:
        raise ValueError("empty basis")
    n = _require_square(basis[0])
    if any(b.shape != (n, n) for b in basis):
        raise ValueError("all matrices must be square of the same size")
    m = len(basis)
    G = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            G[i][j] = G[j][i] = (basis[i] @ basis[j]).trace()
    return QMatrix(G)


def image(A: QMatrix) -> Subspace:
    """Column space of ``A``."""
    return Subspace.span(A.transpose().rows, A.nrows)


def kernel(A: QMatrix) -> Subspace:
    return nullspace(A.rows, A.ncols)


def linear_combination(coeffs: Sequence, mats: Sequence[QMatrix]) -> QMatrix:
    if not mats:
        raise ValueError("empty combination")
    out = QMatrix.zeros(*mats[0].shape)
    for c, M in zip(coeffs, mats):
        c = as_fraction(c)
        if c:
            out = out + M * c
    return out


def span_of_matrices(mats: Sequence[QMatrix], n: int) -> Subspace:
    return Subspace.span([M.vec() for M in mats], n * n)


def matrices_of(space: Subspace, n: int) -> list[QMatrix]:
    return [QMatrix.from_vec(b, n) for b in space.basis]
