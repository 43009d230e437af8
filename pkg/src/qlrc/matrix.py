"""Dense exact linear algebra over a finite field.

Matrices are immutable values: entries are integer-encoded field elements
held in a tuple of row tuples.  Reduction is plain Gauss-Jordan with the
first nonzero entry (scanning top to bottom) as pivot; over an exact field
there is no magnitude pivoting, and the fixed scan order makes every result
deterministic.

The canonical representative of a row space is its RREF with zero rows
dropped, so subspace equality is a plain comparison of canonical forms.
The empty subspace is the 0 x n matrix, which is a real value distinct
from "absent".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch
from .gf import Field

Row = Tuple[int, ...]


class Matrix:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field: Field, data: Iterable[Iterable[int]], cols: Optional[int] = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise DimensionMismatch("ragged rows")
        elif cols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.data = rows
        self._hash = hash((field, cols, rows))

    # -- constructors --

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        return Matrix(field, [[0] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def empty(field: Field, cols: int) -> "Matrix":
        return Matrix(field, [], cols=cols)

    # -- value semantics --

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self.data[ij[0]][ij[1]]

    def row(self, i: int) -> Row:
        return self.data[i]

    def column(self, j: int) -> Row:
        return tuple(r[j] for r in self.data)

    # -- basic operations --

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix(self.field, [() for _ in range(self.cols)], cols=0)
        return Matrix(self.field, zip(*self.data), cols=self.rows)

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.cols != self.cols or other.field != self.field:
            raise DimensionMismatch("vstack shape mismatch")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def submatrix_cols(self, cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [tuple(r[j] for j in cols) for r in self.data],
                      cols=len(cols))

    def mat_mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows or self.field != other.field:
            raise DimensionMismatch("matmul shape mismatch")
        F = self.field
        if self.rows == 0:
            return Matrix.empty(F, other.cols)
        if other.rows == 0:
            return Matrix.zeros(F, self.rows, other.cols)
        ot = tuple(zip(*other.data))
        out = [tuple(dot(F, r, c) for c in ot) for r in self.data]
        return Matrix(F, out, cols=other.cols)

    def mul_vec(self, v: Sequence[int]) -> Row:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        F = self.field
        return tuple(dot(F, r, v) for r in self.data)


def dot(field: Field, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def rref(M: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and its (0-based, increasing) pivot columns."""
    F = M.field
    rows = [list(r) for r in M.data]
    nrows, ncols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = F.inv(rows[r][c])
        if inv != 1:
            rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(F, rows, cols=ncols), tuple(pivots)


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def row_space_canonical(M: Matrix) -> Matrix:
    """RREF with zero rows dropped: the unique representative of the row space."""
    R, pivots = rref(M)
    return Matrix(M.field, R.data[:len(pivots)], cols=M.cols)


def kernel(M: Matrix) -> Matrix:
    """Basis (as rows) of the right null space {x : M x^T = 0}.

    Returns a (cols - rank) x cols matrix in canonical form; the full space
    comes back as the identity when M has no rows.
    """
    R, pivots = rref(M)
    F = M.field
    n = M.cols
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = F.neg(R.data[i][f])
        basis.append(vec)
    if not basis:
        return Matrix.empty(F, n)
    return row_space_canonical(Matrix(F, basis, cols=n))


@dataclass(frozen=True)
class SolveResult:
    """Classification of the solution set of M x^T = s^T."""

    status: str                      # "unique" | "none" | "many"
    particular: Optional[Row] = None
    kernel_basis: Optional[Matrix] = None

    @property
    def is_unique(self) -> bool:
        return self.status == "unique"


def solve(M: Matrix, s: Sequence[int]) -> SolveResult:
    """Exact solution classification of the linear system M x^T = s^T."""
    if len(s) != M.rows:
        raise DimensionMismatch(f"rhs length {len(s)} != rows {M.rows}")
    F = M.field
    n = M.cols
    aug = Matrix(F, [row + (si,) for row, si in zip(M.data, s)], cols=n + 1)
    if M.rows == 0:
        aug = Matrix.empty(F, n + 1)
    R, pivots = rref(aug)
    if n in pivots:
        return SolveResult("none")
    x = [0] * n
    for i, pc in enumerate(pivots):
        x[pc] = R.data[i][n]
    if len(pivots) == n:
        return SolveResult("unique", tuple(x))
    return SolveResult("many", tuple(x), kernel(M))


def subspace_equal(A: Matrix, B: Matrix) -> bool:
    """True iff the row spaces of A and B coincide."""
    if A.field != B.field or A.cols != B.cols:
        raise DimensionMismatch("subspace comparison needs same field and length")
    return row_space_canonical(A) == row_space_canonical(B)


def in_row_space(M: Matrix, v: Sequence[int]) -> bool:
    """True iff v lies in the row space of M."""
    if len(v) != M.cols:
        raise DimensionMismatch("vector length mismatch")
    if M.rows == 0:
        return not any(v)
    return solve(M.transpose(), v).status != "none"


def intersect_row_spaces(A: Matrix, B: Matrix) -> Matrix:
    """Canonical basis of the intersection of two row spaces."""
    if A.field != B.field or A.cols != B.cols:
        raise DimensionMismatch("intersection needs same field and length")
    # x in both spans  <=>  x is orthogonal to both kernels' duals; compute via
    # kernel of the stacked dual systems: span(A) = ker(K_A) with K_A = kernel(A).
    ka = kernel(A)
    kb = kernel(B)
    stacked = ka.vstack(kb)
    return kernel(stacked)
