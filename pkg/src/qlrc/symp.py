"""Symplectic structure on GF(q)^(2n).

Vectors use the block layout (a_1 ... a_n | b_1 ... b_n): columns 1..n are
the a-block and columns n+1..2n the b-block, and the form is

    (a|b) *s (c|d)  =  a . d  -  b . c.

Puncturing and shortening act on qudit positions, i.e. on (a_j, b_j) pairs:
both blocks keep the same position set simultaneously.  The symplectic
weight counts positions where the pair is nonzero, and the generalized
symplectic weights are computed from shortenings exactly as defined
(gsw_t = min |J| with dim sigma_J >= t), not from puncturings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyIndexSet,
    FormMismatch,
    NotAQuadraticExtension,
    TOutOfRange,
    ZeroCode,
)
from .code import DEFAULT_BUDGET, IndexSet, LinearCode, hermitian_dot
from .gf import Field
from .matrix import Matrix, dot, kernel, row_space_canonical


@dataclass(frozen=True)
class SymplecticCode:
    """A subspace of GF(q)^(2n) in (a|b) block layout, canonical generator."""

    field: Field
    n: int
    gen: Matrix

    @staticmethod
    def from_rows(field: Field, rows: Iterable[Iterable[int]], n: Optional[int] = None) -> "SymplecticCode":
        rows = [tuple(r) for r in rows]
        if rows:
            if len(rows[0]) % 2:
                raise DimensionMismatch("symplectic vectors have even length")
            n = len(rows[0]) // 2
        elif n is None:
            raise DimensionMismatch("zero code needs an explicit position count")
        gen = row_space_canonical(Matrix(field, rows, cols=2 * n))
        return SymplecticCode(field, n, gen)

    @staticmethod
    def from_matrix(M: Matrix) -> "SymplecticCode":
        if M.cols % 2:
            raise DimensionMismatch("symplectic vectors have even length")
        return SymplecticCode(M.field, M.cols // 2, row_space_canonical(M))

    @staticmethod
    def zero(field: Field, n: int) -> "SymplecticCode":
        return SymplecticCode(field, n, Matrix.empty(field, 2 * n))

    @property
    def dim(self) -> int:
        return self.gen.rows

    def codewords(self) -> Iterator[Tuple[int, ...]]:
        return LinearCode(self.field, 2 * self.n, self.dim, self.gen).codewords()

    def contains_word(self, v: Sequence[int]) -> bool:
        from .matrix import in_row_space
        return in_row_space(self.gen, v)

    def contains_code(self, other: "SymplecticCode") -> bool:
        return all(self.contains_word(r) for r in other.gen.data)

    def as_linear(self) -> LinearCode:
        return LinearCode(self.field, 2 * self.n, self.dim, self.gen)


# ---------------------------------------------------------------------------
# the form
# ---------------------------------------------------------------------------

def symplectic_form(field: Field, x: Sequence[int], y: Sequence[int]) -> int:
    """(a|b) *s (c|d) = a.d - b.c for x=(a|b), y=(c|d)."""
    if len(x) != len(y) or len(x) % 2:
        raise DimensionMismatch("vectors must share an even length")
    n = len(x) // 2
    lhs = dot(field, x[:n], y[n:])
    rhs = dot(field, x[n:], y[:n])
    return field.sub(lhs, rhs)


def _omega(C: SymplecticCode) -> Matrix:
    """Rows (a|b) mapped to (-b|a); x *s y = omega(x) . y."""
    F = C.field
    n = C.n
    rows = [tuple(F.neg(v) for v in r[n:]) + r[:n] for r in C.gen.data]
    return Matrix(F, rows, cols=2 * n)


@lru_cache(maxsize=None)
def dual_symplectic(C: SymplecticCode) -> SymplecticCode:
    """{y : x *s y = 0 for all x in C}; dim C + dim dual = 2n."""
    return SymplecticCode.from_matrix(kernel(_omega(C)))


def is_self_orthogonal(code, form: str) -> bool:
    """All pairwise form values among generator rows vanish.

    ``form`` is one of ``symplectic`` (SymplecticCode), ``euclidean`` or
    ``hermitian`` (LinearCode; hermitian needs GF(q^2)).
    """
    if form == "symplectic":
        if not isinstance(code, SymplecticCode):
            raise FormMismatch("symplectic form needs a SymplecticCode")
        F = code.field
        rows = code.gen.data
        return all(symplectic_form(F, r, s) == 0
                   for i, r in enumerate(rows) for s in rows[i:])
    if form == "euclidean":
        if not isinstance(code, LinearCode):
            raise FormMismatch("euclidean form needs a LinearCode")
        F = code.field
        rows = code.gen.data
        return all(dot(F, r, s) == 0 for i, r in enumerate(rows) for s in rows[i:])
    if form == "hermitian":
        if not isinstance(code, LinearCode):
            raise FormMismatch("hermitian form needs a LinearCode")
        F = code.field
        if F.m % 2:
            raise NotAQuadraticExtension(f"{F!r} is not a quadratic extension")
        rows = code.gen.data
        return all(hermitian_dot(F, r, s) == 0
                   for i, r in enumerate(rows) for s in rows[i:])
    raise FormMismatch(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# paired puncture / shorten
# ---------------------------------------------------------------------------

def _paired_positions(C: SymplecticCode, J: IndexSet) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if not J.members:
        raise EmptyIndexSet("paired operation needs a nonempty position set")
    if J.n != C.n:
        raise DimensionMismatch(f"index set over 1..{J.n}, code has n={C.n}")
    inside = tuple(j - 1 for j in J.members)
    cols = inside + tuple(j + C.n for j in inside)
    comp = tuple(j - 1 for j in J.complement().members)
    out_cols = comp + tuple(j + C.n for j in comp)
    return cols, out_cols


@lru_cache(maxsize=1 << 17)
def puncture_paired(C: SymplecticCode, J: IndexSet) -> SymplecticCode:
    """Keep the (a_j, b_j) pairs at J; output lives in GF(q)^(2|J|)."""
    cols, _ = _paired_positions(C, J)
    return SymplecticCode.from_matrix(C.gen.submatrix_cols(cols))


@lru_cache(maxsize=1 << 17)
def shorten_paired(C: SymplecticCode, J: IndexSet) -> SymplecticCode:
    """Codewords with both blocks supported inside J, projected to 2|J| columns."""
    cols, out_cols = _paired_positions(C, J)
    if C.dim == 0:
        return SymplecticCode.zero(C.field, len(J))
    if not out_cols:
        return puncture_paired(C, J)
    g_out = C.gen.submatrix_cols(out_cols)
    lam = kernel(g_out.transpose())
    return SymplecticCode.from_matrix(lam.mat_mul(C.gen.submatrix_cols(cols)))


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def symplectic_weight(x: Sequence[int]) -> int:
    """Number of positions j with (a_j, b_j) != (0, 0)."""
    if len(x) % 2:
        raise DimensionMismatch("symplectic vectors have even length")
    n = len(x) // 2
    return sum(1 for j in range(n) if x[j] or x[n + j])


def pair_support(x: Sequence[int]) -> Tuple[int, ...]:
    """1-based qudit positions where the (a, b) pair is nonzero."""
    n = len(x) // 2
    return tuple(j + 1 for j in range(n) if x[j] or x[n + j])


def min_symplectic_weight(C: SymplecticCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum symplectic weight over nonzero codewords."""
    if C.dim == 0:
        raise ZeroCode("zero code has no minimum symplectic weight")
    count = C.field.q ** C.dim
    if count <= min(budget, 1 << 20):
        best = 2 * C.n
        first = True
        for w in C.codewords():
            if first:
                first = False
                continue
            best = min(best, symplectic_weight(w))
            if best == 1:
                return 1
        return best
    # paired column-dependency scan: smallest |S| with sigma_S(C) nonzero
    for size in range(1, C.n + 1):
        if comb(C.n, size) > budget:
            raise BudgetExceeded(f"C({C.n},{size}) position sets exceed budget {budget}")
        for pos in combinations(range(1, C.n + 1), size):
            if shorten_paired(C, IndexSet(C.n, pos)).dim >= 1:
                return size
    raise ZeroCode("no nonzero codeword found")  # pragma: no cover


def gsw(C: SymplecticCode, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """t-th generalized symplectic weight: min |J| with dim sigma_J(C) >= t."""
    if not 1 <= t <= C.dim:
        raise TOutOfRange(f"t={t} outside 1..{C.dim}")
    return gsw_hierarchy(C, t, budget)[t - 1]


def gsw_hierarchy(C: SymplecticCode, t_max: int, budget: int = DEFAULT_BUDGET) -> Tuple[int, ...]:
    """(gsw_1, ..., gsw_t_max), scanning position sets by increasing size."""
    if not 1 <= t_max <= C.dim:
        raise TOutOfRange(f"t_max={t_max} outside 1..{C.dim}")
    out: list[Optional[int]] = [None] * t_max
    found = 0
    for size in range(1, C.n + 1):
        if comb(C.n, size) > budget:
            raise BudgetExceeded(f"C({C.n},{size}) position sets exceed budget {budget}")
        for pos in combinations(range(1, C.n + 1), size):
            dim = shorten_paired(C, IndexSet(C.n, pos)).dim
            for t in range(found, min(dim, t_max)):
                if out[t] is None:
                    out[t] = size
            while found < t_max and out[found] is not None:
                found += 1
            if found == t_max:
                return tuple(out)  # type: ignore[arg-type]
    raise TOutOfRange("hierarchy incomplete")  # pragma: no cover


# ---------------------------------------------------------------------------
# constructions on symplectic codes
# ---------------------------------------------------------------------------

def css_product(C1: LinearCode, C2: LinearCode) -> SymplecticCode:
    """{(a|b) : a in C1, b in C2} as a symplectic code."""
    if C1.field != C2.field or C1.n != C2.n:
        raise DimensionMismatch("product needs codes of the same field and length")
    n = C1.n
    zeros = (0,) * n
    rows = [r + zeros for r in C1.gen.data] + [zeros + r for r in C2.gen.data]
    return SymplecticCode.from_rows(C1.field, rows, n=n)


def max_isotropic_extension(C: SymplecticCode, budget: int = DEFAULT_BUDGET) -> SymplecticCode:
    """A self-dual code C_max with C <= C_max = C_max^perp_s <= C^perp_s.

    Greedy: repeatedly adjoin the first (ascending codeword order) vector of
    the current dual that also lies in C^perp_s, until the dimension is n.
    Deterministic because the candidate order is fixed.
    """
    if not is_self_orthogonal(C, "symplectic"):
        raise FormMismatch("extension needs a symplectic self-orthogonal code")
    current = C
    dual_C = dual_symplectic(C)
    while current.dim < C.n:
        cur_dual = dual_symplectic(current)
        # candidates live in cur_dual intersect C^perp_s
        from .matrix import intersect_row_spaces
        cand = SymplecticCode.from_matrix(
            intersect_row_spaces(cur_dual.gen, dual_C.gen))
        if cand.field.q ** cand.dim > budget:
            raise BudgetExceeded("candidate space too large to enumerate")
        picked = None
        for w in cand.codewords():
            if any(w) and not current.contains_word(w):
                picked = w
                break
        if picked is None:  # pragma: no cover - extension always exists
            raise ZeroCode("no extension vector found")
        current = SymplecticCode.from_rows(
            C.field, current.gen.data + (picked,), n=C.n)
    return current
