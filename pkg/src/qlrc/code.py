"""Classical linear codes over GF(q).

A :class:`LinearCode` is an [n, k] subspace held by its canonical generator
matrix (RREF with zero rows dropped), so two objects describe the same code
iff their generators are equal.  Index sets follow the keep convention
throughout: ``R`` names the coordinates that survive puncturing/shortening,
and indices are 1-based on the public surface.

Distance and weight computations are exact and budgeted.  The ``enumerate``
strategy walks all q^k codewords; the ``dependency`` strategy looks for the
smallest w such that w columns of a parity-check matrix are linearly
dependent, scanning w = 1, 2, ... with subset enumeration.  Either raises
:class:`~qlrc.errors.BudgetExceeded` instead of running away.
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
    NotAQuadraticExtension,
    ZeroCode,
)
from .gf import Field
from .matrix import Matrix, kernel, row_space_canonical

DEFAULT_BUDGET = 1 << 26


# ---------------------------------------------------------------------------
# index sets (1-based, sorted, duplicate-free; these are the KEPT coordinates)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IndexSet:
    """Sorted duplicate-free subset of {1, ..., n}."""

    n: int
    members: Tuple[int, ...]

    @staticmethod
    def of(n: int, members: Iterable[int]) -> "IndexSet":
        ms = tuple(sorted(set(int(i) for i in members)))
        if ms and (ms[0] < 1 or ms[-1] > n):
            raise DimensionMismatch(f"indices {ms} out of range 1..{n}")
        return IndexSet(n, ms)

    @staticmethod
    def full(n: int) -> "IndexSet":
        return IndexSet(n, tuple(range(1, n + 1)))

    def complement(self) -> "IndexSet":
        inside = set(self.members)
        return IndexSet(self.n, tuple(i for i in range(1, self.n + 1) if i not in inside))

    def union(self, other: "IndexSet") -> "IndexSet":
        return IndexSet.of(self.n, self.members + other.members)

    def is_subset(self, other: "IndexSet") -> bool:
        return set(self.members) <= set(other.members)

    def positions(self) -> Tuple[int, ...]:
        """0-based column positions."""
        return tuple(i - 1 for i in self.members)

    def relative_to(self, J: "IndexSet") -> "IndexSet":
        """Re-index the members of self as positions inside J (1-based).

        Used when a set of original coordinates must be addressed inside a
        J-punctured code.
        """
        lookup = {idx: pos + 1 for pos, idx in enumerate(J.members)}
        try:
            return IndexSet(len(J), tuple(lookup[i] for i in self.members))
        except KeyError as exc:
            raise DimensionMismatch(f"{self} is not contained in {J}") from exc

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __repr__(self) -> str:
        return f"IndexSet({set(self.members) if self.members else '{}'} of 1..{self.n})"


# ---------------------------------------------------------------------------
# linear codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearCode:
    """An [n, k]_q linear code with canonical (RREF) generator matrix."""

    field: Field
    n: int
    k: int
    gen: Matrix

    @staticmethod
    def from_rows(field: Field, rows: Iterable[Iterable[int]], n: Optional[int] = None) -> "LinearCode":
        rows = [tuple(r) for r in rows]
        if rows:
            n = len(rows[0])
        elif n is None:
            raise DimensionMismatch("zero code needs an explicit length")
        gen = row_space_canonical(Matrix(field, rows, cols=n))
        return LinearCode(field, n, gen.rows, gen)

    @staticmethod
    def from_matrix(M: Matrix) -> "LinearCode":
        gen = row_space_canonical(M)
        return LinearCode(M.field, M.cols, gen.rows, gen)

    @staticmethod
    def zero(field: Field, n: int) -> "LinearCode":
        return LinearCode(field, n, 0, Matrix.empty(field, n))

    @staticmethod
    def full(field: Field, n: int) -> "LinearCode":
        return LinearCode.from_matrix(Matrix.identity(field, n))

    def contains_word(self, v: Sequence[int]) -> bool:
        from .matrix import in_row_space
        return in_row_space(self.gen, v)

    def contains_code(self, other: "LinearCode") -> bool:
        return all(self.contains_word(r) for r in other.gen.data)

    def __le__(self, other: "LinearCode") -> bool:
        return other.contains_code(self)

    def codewords(self) -> Iterator[Tuple[int, ...]]:
        """All q^k codewords in ascending message order (message digits are
        little-endian base-q over the generator rows).

        Digit values are coefficient encodings, so a digit step from t to
        t+1 changes the word by (t+1 - t) * row in FIELD arithmetic; over
        extension fields that difference is looked up per step.
        """
        F = self.field
        q = F.q
        word = (0,) * self.n
        yield word
        if self.k == 0:
            return
        digits = [0] * self.k
        scaled = [[tuple(F.mul(c, x) for x in row) for c in range(q)]
                  for row in self.gen.data]
        for _ in range(q ** self.k - 1):
            i = 0
            while True:
                old = digits[i]
                new = 0 if old == q - 1 else old + 1
                digits[i] = new
                srow = scaled[i][F.sub(new, old)]
                word = tuple(F.add(w, s) for w, s in zip(word, srow))
                if new:
                    break
                i += 1
            yield word


def weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def support(v: Sequence[int]) -> Tuple[int, ...]:
    """1-based support of a word."""
    return tuple(i + 1 for i, x in enumerate(v) if x)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def dual_euclidean(C: LinearCode) -> LinearCode:
    """Euclidean dual: the kernel of the generator matrix."""
    return LinearCode.from_matrix(kernel(C.gen))


@lru_cache(maxsize=None)
def dual_hermitian(C: LinearCode) -> LinearCode:
    """Hermitian dual over GF(q^2): Euclidean kernel of the entrywise
    q-th power of the generator."""
    F = C.field
    if F.m % 2:
        raise NotAQuadraticExtension(f"{F!r} is not a quadratic extension")
    conj_gen = Matrix(F, [[F.conj(x) for x in row] for row in C.gen.data], cols=C.n)
    if C.k == 0:
        conj_gen = Matrix.empty(F, C.n)
    return LinearCode.from_matrix(kernel(conj_gen))


def hermitian_dot(F: Field, a: Sequence[int], b: Sequence[int]) -> int:
    """sum_j a_j * b_j^q over GF(q^2)."""
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add(acc, F.mul(x, F.conj(y)))
    return acc


# ---------------------------------------------------------------------------
# puncture / shorten (keep convention)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 17)
def puncture(C: LinearCode, R: IndexSet) -> LinearCode:
    """Projection of C onto the coordinates in R."""
    if not R.members:
        raise EmptyIndexSet("puncture needs a nonempty index set")
    return LinearCode.from_matrix(C.gen.submatrix_cols(R.positions()))


@lru_cache(maxsize=1 << 17)
def shorten(C: LinearCode, R: IndexSet) -> LinearCode:
    """Codewords supported inside R, projected onto R.

    Computed by intersecting the row space with the coordinate subspace
    {x : x_j = 0 for j outside R} and then projecting: the combinations of
    generator rows vanishing outside R are the kernel of the outside-column
    block, transposed.
    """
    if not R.members:
        raise EmptyIndexSet("shorten needs a nonempty index set")
    outside = R.complement().positions()
    if C.k == 0:
        return LinearCode.zero(C.field, len(R))
    if not outside:
        return puncture(C, R)
    g_out = C.gen.submatrix_cols(outside)
    lam = kernel(g_out.transpose())       # rows: coefficient vectors over gen rows
    inside_rows = lam.mat_mul(C.gen.submatrix_cols(R.positions()))
    return LinearCode.from_matrix(inside_rows)


# ---------------------------------------------------------------------------
# codeword enumeration (bulk)
# ---------------------------------------------------------------------------

def iter_codeword_blocks(gen_rows: Sequence[Sequence[int]], q: int,
                         chunk: int = 1 << 16):
    """Yield (start_index, block) numpy arrays of codewords over a prime field.

    Messages are ascending base-q integers (little-endian digits over the
    generator rows), matching :meth:`LinearCode.codewords` order.
    """
    import numpy as np

    G = np.array(gen_rows, dtype=np.int64)
    k = G.shape[0]
    total = q ** k
    radix = q ** np.arange(k, dtype=np.int64)
    start = 0
    while start < total:
        stop = min(total, start + chunk)
        msgs = (np.arange(start, stop, dtype=np.int64)[:, None] // radix) % q
        yield start, (msgs @ G) % q
        start = stop


def min_weight_enumerate(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight by full codeword enumeration (q^k messages)."""
    if C.k == 0:
        raise ZeroCode("zero code has no minimum weight")
    count = C.field.q ** C.k
    if count > budget:
        raise BudgetExceeded(f"enumerating {count} codewords exceeds budget {budget}")
    if C.field.m == 1:
        import numpy as np

        best = C.n + 1
        for start, block in iter_codeword_blocks(C.gen.data, C.field.q):
            weights = np.count_nonzero(block, axis=1)
            if start == 0:
                weights[0] = C.n + 1  # mask the zero word
            best = min(best, int(weights.min()))
        return best
    best = C.n + 1
    first = True
    for w in C.codewords():
        if first:
            first = False
            continue
        wt = weight(w)
        if wt and wt < best:
            best = wt
    return best


def _columns_dependent(F: Field, H: Matrix, cols: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """If the chosen columns of H are dependent, return one dependency
    (coefficients, not all zero, summing the columns to 0); else None."""
    sub = H.submatrix_cols(cols)
    ker = kernel(sub)
    if ker.rows == 0:
        return None
    return ker.data[0]


def min_weight_dependency(C: LinearCode, budget: int = DEFAULT_BUDGET,
                          max_w: Optional[int] = None) -> Tuple[int, Tuple[int, ...]]:
    """Minimum weight via the parity-check column-dependency scan.

    Returns (d, witness codeword).  The scan visits supports in ascending
    (size, lexicographic) order, so the witness is deterministic.
    """
    if C.k == 0:
        raise ZeroCode("zero code has no minimum weight")
    H = dual_euclidean(C).gen
    n = C.n
    top = max_w if max_w is not None else n
    for w in range(1, top + 1):
        if comb(n, w) > budget:
            raise BudgetExceeded(f"C({n},{w}) supports exceed budget {budget}")
        for cols in combinations(range(n), w):
            coeffs = _columns_dependent(C.field, H, cols)
            if coeffs is None:
                continue
            word = [0] * n
            for pos, coef in zip(cols, coeffs):
                word[pos] = coef
            # dependency of < w columns would have been found at a lower level,
            # so every coefficient here is nonzero and the weight is exactly w
            return w, tuple(word)
    raise ZeroCode("no nonzero codeword found")  # pragma: no cover


def min_distance(C: LinearCode, strategy: str = "auto", budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming distance.

    ``enumerate`` iterates all q^k codewords, ``dependency`` scans parity
    column supports by increasing size, ``auto`` picks whichever fits the
    budget (preferring enumeration when q^k is small).
    """
    if C.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    if strategy == "auto":
        strategy = "enumerate" if C.field.q ** C.k <= min(budget, 1 << 20) else "dependency"
    if strategy == "enumerate":
        return min_weight_enumerate(C, budget)
    if strategy == "dependency":
        return min_weight_dependency(C, budget)[0]
    raise ValueError(f"unknown strategy {strategy!r}")


def distance_witness(C: LinearCode, budget: int = DEFAULT_BUDGET) -> Tuple[int, Tuple[int, ...]]:
    """(d, codeword of weight d) with a deterministic witness."""
    return min_weight_dependency(C, budget)


# ---------------------------------------------------------------------------
# generalized Hamming weights
# ---------------------------------------------------------------------------

def generalized_hamming_weights(C: LinearCode, t_max: int,
                                budget: int = DEFAULT_BUDGET) -> Tuple[int, ...]:
    """(w_1, ..., w_t_max) with w_t = min{|J| : dim sigma_J(C) >= t}.

    Subsets are scanned in increasing cardinality, then lexicographically.
    """
    from .errors import TOutOfRange

    if not 1 <= t_max <= C.k:
        raise TOutOfRange(f"t_max must be in 1..{C.k}")
    out: list[Optional[int]] = [None] * t_max
    found = 0
    for size in range(1, C.n + 1):
        if comb(C.n, size) > budget:
            raise BudgetExceeded(f"C({C.n},{size}) subsets exceed budget {budget}")
        for cols in combinations(range(1, C.n + 1), size):
            J = IndexSet(C.n, cols)
            dim = shorten(C, J).k
            for t in range(found, min(dim, t_max)):
                if out[t] is None:
                    out[t] = size
            while found < t_max and out[found] is not None:
                found += 1
            if found == t_max:
                return tuple(out)  # type: ignore[arg-type]
    raise ZeroCode("hierarchy incomplete")  # pragma: no cover
