"""Independent brute-force ground truth.

Everything here decodes or checks by explicit enumeration and a private
Gaussian-elimination routine.  None of it calls the reduction code in
``qlrc.matrix``: the point of these oracles is to validate the fast
criteria, so they must not share the code paths they are validating
(field arithmetic is the only shared layer).

* ``erasure_decode`` solves the classical erasure system against a parity
  check of C; the solution is unique exactly when no nonzero codeword is
  supported inside the erased set.
* ``symplectic_erasure_decode`` solves the syndrome system of the standard
  stabilizer erasure decoder: unknown (a|b) supported pairwise in I with
  prescribed symplectic products against a basis of C, success meaning the
  solutions form a single coset of C.
* ``exhaustive_ij_check`` runs that decoder logic on the code shortened to
  J purely by codeword enumeration, with no subspace algebra at all, and
  must agree with the fast (I, J) criterion on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, EmptyIndexSet, SyndromeLengthMismatch
from .code import IndexSet, LinearCode
from .gf import Field
from .symp import SymplecticCode

ORACLE_BUDGET = 1 << 24


# ---------------------------------------------------------------------------
# private elimination (row echelon + back substitution; no shared code)
# ---------------------------------------------------------------------------

def _echelon(rows: List[List[int]], ncols: int, F: Field) -> List[int]:
    """In-place row echelon form; returns the pivot column of each row."""
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        hit = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                hit = i
                break
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    del rows[r:]
    return pivots


def _solve_affine(A: Sequence[Sequence[int]], b: Sequence[int], F: Field,
                  ncols: Optional[int] = None
                  ) -> Tuple[str, Optional[List[int]], List[List[int]]]:
    """Solve A x = b; returns (status, particular, null basis).

    status is "none", "unique", or "many".  Free variables are set to zero
    in the particular solution (back substitution on the echelon form).
    """
    if ncols is None:
        if not A:
            raise ValueError("empty system needs an explicit column count")
        ncols = len(A[0])
    rows = [list(row) + [bi] for row, bi in zip(A, b)]
    pivots = _echelon(rows, ncols + 1, F)
    if ncols in pivots:
        return "none", None, []
    x = [0] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        acc = rows[i][ncols]
        for j in range(c + 1, ncols):
            if rows[i][j] and x[j]:
                acc = F.sub(acc, F.mul(rows[i][j], x[j]))
        x[c] = acc
    pivot_set = set(pivots)
    null: List[List[int]] = []
    for f in [j for j in range(ncols) if j not in pivot_set]:
        vec = [0] * ncols
        vec[f] = 1
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            acc = 0
            for j in range(c + 1, ncols):
                if rows[i][j] and vec[j]:
                    acc = F.sub(acc, F.mul(rows[i][j], vec[j]))
            vec[c] = acc
        null.append(vec)
    return ("unique" if not null else "many"), x, null


def _nullspace(rows_in: Sequence[Sequence[int]], ncols: int, F: Field) -> List[List[int]]:
    """Basis of {x : R x = 0} using the private elimination."""
    if not rows_in:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    status, _, null = _solve_affine(rows_in, [0] * len(rows_in), F)
    assert status != "none"
    return null


def _in_span(rows: Sequence[Sequence[int]], v: Sequence[int], F: Field) -> bool:
    """Membership of v in the row span, via the private solver."""
    if not rows:
        return not any(v)
    cols = [[row[j] for row in rows] for j in range(len(v))]
    status, _, _ = _solve_affine(cols, list(v), F)
    return status != "none"


def _enumerate_span(rows: Sequence[Sequence[int]], length: int, F: Field):
    """All vectors in the span, by an ascending base-q odometer.

    Digit steps are translated to field differences, so extension-field
    coefficients are enumerated exactly (not just the prime-subfield span).
    """
    q = F.q
    word = tuple([0] * length)
    yield word
    if not rows:
        return
    digits = [0] * len(rows)
    scaled = [[tuple(F.mul(c, x) for x in row) for c in range(q)] for row in rows]
    for _ in range(q ** len(rows) - 1):
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


# ---------------------------------------------------------------------------
# classical erasure decoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecodeResult:
    status: str                       # recovered | ambiguous | inconsistent
    word: Optional[Tuple[int, ...]] = None

    @property
    def recovered(self) -> bool:
        return self.status == "recovered"


def erasure_decode(C: LinearCode, received: Sequence[Optional[int]],
                   I: IndexSet) -> DecodeResult:
    """Solve for the erased symbols of a received word.

    ``received`` has None exactly at the positions of I.  The erased values
    are the unknowns of the parity system; a unique solution means the
    erasure pattern is correctable (equivalently sigma_I(C) = {0}).
    """
    if not I.members:
        raise EmptyIndexSet("erasure set must be nonempty")
    if len(received) != C.n:
        raise SyndromeLengthMismatch(f"received word must have length {C.n}")
    erased = set(I.positions())
    if any((received[j] is None) != (j in erased) for j in range(C.n)):
        raise SyndromeLengthMismatch("erasures must sit exactly at I")
    F = C.field
    H = _nullspace(C.gen.data, C.n, F)
    cols = sorted(erased)
    A = [[h[j] for j in cols] for h in H]
    b = []
    for h in H:
        acc = 0
        for j in range(C.n):
            if j not in erased and received[j] and h[j]:
                acc = F.add(acc, F.mul(h[j], received[j]))
        b.append(F.neg(acc))
    if not H:  # full space: any fill works, never unique unless no unknowns
        status, x, null = ("many", [0] * len(cols), [[1]])
    else:
        status, x, null = _solve_affine(A, b, F)
    if status == "none":
        return DecodeResult("inconsistent")
    if status == "many":
        return DecodeResult("ambiguous")
    word = list(received)
    for pos, val in zip(cols, x):
        word[pos] = val
    return DecodeResult("recovered", tuple(word))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# symplectic syndrome decoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SympDecodeResult:
    status: str                       # unique | ambiguous
    representative: Optional[Tuple[int, ...]] = None

    @property
    def unique_mod_c(self) -> bool:
        return self.status == "unique"


def symplectic_erasure_decode(C: SymplecticCode, syndrome: Sequence[int],
                              I: IndexSet) -> SympDecodeResult:
    """Solve the stabilizer erasure system for an error supported in I.

    Unknown y = (a|b) with a_j = b_j = 0 outside I must satisfy
    y *s h = s_h for every generator row h of C.  The decode succeeds when
    the solution set is a single coset of C; any failure (no solution or a
    wider set) comes back "ambiguous".
    """
    if not I.members:
        raise EmptyIndexSet("erasure set must be nonempty")
    if len(syndrome) != C.dim:
        raise SyndromeLengthMismatch(
            f"syndrome length {len(syndrome)} != dim C = {C.dim}")
    F = C.field
    n = C.n
    pos = I.positions()
    # variables: a_j for j in pos, then b_j for j in pos
    A = []
    for h in C.gen.data:
        row = [h[n + j] for j in pos] + [F.neg(h[j]) for j in pos]
        A.append(row)
    status, x, null = _solve_affine(A, list(syndrome), F, ncols=2 * len(pos))
    if status == "none":
        return SympDecodeResult("ambiguous")

    def lift(vec: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * (2 * n)
        for idx, j in enumerate(pos):
            out[j] = vec[idx]
            out[n + j] = vec[len(pos) + idx]
        return tuple(out)

    for kvec in null:
        if not _in_span(C.gen.data, lift(kvec), F):
            return SympDecodeResult("ambiguous")
    return SympDecodeResult("unique", lift(x))


def syndrome_of(C: SymplecticCode, error: Sequence[int]) -> Tuple[int, ...]:
    """(error *s h) over the generator rows of C, evaluated directly."""
    F = C.field
    n = C.n
    out = []
    for h in C.gen.data:
        acc = 0
        for j in range(n):
            if error[j] and h[n + j]:
                acc = F.add(acc, F.mul(error[j], h[n + j]))
            if error[n + j] and h[j]:
                acc = F.sub(acc, F.mul(error[n + j], h[j]))
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# exhaustive (I, J) ground truth
# ---------------------------------------------------------------------------

def exhaustive_ij_check(C: SymplecticCode, I: IndexSet, J: IndexSet,
                        budget: int = ORACLE_BUDGET) -> bool:
    """Ground truth for (I, J)-recoverability by pure enumeration.

    Enumerates the code shortened to J as a set of words, then checks that
    every candidate error supported (pairwise) in I whose syndrome with
    respect to that shortened code vanishes already belongs to it.  By
    linearity this is exactly "every erased syndrome determines the error
    modulo the shortened code".
    """
    F = C.field
    q = F.q
    n = C.n
    if q ** C.dim > budget:
        raise BudgetExceeded(f"enumerating q^{C.dim} codewords exceeds {budget}")
    if q ** (2 * len(I)) > budget:
        raise BudgetExceeded(f"enumerating q^{2 * len(I)} errors exceeds {budget}")
    j_pos = J.positions()
    j_set = set(j_pos)
    # sigma_J(C) as an explicit set of length-2|J| tuples
    shortened = set()
    for w in _enumerate_span(C.gen.data, 2 * n, F):
        if any(w[j] or w[n + j] for j in range(n) if j not in j_set):
            continue
        shortened.add(tuple(w[j] for j in j_pos) + tuple(w[n + j] for j in j_pos))
    m = len(J)
    i_rel = [j_pos.index(p) for p in I.positions()]

    def form(x: Sequence[int], y: Sequence[int]) -> int:
        acc = 0
        for j in range(m):
            if x[j] and y[m + j]:
                acc = F.add(acc, F.mul(x[j], y[m + j]))
            if x[m + j] and y[j]:
                acc = F.sub(acc, F.mul(x[m + j], y[j]))
        return acc

    # candidate errors: all (a|b) pairs supported in I (inside J coordinates)
    width = len(i_rel)
    for enc in range(q ** (2 * width)):
        digits = []
        v = enc
        for _ in range(2 * width):
            digits.append(v % q)
            v //= q
        y = [0] * (2 * m)
        for idx, j in enumerate(i_rel):
            y[j] = digits[idx]
            y[m + j] = digits[width + idx]
        if all(form(y, w) == 0 for w in shortened):
            if tuple(y) not in shortened:
                return False
    return True
