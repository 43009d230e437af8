"""Classical codes: duals, puncture/shorten, distances, weight hierarchies."""

import random

import pytest

from qlrc.errors import BudgetExceeded, EmptyIndexSet, NotAQuadraticExtension, ZeroCode
from qlrc.gf import GF
from qlrc.code import (
    IndexSet,
    LinearCode,
    dual_euclidean,
    dual_hermitian,
    generalized_hamming_weights,
    min_distance,
    min_weight_dependency,
    puncture,
    shorten,
    weight,
)
from conftest import random_linear_code


def test_dual_euclidean_textbook_pairs():
    F2 = GF(2)
    rep3 = LinearCode.from_rows(F2, [[1, 1, 1]])
    par = dual_euclidean(rep3)
    assert (par.n, par.k) == (3, 2) and min_distance(par) == 2
    assert dual_euclidean(par) == rep3
    assert dual_euclidean(LinearCode.full(F2, 3)) == LinearCode.zero(F2, 3)
    assert dual_euclidean(LinearCode.zero(F2, 3)) == LinearCode.full(F2, 3)


def test_hamming_and_its_dual(hamming74, simplex73):
    assert (hamming74.n, hamming74.k) == (7, 4)
    assert min_distance(hamming74) == 3
    assert (simplex73.n, simplex73.k) == (7, 3)
    assert min_distance(simplex73) == 4
    # dual-containing orientation: the dual sits inside the Hamming code
    assert hamming74.contains_code(simplex73)


def test_dual_hermitian_involution_and_self_orthogonal_example():
    F4 = GF(2, 2)
    C = LinearCode.from_rows(F4, [[1, 1]])
    D = dual_hermitian(C)
    assert D == C                       # (1,1) .h (1,1) = 1 + 1 = 0 over GF(4)
    assert dual_hermitian(LinearCode.zero(F4, 3)) == LinearCode.full(F4, 3)
    rng = random.Random(3)
    for _ in range(20):
        C = random_linear_code(rng, F4, 6, 3)
        D = dual_hermitian(C)
        assert D.k == 6 - C.k
        assert dual_hermitian(D) == C
    with pytest.raises(NotAQuadraticExtension):
        dual_hermitian(LinearCode.full(GF(3), 2))


def test_puncture_and_shorten_basics():
    F2 = GF(2)
    rep3 = LinearCode.from_rows(F2, [[1, 1, 1]])
    R = IndexSet.of(3, [1, 2])
    assert puncture(rep3, R) == LinearCode.from_rows(F2, [[1, 1]])
    assert shorten(rep3, R) == LinearCode.zero(F2, 2)
    assert puncture(rep3, IndexSet.full(3)) == rep3
    assert shorten(rep3, IndexSet.full(3)) == rep3
    with pytest.raises(EmptyIndexSet):
        puncture(rep3, IndexSet(3, ()))


def test_punctured_hamming_keeps_distance_two(hamming74):
    for drop in range(1, 8):
        R = IndexSet.of(7, [j for j in range(1, 8) if j != drop])
        assert min_distance(puncture(hamming74, R)) >= 2


def test_puncture_shorten_duality_identity_random():
    """pi_R(C-dual) equals the dual of sigma_R(C), over random [8,4]_3 codes."""
    rng = random.Random(4)
    F3 = GF(3)
    checked = 0
    for _ in range(25):
        C = random_linear_code(rng, F3, 8, 4)
        if C.k == 0:
            continue
        for _ in range(6):
            members = [j for j in range(1, 9) if rng.random() < 0.6] or [1]
            R = IndexSet.of(8, members)
            assert puncture(dual_euclidean(C), R) == dual_euclidean(shorten(C, R))
            checked += 1
    assert checked > 100


def test_min_distance_strategies_agree():
    rng = random.Random(5)
    F3 = GF(3)
    for _ in range(25):
        C = random_linear_code(rng, F3, 8, 3)
        if C.k == 0:
            continue
        assert min_distance(C, "enumerate") == min_distance(C, "dependency")


def test_min_distance_guards():
    F2 = GF(2)
    with pytest.raises(ZeroCode):
        min_distance(LinearCode.zero(F2, 4))
    big = LinearCode.full(GF(5), 12)
    with pytest.raises(BudgetExceeded):
        min_distance(big, "enumerate", budget=1000)


def test_distance_witness_is_a_codeword(hamming74):
    d, wit = min_weight_dependency(hamming74)
    assert d == 3 and weight(wit) == 3
    assert hamming74.contains_word(wit)


def test_ghw_hierarchies_of_the_hamming_pair(hamming74, simplex73):
    assert generalized_hamming_weights(simplex73, 3) == (4, 6, 7)
    assert generalized_hamming_weights(hamming74, 4) == (3, 5, 6, 7)


def test_ghw_repetition():
    rep3 = LinearCode.from_rows(GF(2), [[1, 1, 1]])
    assert generalized_hamming_weights(rep3, 1) == (3,)


def test_ghw_first_weight_is_distance_and_strictly_increasing():
    rng = random.Random(6)
    F3 = GF(3)
    for _ in range(15):
        C = random_linear_code(rng, F3, 8, 3)
        if C.k == 0:
            continue
        hier = generalized_hamming_weights(C, C.k)
        assert hier[0] == min_distance(C)
        assert all(a < b for a, b in zip(hier, hier[1:]))   # strict for linear codes


def test_double_dual_identity_up_to_q9():
    """Involution of both dualities on random codes with q <= 9, n <= 10."""
    rng = random.Random(10)
    for p, m in ((5, 1), (7, 1), (2, 3), (3, 2)):
        F = GF(p, m)
        for _ in range(6):
            n = rng.randrange(2, 11)
            C = random_linear_code(rng, F, n, rng.randrange(1, n + 1))
            D = dual_euclidean(C)
            assert C.k + D.k == n
            assert dual_euclidean(D) == C
            if m == 2:
                H = dual_hermitian(C)
                assert C.k + H.k == n
                assert dual_hermitian(H) == C


def test_singleton_bound_on_random_codes():
    rng = random.Random(7)
    for q in (2, 3, 4):
        F = GF(2, 2) if q == 4 else GF(q)
        for _ in range(10):
            C = random_linear_code(rng, F, 7, rng.randrange(1, 6))
            if C.k == 0:
                continue
            assert C.k + min_distance(C) <= C.n + 1


def test_codeword_enumeration_order_and_count():
    F3 = GF(3)
    C = LinearCode.from_rows(F3, [[1, 0, 2], [0, 1, 1]])
    words = list(C.codewords())
    assert len(words) == 9 and len(set(words)) == 9
    assert words[0] == (0, 0, 0)
    assert words[1] == (1, 0, 2)        # first generator row, message (1, 0)
