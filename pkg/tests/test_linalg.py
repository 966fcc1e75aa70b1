"""Sparse exact elimination against dense Fraction elimination."""

import random
from fractions import Fraction

from hilali.linalg import Echelon, Rref, intify, kernel_of_rows, rank_of_rows

from dense_oracle import dense_rank


def _random_sparse(rng, rows, cols, density=0.4):
    out = []
    for _ in range(rows):
        row = {}
        for c in range(cols):
            if rng.random() < density:
                v = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                if v:
                    row[c] = v
        out.append(row)
    return out


def _densify(rows, cols):
    return [[row.get(c, Fraction(0)) for c in range(cols)] for row in rows]


def test_rank_matches_dense_oracle():
    rng = random.Random(9)
    for _ in range(30):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        rows = _random_sparse(rng, r, c)
        sparse = rank_of_rows([intify(row)[0] for row in rows])
        dense = dense_rank(_densify(rows, c))
        assert sparse == dense


def test_kernel_vectors_annihilate_rows():
    rng = random.Random(10)
    for _ in range(25):
        r, c = rng.randint(1, 8), rng.randint(1, 6)
        rows = _random_sparse(rng, r, c)
        kernel = kernel_of_rows(rows, c)
        rank = rank_of_rows([intify(row)[0] for row in rows])
        assert len(kernel) == r - rank
        for vec in kernel:
            combo = {}
            for i, coeff in vec.items():
                for col, val in rows[i].items():
                    combo[col] = combo.get(col, Fraction(0)) + coeff * val
            assert all(v == 0 for v in combo.values())


def test_kernel_canonical_under_permutation():
    rows = [{0: Fraction(1), 1: Fraction(2)},
            {0: Fraction(2), 1: Fraction(4)},
            {1: Fraction(1)}]
    kernel = kernel_of_rows(rows, 2)
    assert len(kernel) == 1
    # the dependency 2*row0 - row1 = 0, echelon-normalized
    [vec] = kernel
    assert vec == {0: Fraction(2), 1: Fraction(-1)} or vec == {0: Fraction(-2), 1: Fraction(1)}


def test_rref_reduce_is_canonical_and_idempotent():
    rng = random.Random(13)
    for _ in range(20):
        rows = _random_sparse(rng, 6, 6)
        rref = Rref()
        for row in rows:
            rref.add(row)
        pivots = rref.pivot_columns()
        probe = _random_sparse(rng, 1, 6)[0]
        reduced = rref.reduce(probe)
        assert not (set(reduced) & pivots)
        assert rref.reduce(reduced) == reduced
        # rows of the space reduce to zero
        for row in rows:
            assert rref.reduce(row) == {}


def test_rref_rows_clean_of_foreign_pivots():
    rng = random.Random(14)
    for _ in range(20):
        rows = _random_sparse(rng, 7, 7)
        rref = Rref()
        for row in rows:
            rref.add(row)
        pivots = rref.pivot_columns()
        for col, row in rref.pivots.items():
            assert set(row) & pivots == {col}


def test_echelon_rank_only():
    ech = Echelon()
    assert ech.add({0: 1, 1: 2}) == 0
    assert ech.add({0: 2, 1: 4}) is None
    assert ech.add({1: 5}) == 1
    assert ech.rank == 2
    assert ech.contains({0: 3, 1: 6})
    assert not ech.contains({2: 1})


def test_negative_columns_supported():
    # leading-monomial pivots are encoded as negated indices
    rref = Rref()
    rref.add({-3: 2, -1: 4})
    rref.add({-2: 1})
    assert rref.pivot_columns() == {-3, -2}
    assert rref.reduce({-3: Fraction(1)}) == {-1: Fraction(-2)}
