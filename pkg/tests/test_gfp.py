"""Linear algebra over small prime fields."""

import random

import numpy as np
import pytest

from qcluster import gfp

PRIMES = (2, 3, 5)


def random_matrix(rng, rows, cols, p):
    return np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)], dtype=np.int64)


@pytest.mark.parametrize("p", PRIMES)
def test_rref_shape_and_idempotence(p):
    rng = random.Random(p)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), p)
        red, piv = gfp.rref(a, p)
        assert gfp.rank(a, p) == len(piv)
        again, piv2 = gfp.rref(red, p)
        assert np.array_equal(again, red) and piv2 == piv
        for r, c in enumerate(piv):
            col = red[:, c]
            assert col[r] == 1 and not np.delete(col, r).any()


@pytest.mark.parametrize("p", PRIMES)
def test_nullspace_annihilates_and_rank_nullity(p):
    rng = random.Random(100 + p)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5), p)
        null = gfp.nullspace(a, p)
        assert len(null) == a.shape[1] - gfp.rank(a, p)
        if len(null):
            assert not ((a @ null.T) % p).any()


@pytest.mark.parametrize("p", PRIMES)
def test_solve_round_trip_and_inconsistency(p):
    rng = random.Random(7 * p)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), p)
        x = random_matrix(rng, a.shape[1], 1, p)[:, 0]
        b = (a @ x) % p
        got = gfp.solve(a, b, p)
        assert got is not None and np.array_equal((a @ got) % p, b)
    assert gfp.solve(np.zeros((2, 2), dtype=np.int64), np.array([1, 0]), p) is None


@pytest.mark.parametrize("p", PRIMES)
def test_inverse(p):
    rng = random.Random(11 * p)
    hits = 0
    while hits < 15:
        a = random_matrix(rng, 3, 3, p)
        if gfp.rank(a, p) < 3:
            continue
        hits += 1
        assert np.array_equal((a @ gfp.inverse(a, p)) % p, np.eye(3, dtype=np.int64))
    with pytest.raises(ZeroDivisionError):
        gfp.inverse(np.zeros((2, 2), dtype=np.int64), p)


@pytest.mark.parametrize("p", (2, 3))
def test_subspace_enumeration_matches_gaussian_binomial(p):
    for dim in range(4):
        for k in range(dim + 1):
            found = list(gfp.subspaces(dim, k, p))
            assert len(found) == gfp.count_subspaces(dim, k, p)
            canon = {b.tobytes() for b in found}
            assert len(canon) == len(found)
            for b in found:
                assert gfp.rank(b, p) == k


def test_count_subspaces_values():
    assert gfp.count_subspaces(2, 1, 2) == 3
    assert gfp.count_subspaces(2, 1, 3) == 4
    assert gfp.count_subspaces(4, 2, 2) == 35
    assert gfp.count_subspaces(3, 5, 2) == 0


@pytest.mark.parametrize("p", PRIMES)
def test_extend_to_basis(p):
    rng = random.Random(13 * p)
    for _ in range(30):
        dim = rng.randint(1, 5)
        k = rng.randint(0, dim)
        rows = next(iter(gfp.subspaces(dim, k, p)))
        extra = gfp.extend_to_basis(rows, p, dim)
        full = np.vstack([rows, extra])
        assert full.shape == (dim, dim) and gfp.rank(full, p) == dim


@pytest.mark.parametrize("p", PRIMES)
def test_in_span(p):
    basis = np.array([[1, 0, 2 % p], [0, 1, 1]], dtype=np.int64) % p
    red, piv = gfp.rref(basis, p)
    assert gfp.in_span(red, piv, np.array([1, 1, (3 % p)]), p)
    assert not gfp.in_span(red, piv, np.array([0, 0, 1]), p)
