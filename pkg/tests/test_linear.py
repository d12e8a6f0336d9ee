from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from prealg.coefficients import PrimeField, Rationals
from prealg.linear import (Matrix, Subspace, complement, enumerate_subspaces, image, kernel, rank, rref, rref_modp,
                           rref_rows, solve, subspace_intersect, subspace_sum, unit_vec)

Q, F2, F3 = Rationals(), PrimeField(2), PrimeField(3)


def test_rref_examples():
    assert rref(Matrix.of(Q, [[2, 4], [1, 2]])).rows == ((1, 2),)
    assert rref(Matrix.identity(Q, 3)) == Matrix.identity(Q, 3)
    assert rref(Matrix.of(F2, [[1, 1], [1, 0]])).rows == ((1, 0), (0, 1))


def test_solve_examples():
    b = (Fraction(3), Fraction(-2))
    assert solve(Matrix.identity(Q, 2), b) == b
    assert solve(Matrix.of(F2, [[1, 1]]), (1,)) == (1, 0)
    assert solve(Matrix.of(Q, [[1], [1]]), (1, 0)) is None


def test_sum_and_intersection():
    e = lambda d, n, i: unit_vec(d, n, i)
    u = Subspace.span(Q, 2, [e(Q, 2, 0)])
    assert subspace_sum(u, Subspace.zero(Q, 2)) == u
    assert subspace_sum(u, Subspace.span(Q, 2, [e(Q, 2, 1)])) == Subspace.full(Q, 2)
    s = subspace_sum(Subspace.span(F3, 3, [(1, 1, 0)]), Subspace.span(F3, 3, [(0, 1, 0)]))
    assert s.rank == 2 and s.contains((1, 0, 0))
    assert subspace_intersect(u, u) == u
    assert subspace_intersect(u, Subspace.span(Q, 2, [e(Q, 2, 1)])).rank == 0
    a = Subspace.span(F2, 3, [(1, 0, 0), (0, 1, 0)])
    b = Subspace.span(F2, 3, [(0, 1, 0), (0, 0, 1)])
    assert subspace_intersect(a, b) == Subspace.span(F2, 3, [(0, 1, 0)])


def test_intersection_against_brute_force():
    for u in enumerate_subspaces(F2, 3):
        for v in enumerate_subspaces(F2, 3):
            brute = [x for x in iter_all(3) if u.contains(x) and v.contains(x)]
            assert len(brute) == 2 ** subspace_intersect(u, v).rank


def iter_all(n):
    from itertools import product
    return list(product((0, 1), repeat=n))


def test_kernel_image_examples():
    z = Matrix.zeros(Q, 2, 2)
    assert kernel(z) == Subspace.full(Q, 2) and image(z).rank == 0
    i = Matrix.identity(Q, 2)
    assert kernel(i).rank == 0 and image(i) == Subspace.full(Q, 2)
    p = Matrix.of(Q, [[1, 0], [0, 0]])
    assert kernel(p) == Subspace.span(Q, 2, [(0, 1)]) and image(p) == Subspace.span(Q, 2, [(1, 0)])


def test_complement_examples():
    assert complement(Subspace.zero(Q, 2)) == Subspace.full(Q, 2)
    assert complement(Subspace.span(Q, 2, [(1, 0)])) == Subspace.span(Q, 2, [(0, 1)])
    assert complement(Subspace.span(Q, 2, [(1, 1)])) == Subspace.span(Q, 2, [(0, 1)])


def gaussian_binomial_total(p, n):
    # number of subspaces of F_p^n, by the q-binomial recurrence
    def gb(n, k):
        if k == 0 or k == n:
            return 1
        return gb(n - 1, k - 1) + p ** k * gb(n - 1, k)
    return sum(gb(n, k) for k in range(n + 1))


def test_enumerate_subspace_counts():
    assert len(list(enumerate_subspaces(F2, 1))) == 2
    assert len(list(enumerate_subspaces(F2, 2))) == 5
    assert len(list(enumerate_subspaces(F3, 2))) == 6
    for p, n in ((2, 3), (2, 4), (3, 3)):
        subs = list(enumerate_subspaces(PrimeField(p), n, budget=10 ** 6))
        assert len(subs) == gaussian_binomial_total(p, n) == len(set(subs))


@given(st.lists(st.lists(st.integers(0, 6), min_size=5, max_size=5), min_size=1, max_size=6))
def test_numpy_rref_matches_generic(rows):
    f7 = PrimeField(7)
    generic, piv = rref_rows(f7, rows, 5)
    fast, piv2 = rref_modp(np.array(rows), 7)
    assert piv == piv2
    assert [list(r) for r in generic[:len(piv)]] == fast[:len(piv2)].tolist()


@given(st.lists(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=4), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_rank_nullity(rows):
    m = Matrix.of(Q, rows)
    assert rank(m) + kernel(m).rank == 3
    assert image(m).rank == rank(m)
