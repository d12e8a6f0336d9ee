import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import F2, F5, F7, Q, algebras
from prealg.algebra import (Algebra, a2, all_algebras, ann2_module, anticommutator_algebra, commutator_algebra,
                            in_ann2, opposite, random_algebra, scaling_iso_check, split_product, zero_algebra)
from prealg.coefficients import ResidueRing
from prealg.errors import DimensionMismatch, NonFieldDomain, TwoNotInvertible
from prealg.identities import is_anticommutative, is_commutative


def test_a2_products(A2):
    e1, e2 = A2.basis()
    assert A2.mul(e1, e2) == e2
    assert A2.mul(e2, e1) == A2.zero()
    assert A2.mul(A2.zero(), e2) == A2.zero()
    assert A2.associator(e2, e1, e2) == A2.zero()


def test_associator_example():
    b = Algebra.from_table(Q, 2, {(0, 0): (0, 1), (1, 0): (1, 0)})
    e1 = b.e(0)
    assert b.associator(e1, e1, e1) == e1


def test_bad_shapes_rejected():
    with pytest.raises(DimensionMismatch):
        Algebra(name="x", domain=Q, dim=2, basis_labels=("a", "b"), sc=((Q.zero,),))


def test_commutator_functor_on_a2(A2):
    u = commutator_algebra(A2)
    e1, e2 = A2.basis()
    assert u.mul(e1, e2) == e2
    assert u.mul(e2, e1) == (0, -1)
    assert u.mul(e1, e1) == u.mul(e2, e2) == u.zero()
    uu = commutator_algebra(u)
    assert uu.sc == tuple(tuple(tuple(2 * c for c in v) for v in row) for row in u.sc)
    assert commutator_algebra(commutator_algebra(a2(F2))).is_zero_algebra()


def test_anticommutator_functor_on_a2(A2):
    c = anticommutator_algebra(A2)
    e1, e2 = A2.basis()
    assert c.mul(e1, e1) == (2, 0)
    assert c.mul(e1, e2) == c.mul(e2, e1) == e2
    assert c.mul(e2, e2) == c.zero()


def test_functors_kill_their_own_symmetry():
    assert commutator_algebra(anticommutator_algebra(a2())).is_zero_algebra()
    assert anticommutator_algebra(commutator_algebra(a2())).is_zero_algebra()


def test_opposite(A2, rng):
    op = opposite(A2)
    e1, e2 = A2.basis()
    assert op.mul(e2, e1) == e2 and op.mul(e1, e2) == op.zero()
    c = anticommutator_algebra(A2)
    assert opposite(c) == c
    for _ in range(100):
        a = random_algebra(F5, rng.randint(1, 3), rng)
        assert opposite(opposite(a)) == a


def test_split_product_a2():
    s = split_product(a2())
    e1, e2 = a2().basis()
    assert s.comm.mul(e1, e1) == e1
    assert s.comm.mul(e1, e2) == (0, Fraction(1, 2))
    assert s.anticomm.mul(e1, e2) == (0, Fraction(1, 2))
    assert s.recombine() == a2()


def test_split_product_guard():
    with pytest.raises(TwoNotInvertible):
        split_product(a2(F2))
    with pytest.raises(TwoNotInvertible):
        split_product(zero_algebra(ResidueRing(4), 2))


def test_split_recombines_over_f5(rng):
    for _ in range(200):
        a = random_algebra(F5, rng.randint(1, 3), rng)
        s = split_product(a)
        assert s.recombine() == a
        assert is_commutative(s.comm).holds and is_anticommutative(s.anticomm).holds


def test_commutative_split_is_trivial():
    c = anticommutator_algebra(a2())
    s = split_product(c)
    assert s.comm == c and s.anticomm.is_zero_algebra()


def test_ann2():
    assert ann2_module(a2()).rank == 0
    assert ann2_module(a2(F2)).rank == 2
    z4 = ResidueRing(4)
    assert in_ann2(z4, (2,)) and not in_ann2(z4, (1,))
    with pytest.raises(NonFieldDomain):
        ann2_module(zero_algebra(z4, 1))


def test_scaling_iso(rng):
    assert scaling_iso_check(zero_algebra(Q, 2)).holds
    assert scaling_iso_check(a2()).holds
    for _ in range(100):
        assert scaling_iso_check(random_algebra(F7, rng.randint(1, 3), rng)).holds


def test_all_algebras_count():
    assert sum(1 for _ in all_algebras(F2, 2)) == 2 ** 8


@given(algebras())
def test_functor_laws_property(a):
    assert is_anticommutative(commutator_algebra(a)).holds
    assert is_commutative(anticommutator_algebra(a)).holds
    if a.domain.characteristic == 2:
        assert commutator_algebra(a).sc == anticommutator_algebra(a).sc


@given(algebras())
def test_opposite_swaps_products(a):
    op = opposite(a)
    for x in a.basis():
        for y in a.basis():
            assert op.mul(x, y) == a.mul(y, x)
