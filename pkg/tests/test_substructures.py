import pytest
from hypothesis import given

from conftest import F2, F3, Q, algebras
from prealg.algebra import a2, anticommutator_algebra, zero_algebra
from prealg.errors import KindMismatch, NotIdeal, NotPreIdeal
from prealg.linear import Subspace, enumerate_subspaces
from prealg.substructures import (SubstructureKind, center, generated_substructure, huq_smith_commutator,
                                  is_substructure, nucleus, pre_ideal_commutator, pre_ideal_correspondence_check,
                                  quotient)

K = SubstructureKind
E1 = Subspace.span(Q, 2, [(1, 0)])
E2 = Subspace.span(Q, 2, [(0, 1)])
FULL, ZERO = Subspace.full(Q, 2), Subspace.zero(Q, 2)


def test_trivial_subspaces(A2):
    for s in (ZERO, FULL):
        for kind in K:
            assert is_substructure(A2, s, kind).holds


def test_a2_examples(A2):
    assert is_substructure(A2, E2, K.IDEAL).holds and is_substructure(A2, E2, K.PRE_IDEAL).holds
    assert is_substructure(A2, E1, K.PRE_SUBALGEBRA).holds
    r = is_substructure(A2, E1, K.IDEAL)
    assert not r.holds and r.defect == (0, 1)


def test_generated(A2):
    assert generated_substructure(A2, [], K.PRE_IDEAL).rank == 0
    assert generated_substructure(A2, [(0, 1)], K.PRE_IDEAL) == E2
    assert generated_substructure(A2, [(1, 0)], K.IDEAL) == FULL


def test_nucleus_and_center(A2):
    assert nucleus(A2) == FULL
    # [x, e1] = -x2 e2 and [x, e2] = x1 e2 force x = 0
    assert center(A2) == ZERO
    assert center(zero_algebra(Q, 2)) == FULL
    # brute force over F3: x is central iff it commutes and associates with everything
    a = a2(F3)
    from itertools import product
    basis = a.basis()
    central = [x for x in product(range(3), repeat=2)
               if all(a.bracket(x, y) == (0, 0) for y in basis)
               and all(a.associator(*t) == (0, 0) for y in basis for z in basis
                       for t in ((x, y, z), (y, x, z), (y, z, x)))]
    assert len(central) == 3 ** center(a).rank


def test_commutators(A2):
    assert pre_ideal_commutator(A2, FULL, ZERO) == ZERO
    assert pre_ideal_commutator(A2, FULL, FULL) == E2
    c = anticommutator_algebra(A2)
    assert pre_ideal_commutator(c, FULL, FULL) == ZERO
    assert huq_smith_commutator(A2, FULL, ZERO) == ZERO
    assert huq_smith_commutator(A2, E2, E2) == ZERO
    assert huq_smith_commutator(A2, FULL, FULL) == FULL
    with pytest.raises(NotIdeal):
        huq_smith_commutator(A2, E1, FULL)
    assert not is_substructure(A2, Subspace.span(Q, 2, [(1, 1)]), K.PRE_IDEAL).holds
    with pytest.raises(NotPreIdeal):
        pre_ideal_commutator(A2, Subspace.span(Q, 2, [(1, 1)]), FULL)


def test_quotients(A2):
    q = quotient(A2, ZERO)
    assert q.induced == A2
    q = quotient(A2, E2, "dot")
    assert q.induced.dim == 1 and q.induced.sc == (((1,),),)
    q = quotient(A2, E2, "bracket")
    assert q.induced.is_zero_algebra()
    with pytest.raises(KindMismatch):
        quotient(A2, E1, "dot")
    assert quotient(A2, FULL).induced is None


def test_correspondence_a2_exhaustive():
    a = a2(F2)
    for s in enumerate_subspaces(F2, 2):
        assert pre_ideal_correspondence_check(a, s).holds


def test_commutative_algebra_every_subspace_pre_ideal():
    c = anticommutator_algebra(a2(F3))
    for s in enumerate_subspaces(F3, 2):
        assert is_substructure(c, s, K.PRE_IDEAL).holds and is_substructure(c, s, K.PRE_SUBALGEBRA).holds


@given(algebras(domains=(F2, F3), max_dim=3))
def test_ideals_closed_under_sum_and_intersection(a):
    from prealg.linear import subspace_intersect, subspace_sum
    subs = [s for s in enumerate_subspaces(a.domain, a.dim) if is_substructure(a, s, K.PRE_IDEAL).holds]
    for s in subs[:4]:
        for t in subs[:4]:
            assert is_substructure(a, subspace_sum(s, t), K.PRE_IDEAL).holds
            assert is_substructure(a, subspace_intersect(s, t), K.PRE_IDEAL).holds


@given(algebras(domains=(F2, F3), max_dim=2))
def test_generated_is_smallest(a):
    for kind in (K.IDEAL, K.PRE_IDEAL, K.GENERALIZED_IDEAL):
        g = generated_substructure(a, [a.e(0)], kind)
        assert is_substructure(a, g, kind).holds
        for s in enumerate_subspaces(a.domain, a.dim):
            if s.contains(a.e(0)) and is_substructure(a, s, kind).holds:
                assert g <= s
