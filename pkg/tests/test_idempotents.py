from itertools import product

import pytest

from conftest import F2, F3, Q
from prealg.algebra import a2, all_algebras, anticommutator_algebra, random_algebra, zero_algebra
from prealg.errors import InvalidPair, NotIdempotentOfKind, TwoTorsionDomain
from prealg.idempotents import (DecompositionPair, IdempotentKind, anti_pre_classification_check,
                                idempotent_from_pair, idempotents_of_kind, is_idempotent_endo, pair_from_idempotent,
                                roundtrip_check, valid_pairs)
from prealg.linear import Matrix, Subspace

PRE, GEN, ANTI = IdempotentKind.PRE, IdempotentKind.GENERALIZED, IdempotentKind.ANTI_PRE
P = Matrix.of(Q, [[1, 0], [0, 0]])
E1, E2 = Subspace.span(Q, 2, [(1, 0)]), Subspace.span(Q, 2, [(0, 1)])


def test_identity_and_zero(A2):
    i, z = Matrix.identity(Q, 2), Matrix.zeros(Q, 2, 2)
    assert is_idempotent_endo(A2, i, PRE).holds and is_idempotent_endo(A2, i, GEN).holds
    for k in IdempotentKind:
        assert is_idempotent_endo(A2, z, k).holds
    assert pair_from_idempotent(A2, i, PRE) == DecompositionPair(Subspace.zero(Q, 2), Subspace.full(Q, 2), PRE)
    assert pair_from_idempotent(A2, z, PRE) == DecompositionPair(Subspace.full(Q, 2), Subspace.zero(Q, 2), PRE)


def test_a2_projector(A2):
    assert is_idempotent_endo(A2, P, PRE).holds
    pair = pair_from_idempotent(A2, P, PRE)
    assert (pair.k_part, pair.b_part) == (E2, E1)
    assert idempotent_from_pair(pair, A2) == P
    assert idempotent_from_pair(DecompositionPair(Subspace.zero(Q, 2), Subspace.full(Q, 2), PRE), A2) \
        == Matrix.identity(Q, 2)
    assert idempotent_from_pair(DecompositionPair(Subspace.full(Q, 2), Subspace.zero(Q, 2), PRE), A2) \
        == Matrix.zeros(Q, 2, 2)


def test_invalid_inputs(A2):
    with pytest.raises(NotIdempotentOfKind):
        pair_from_idempotent(A2, Matrix.of(Q, [[1, 1], [0, 1]]), PRE)
    with pytest.raises(InvalidPair):
        idempotent_from_pair(DecompositionPair(E1, E1, PRE), A2)
    with pytest.raises(TwoTorsionDomain):
        is_idempotent_endo(a2(F2), Matrix.zeros(F2, 2, 2), ANTI)


def idempotent_count_brute(d, n):
    from prealg.linear import iter_matrices
    return sum(1 for m in iter_matrices(d, n, n) if m @ m == m)


def test_zero_algebra_census():
    z = zero_algebra(F2, 2)
    assert idempotent_count_brute(F2, 2) == 8
    for k in (PRE, GEN):
        r = roundtrip_check(z, k)
        assert r.holds and r.info["E"] == r.info["P"] == 8


def test_a2_f2_census():
    r = roundtrip_check(a2(F2), PRE)
    assert r.holds and r.info["E"] == r.info["P"] and r.info["method"] == "matrix"
    assert len(valid_pairs(a2(F2), PRE)) == r.info["P"]


def test_trivial_members_always_present():
    for a in list(all_algebras(F2, 2))[::31]:
        E = idempotents_of_kind(a, PRE)
        assert Matrix.zeros(F2, 2, 2) in E and Matrix.identity(F2, 2) in E
        P_ = valid_pairs(a, PRE)
        full, zero = Subspace.full(F2, 2), Subspace.zero(F2, 2)
        assert DecompositionPair(zero, full, PRE) in P_ and DecompositionPair(full, zero, PRE) in P_


def test_anti_pre_examples():
    c = anticommutator_algebra(a2(F3))
    for m in idempotents_of_kind(c, PRE):
        assert is_idempotent_endo(c, m, ANTI).holds
    r = anti_pre_classification_check(a2(F3))
    assert r.holds and r.info["matrices"] == 81
    for m in idempotents_of_kind(a2(F3), ANTI):
        assert m.apply((0, 1)) == (0, 0)


def test_pair_method_when_matrices_exceed_budget():
    r = roundtrip_check(a2(F3), PRE, budget=10)
    assert r.info["method"] == "pair" and r.holds
    assert r.info["E"] == roundtrip_check(a2(F3), PRE).info["E"]


def test_roundtrip_over_f3_dim2_random(rng):
    for _ in range(10):
        a = random_algebra(F3, 2, rng)
        for k in IdempotentKind:
            assert roundtrip_check(a, k).holds


def test_anti_pair_records_pre_ideal_flag():
    from prealg.idempotents import validate_pair
    a = a2(F3)
    for m in idempotents_of_kind(a, ANTI):
        info = validate_pair(a, pair_from_idempotent(a, m, ANTI)).info
        assert "k_is_pre_ideal" in info
