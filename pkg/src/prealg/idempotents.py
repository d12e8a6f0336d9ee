"""Idempotent pre-, generalized and anti-pre-endomorphisms.

An idempotent ``e`` of each kind corresponds to the decomposition
``M = ker(e) ⊕ e(M)``; the allowed pairs ``(K, B)`` are

* pre:          K a pre-ideal, B a pre-subalgebra;
* generalized:  K a generalized ideal, B a generalized subalgebra;
* anti-pre:     every ``xy - yx`` lies in K and B is commutative under the
  original product (2-torsion-free domains only).

The round-trip check enumerates both sides over a small prime field and
confirms the two assignments are inverse bijections.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Algebra
from .errors import InvalidPair, NonFieldDomain, NotIdempotentOfKind, ShapeMismatch, TwoTorsionDomain
from .linear import (DEFAULT_BUDGET, Matrix, Subspace, enumerate_subspaces, image, is_zero, iter_matrices, kernel,
                     solve, subspace_intersect, unit_vec)
from .morphisms import AlgebraMap, classify_map
from .report import Report
from .substructures import SubstructureKind, is_substructure


class IdempotentKind(enum.Enum):
    PRE = "pre"
    GENERALIZED = "gen"
    ANTI_PRE = "anti"

    @property
    def flag(self) -> str:
        return {"pre": "pre_morphism", "gen": "generalized_morphism", "anti": "anti_pre_morphism"}[self.value]


@dataclass(frozen=True)
class DecompositionPair:
    k_part: Subspace
    b_part: Subspace
    kind: IdempotentKind


def _guard(a: Algebra, kind: IdempotentKind):
    if kind is IdempotentKind.ANTI_PRE and not a.domain.two_torsion_free:
        raise TwoTorsionDomain(f"anti-pre idempotents need a 2-torsion-free domain, got {a.domain}")


def is_idempotent_endo(a: Algebra, e: Matrix, kind: IdempotentKind) -> Report:
    if e.shape != (a.dim, a.dim) or e.domain != a.domain:
        raise ShapeMismatch(f"expected a {a.dim}x{a.dim} matrix over {a.domain}")
    _guard(a, kind)
    name = f"idempotent-{kind.value}"
    if e @ e != e:
        return Report(name, False, info={"idempotent": False})
    prof = classify_map(AlgebraMap.endo(a, e))
    ok = prof.flags[kind.flag]
    return Report(name, ok, witness=prof.witnesses.get(kind.flag), info={"idempotent": True})


def validate_pair(a: Algebra, p: DecompositionPair) -> Report:
    """Direct-sum and kind-specific conditions on ``(K, B)``."""
    _guard(a, p.kind)
    K, B = p.k_part, p.b_part
    n = a.dim
    info = {"direct_sum": K.rank + B.rank == n and subspace_intersect(K, B).rank == 0}
    if p.kind is IdempotentKind.PRE:
        info["k_condition"] = is_substructure(a, K, SubstructureKind.PRE_IDEAL).holds
        info["b_condition"] = is_substructure(a, B, SubstructureKind.PRE_SUBALGEBRA).holds
    elif p.kind is IdempotentKind.GENERALIZED:
        info["k_condition"] = is_substructure(a, K, SubstructureKind.GENERALIZED_IDEAL).holds
        info["b_condition"] = is_substructure(a, B, SubstructureKind.GENERALIZED_SUBALGEBRA).holds
    else:
        basis = a.basis()
        info["k_condition"] = all(K.contains(a.bracket(x, y)) for x in basis for y in basis)
        info["b_condition"] = all(is_zero(a.bracket(u, v)) for u in B.basis for v in B.basis)
        # recorded, not required
        info["k_is_pre_ideal"] = is_substructure(a, K, SubstructureKind.PRE_IDEAL).holds
    holds = info["direct_sum"] and info["k_condition"] and info["b_condition"]
    return Report(f"pair-{p.kind.value}", holds, info=info)


def pair_from_idempotent(a: Algebra, e: Matrix, kind: IdempotentKind) -> DecompositionPair:
    if not a.domain.is_field:
        raise NonFieldDomain(f"{a.domain} is not a field")
    if not is_idempotent_endo(a, e, kind).holds:
        raise NotIdempotentOfKind(f"matrix is not an idempotent {kind.value}-endomorphism")
    pair = DecompositionPair(kernel(e), image(e), kind)
    if not validate_pair(a, pair).holds:
        raise RuntimeError("kernel/image pair of an idempotent failed its own conditions")
    return pair


def projector(K: Subspace, B: Subspace) -> Matrix:
    """The linear map killing ``K`` and fixing ``B`` (``M = K ⊕ B``)."""
    d, n = K.domain, K.ambient_dim
    Q = Matrix.from_columns(d, list(B.basis) + list(K.basis), n)
    cols = []
    for c in range(n):
        x = solve(Q, unit_vec(d, n, c))
        if x is None:
            raise InvalidPair("K and B do not span the ambient space")
        cols.append(B.from_coords(x[:B.rank]))
    return Matrix.from_columns(d, cols, n)


def idempotent_from_pair(p: DecompositionPair, a: Algebra) -> Matrix:
    rep = validate_pair(a, p)
    if not rep.holds:
        raise InvalidPair(f"pair fails {', '.join(k for k, v in rep.info.items() if v is False)}")
    e = projector(p.k_part, p.b_part)
    if not is_idempotent_endo(a, e, p.kind).holds:
        raise RuntimeError("projector of a valid pair is not an idempotent of its kind")
    return e


# -- enumeration ----------------------------------------------------------


def idempotents_of_kind(a: Algebra, kind: IdempotentKind, budget: int = DEFAULT_BUDGET) -> list[Matrix]:
    """Brute force over every matrix; lexicographic in the entries."""
    _guard(a, kind)
    return [m for m in iter_matrices(a.domain, a.dim, a.dim, budget) if is_idempotent_endo(a, m, kind).holds]


def valid_pairs(a: Algebra, kind: IdempotentKind, budget: int = DEFAULT_BUDGET) -> list[DecompositionPair]:
    _guard(a, kind)
    subs = list(enumerate_subspaces(a.domain, a.dim, budget))
    out = []
    for K in subs:
        for B in subs:
            if K.rank + B.rank != a.dim:
                continue
            p = DecompositionPair(K, B, kind)
            if validate_pair(a, p).holds:
                out.append(p)
    return out


def roundtrip_check(a: Algebra, kind: IdempotentKind, budget: int = DEFAULT_BUDGET) -> Report:
    """Census of idempotents ``E`` and pairs ``P`` and the bijection between them.

    ``E`` comes from the matrix side when ``p^(dim^2)`` fits the budget,
    otherwise from the pair side (then only the pair-side composite is an
    independent check).
    """
    d = a.domain
    if not d.is_prime_field:
        raise NonFieldDomain(f"enumeration needs a prime field, got {d}")
    _guard(a, kind)
    P = valid_pairs(a, kind, budget)
    if d.modulus ** (a.dim * a.dim) <= budget:
        E = idempotents_of_kind(a, kind, budget)
        method = "matrix"
    else:
        E = sorted({idempotent_from_pair(p, a) for p in P}, key=lambda m: m.flat())
        method = "pair"
    e_to_p = {e: pair_from_idempotent(a, e, kind) for e in E}
    p_to_e = {p: idempotent_from_pair(p, a) for p in P}
    info = {
        "method": method,
        "E": len(E),
        "P": len(P),
        "pairs_of_E_equal_P": set(e_to_p.values()) == set(P),
        "idempotents_of_P_equal_E": set(p_to_e.values()) == set(E),
        "e_roundtrip": all(p_to_e.get(e_to_p[e]) == e for e in E),
        "p_roundtrip": all(e_to_p.get(p_to_e[p]) == p for p in P),
    }
    holds = len(E) == len(P) and all(info[k] for k in
                                     ("pairs_of_E_equal_P", "idempotents_of_P_equal_E", "e_roundtrip", "p_roundtrip"))
    return Report(f"roundtrip-{kind.value}", holds, info=info)


def anti_pre_characterization(a: Algebra, e: Matrix) -> bool:
    """Idempotent, brackets in the kernel, and a commutative image."""
    if e @ e != e:
        return False
    basis = a.basis()
    if not all(is_zero(e.apply(a.bracket(x, y))) for x in basis for y in basis):
        return False
    img = image(e).basis
    return all(is_zero(a.bracket(u, v)) for u in img for v in img)


def anti_pre_classification_check(a: Algebra, budget: int = DEFAULT_BUDGET) -> Report:
    _guard(a, IdempotentKind.ANTI_PRE)
    if not a.domain.is_prime_field:
        raise NonFieldDomain(f"enumeration needs a prime field, got {a.domain}")
    mismatches = []
    count = 0
    total = 0
    for m in iter_matrices(a.domain, a.dim, a.dim, budget):
        total += 1
        direct = is_idempotent_endo(a, m, IdempotentKind.ANTI_PRE).holds
        char = anti_pre_characterization(a, m)
        count += direct
        if direct != char:
            mismatches.append(m.flat())
    return Report("anti-pre-classification", not mismatches,
                  witness=mismatches[0] if mismatches else None,
                  info={"matrices": total, "anti_pre_idempotents": count, "mismatches": len(mismatches)})


def census_rows(a: Algebra, kinds=(IdempotentKind.PRE, IdempotentKind.GENERALIZED), budget: int = DEFAULT_BUDGET):
    """``(kind, |E|, |P|, verdict)`` for each kind."""
    rows = []
    for k in kinds:
        r = roundtrip_check(a, k, budget)
        rows.append((k.value, r.info["E"], r.info["P"], r.holds))
    return rows


__all__ = [
    "IdempotentKind", "DecompositionPair", "is_idempotent_endo", "validate_pair", "pair_from_idempotent",
    "idempotent_from_pair", "projector", "idempotents_of_kind", "valid_pairs", "roundtrip_check",
    "anti_pre_characterization", "anti_pre_classification_check", "census_rows",
]
