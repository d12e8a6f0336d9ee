"""Decision procedures for the algebra classes: associative through
Jordan-admissible.

Multilinear identities are evaluated on basis tuples, which is complete by
multilinearity. The Jordan identity is cubic in one variable and needs the
dual exhaustive / polarized strategy in :func:`is_jordan_admissible`.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Callable

from .algebra import Algebra, anticommutator_algebra, commutator_algebra
from .coefficients import iter_vectors
from .errors import BudgetExceeded
from .linear import DEFAULT_BUDGET, is_zero, vec_add, vec_sub
from .report import IdentityReport


def _sweep(a: Algebra, name: str, arity: int, defect: Callable) -> IdentityReport:
    """First basis tuple (lexicographic) with a nonzero defect, if any."""
    basis = a.basis()
    for idx in product(range(a.dim), repeat=arity):
        v = defect(*(basis[i] for i in idx))
        if not is_zero(v):
            return IdentityReport(name, False, witness=idx, defect=v)
    return IdentityReport(name, True)


def is_associative(a: Algebra) -> IdentityReport:
    return _sweep(a, "associative", 3, a.associator)


def is_commutative(a: Algebra) -> IdentityReport:
    return _sweep(a, "commutative", 2, a.bracket)


def is_anticommutative(a: Algebra) -> IdentityReport:
    # xx = 0 on basis plus e_i e_j + e_j e_i = 0 gives xx = 0 for all x
    return _sweep(a, "anticommutative", 2, a.circle)


def pre_lie_defect(a: Algebra, x, y, z):
    return vec_sub(a.domain, a.associator(x, y, z), a.associator(y, x, z))


def is_pre_lie(a: Algebra) -> IdentityReport:
    return _sweep(a, "pre-lie", 3, lambda x, y, z: pre_lie_defect(a, x, y, z))


def jacobi_defect(b: Algebra, x, y, z):
    """``[[x,y],z] + [[y,z],x] + [[z,x],y]`` where ``b`` holds the bracket."""
    d = b.domain
    m = b.mul
    return vec_add(d, vec_add(d, m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y))


def is_lie_admissible(a: Algebra) -> IdentityReport:
    u = commutator_algebra(a)
    return _sweep(a, "lie-admissible", 3, lambda x, y, z: jacobi_defect(u, x, y, z))


def anti_pre_lie_defects(a: Algebra, x, y, z):
    d, m = a.domain, a.mul
    lhs = vec_add(d, m(m(x, y), z), m(x, m(y, z)))
    rhs = vec_add(d, m(m(y, x), z), m(y, m(x, z)))
    first = vec_sub(d, lhs, rhs)
    second = vec_add(d, vec_add(d, m(a.bracket(x, y), z), m(a.bracket(y, z), x)), m(a.bracket(z, x), y))
    return first, second


def is_anti_pre_lie(a: Algebra) -> IdentityReport:
    """Both anti-pre-Lie identities; ``info["failed"]`` names the failing ones."""
    first = _sweep(a, "anti-pre-lie/3210", 3, lambda x, y, z: anti_pre_lie_defects(a, x, y, z)[0])
    second = _sweep(a, "anti-pre-lie/3211", 3, lambda x, y, z: anti_pre_lie_defects(a, x, y, z)[1])
    failed = [r.name.split("/")[1] for r in (first, second) if not r.holds]
    bad = next((r for r in (first, second) if not r.holds), None)
    return IdentityReport("anti-pre-lie", not failed,
                          witness=bad.witness if bad is not None else None,
                          defect=bad.defect if bad is not None else None,
                          info={"failed": failed})


def pre_jordan_defects(a: Algebra, x, y, z, u):
    d, m, o = a.domain, a.mul, a.circle
    rhs = vec_add(d, vec_add(d, m(z, m(o(x, y), u)), m(x, m(o(y, z), u))), m(y, m(o(z, x), u)))
    lhs1 = vec_add(d, vec_add(d, m(o(x, y), m(z, u)), m(o(y, z), m(x, u))), m(o(z, x), m(y, u)))
    lhs2 = vec_add(d, vec_add(d, m(x, m(y, m(z, u))), m(z, m(y, m(x, u)))), m(o(o(x, z), y), u))
    return vec_sub(d, lhs1, rhs), vec_sub(d, lhs2, rhs)


def is_pre_jordan(a: Algebra) -> IdentityReport:
    first = _sweep(a, "pre-jordan/1", 4, lambda *v: pre_jordan_defects(a, *v)[0])
    second = _sweep(a, "pre-jordan/2", 4, lambda *v: pre_jordan_defects(a, *v)[1])
    failed = [r.name.split("/")[1] for r in (first, second) if not r.holds]
    bad = next((r for r in (first, second) if not r.holds), None)
    return IdentityReport("pre-jordan", not failed,
                          witness=bad.witness if bad is not None else None,
                          defect=bad.defect if bad is not None else None,
                          info={"failed": failed})


def jordan_defect(c: Algebra, x, y):
    """``(x y)(x x) - x(y(x x))`` for the product of ``c``."""
    m = c.mul
    xx = m(x, x)
    return vec_sub(c.domain, m(m(x, y), xx), m(x, m(y, xx)))


def polarized_jordan_defect(c: Algebra, x1, x2, x3, y):
    """Full linearisation in the cubic variable; equals 6 * defect at x1=x2=x3."""
    d, m = c.domain, c.mul
    out = c.zero()
    for p, q, r in permutations((x1, x2, x3)):
        qr = m(q, r)
        term = vec_sub(d, m(m(p, y), qr), m(p, m(y, qr)))
        out = vec_add(d, out, term)
    return out


def _six_invertible(d) -> bool:
    return d.try_inv(d.coerce(6)) is not None


def is_jordan_admissible(a: Algebra, budget: int = DEFAULT_BUDGET, method: str = "auto") -> IdentityReport:
    """Jordan identity for ``x o y = xy + yx``.

    ``method`` is ``"auto"``, ``"exhaustive"`` or ``"polarized"``. The
    exhaustive path runs over every vector ``x`` of a finite domain (and every
    ``y`` too when that fits the budget; otherwise basis ``y`` suffices since
    the identity is linear in ``y``). The polarized path checks the linearised
    identity on basis 4-tuples plus the raw identity on basis pairs; it is
    flagged with a caveat when 6 is not invertible.
    """
    d = a.domain
    c = anticommutator_algebra(a)
    name = "jordan-admissible"
    fits = d.is_finite and d.modulus ** a.dim <= budget
    if method == "exhaustive" and not fits:
        raise BudgetExceeded(f"{d.modulus if d.is_finite else 'inf'}^{a.dim} vectors exceeds budget {budget}")
    if method in ("auto", "exhaustive") and fits:
        vectors = list(iter_vectors(d, a.dim))
        all_pairs = d.modulus ** (2 * a.dim) <= budget
        ys = vectors if all_pairs else a.basis()
        info = {"method": "exhaustive", "y_range": "all" if all_pairs else "basis"}
        for x in vectors:
            for y in ys:
                v = jordan_defect(c, x, y)
                if not is_zero(v):
                    return IdentityReport(name, False, witness=(x, y), defect=v, info=info)
        return IdentityReport(name, True, info=info)

    info = {"method": "polarized", "caveat": not _six_invertible(d)}
    basis = a.basis()
    for i, j in product(range(a.dim), repeat=2):
        v = jordan_defect(c, basis[i], basis[j])
        if not is_zero(v):
            info["failed"] = "raw"
            return IdentityReport(name, False, witness=(i, j), defect=v, info=info)
    for idx in product(range(a.dim), repeat=4):
        v = polarized_jordan_defect(c, *(basis[i] for i in idx))
        if not is_zero(v):
            info["failed"] = "polarized"
            return IdentityReport(name, False, witness=idx, defect=v, info=info)
    return IdentityReport(name, True, info=info)


IDENTITIES = {
    "associative": is_associative,
    "commutative": is_commutative,
    "anticommutative": is_anticommutative,
    "pre-lie": is_pre_lie,
    "lie-admissible": is_lie_admissible,
    "anti-pre-lie": is_anti_pre_lie,
    "pre-jordan": is_pre_jordan,
    "jordan-admissible": is_jordan_admissible,
}


def classify(a: Algebra) -> list[IdentityReport]:
    return [fn(a) for fn in IDENTITIES.values()]
