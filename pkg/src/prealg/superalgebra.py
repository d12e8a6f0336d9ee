"""The Z/2-graded double ``M ⊕ M`` and its supercommutator.

The double has product ``(a, b)(a', b') = (aa' + mu bb', ab' + ba')``; basis
``(e_i, 0)`` comes first (even part), then ``(0, e_i)`` (odd part).

The odd component uses ``ba'``. That is the order under which the
supercommutator closed form
``[(a,b),(a',b')]_s = ([a,a'] + mu (b o b'), [a,b'] + [b,a'])`` holds; the
other order ``a'b`` is available with ``odd_order="swapped"`` and breaks the
closed form on noncommutative inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import Algebra
from .coefficients import CoeffDomain, Scalar
from .errors import DomainMismatch, ParamConstraintViolated, TwoTorsionTarget
from .linear import Matrix, is_zero, vec_add, vec_scale, vec_sub, zero_vec
from .morphisms import AlgebraMap, classify_map
from .report import Report

FLAGS3 = ("pre_morphism", "generalized_morphism", "anti_pre_morphism")


@dataclass(frozen=True)
class DoublingParams:
    mu: Scalar
    lam: Scalar

    @classmethod
    def of(cls, d: CoeffDomain, mu, lam) -> "DoublingParams":
        return cls(Scalar.of(d, mu), Scalar.of(d, lam))

    @property
    def domain(self) -> CoeffDomain:
        return self.mu.domain

    @property
    def constraint_holds(self) -> bool:
        """``mu (lambda^2 - 1) = 0``."""
        return (self.mu * (self.lam * self.lam - 1)).is_zero()

    @property
    def lambda_squared_is_one(self) -> bool:
        return (self.lam * self.lam - 1).is_zero()


@dataclass(frozen=True)
class SuperElement:
    even: tuple
    odd: tuple

    def flat(self) -> tuple:
        return tuple(self.even) + tuple(self.odd)

    @classmethod
    def from_flat(cls, v) -> "SuperElement":
        n = len(v) // 2
        return cls(tuple(v[:n]), tuple(v[n:]))


def _check_params(a: Algebra, p: DoublingParams):
    if p.mu.domain != a.domain or p.lam.domain != a.domain:
        raise DomainMismatch(f"parameters over {p.mu.domain} for an algebra over {a.domain}")


def double(a: Algebra, p: DoublingParams, odd_order: str = "standard") -> Algebra:
    _check_params(a, p)
    if odd_order not in ("standard", "swapped"):
        raise ValueError(f"unknown odd_order {odd_order!r}")
    d, n = a.domain, a.dim
    mu = p.mu.value
    z = zero_vec(d, n)
    sc = [[None] * (2 * n) for _ in range(2 * n)]
    for i, j in product(range(n), repeat=2):
        ij, ji = a.sc[i][j], a.sc[j][i]
        sc[i][j] = ij + z                                  # even * even
        sc[i][n + j] = z + ij                              # (e_i,0)(0,e_j) = (0, e_i e_j)
        sc[n + i][j] = z + (ij if odd_order == "standard" else ji)  # (0,e_i)(e_j,0)
        sc[n + i][n + j] = vec_scale(d, mu, ij) + z        # mu e_i e_j, even
    labels = tuple(f"({l},0)" for l in a.basis_labels) + tuple(f"(0,{l})" for l in a.basis_labels)
    name = f"{a.name}.F[{p.mu},{p.lam}]"
    return Algebra(name, d, 2 * n, labels, tuple(tuple(r) for r in sc))


def double_map(f: AlgebraMap, p: DoublingParams, odd_order: str = "standard") -> AlgebraMap:
    """``(a, b) -> (f(a), lambda f(b))`` between the doubles."""
    _check_params(f.source, p)
    d = f.source.domain
    m, k = f.target.dim, f.source.dim
    lam = p.lam.value
    rows = []
    for r in range(2 * m):
        row = []
        for c in range(2 * k):
            if r < m and c < k:
                row.append(f.matrix.rows[r][c])
            elif r >= m and c >= k:
                row.append(d.mul(lam, f.matrix.rows[r - m][c - k]))
            else:
                row.append(d.zero)
        rows.append(tuple(row))
    return AlgebraMap(double(f.source, p, odd_order), double(f.target, p, odd_order),
                      Matrix(d, tuple(rows), 2 * k))


def prop_doubling_equivalences(f: AlgebraMap, p: DoublingParams) -> Report:
    """Doubled map is pre / generalized / anti-pre iff ``f`` is, when mu(lambda^2-1)=0."""
    if not p.constraint_holds:
        raise ParamConstraintViolated(f"mu(lambda^2 - 1) = {p.mu * (p.lam * p.lam - 1)} != 0")
    base = classify_map(f)
    dbl = classify_map(double_map(f, p))
    info = {k: {"map": base.flags[k], "double": dbl.flags[k], "agree": base.flags[k] == dbl.flags[k]}
            for k in FLAGS3}
    return Report("doubling-equivalences", all(v["agree"] for v in info.values()), info=info)


# -- supercommutator ------------------------------------------------------


def _parity_parts(u: SuperElement, n: int, d: CoeffDomain):
    z = zero_vec(d, n)
    return [(0, tuple(u.even) + z), (1, z + tuple(u.odd))]


def supercommutator(da: Algebra, u: SuperElement, v: SuperElement) -> SuperElement:
    """Bilinear extension of ``xy - (-1)^{|x||y|} yx`` from homogeneous parts."""
    d, n = da.domain, da.dim // 2
    out = zero_vec(d, 2 * n)
    for pu, x in _parity_parts(u, n, d):
        for pv, y in _parity_parts(v, n, d):
            xy, yx = da.mul(x, y), da.mul(y, x)
            term = vec_add(d, xy, yx) if pu and pv else vec_sub(d, xy, yx)
            out = vec_add(d, out, term)
    return SuperElement.from_flat(out)


def supercommutator_closed_form(a: Algebra, mu, u: SuperElement, v: SuperElement) -> SuperElement:
    """``([a,a'] + mu (b o b'), [a,b'] + [b,a'])``."""
    d = a.domain
    mu = d.coerce(mu)
    even = vec_add(d, a.bracket(u.even, v.even), vec_scale(d, mu, a.circle(u.odd, v.odd)))
    odd = vec_add(d, a.bracket(u.even, v.odd), a.bracket(u.odd, v.even))
    return SuperElement(even, odd)


def epsilon_prop_check(a: Algebra) -> Report:
    """With mu = 1 and eps(x) = (x, x): [eps x, eps y]_s = (2xy, 2[x,y])."""
    d = a.domain
    da = double(a, DoublingParams.of(d, 1, 1))
    two = d.coerce(2)
    basis = a.basis()
    for i, j in product(range(a.dim), repeat=2):
        x, y = basis[i], basis[j]
        lhs = supercommutator(da, SuperElement(x, x), SuperElement(y, y))
        rhs = SuperElement(vec_scale(d, two, a.mul(x, y)), vec_scale(d, two, a.bracket(x, y)))
        if lhs != rhs:
            return Report("epsilon-prop", False, witness=(i, j),
                          defect=vec_sub(d, lhs.flat(), rhs.flat()))
    return Report("epsilon-prop", True)


def is_super_morphism(f: AlgebraMap, p: DoublingParams) -> Report:
    """Whether the doubled map preserves ``[-,-]_s`` on all basis pairs."""
    g = double_map(f, p)
    src, tgt = g.source, g.target
    n = f.source.dim
    for i, j in product(range(2 * n), repeat=2):
        x, y = src.e(i), src.e(j)
        lhs = g(supercommutator(src, SuperElement.from_flat(x), SuperElement.from_flat(y)).flat())
        rhs = supercommutator(tgt, SuperElement.from_flat(g(x)), SuperElement.from_flat(g(y))).flat()
        if lhs != rhs:
            return Report("super-morphism", False, witness=(i, j), defect=vec_sub(f.source.domain, lhs, rhs))
    return Report("super-morphism", True)


def super_morphism_prop_check(f: AlgebraMap, p: DoublingParams) -> Report:
    """lambda^2 = 1, 2-torsion-free target: f algebra morphism iff doubled map
    preserves the supercommutator. The route through pre and generalized is
    reported alongside."""
    if not p.lambda_squared_is_one:
        raise ParamConstraintViolated(f"lambda^2 = {p.lam * p.lam} != 1")
    if not f.target.domain.two_torsion_free:
        raise TwoTorsionTarget(f"{f.target.domain} has 2-torsion")
    prof = classify_map(f)
    morph = prof.flags["algebra_morphism"]
    sup = is_super_morphism(f, p).holds
    via = prof.flags["pre_morphism"] and prof.flags["generalized_morphism"]
    info = {"algebra_morphism": morph, "super_morphism": sup, "pre_and_generalized": via}
    return Report("super-morphism-prop", morph == sup == via, info=info)


def grading_check(a: Algebra, p: DoublingParams) -> Report:
    """Even*even and odd*odd land in the even part; mixed products in the odd part."""
    da = double(a, p)
    n = a.dim
    for i, j in product(range(2 * n), repeat=2):
        w = da.sc[i][j]
        odd_result = (i >= n) != (j >= n)
        wrong = w[:n] if odd_result else w[n:]
        if not is_zero(wrong):
            return Report("grading", False, witness=(i, j), defect=w)
    return Report("grading", True)


def char2_functors_coincide(a: Algebra) -> Report:
    """The doubles for (mu, lambda) in {±1}^2 agree exactly in characteristic 2."""
    d = a.domain
    doubles = [double(a, DoublingParams.of(d, m, l)) for m in (1, -1) for l in (1, -1)]
    same = all(x == doubles[0] for x in doubles[1:])
    return Report("char2-coincide", same, info={"characteristic": d.characteristic})
