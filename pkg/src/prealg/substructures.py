"""Ideals, pre-ideals, generalized ideals and the matching subalgebra notions.

Each "pre" notion is the plain notion for the bracket ``[x, y] = xy - yx``
and each "generalized" one is the plain notion for ``x o y = xy + yx``, so
everything reduces to checks against one of three product algebras.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, anticommutator_algebra, commutator_algebra
from .errors import AmbientMismatch, KindMismatch, NonFieldDomain, NotIdeal, NotPreIdeal
from .linear import Matrix, Subspace, complement, kernel, subspace_intersect
from .report import Report


class SubstructureKind(enum.Enum):
    IDEAL = "Ideal"
    PRE_IDEAL = "PreIdeal"
    GENERALIZED_IDEAL = "GeneralizedIdeal"
    SUBALGEBRA = "Subalgebra"
    PRE_SUBALGEBRA = "PreSubalgebra"
    GENERALIZED_SUBALGEBRA = "GeneralizedSubalgebra"

    @property
    def is_ideal(self) -> bool:
        return self in (SubstructureKind.IDEAL, SubstructureKind.PRE_IDEAL, SubstructureKind.GENERALIZED_IDEAL)

    @property
    def product(self) -> str:
        if self in (SubstructureKind.IDEAL, SubstructureKind.SUBALGEBRA):
            return "dot"
        if self in (SubstructureKind.PRE_IDEAL, SubstructureKind.PRE_SUBALGEBRA):
            return "bracket"
        return "circle"


IDEAL_KIND = {
    "dot": SubstructureKind.IDEAL,
    "bracket": SubstructureKind.PRE_IDEAL,
    "circle": SubstructureKind.GENERALIZED_IDEAL,
}


def product_algebra(a: Algebra, product: str) -> Algebra:
    if product == "dot":
        return a
    if product == "bracket":
        return commutator_algebra(a)
    if product == "circle":
        return anticommutator_algebra(a)
    raise ValueError(f"unknown product {product!r}")


def _check(a: Algebra, s: Subspace):
    if not a.domain.is_field:
        raise NonFieldDomain(f"{a.domain} is not a field")
    if s.ambient_dim != a.dim or s.domain != a.domain:
        raise AmbientMismatch(f"subspace of {s.domain}^{s.ambient_dim} in a {a.dim}-dim algebra over {a.domain}")


def is_substructure(a: Algebra, s: Subspace, kind: SubstructureKind) -> Report:
    _check(a, s)
    p = product_algebra(a, kind.product)
    basis = s.basis
    if kind.is_ideal:
        for i, x in enumerate(a.basis()):
            for j, v in enumerate(basis):
                for side, w in (("left", p.mul(x, v)), ("right", p.mul(v, x))):
                    if not s.contains(w):
                        return Report(kind.value, False, witness=(i, j), defect=w, info={"side": side})
    else:
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                w = p.mul(u, v)
                if not s.contains(w):
                    return Report(kind.value, False, witness=(i, j), defect=w)
    return Report(kind.value, True)


def generated_substructure(a: Algebra, gens: Sequence[Sequence], kind: SubstructureKind) -> Subspace:
    """Smallest subspace containing ``gens`` closed in the sense of ``kind``."""
    d, n = a.domain, a.dim
    if not d.is_field:
        raise NonFieldDomain(f"{d} is not a field")
    p = product_algebra(a, kind.product)
    cur = Subspace.span(d, n, gens)
    for _ in range(n + 1):
        if kind.is_ideal:
            new = [w for x in a.basis() for v in cur.basis for w in (p.mul(x, v), p.mul(v, x))]
        else:
            new = [p.mul(u, v) for u in cur.basis for v in cur.basis]
        nxt = Subspace.span(d, n, cur.basis + tuple(new))
        if nxt.rank == cur.rank:
            return cur
        cur = nxt
    raise RuntimeError("closure did not stabilise within dim rounds")


def _stacked_kernel(a: Algebra, maps) -> Subspace:
    """Common kernel of linear maps given as callables on basis vectors."""
    rows = []
    for f in maps:
        cols = [f(x) for x in a.basis()]
        rows.extend(Matrix.from_columns(a.domain, cols, a.dim).rows)
    if not rows:
        return Subspace.full(a.domain, a.dim)
    return kernel(Matrix(a.domain, tuple(rows), a.dim))


def nucleus(a: Algebra) -> Subspace:
    if not a.domain.is_field:
        raise NonFieldDomain(f"{a.domain} is not a field")
    B = a.basis()
    maps = []
    for u in B:
        for v in B:
            maps.append(lambda x, u=u, v=v: a.associator(x, u, v))
            maps.append(lambda x, u=u, v=v: a.associator(u, x, v))
            maps.append(lambda x, u=u, v=v: a.associator(u, v, x))
    return _stacked_kernel(a, maps)


def center(a: Algebra) -> Subspace:
    comm = _stacked_kernel(a, [lambda x, u=u: a.bracket(x, u) for u in a.basis()])
    return subspace_intersect(nucleus(a), comm)


def pre_ideal_commutator(a: Algebra, i: Subspace, j: Subspace) -> Subspace:
    """Pre-ideal generated by all ``[u, v]`` with ``u`` in ``i``, ``v`` in ``j``."""
    for s in (i, j):
        if not is_substructure(a, s, SubstructureKind.PRE_IDEAL).holds:
            raise NotPreIdeal(f"{s} is not a pre-ideal of {a.name}")
    gens = [a.bracket(u, v) for u in i.basis for v in j.basis]
    return generated_substructure(a, gens, SubstructureKind.PRE_IDEAL)


def huq_smith_commutator(a: Algebra, i: Subspace, j: Subspace) -> Subspace:
    """Ideal generated by ``I J`` and ``J I``."""
    for s in (i, j):
        if not is_substructure(a, s, SubstructureKind.IDEAL).holds:
            raise NotIdeal(f"{s} is not an ideal of {a.name}")
    gens = [w for u in i.basis for v in j.basis for w in (a.mul(u, v), a.mul(v, u))]
    return generated_substructure(a, gens, SubstructureKind.IDEAL)


# -- quotients and restrictions ---------------------------------------------


@dataclass(frozen=True)
class QuotientPresentation:
    """``parent / ideal`` presented on the standard complement of the ideal.

    ``induced`` has basis the section vectors (``None`` when the ideal is
    the whole algebra); ``project`` maps a parent vector to its coordinates
    in that basis.
    """

    parent: Algebra
    ideal: Subspace
    section_basis: Subspace
    induced: Algebra
    product_kind: str

    @property
    def section_columns(self) -> list[int]:
        return [c for c in range(self.parent.dim) if c not in set(self.ideal.pivots)]

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.section_columns)

    def lift(self, q: Sequence) -> tuple:
        d, n = self.parent.domain, self.parent.dim
        out = [d.zero] * n
        for c, a in zip(self.section_columns, q):
            out[c] = a
        return tuple(out)


def quotient(a: Algebra, k: Subspace, product_kind: str = "dot") -> QuotientPresentation:
    kind = IDEAL_KIND.get(product_kind)
    if kind is None:
        raise ValueError(f"unknown product kind {product_kind!r}")
    if not is_substructure(a, k, kind).holds:
        raise KindMismatch(f"{k} is not a {kind.value} of {a.name}")
    p = product_algebra(a, product_kind)
    sec = complement(k)
    cols = [c for c in range(a.dim) if c not in set(k.pivots)]
    d = a.domain
    if not cols:
        induced = None
    else:
        def proj(v):
            r = k.reduce(v)
            return tuple(r[c] for c in cols)

        sc = tuple(tuple(proj(p.mul(a.e(i), a.e(j))) for j in cols) for i in cols)
        labels = tuple(a.basis_labels[c] for c in cols)
        induced = Algebra(f"{a.name}/{product_kind}", d, len(cols), labels, sc)
    return QuotientPresentation(a, k, sec, induced, product_kind)


def restrict(a: Algebra, s: Subspace, name: str | None = None) -> Algebra | None:
    """The algebra structure on ``s`` (closed under ``a``'s product) in
    echelon-basis coordinates; ``None`` for the zero subspace."""
    if s.rank == 0:
        return None
    sc = []
    for u in s.basis:
        row = []
        for v in s.basis:
            w = a.mul(u, v)
            if not s.contains(w):
                raise KindMismatch("subspace is not closed under the product")
            row.append(s.coords(w))
        sc.append(tuple(row))
    labels = tuple(f"b{i + 1}" for i in range(s.rank))
    return Algebra(name or f"{a.name}|sub", a.domain, s.rank, labels, tuple(sc))


def to_coords(outer: Subspace, inner: Subspace) -> Subspace:
    """``inner`` (a subspace of ``outer``) in ``outer``'s echelon coordinates."""
    return Subspace.span(outer.domain, outer.rank, (outer.coords(v) for v in inner.basis))


def pre_ideal_correspondence_check(a: Algebra, s: Subspace) -> Report:
    """Pre-ideal of ``(M, .)`` iff ideal of ``(M, [-,-])``, both ways evaluated."""
    lhs = is_substructure(a, s, SubstructureKind.PRE_IDEAL).holds
    rhs = is_substructure(commutator_algebra(a), s, SubstructureKind.IDEAL).holds
    return Report("pre-ideal-correspondence", lhs == rhs, info={"pre_ideal": lhs, "ideal_of_U": rhs})
