"""Linear maps between algebras and the morphism taxonomy.

Writing ``D(x, y) = f(xy) - f(x)f(y)`` for the morphism defect, ``f`` is

* an algebra morphism when ``D = 0``,
* a pre-morphism when ``D`` is symmetric,
* a generalized morphism when ``D`` is antisymmetric,
* an anti-pre-morphism when ``f(xy) + f(x)f(y)`` is symmetric,
* an anti-homomorphism when ``f(xy) = f(y)f(x)``.

All five conditions are bilinear, so basis pairs decide them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import Algebra, commutator_algebra
from .errors import (DomainMismatch, NonFieldDomain, NotAPreMorphism, NotPreIdeal, NotPreSubalgebra,
                     ShapeMismatch, TwoTorsionTarget)
from .linear import (Matrix, Subspace, image, is_zero, kernel, rank, solve, subspace_intersect, subspace_sum,
                     vec_add, vec_sub)
from .report import Report
from .substructures import SubstructureKind, is_substructure, quotient, restrict, to_coords

FLAGS = ("algebra_morphism", "anti_homomorphism", "pre_morphism", "generalized_morphism", "anti_pre_morphism")


@dataclass(frozen=True)
class AlgebraMap:
    """``matrix`` is target.dim x source.dim; column j is the image of e_j."""

    source: Algebra
    target: Algebra
    matrix: Matrix

    def __post_init__(self):
        if self.source.domain != self.target.domain or self.matrix.domain != self.source.domain:
            raise DomainMismatch("source, target and matrix must share a domain")
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ShapeMismatch(f"matrix {self.matrix.shape} for a map "
                                f"{self.source.dim} -> {self.target.dim}")

    @classmethod
    def endo(cls, a: Algebra, m: Matrix) -> "AlgebraMap":
        return cls(a, a, m)

    @classmethod
    def identity(cls, a: Algebra) -> "AlgebraMap":
        return cls(a, a, Matrix.identity(a.domain, a.dim))

    def __call__(self, v):
        return self.matrix.apply(v)

    def __neg__(self) -> "AlgebraMap":
        return AlgebraMap(self.source, self.target, -self.matrix)

    def then(self, other: "AlgebraMap") -> "AlgebraMap":
        """``other o self``."""
        return AlgebraMap(self.source, other.target, other.matrix @ self.matrix)

    def anti_compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """The modified composite ``-(other o self)`` used for anti-pre-morphisms."""
        return -self.then(other)

    def with_algebras(self, source: Algebra, target: Algebra) -> "AlgebraMap":
        return AlgebraMap(source, target, self.matrix)


@dataclass
class MorphismProfile:
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __getattr__(self, name):
        if name in FLAGS and "flags" in self.__dict__:
            return self.flags[name]
        raise AttributeError(name)

    def as_dict(self) -> dict:
        return {k: {"holds": self.flags[k], "witness": self.witnesses.get(k)} for k in FLAGS}


def classify_map(f: AlgebraMap) -> MorphismProfile:
    src, tgt = f.source, f.target
    d = tgt.domain
    basis = src.basis()
    img = [f(e) for e in basis]
    n = src.dim
    f_prod = {}
    prod_img = {}
    for i, j in product(range(n), repeat=2):
        f_prod[i, j] = f(src.mul(basis[i], basis[j]))
        prod_img[i, j] = tgt.mul(img[i], img[j])

    tests = {
        "algebra_morphism": lambda i, j: vec_sub(d, f_prod[i, j], prod_img[i, j]),
        "anti_homomorphism": lambda i, j: vec_sub(d, f_prod[i, j], prod_img[j, i]),
        "pre_morphism": lambda i, j: vec_sub(d, vec_sub(d, f_prod[i, j], prod_img[i, j]),
                                             vec_sub(d, f_prod[j, i], prod_img[j, i])),
        "generalized_morphism": lambda i, j: vec_add(d, vec_sub(d, f_prod[i, j], prod_img[i, j]),
                                                     vec_sub(d, f_prod[j, i], prod_img[j, i])),
        "anti_pre_morphism": lambda i, j: vec_sub(d, vec_add(d, f_prod[i, j], prod_img[i, j]),
                                                  vec_add(d, f_prod[j, i], prod_img[j, i])),
    }
    prof = MorphismProfile()
    for name, defect in tests.items():
        prof.flags[name] = True
        for i, j in product(range(n), repeat=2):
            if not is_zero(defect(i, j)):
                prof.flags[name] = False
                prof.witnesses[name] = (i, j)
                break
    return prof


def is_algebra_morphism(f: AlgebraMap) -> bool:
    return classify_map(f).flags["algebra_morphism"]


# -- the left-multiplication map --------------------------------------------


def endomorphism_algebra(a: Algebra) -> Algebra:
    """``End(M)`` under composition, on matrix units ``E_rc`` (row-major index)."""
    d, n = a.domain, a.dim
    N = n * n
    table = {}
    for r, c, c2, s in product(range(n), repeat=4):
        if c == c2:
            v = [0] * N
            v[r * n + s] = 1
            table[(r * n + c, c2 * n + s)] = v
    labels = [f"E{r + 1}{c + 1}" for r in range(n) for c in range(n)]
    return Algebra.from_table(d, N, table, name=f"End({a.name})", labels=labels)


def lambda_map(a: Algebra) -> AlgebraMap:
    """``x -> (a -> x a)`` as a map into ``End(M)``."""
    end = endomorphism_algebra(a)
    cols = [a.left_mult_matrix(e).flat() for e in a.basis()]
    return AlgebraMap(a, end, Matrix.from_columns(a.domain, cols, a.dim * a.dim))


def lambda_anti_criterion(a: Algebra) -> Report:
    """Anti-pre-Lie iff Lie-admissible and the left-multiplication map is anti-pre."""
    from .identities import is_anti_pre_lie, is_lie_admissible

    direct = is_anti_pre_lie(a).holds
    lie_adm = is_lie_admissible(a).holds
    lam_anti = classify_map(lambda_map(a)).flags["anti_pre_morphism"]
    via = lie_adm and lam_anti
    return Report("lambda-anti-criterion", direct == via,
                  info={"anti_pre_lie": direct, "lie_admissible": lie_adm, "lambda_anti_pre": lam_anti})


def torsionfree_bridge(f: AlgebraMap) -> Report:
    """Over a 2-torsion-free target: pre and generalized iff algebra morphism."""
    if not f.target.domain.two_torsion_free:
        raise TwoTorsionTarget(f"{f.target.domain} has 2-torsion")
    p = classify_map(f)
    lhs = p.flags["pre_morphism"] and p.flags["generalized_morphism"]
    rhs = p.flags["algebra_morphism"]
    return Report("torsionfree-bridge", lhs == rhs, info={"pre_and_generalized": lhs, "algebra_morphism": rhs})


# -- derivations ------------------------------------------------------------


def _square(a: Algebra, m: Matrix):
    if m.shape != (a.dim, a.dim) or m.domain != a.domain:
        raise ShapeMismatch(f"expected a {a.dim}x{a.dim} matrix over {a.domain}")


def _leibniz(a: Algebra, p: Algebra, m: Matrix, name: str) -> Report:
    d = a.domain
    basis = a.basis()
    for i, j in product(range(a.dim), repeat=2):
        x, y = basis[i], basis[j]
        lhs = m.apply(p.mul(x, y))
        rhs = vec_add(d, p.mul(m.apply(x), y), p.mul(x, m.apply(y)))
        if lhs != rhs:
            return Report(name, False, witness=(i, j), defect=vec_sub(d, lhs, rhs))
    return Report(name, True)


def is_derivation(a: Algebra, m: Matrix) -> Report:
    _square(a, m)
    return _leibniz(a, a, m, "derivation")


def is_pre_derivation(a: Algebra, m: Matrix) -> Report:
    """Derivation of the bracket algebra."""
    _square(a, m)
    return _leibniz(a, commutator_algebra(a), m, "pre-derivation")


def is_generalized_derivation_pair(a: Algebra, f: Matrix, dm: Matrix) -> bool:
    """``dm`` is a derivation and ``f(xy) = f(x)y + x dm(y)`` on all pairs."""
    if not is_derivation(a, dm).holds:
        return False
    d = a.domain
    for x in a.basis():
        for y in a.basis():
            if f.apply(a.mul(x, y)) != vec_add(d, a.mul(f.apply(x), y), a.mul(x, dm.apply(y))):
                return False
    return True


def find_generalized_derivation_witness(a: Algebra, f: Matrix) -> Matrix | None:
    """A derivation ``dm`` with ``f(xy) = f(x)y + x dm(y)``, or ``None``.

    The unknown entries ``dm[r][c]`` (index ``r*n + c``) enter both conditions
    linearly, so this is one linear system solved with free variables at 0.
    """
    _square(a, f)
    d, n = a.domain, a.dim
    if not d.is_field:
        raise NonFieldDomain(f"{d} is not a field")
    basis = a.basis()
    N = n * n

    def unit(r, c):
        rows = [[d.zero] * n for _ in range(n)]
        rows[r][c] = d.one
        return Matrix(d, tuple(tuple(row) for row in rows), n)

    units = [unit(r, c) for r in range(n) for c in range(n)]
    eq_rows, rhs = [], []
    for x, y in product(basis, repeat=2):
        xy = a.mul(x, y)
        # derivation: dm(xy) - dm(x) y - x dm(y) = 0
        cols = [vec_sub(d, vec_sub(d, u.apply(xy), a.mul(u.apply(x), y)), a.mul(x, u.apply(y))) for u in units]
        for k in range(n):
            eq_rows.append(tuple(col[k] for col in cols))
            rhs.append(d.zero)
        # relation: x dm(y) = f(xy) - f(x) y
        cols = [a.mul(x, u.apply(y)) for u in units]
        target = vec_sub(d, f.apply(xy), a.mul(f.apply(x), y))
        for k in range(n):
            eq_rows.append(tuple(col[k] for col in cols))
            rhs.append(target[k])
    sol = solve(Matrix(d, tuple(eq_rows), N), rhs)
    if sol is None:
        return None
    return Matrix(d, tuple(tuple(sol[r * n:(r + 1) * n]) for r in range(n)), n)


# -- isomorphism theorems ------------------------------------------------------


def first_iso_theorem(f: AlgebraMap) -> Report:
    """Kernel is a pre-ideal, image a pre-subalgebra, and the induced map
    ``(M/ker f, [-,-]) -> (f(M), [-,-])`` is a bijective algebra morphism."""
    prof = classify_map(f)
    if not prof.flags["pre_morphism"]:
        raise NotAPreMorphism(f"map is not a pre-morphism (witness {prof.witnesses.get('pre_morphism')})")
    src, tgt = f.source, f.target
    d = src.domain
    if not d.is_field:
        raise NonFieldDomain(f"{d} is not a field")
    K = kernel(f.matrix)
    im = image(f.matrix)
    info = {
        "kernel_pre_ideal": is_substructure(src, K, SubstructureKind.PRE_IDEAL).holds,
        "image_pre_subalgebra": is_substructure(tgt, im, SubstructureKind.PRE_SUBALGEBRA).holds,
        "kernel_rank": K.rank,
        "image_rank": im.rank,
    }
    q = quotient(src, K, "bracket")
    if q.induced is None:
        info["induced_bijective"] = im.rank == 0
        info["induced_morphism"] = True
    else:
        # induced map on section coordinates -> image coordinates
        cols = [im.coords(f(q.lift(q.induced.e(t)))) for t in range(q.induced.dim)]
        bij = len(cols) == im.rank and rank(Matrix.from_columns(d, cols, im.rank)) == im.rank
        info["induced_bijective"] = bij
        img_alg = restrict(commutator_algebra(tgt), im)
        if img_alg is None:
            info["induced_morphism"] = False
        else:
            g = AlgebraMap(q.induced, img_alg, Matrix.from_columns(d, cols, im.rank))
            info["induced_morphism"] = is_algebra_morphism(g)
    holds = all(info[k] for k in ("kernel_pre_ideal", "image_pre_subalgebra", "induced_bijective", "induced_morphism"))
    return Report("first-iso", holds, info=info)


def second_iso_theorem(a: Algebra, n: Subspace, k: Subspace) -> Report:
    """``(N / N∩K, [-,-]) ≅ ((N+K) / K, [-,-])`` via the canonical map."""
    if not is_substructure(a, n, SubstructureKind.PRE_SUBALGEBRA).holds:
        raise NotPreSubalgebra(f"{n} is not a pre-subalgebra")
    if not is_substructure(a, k, SubstructureKind.PRE_IDEAL).holds:
        raise NotPreIdeal(f"{k} is not a pre-ideal")
    d = a.domain
    u = commutator_algebra(a)
    nk = subspace_intersect(n, k)
    s = subspace_sum(n, k)
    info = {"sum_pre_subalgebra": is_substructure(a, s, SubstructureKind.PRE_SUBALGEBRA).holds}
    n_alg = restrict(u, n)
    s_alg = restrict(u, s)
    if n_alg is None:
        # N = 0: both sides are zero
        info.update(intersection_pre_ideal_of_n=True, canonical_iso=(s.rank == k.rank))
        return Report("second-iso", all(info.values()), info=info)
    nk_in_n = to_coords(n, nk)
    info["intersection_pre_ideal_of_n"] = is_substructure(n_alg, nk_in_n, SubstructureKind.IDEAL).holds
    k_in_s = to_coords(s, k)
    q1 = quotient(n_alg, nk_in_n, "dot")
    q2 = quotient(s_alg, k_in_s, "dot")
    if q1.induced is None or q2.induced is None:
        info["canonical_iso"] = q1.induced is None and q2.induced is None
        return Report("second-iso", all(info.values()), info=info)
    cols = []
    for t in range(q1.induced.dim):
        ambient = n.from_coords(q1.lift(q1.induced.e(t)))
        cols.append(q2.project(s.coords(ambient)))
    m = Matrix.from_columns(d, cols, q2.induced.dim)
    bij = m.is_square() and rank(m) == m.nrows
    info["canonical_iso"] = bij and is_algebra_morphism(AlgebraMap(q1.induced, q2.induced, m))
    info["dims"] = (q1.induced.dim, q2.induced.dim)
    return Report("second-iso", all(v for key, v in info.items() if key != "dims"), info=info)

