"""Binary trees, the truncated tree-graded tensor algebra and the generator ideals.

Coordinates of the component at a tree of degree ``k`` live in ``R^{⊗k}``,
indexed by mixed radix over ``dim`` with the leftmost tensor slot most
significant. Everything is truncated at a maximal degree ``D``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .algebra import Algebra, random_raw
from .coefficients import CoeffDomain
from .errors import BaseMismatch, BudgetExceeded, NonFieldDomain
from .identities import is_lie_admissible, is_pre_lie
from .linear import (DEFAULT_BUDGET, Matrix, Subspace, is_zero, rank, rref_modp, rref_rows, solve, vec_add,
                     vec_scale)
from .report import Report


@dataclass(frozen=True)
class MagmaTree:
    left: "MagmaTree | None" = None
    right: "MagmaTree | None" = None
    degree: int = field(default=1, compare=False)

    @staticmethod
    def node(left: "MagmaTree", right: "MagmaTree") -> "MagmaTree":
        return MagmaTree(left, right, left.degree + right.degree)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def sort_key(self) -> tuple:
        if self.is_leaf:
            return (1,)
        return (self.degree, self.left.sort_key, self.right.sort_key)

    def __lt__(self, other: "MagmaTree") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self):
        if self.is_leaf:
            return "x"
        wrap = lambda t: str(t) if t.is_leaf else f"({t})"
        return wrap(self.left) + wrap(self.right)


LEAF = MagmaTree()


def tree_product(s: MagmaTree, t: MagmaTree) -> MagmaTree:
    return MagmaTree.node(s, t)


def enumerate_trees(max_degree: int) -> list[list[MagmaTree]]:
    """``out[k-1]`` holds the trees of degree ``k``, ordered by left-subtree
    degree and then recursively."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    by_deg = {1: [LEAF]}
    for n in range(2, max_degree + 1):
        by_deg[n] = [tree_product(l, r) for k in range(1, n) for l in by_deg[k] for r in by_deg[n - k]]
    return [by_deg[n] for n in range(1, max_degree + 1)]


def parse_tree(s: str) -> MagmaTree:
    """Inverse of ``str``: ``"x"``, ``"xx"``, ``"(xx)x"``, ..."""
    pos = 0

    def atom():
        nonlocal pos
        if s[pos] == "x":
            pos += 1
            return LEAF
        if s[pos] == "(":
            pos += 1
            t = term()
            assert s[pos] == ")"
            pos += 1
            return t
        raise ValueError(f"bad tree {s!r}")

    def term():
        left = atom()
        if pos < len(s) and s[pos] != ")":
            return tree_product(left, atom())
        return left

    t = term()
    if pos != len(s):
        raise ValueError(f"bad tree {s!r}")
    return t


# -- graded elements ------------------------------------------------------


@dataclass(frozen=True)
class GradedElement:
    domain: CoeffDomain
    base_dim: int
    max_degree: int
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        for t, v in self.components.items():
            if t.degree > self.max_degree:
                raise ValueError(f"tree {t} exceeds truncation degree {self.max_degree}")
            if len(v) != self.base_dim ** t.degree:
                raise ValueError(f"component at {t} has length {len(v)}, expected {self.base_dim ** t.degree}")

    @classmethod
    def zero(cls, d: CoeffDomain, base_dim: int, max_degree: int) -> "GradedElement":
        return cls(d, base_dim, max_degree, {})

    @classmethod
    def monomial(cls, d: CoeffDomain, base_dim: int, max_degree: int, tree: MagmaTree, index: int,
                 coeff=1) -> "GradedElement":
        v = [d.zero] * base_dim ** tree.degree
        v[index] = d.coerce(coeff)
        return cls(d, base_dim, max_degree, {tree: tuple(v)})

    @classmethod
    def from_parts(cls, d, base_dim, max_degree, parts) -> "GradedElement":
        """Sum of ``(tree, vector)`` parts, zero parts dropped."""
        comps = {}
        for t, v in parts:
            comps[t] = vec_add(d, comps[t], v) if t in comps else tuple(v)
        return cls(d, base_dim, max_degree, {t: v for t, v in comps.items() if not is_zero(v)})

    def is_zero(self) -> bool:
        return all(is_zero(v) for v in self.components.values())

    def __add__(self, other: "GradedElement") -> "GradedElement":
        _same_shape(self, other)
        return GradedElement.from_parts(self.domain, self.base_dim, self.max_degree,
                                        list(self.components.items()) + list(other.components.items()))

    def scale(self, c) -> "GradedElement":
        d = self.domain
        c = d.coerce(c)
        return GradedElement.from_parts(d, self.base_dim, self.max_degree,
                                        [(t, vec_scale(d, c, v)) for t, v in self.components.items()])

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + other.scale(-1)

    @property
    def top_degree(self) -> int:
        return max((t.degree for t, v in self.components.items() if not is_zero(v)), default=0)

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return (self.domain, self.base_dim, self.max_degree) == (other.domain, other.base_dim, other.max_degree) \
            and (self - other).is_zero()

    __hash__ = None


def _same_shape(u: GradedElement, v: GradedElement):
    if u.domain != v.domain or u.base_dim != v.base_dim or u.max_degree != v.max_degree:
        raise BaseMismatch("graded elements over different bases or truncations")


def kron(d: CoeffDomain, u, v) -> tuple:
    return tuple(d.mul(a, b) for a in u for b in v)


def graded_mul(u: GradedElement, v: GradedElement) -> GradedElement:
    """Truncated product: tree components graft, coordinates tensor-concatenate."""
    _same_shape(u, v)
    d, D = u.domain, u.max_degree
    parts = [(tree_product(s, t), kron(d, a, b))
             for s, a in u.components.items() for t, b in v.components.items()
             if s.degree + t.degree <= D]
    return GradedElement.from_parts(d, u.base_dim, D, parts)


# -- universal morphism ---------------------------------------------------


class TreeEvaluator:
    """phi: images of basis tensors under each tree shape, memoised."""

    def __init__(self, a: Algebra):
        self.a = a
        self._cache: dict[MagmaTree, list] = {LEAF: a.basis()}

    def images(self, t: MagmaTree) -> list:
        if t not in self._cache:
            left, right = self.images(t.left), self.images(t.right)
            self._cache[t] = [self.a.mul(x, y) for x in left for y in right]
        return self._cache[t]

    def __call__(self, u: GradedElement) -> tuple:
        a = self.a
        if u.base_dim != a.dim or u.domain != a.domain:
            raise BaseMismatch(f"element over {u.domain}^{u.base_dim}, algebra over {a.domain}^{a.dim}")
        d = a.domain
        out = a.zero()
        for t, v in u.components.items():
            imgs = self.images(t)
            for c, img in zip(v, imgs):
                if c != d.zero:
                    out = vec_add(d, out, vec_scale(d, c, img))
        return out


def universal_morphism_eval(a: Algebra, u: GradedElement) -> tuple:
    return TreeEvaluator(a)(u)


# -- generators -----------------------------------------------------------


class GeneratorKind(enum.Enum):
    PRE_LIE = "prelie"
    LIE_ADMISSIBLE = "lieadm"


@dataclass(frozen=True)
class GeneratorSet:
    kind: GeneratorKind
    generators: tuple
    labels: tuple = ()
    max_degree: int = 3


def _index(dim: int, *idx) -> int:
    out = 0
    for i in idx:
        out = out * dim + i
    return out


XX = tree_product(LEAF, LEAF)
XX_X = tree_product(XX, LEAF)
X_XX = tree_product(LEAF, XX)


def theorem_generators(a: Algebra, kind: GeneratorKind | str, max_degree: int = 3) -> GeneratorSet:
    """Degree-2 family ``x⊗y - y⊗x - [x,y]`` on basis pairs, then the degree-3
    family on basis triples. The Lie-admissible degree-3 generator is the
    difference of the two associator sums."""
    kind = GeneratorKind(kind)
    if max_degree < 3:
        raise ValueError("generators need max_degree >= 3")
    d, n = a.domain, a.dim
    one, m1 = d.one, d.coerce(-1)
    gens, labels = [], []

    def mono(t, idx, c):
        v = [d.zero] * n ** t.degree
        v[idx] = c
        return t, tuple(v)

    for i, j in product(range(n), repeat=2):
        parts = [mono(XX, _index(n, i, j), one), mono(XX, _index(n, j, i), m1),
                 (LEAF, vec_scale(d, m1, a.bracket(a.e(i), a.e(j))))]
        gens.append(GradedElement.from_parts(d, n, max_degree, parts))
        labels.append(("deg2", i, j))
    for i, j, k in product(range(n), repeat=3):
        if kind is GeneratorKind.PRE_LIE:
            # (x⊗y)⊗z - (y⊗x)⊗z - x⊗(y⊗z) + y⊗(x⊗z)
            terms = [(XX_X, (i, j, k), one), (XX_X, (j, i, k), m1),
                     (X_XX, (i, j, k), m1), (X_XX, (j, i, k), one)]
        else:
            terms = []
            for (p, q, r), sign in (((i, j, k), one), ((j, k, i), one), ((k, i, j), one),
                                    ((j, i, k), m1), ((i, k, j), m1), ((k, j, i), m1)):
                terms.append((XX_X, (p, q, r), sign))
                terms.append((X_XX, (p, q, r), d.neg(sign)))
        parts = [mono(t, _index(n, *idx), c) for t, idx, c in terms]
        gens.append(GradedElement.from_parts(d, n, max_degree, parts))
        labels.append(("deg3", i, j, k))
    return GeneratorSet(kind, tuple(gens), tuple(labels), max_degree)


def generators_in_kernel_check(a: Algebra, kind: GeneratorKind | str) -> Report:
    """phi on every generator, against the identity checker (dual path)."""
    gs = theorem_generators(a, kind)
    phi = TreeEvaluator(a)
    outside = [(lab, phi(g)) for lab, g in zip(gs.labels, gs.generators) if not is_zero(phi(g))]
    identity = is_pre_lie(a) if gs.kind is GeneratorKind.PRE_LIE else is_lie_admissible(a)
    all_vanish = not outside
    info = {
        "kind": gs.kind.value,
        "reading": "difference" if gs.kind is GeneratorKind.LIE_ADMISSIBLE else "standard",
        "generators": len(gs.generators),
        "outside_kernel": len(outside),
        "identity_holds": identity.holds,
        "agree": all_vanish == identity.holds,
    }
    wit = outside[0] if outside else None
    return Report(f"generators-{gs.kind.value}", all_vanish, witness=wit and wit[0],
                  defect=wit and wit[1], info=info)


# -- closure --------------------------------------------------------------


class _Layout:
    """Flat coordinates for the truncated algebra: tree blocks in canonical order."""

    def __init__(self, base_dim: int, D: int):
        self.n, self.D = base_dim, D
        self.trees = [t for level in enumerate_trees(D) for t in level]
        self.offset = {}
        pos = 0
        for t in self.trees:
            self.offset[t] = pos
            pos += base_dim ** t.degree
        self.size = pos

    def block(self, t: MagmaTree) -> slice:
        return slice(self.offset[t], self.offset[t] + self.n ** t.degree)

    def flatten(self, u: GradedElement, zero) -> list:
        out = [zero] * self.size
        for t, v in u.components.items():
            out[self.block(t)] = list(v)
        return out

    def top_degree(self, row, zero) -> int:
        return max((t.degree for t in self.trees if any(x != zero for x in row[self.block(t)])), default=0)


def _monomial_maps(lay: _Layout, D: int):
    """For every monomial ``e_idx@t`` (degree <= D-1) and side, the coordinate
    injection ``src -> dst`` of multiplication by it, plus the source
    coordinates whose products overflow the truncation."""
    n = lay.n
    maps = []
    for t in lay.trees:
        if t.degree > D - 1:
            continue
        for idx in range(n ** t.degree):
            for left in (True, False):
                src, dst, dropped = [], [], []
                for s in lay.trees:
                    blk = lay.block(s)
                    if s.degree + t.degree > D:
                        dropped.extend(range(blk.start, blk.stop))
                        continue
                    if left:
                        base = lay.offset[tree_product(t, s)] + idx * n ** s.degree
                        dst.extend(base + j for j in range(blk.stop - blk.start))
                    else:
                        o, stride = lay.offset[tree_product(s, t)], n ** t.degree
                        dst.extend(o + j * stride + idx for j in range(blk.stop - blk.start))
                    src.extend(range(blk.start, blk.stop))
                maps.append((np.array(src), np.array(dst), np.array(dropped, dtype=int)))
    return maps


def _products(maps, rows: np.ndarray, safe: bool) -> np.ndarray:
    out = []
    for src, dst, dropped in maps:
        block = rows
        if safe and dropped.size:
            block = rows[~(rows[:, dropped] != 0).any(axis=1)]
        if block.shape[0] == 0:
            continue
        prod = np.zeros_like(block)
        prod[:, dst] = block[:, src]
        out.append(prod)
    return np.vstack(out) if out else np.zeros((0, rows.shape[1]), dtype=rows.dtype)


def _reduce_modp(rows: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Remove the components of ``rows`` along an rref ``basis``."""
    if not pivots or rows.shape[0] == 0:
        return rows % p
    return (rows - rows[:, pivots] @ basis) % p


def _frontier_closure(start: np.ndarray, maps, safe: bool, field_rref, reduce) -> np.ndarray:
    """Closure under the maps; only vectors new in the last round are multiplied."""
    cur, piv = field_rref(start)
    frontier = cur
    while frontier.shape[0]:
        prods = reduce(_products(maps, frontier, safe), cur, piv)
        prods = prods[(prods != 0).any(axis=1)]
        if prods.shape[0] == 0:
            break
        frontier, _ = field_rref(prods)
        cur, piv = field_rref(np.vstack([cur, frontier]))
    return cur


@dataclass
class ClosureResult:
    max_degree: int
    mode: str
    total_dim: int
    ambient_dim: int
    per_tree: dict
    per_degree: dict
    degree_one_trivial: bool

    def table(self) -> list[tuple[str, int, int, int]]:
        """``(tree, degree, closure dim, component dim)`` rows."""
        return [(str(t), t.degree, k, amb) for t, (k, amb) in self.per_tree.items()]


def _rank_prime(rows: np.ndarray, p: int) -> int:
    if rows.size == 0:
        return 0
    return len(rref_modp(rows, p)[1])


def graded_ideal_closure(gens: GeneratorSet, D: int = 4, budget: int = DEFAULT_BUDGET,
                         mode: str = "safe") -> ClosureResult:
    """Two-sided ideal generated by ``gens`` inside the truncation at degree ``D``.

    ``mode="safe"`` only adds products in which no component is truncated,
    so every vector found is a genuine element of the ideal. ``mode="truncated"``
    multiplies in the truncated algebra and drops what overflows.
    """
    if mode not in ("safe", "truncated"):
        raise ValueError(f"unknown mode {mode!r}")
    if not gens.generators:
        raise ValueError("empty generator set")
    g0 = gens.generators[0]
    d, n = g0.domain, g0.base_dim
    if not d.is_field:
        raise NonFieldDomain(f"{d} is not a field")
    lay = _Layout(n, D)
    if lay.size > budget:
        raise BudgetExceeded(f"truncated algebra has dimension {lay.size} > budget {budget}")
    safe = mode == "safe"
    lifted = [GradedElement(d, n, D, g.components) for g in gens.generators]

    maps = _monomial_maps(lay, D)
    if d.is_prime_field:
        p = d.modulus

        def field_rref(m):
            r, piv = rref_modp(m, p)
            return r[:len(piv)], piv

        start = np.array([lay.flatten(g, 0) for g in lifted], dtype=np.int64).reshape(-1, lay.size)
        cur = _frontier_closure(start, maps, safe, field_rref, lambda m, b, piv: _reduce_modp(m, b, piv, p))
        rank_of = lambda cols: _rank_prime(cur[:, cols], p)
    else:
        # exact path: object arrays of domain scalars, eliminated by rref_rows
        def field_rref(m):
            rows, piv = rref_rows(d, m.tolist(), lay.size)
            return np.array(rows[:len(piv)], dtype=object).reshape(len(piv), lay.size), piv

        def reduce(m, b, piv):
            if not piv or m.shape[0] == 0:
                return m
            return m - m[:, piv].dot(b)

        start = np.array([lay.flatten(g, d.zero) for g in lifted], dtype=object).reshape(-1, lay.size)
        cur = _frontier_closure(start, maps, safe, field_rref, reduce)
        rank_of = lambda cols: len(rref_rows(d, [[r[c] for c in cols] for r in cur.tolist()], len(cols))[1])
    total = cur.shape[0]

    per_tree = {}
    for t in lay.trees:
        blk = lay.block(t)
        others = [c for c in range(lay.size) if not blk.start <= c < blk.stop]
        # dim(S ∩ V_t) = dim S - rank of S projected away from V_t
        per_tree[t] = (total - rank_of(others), n ** t.degree)
    per_degree = {}
    for k in range(1, D + 1):
        cols = [c for t in lay.trees if t.degree != k for c in range(lay.block(t).start, lay.block(t).stop)]
        amb = sum(n ** t.degree for t in lay.trees if t.degree == k)
        per_degree[k] = (total - rank_of(cols), amb)
    return ClosureResult(D, mode, total, lay.size, per_tree, per_degree, per_tree[LEAF][0] == 0)


# -- random inputs ----------------------------------------------------------


def _matrix_span_closure(d: CoeffDomain, gens: list[Matrix], k: int) -> list[Matrix]:
    """Basis of the (non-unital) matrix algebra generated by ``gens``."""
    flat = lambda m: m.flat()
    sub = Subspace.span(d, k * k, [flat(g) for g in gens])
    while True:
        mats = [Matrix.of(d, [v[r * k:(r + 1) * k] for r in range(k)]) for v in sub.basis]
        prods = [flat(x @ y) for x in mats for y in mats]
        nxt = Subspace.span(d, k * k, list(sub.basis) + prods)
        if nxt.rank == sub.rank:
            return mats
        sub = nxt


def random_associative_algebra(d: CoeffDomain, rng: random.Random, max_dim: int = 3,
                               name: str = "Assoc") -> Algebra:
    """A subalgebra of 2x2 or 3x3 matrices generated by random elements, in a
    randomly changed basis. Associative, hence pre-Lie."""
    while True:
        k = rng.choice((2, 3))
        gens = [Matrix.of(d, [[random_raw(d, rng) for _ in range(k)] for _ in range(k)])
                for _ in range(rng.choice((1, 2)))]
        mats = _matrix_span_closure(d, gens, k)
        if 1 <= len(mats) <= max_dim:
            break
    m = len(mats)
    sub = Subspace.span(d, k * k, [x.flat() for x in mats])
    sc = tuple(tuple(sub.coords((x @ y).flat()) for y in mats) for x in mats)
    base = Algebra(name, d, m, tuple(f"e{i + 1}" for i in range(m)), sc)
    return change_basis(base, _random_invertible(d, m, rng))


def _random_invertible(d: CoeffDomain, m: int, rng: random.Random) -> Matrix:
    while True:
        p = Matrix.of(d, [[random_raw(d, rng) for _ in range(m)] for _ in range(m)])
        if rank(p) == m:
            return p


def change_basis(a: Algebra, p: Matrix) -> Algebra:
    """Structure constants in the basis given by the columns of ``p``."""
    d, n = a.domain, a.dim
    cols = p.columns()
    sc = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(solve(p, a.mul(cols[i], cols[j])))
        sc.append(tuple(row))
    return Algebra(a.name, d, n, a.basis_labels, tuple(sc))


__all__ = [
    "MagmaTree", "LEAF", "tree_product", "enumerate_trees", "parse_tree", "GradedElement", "graded_mul", "kron",
    "TreeEvaluator", "universal_morphism_eval", "GeneratorKind", "GeneratorSet", "theorem_generators",
    "generators_in_kernel_check", "ClosureResult", "graded_ideal_closure", "random_associative_algebra",
    "change_basis",
]
