"""Dense exact linear algebra over a coefficient field.

Vectors are plain tuples of raw domain values; the domain travels alongside
(on the Matrix, Subspace or Algebra that owns them). Subspaces are kept in
reduced row-echelon form so equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .coefficients import CoeffDomain, Raw
from .errors import AmbientMismatch, BudgetExceeded, NonFieldDomain, ShapeMismatch

Vector = tuple

DEFAULT_BUDGET = 4096


# -- vectors --------------------------------------------------------------


def zero_vec(d: CoeffDomain, n: int) -> Vector:
    return (d.zero,) * n


def unit_vec(d: CoeffDomain, n: int, i: int) -> Vector:
    return tuple(d.one if k == i else d.zero for k in range(n))


def vec_add(d: CoeffDomain, u: Sequence, v: Sequence) -> Vector:
    return tuple(d.add(a, b) for a, b in zip(u, v))


def vec_sub(d: CoeffDomain, u: Sequence, v: Sequence) -> Vector:
    return tuple(d.sub(a, b) for a, b in zip(u, v))


def vec_neg(d: CoeffDomain, u: Sequence) -> Vector:
    return tuple(d.neg(a) for a in u)


def vec_scale(d: CoeffDomain, c: Raw, u: Sequence) -> Vector:
    return tuple(d.mul(c, a) for a in u)


def is_zero(u: Iterable) -> bool:
    return all(a == 0 for a in u)


def lin_comb(d: CoeffDomain, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [d.zero] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, a in enumerate(v):
            if a != 0:
                out[k] = d.add(out[k], d.mul(c, a))
    return tuple(out)


def coerce_vec(d: CoeffDomain, v: Iterable) -> Vector:
    return tuple(d.coerce(a) for a in v)


# -- matrices -------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix; acts on column vectors."""

    domain: CoeffDomain
    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ShapeMismatch(f"row of length {len(r)} in a {self.ncols}-column matrix")

    @classmethod
    def of(cls, d: CoeffDomain, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(coerce_vec(d, r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeMismatch("cannot infer the column count of an empty matrix")
            ncols = len(rows[0])
        return cls(d, rows, ncols)

    @classmethod
    def identity(cls, d: CoeffDomain, n: int) -> "Matrix":
        return cls(d, tuple(unit_vec(d, n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, d: CoeffDomain, nrows: int, ncols: int) -> "Matrix":
        return cls(d, tuple(zero_vec(d, ncols) for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, d: CoeffDomain, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls(d, tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        d = self.domain
        out = []
        for r in self.rows:
            acc = d.zero
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    acc = d.add(acc, d.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.domain != self.domain or self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot compose {self.shape} with {other.shape}")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(self.domain, cols, self.nrows)

    def transpose(self) -> "Matrix":
        return Matrix(self.domain, tuple(self.columns()), self.nrows)

    def __neg__(self) -> "Matrix":
        return Matrix(self.domain, tuple(vec_neg(self.domain, r) for r in self.rows), self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if other.shape != self.shape or other.domain != self.domain:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        d = self.domain
        return Matrix(d, tuple(vec_add(d, a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Raw) -> "Matrix":
        d = self.domain
        return Matrix(d, tuple(vec_scale(d, c, r) for r in self.rows), self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def flat(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    def format_rows(self) -> list[list[str]]:
        return [[self.domain.format(a) for a in r] for r in self.rows]


def _require_field(d: CoeffDomain):
    if not d.is_field:
        raise NonFieldDomain(f"{d} is not a field")


def rref_rows(d: CoeffDomain, rows: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form of ``rows``: (nonzero rows, pivot columns)."""
    _require_field(d)
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = d.inv(m[r][c])
        if inv != 1:
            m[r] = [d.mul(inv, a) for a in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    m[i] = [d.sub(a, d.mul(f, b)) if b != 0 else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rref(m: Matrix) -> Matrix:
    rows, _ = rref_rows(m.domain, m.rows, m.ncols)
    return Matrix(m.domain, tuple(tuple(r) for r in rows), m.ncols)


def rank(m: Matrix) -> int:
    return len(rref_rows(m.domain, m.rows, m.ncols)[0])


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``a @ x == b``; free variables are set to 0.

    Returns ``None`` when the system is inconsistent.
    """
    d = a.domain
    _require_field(d)
    if len(b) != a.nrows:
        raise ShapeMismatch(f"right-hand side of length {len(b)} for {a.shape}")
    aug = [list(r) + [bi] for r, bi in zip(a.rows, b)]
    rows, pivots = rref_rows(d, aug, a.ncols + 1)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [d.zero] * a.ncols
    for r, c in zip(rows, pivots):
        x[c] = r[-1]
    return tuple(x)


# -- subspaces ------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``domain^ambient_dim`` held by its reduced echelon basis."""

    domain: CoeffDomain
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, d: CoeffDomain, n: int, vectors: Iterable[Sequence] = ()) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rows, _ = rref_rows(d, vectors, n)
        return cls(d, n, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, d: CoeffDomain, n: int) -> "Subspace":
        _require_field(d)
        return cls(d, n, ())

    @classmethod
    def full(cls, d: CoeffDomain, n: int) -> "Subspace":
        _require_field(d)
        return cls(d, n, tuple(unit_vec(d, n, i) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    dim = rank

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, a in enumerate(r) if a != 0) for r in self.basis]

    def reduce(self, v: Sequence) -> Vector:
        """``v`` minus its component along the basis: zero on pivot columns."""
        d = self.domain
        out = list(v)
        for r, c in zip(self.basis, self.pivots):
            f = out[c]
            if f != 0:
                out = [d.sub(a, d.mul(f, b)) if b != 0 else a for a, b in zip(out, r)]
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return is_zero(self.reduce(v))

    __contains__ = contains

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the echelon basis (``v`` must lie in the span)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def from_coords(self, c: Sequence) -> Vector:
        return lin_comb(self.domain, c, self.basis, self.ambient_dim)

    def __le__(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return all(other.contains(v) for v in self.basis)

    def __str__(self):
        if not self.basis:
            return "{0}"
        f = self.domain.format
        return "span(" + ", ".join("[" + " ".join(f(a) for a in r) + "]" for r in self.basis) + ")"

    def to_json(self) -> list[list[str]]:
        return [[self.domain.format(a) for a in r] for r in self.basis]


def _check_same(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim or u.domain != v.domain:
        raise AmbientMismatch(f"{u.domain}^{u.ambient_dim} vs {v.domain}^{v.ambient_dim}")


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_same(u, v)
    return Subspace.span(u.domain, u.ambient_dim, u.basis + v.basis)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_same(u, v)
    d, n = u.domain, u.ambient_dim
    if not u.basis or not v.basis:
        return Subspace.zero(d, n)
    stacked = Matrix(d, u.basis + v.basis, n)
    # c in the left kernel of the stacked rows gives sum(c_u * u) = -sum(c_v * v)
    rel = kernel(stacked.transpose())
    r = u.rank
    return Subspace.span(d, n, (lin_comb(d, c[:r], u.basis, n) for c in rel.basis))


def kernel(m: Matrix) -> Subspace:
    d, n = m.domain, m.ncols
    rows, pivots = rref_rows(d, m.rows, n)
    free = [c for c in range(n) if c not in set(pivots)]
    vecs = []
    for f in free:
        x = [d.zero] * n
        x[f] = d.one
        for r, c in zip(rows, pivots):
            x[c] = d.neg(r[f])
        vecs.append(x)
    return Subspace.span(d, n, vecs)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.domain, m.nrows, m.columns())


def complement(u: Subspace) -> Subspace:
    """Standard basis vectors at the non-pivot columns of ``u``."""
    d, n = u.domain, u.ambient_dim
    piv = set(u.pivots)
    return Subspace.span(d, n, (unit_vec(d, n, c) for c in range(n) if c not in piv))


def enumerate_subspaces(d: CoeffDomain, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """Every subspace of ``F_p^n`` exactly once, by rank then pivot set."""
    if not d.is_prime_field:
        raise NonFieldDomain(f"subspace enumeration needs a prime field, got {d}")
    if d.modulus ** n > budget:
        raise BudgetExceeded(f"{d.modulus}^{n} vectors exceeds budget {budget}")
    elems = d.elements()
    for r in range(n + 1):
        for piv in combinations(range(n), r):
            pset = set(piv)
            slots = [(i, c) for i, p in enumerate(piv) for c in range(p + 1, n) if c not in pset]
            for vals in product(elems, repeat=len(slots)):
                rows = [[d.zero] * n for _ in range(r)]
                for i, p in enumerate(piv):
                    rows[i][p] = d.one
                for (i, c), a in zip(slots, vals):
                    rows[i][c] = a
                yield Subspace(d, n, tuple(tuple(row) for row in rows))


def iter_matrices(d: CoeffDomain, nrows: int, ncols: int, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """All matrices over a finite domain, lexicographic in row-major entries."""
    if not d.is_finite:
        raise ValueError(f"{d} is infinite")
    if d.modulus ** (nrows * ncols) > budget:
        raise BudgetExceeded(f"{d.modulus}^{nrows * ncols} matrices exceeds budget {budget}")
    for flat in product(d.elements(), repeat=nrows * ncols):
        yield Matrix(d, tuple(flat[i * ncols:(i + 1) * ncols] for i in range(nrows)), ncols)


# -- mod-p acceleration ---------------------------------------------------


def rref_modp(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced echelon form of an integer matrix over F_p (vectorised).

    Same result as :func:`rref_rows` for prime fields; used where the generic
    path is too slow (tensor ideal closures with hundreds of coordinates).
    """
    m = np.array(rows, dtype=np.int64) % p
    if m.ndim != 2:
        raise ShapeMismatch("expected a 2-d array")
    nr, nc = m.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        f = m[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(f[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots
