"""Finite-dimensional algebras given by structure constants.

``sc[i][j]`` is the coordinate vector of ``e_i * e_j``; every other product is
obtained by bilinearity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .coefficients import CoeffDomain, Rationals, TwoProfile, two_profile
from .errors import DimensionMismatch, DomainMismatch, NonFieldDomain, TwoNotInvertible
from .linear import Matrix, Subspace, Vector, is_zero, unit_vec, vec_add, vec_scale, vec_sub, zero_vec
from .report import Report

SC = tuple  # dim x dim tuple of coordinate tuples


@dataclass(frozen=True)
class Algebra:
    """A finite-dimensional algebra over ``domain``.

    Equality looks only at the domain, the dimension and the structure
    constants; name and labels are presentation.
    """

    name: str = field(compare=False)
    domain: CoeffDomain
    dim: int
    basis_labels: tuple = field(compare=False)
    sc: SC

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("an algebra needs dimension >= 1")
        if len(self.basis_labels) != n or len(set(self.basis_labels)) != n:
            raise ValueError("basis labels must be distinct and number dim")
        if len(self.sc) != n or any(len(row) != n for row in self.sc):
            raise DimensionMismatch("structure constants must be dim x dim")
        if any(len(v) != n for row in self.sc for v in row):
            raise DimensionMismatch("every product must be a vector of length dim")

    @classmethod
    def from_table(cls, domain: CoeffDomain, dim: int, table: dict | None = None,
                   name: str = "A", labels: Sequence[str] | None = None) -> "Algebra":
        """Build from a sparse ``{(i, j): vector}`` table; missing products are 0."""
        table = table or {}
        z = zero_vec(domain, dim)
        sc = tuple(
            tuple(tuple(domain.coerce(a) for a in table[(i, j)]) if (i, j) in table else z
                  for j in range(dim))
            for i in range(dim)
        )
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        return cls(name, domain, dim, labels, sc)

    @classmethod
    def from_sc(cls, domain: CoeffDomain, sc, name: str = "A", labels=None) -> "Algebra":
        dim = len(sc)
        sc = tuple(tuple(tuple(domain.coerce(a) for a in v) for v in row) for row in sc)
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        return cls(name, domain, dim, labels, sc)

    def renamed(self, name: str) -> "Algebra":
        return Algebra(name, self.domain, self.dim, self.basis_labels, self.sc)

    # -- elements ----------------------------------------------------------

    def e(self, i: int) -> Vector:
        return unit_vec(self.domain, self.dim, i)

    def basis(self) -> list[Vector]:
        return [self.e(i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return zero_vec(self.domain, self.dim)

    def _check(self, *vs):
        for v in vs:
            if len(v) != self.dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a {self.dim}-dim algebra")

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        self._check(x, y)
        d, n = self.domain, self.dim
        out = [d.zero] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.sc[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = d.mul(xi, yj)
                for k, a in enumerate(row[j]):
                    if a != 0:
                        out[k] = d.add(out[k], d.mul(c, a))
        return tuple(out)

    def associator(self, x, y, z) -> Vector:
        return vec_sub(self.domain, self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    def bracket(self, x, y) -> Vector:
        return vec_sub(self.domain, self.mul(x, y), self.mul(y, x))

    def circle(self, x, y) -> Vector:
        return vec_add(self.domain, self.mul(x, y), self.mul(y, x))

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``a -> x * a``."""
        return Matrix.from_columns(self.domain, [self.mul(x, b) for b in self.basis()], self.dim)

    def is_zero_algebra(self) -> bool:
        return all(is_zero(v) for row in self.sc for v in row)


def _transform(a: Algebra, name: str, fn) -> Algebra:
    d, n = a.domain, a.dim
    sc = tuple(tuple(fn(i, j) for j in range(n)) for i in range(n))
    return Algebra(name, d, n, a.basis_labels, sc)


def commutator_algebra(a: Algebra) -> Algebra:
    """The algebra ``(A, [x, y] = xy - yx)``."""
    d = a.domain
    return _transform(a, a.name + ".U", lambda i, j: vec_sub(d, a.sc[i][j], a.sc[j][i]))


def anticommutator_algebra(a: Algebra) -> Algebra:
    """The algebra ``(A, x o y = xy + yx)``."""
    d = a.domain
    return _transform(a, a.name + ".C", lambda i, j: vec_add(d, a.sc[i][j], a.sc[j][i]))


def opposite(a: Algebra) -> Algebra:
    return _transform(a, a.name + ".op", lambda i, j: a.sc[j][i])


def scaled(a: Algebra, c, name: str | None = None) -> Algebra:
    """Same module with product ``c * (x y)``."""
    d = a.domain
    c = d.coerce(c)
    return _transform(a, name or f"{a.name}.x{d.format(c)}", lambda i, j: vec_scale(d, c, a.sc[i][j]))


def sum_algebras(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """Same module with product the sum of both products."""
    if a.domain != b.domain or a.dim != b.dim:
        raise DomainMismatch("algebras live on different modules")
    d = a.domain
    return _transform(a, name or f"{a.name}+{b.name}", lambda i, j: vec_add(d, a.sc[i][j], b.sc[i][j]))


# -- commutative / anticommutative split ------------------------------------


@dataclass(frozen=True)
class BilinearSplit:
    """``x y = x * y + x <> y`` with ``*`` commutative and ``<>`` anticommutative."""

    comm: Algebra
    anticomm: Algebra

    def recombine(self) -> Algebra:
        return sum_algebras(self.comm, self.anticomm, name=self.comm.name.removesuffix(".comm"))


def split_product(a: Algebra) -> BilinearSplit:
    d = a.domain
    if two_profile(d) is not TwoProfile.TWO_INVERTIBLE:
        raise TwoNotInvertible(f"2 is not invertible in {d}")
    half = d.inv(d.coerce(2))
    comm = _transform(a, a.name + ".comm",
                      lambda i, j: vec_scale(d, half, vec_add(d, a.sc[i][j], a.sc[j][i])))
    anti = _transform(a, a.name + ".anticomm",
                      lambda i, j: vec_scale(d, half, vec_sub(d, a.sc[i][j], a.sc[j][i])))
    return BilinearSplit(comm, anti)


# -- ann(2) and the scaling isomorphism ------------------------------------


def in_ann2(d: CoeffDomain, x: Sequence) -> bool:
    """Whether ``x + x == 0``; valid over every domain, including Z/n."""
    return all(d.add(a, a) == 0 for a in x)


def ann2_module(a: Algebra) -> Subspace:
    d = a.domain
    if not d.is_field:
        raise NonFieldDomain(f"ann(2) as a subspace needs a field; use in_ann2 over {d}")
    if d.characteristic == 2:
        return Subspace.full(d, a.dim)
    return Subspace.zero(d, a.dim)


def scaling_iso_check(a: Algebra) -> Report:
    """Check that ``x -> x/2`` is an isomorphism ``(M, .) -> (M, 2.)``."""
    d = a.domain
    if two_profile(d) is not TwoProfile.TWO_INVERTIBLE:
        raise TwoNotInvertible(f"2 is not invertible in {d}")
    doubled = scaled(a, 2)
    half = d.inv(d.coerce(2))
    phi = lambda v: vec_scale(d, half, v)
    for i in range(a.dim):
        for j in range(a.dim):
            x, y = a.e(i), a.e(j)
            lhs = phi(a.mul(x, y))
            rhs = doubled.mul(phi(x), phi(y))
            if lhs != rhs:
                return Report("scaling-iso", False, witness=(i, j), defect=vec_sub(d, lhs, rhs))
    return Report("scaling-iso", True, info={"map": "x -> x/2", "bijective": True})


# -- fixtures and sampling ------------------------------------------------


def zero_algebra(d: CoeffDomain, dim: int, name: str = "Zero") -> Algebra:
    return Algebra.from_table(d, dim, {}, name=name)


def a2(d: CoeffDomain | None = None) -> Algebra:
    """Two-dimensional associative algebra: e1 e1 = e1, e1 e2 = e2, else 0."""
    d = d or Rationals()
    return Algebra.from_table(d, 2, {(0, 0): (1, 0), (0, 1): (0, 1)}, name="A2")


def random_raw(d: CoeffDomain, rng: random.Random, spread: int = 2):
    if d.kind == "Q":
        from fractions import Fraction

        num = rng.randint(-spread, spread)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)
    return rng.randrange(d.modulus)


def random_algebra(d: CoeffDomain, dim: int, rng: random.Random, density: float = 1.0,
                   name: str = "R") -> Algebra:
    n = dim
    sc = tuple(
        tuple(tuple(random_raw(d, rng) if rng.random() < density else d.zero for _ in range(n))
              for _ in range(n))
        for _ in range(n)
    )
    return Algebra.from_sc(d, sc, name=name)


def all_algebras(d: CoeffDomain, dim: int):
    """Every structure-constant tensor over a finite domain (|d|^(dim^3) of them)."""
    from itertools import product

    n = dim
    for flat in product(d.elements(), repeat=n ** 3):
        sc = tuple(tuple(tuple(flat[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n))
                   for i in range(n))
        yield Algebra("S", d, n, tuple(f"e{i + 1}" for i in range(n)), sc)
