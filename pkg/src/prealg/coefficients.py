"""Exact coefficient domains: the rationals, prime fields and residue rings.

Elements are stored as canonical raw values (``Fraction`` over Q, least
nonnegative ``int`` residues otherwise). Hot loops call the domain methods on
raw values directly; :class:`Scalar` wraps a value with its domain for the
public, domain-checked API.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DomainMismatch, NotInvertible, ParseError

Raw = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class TwoProfile(enum.Enum):
    TWO_INVERTIBLE = "TwoInvertible"
    TWO_TORSION_FREE_ONLY = "TwoTorsionFreeOnly"
    CHARACTERISTIC_TWO = "CharacteristicTwo"
    TWO_TORSION = "TwoTorsion"


@dataclass(frozen=True)
class CoeffDomain:
    """A commutative coefficient ring.

    ``kind`` is ``"Q"``, ``"Fp"`` or ``"Zn"``; ``modulus`` is 0 for Q.
    Use the :func:`Rationals`, :func:`PrimeField` and :func:`ResidueRing`
    constructors rather than instantiating directly.
    """

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.modulus != 0:
                raise ValueError("Q takes no modulus")
        elif self.kind == "Fp":
            if not _is_prime(self.modulus):
                raise ValueError(f"F_p requires p prime, got {self.modulus}")
        elif self.kind == "Zn":
            if self.modulus < 2:
                raise ValueError(f"Z/n requires n >= 2, got {self.modulus}")
        else:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    # -- queries ----------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "Fp")

    @property
    def is_finite(self) -> bool:
        return self.kind != "Q"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def order(self) -> int | None:
        return None if self.kind == "Q" else self.modulus

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.modulus}"
        return f"Z/{self.modulus}"

    # -- raw arithmetic ---------------------------------------------------

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.kind == "Q" else 1

    def coerce(self, x) -> Raw:
        """Canonical raw value for an int, Fraction, Scalar or scalar string."""
        if isinstance(x, Scalar):
            if x.domain != self:
                raise DomainMismatch(f"{x.domain} value used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.modulus
            inv = self.try_inv(x.denominator % self.modulus)
            if inv is None:
                raise NotInvertible(f"{x.denominator} is not invertible in {self}")
            return (x.numerator * inv) % self.modulus
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into {self}")
        return x % self.modulus

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.modulus:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.modulus:
            return (a - b) % self.modulus
        return a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.modulus:
            return (a * b) % self.modulus
        return a * b

    def neg(self, a: Raw) -> Raw:
        if self.modulus:
            return (-a) % self.modulus
        return -a

    def try_inv(self, a: Raw) -> Raw | None:
        """Inverse of ``a`` or ``None`` when ``a`` is not a unit."""
        if self.kind == "Q":
            return None if a == 0 else 1 / Fraction(a)
        a %= self.modulus
        if math.gcd(a, self.modulus) != 1:
            return None
        return pow(a, -1, self.modulus)

    def inv(self, a: Raw) -> Raw:
        b = self.try_inv(a)
        if b is None:
            raise NotInvertible(f"{self.format(a)} is not invertible in {self}")
        return b

    def elements(self) -> list[Raw]:
        if self.kind == "Q":
            raise ValueError("Q is infinite")
        return list(range(self.modulus))

    # -- text -------------------------------------------------------------

    def parse(self, s: str) -> Raw:
        m = _SCALAR_RE.match(s)
        if not m:
            raise ParseError(f"malformed scalar {s!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {s!r}")
        if self.kind == "Q":
            return Fraction(num, den)
        inv = self.try_inv(den % self.modulus)
        if inv is None:
            raise ParseError(f"denominator of {s!r} is not invertible in {self}")
        return (num * inv) % self.modulus

    def format(self, a: Raw) -> str:
        if self.kind == "Q":
            a = Fraction(a)
            if a.denominator == 1:
                return str(a.numerator)
            return f"{a.numerator}/{a.denominator}"
        return str(a)

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"type": "Q"}
        if self.kind == "Fp":
            return {"type": "Fp", "p": self.modulus}
        return {"type": "Zn", "n": self.modulus}

    # -- 2-torsion ----------------------------------------------------------

    def two_profile(self) -> TwoProfile:
        return two_profile(self)

    @property
    def two_torsion_free(self) -> bool:
        return self.two_profile() in (TwoProfile.TWO_INVERTIBLE, TwoProfile.TWO_TORSION_FREE_ONLY)


def Rationals() -> CoeffDomain:
    return CoeffDomain("Q", 0)


def PrimeField(p: int) -> CoeffDomain:
    return CoeffDomain("Fp", p)


def ResidueRing(n: int) -> CoeffDomain:
    return CoeffDomain("Zn", n)


def domain_from_json(obj) -> CoeffDomain:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ParseError(f"bad field descriptor {obj!r}")
    t = obj["type"]
    try:
        if t == "Q" and set(obj) == {"type"}:
            return Rationals()
        if t == "Fp" and set(obj) == {"type", "p"} and isinstance(obj["p"], int):
            return PrimeField(obj["p"])
        if t == "Zn" and set(obj) == {"type", "n"} and isinstance(obj["n"], int):
            return ResidueRing(obj["n"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"bad field descriptor {obj!r}")


def two_profile(d: CoeffDomain) -> TwoProfile:
    if d.kind == "Q":
        return TwoProfile.TWO_INVERTIBLE
    if d.modulus == 2:
        return TwoProfile.CHARACTERISTIC_TWO
    if d.modulus % 2 == 0:
        return TwoProfile.TWO_TORSION
    return TwoProfile.TWO_INVERTIBLE


@dataclass(frozen=True)
class Scalar:
    """An element of a :class:`CoeffDomain` in canonical form."""

    domain: CoeffDomain
    value: Raw

    @classmethod
    def of(cls, domain: CoeffDomain, x) -> "Scalar":
        return cls(domain, domain.coerce(x))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.domain != self.domain:
                raise DomainMismatch(f"{self.domain} vs {other.domain}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.domain.coerce(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.domain, self.domain.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.domain, self.domain.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.domain, self.domain.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Scalar(self.domain, self.domain.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.domain, self.domain.neg(self.value))

    def try_invert(self) -> "Scalar | None":
        b = self.domain.try_inv(self.value)
        return None if b is None else Scalar(self.domain, b)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.domain.format(self.value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain} vs {b.domain}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def try_invert(a: Scalar) -> Scalar | None:
    """Inverse of ``a``, or ``None`` (the not-invertible outcome)."""
    return a.try_invert()


def iter_vectors(domain: CoeffDomain, n: int) -> Iterator[tuple]:
    """All vectors of length ``n`` over a finite domain, lexicographically."""
    from itertools import product

    return product(domain.elements(), repeat=n)
