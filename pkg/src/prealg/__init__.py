"""Exact computations with finite-dimensional non-associative algebras:
pre-morphisms, generalized and anti-pre-morphisms, their idempotents, the
commutative/anticommutative split, graded doubles and tree tensor algebras."""

__version__ = "0.1.0"

from .coefficients import CoeffDomain, PrimeField, Rationals, ResidueRing, Scalar, TwoProfile
from .linear import Matrix, Subspace
from .algebra import (Algebra, a2, anticommutator_algebra, commutator_algebra, opposite, random_algebra,
                      split_product, zero_algebra)
from .identities import IDENTITIES, classify
from .morphisms import AlgebraMap, MorphismProfile, classify_map
from .substructures import SubstructureKind, is_substructure, quotient
from .idempotents import IdempotentKind, roundtrip_check
from .superalgebra import DoublingParams, double, double_map
from .tensor import GradedElement, MagmaTree, enumerate_trees, graded_mul, theorem_generators

__all__ = [
    "CoeffDomain", "PrimeField", "Rationals", "ResidueRing", "Scalar", "TwoProfile", "Matrix", "Subspace",
    "Algebra", "a2", "anticommutator_algebra", "commutator_algebra", "opposite", "random_algebra",
    "split_product", "zero_algebra", "IDENTITIES", "classify", "AlgebraMap", "MorphismProfile", "classify_map",
    "SubstructureKind", "is_substructure", "quotient", "IdempotentKind", "roundtrip_check", "DoublingParams",
    "double", "double_map", "GradedElement", "MagmaTree", "enumerate_trees", "graded_mul", "theorem_generators",
]
