"""Integral cohomology rings of moment-angle complexes via the finite algebra R*(K)."""

from .cohomology import (
    BigradedTable,
    RingPresentation,
    bigraded_cohomology,
    cup_on_cohomology,
    poincare_series,
    ring_presentation,
)
from .hochster import compare, oracle_bigraded
from .intlinalg import AbelianGroup, IntMatrix, cohomology_at, smith_normal_form, solve
from .simplicial import SimplicialComplex, full_subcomplex, is_face, parse_complex

__all__ = [
    "AbelianGroup",
    "BigradedTable",
    "IntMatrix",
    "RingPresentation",
    "SimplicialComplex",
    "bigraded_cohomology",
    "cohomology_at",
    "compare",
    "cup_on_cohomology",
    "full_subcomplex",
    "is_face",
    "oracle_bigraded",
    "parse_complex",
    "poincare_series",
    "ring_presentation",
    "smith_normal_form",
    "solve",
]
