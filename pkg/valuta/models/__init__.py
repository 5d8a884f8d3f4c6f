"""
valuta Models Package
"""

from .matroid import (
    Matroid,
    parse_mtx,
    mask_from_elements,
    elements_of,
    mask_to_string,
    k_subsets,
    popcount,
)
from .polynomial import BivarPoly, monomial_order, parse_poly
from .linalg import ExactMatrix, SpanSolution, exact_rank, solve_in_span
from .descriptor import MatroidDescriptor, parse_descriptor
from .ginvariant import GInvariantVector, increment_keys

__all__ = [
    'Matroid',
    'parse_mtx',
    'mask_from_elements',
    'elements_of',
    'mask_to_string',
    'k_subsets',
    'popcount',
    'BivarPoly',
    'monomial_order',
    'parse_poly',
    'ExactMatrix',
    'SpanSolution',
    'exact_rank',
    'solve_in_span',
    'MatroidDescriptor',
    'parse_descriptor',
    'GInvariantVector',
    'increment_keys',
]
