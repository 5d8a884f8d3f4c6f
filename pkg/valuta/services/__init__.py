"""
Services Package
"""

from .isomorphism import isomorphism_service
from .invariants import invariant_service
from .families import family_service
from .generation import generation_service

# Linear algebra over families
from .decomposition import decomposition_service

# Reproducible checks
from .verification import verification_service

__all__ = [
    'isomorphism_service',
    'invariant_service',
    'family_service',
    'generation_service',
    'decomposition_service',
    'verification_service',
]
