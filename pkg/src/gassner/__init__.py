"""Exact Gassner invariant of braids, its unitarity property, and v/w extensions."""

from .braid import (AnnotatedBraid, BraidWord, annotate, band_generator, concat,
                    format_word, identity_perm, inverse_perm, invert_word, is_pure,
                    parse_word, random_pure, random_word)
from .errors import (BraidParseError, DomainError, GassnerError, NearPoleError,
                     PreconditionError, VariableCountError)
from .invariant import (VWWord, burau_specialize, d_matrix, expected_det, gassner,
                        gassner_inverse, generator_matrix, omega_cleared, relabel,
                        verify_unitarity, verify_unitarity_variant, verify_unitarity_vw,
                        vw_gassner, vw_gassner_prime, vw_generator)
from .laurent import LaurentPoly, delta
from .matrix import LaurentMatrix, ScaledMatrix, mat_det, ones_fixed, scaled_equals

__version__ = "0.1.0"
