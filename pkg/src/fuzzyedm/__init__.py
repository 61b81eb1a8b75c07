"""Approximate reasoning with extended distance measures for SISO fuzzy rules."""
from .core import (
    IDENTITY, MORE_OR_LESS, NOT, PAIRS, VERY,
    EmptyVector, FuzzyError, Hedge, InconsistentMethods, LengthMismatch, MissingTiltVector,
    OutOfRange, ResiduatedPair, Rule, UnsupportedCombination,
    apply_hedge, complement, get_pair, implication, tnorm, validate_membership,
)
from .edm import (
    ExtensionPlan, ReasoningTrace,
    downsample, edm_distance, extend_vector, extension_factor, fmp_edm, fmt_edm,
    min_max_normalize, quasi_quasi, sign_vector, vectorial_dm,
)

__version__ = "0.1.0"
