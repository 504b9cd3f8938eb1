"""Geometric temporal-envelope extraction.

A rolling disc of radius alpha is pivoted over the per-pulse extrema of
a signal; the samples it touches form the upper and lower frontiers (or
a merged envelope of |s|). The radius is auto-estimated from the
discrete curvature of the candidates, so no sample rate, pitch or model
parameters are needed.
"""

from .errors import (
    EnvelopeError,
    FormatError,
    InvalidInput,
    NoNegativePulses,
    NoNextPoint,
    NoPositivePulses,
    ParseError,
    SilentSignal,
)
from .frontier import (
    envelope_indices,
    frontiers,
    interpolate_frontier,
    lower_frontier,
    upper_frontier,
)
from .geometry import (
    alpha_frontier,
    estimate_alpha,
    menger_circumradius,
    next_contact,
    normalize_and_scale,
)
from .pulses import extract_candidates, find_pulses
from .types import (
    CandidateSet,
    EnvelopeParams,
    FrontierSet,
    Pulse,
    ScaledPoints,
    Signal,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "EnvelopeError",
    "EnvelopeParams",
    "FormatError",
    "FrontierSet",
    "InvalidInput",
    "NoNegativePulses",
    "NoNextPoint",
    "NoPositivePulses",
    "ParseError",
    "Pulse",
    "ScaledPoints",
    "Signal",
    "SilentSignal",
    "alpha_frontier",
    "envelope_indices",
    "estimate_alpha",
    "extract_candidates",
    "find_pulses",
    "frontiers",
    "interpolate_frontier",
    "lower_frontier",
    "menger_circumradius",
    "next_contact",
    "normalize_and_scale",
    "upper_frontier",
]
