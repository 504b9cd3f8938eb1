"""Top-level frontier and envelope pipelines."""
from __future__ import annotations

import numpy as np

from .errors import (
    InvalidInput,
    NoNegativePulses,
    NoPositivePulses,
    SilentSignal,
)
from .geometry import alpha_frontier, estimate_alpha, normalize_and_scale
from .pulses import extract_candidates, find_pulses
from .types import EnvelopeParams, FrontierSet, Signal


def _chain(indices, values, y_max, params):
    scaled = normalize_and_scale(indices, values, y_max)
    if params.alpha_mode == "manual":
        alpha = params.alpha
    else:
        alpha = estimate_alpha(scaled, params.tol)
    ordinals, bridged = alpha_frontier(scaled, alpha, params.tol)
    return indices[ordinals], bridged


def upper_frontier(signal: Signal, params: EnvelopeParams | None = None):
    """Indices of the samples forming the upper (positive) frontier.

    Returns (indices, bridged); bridged has one flag per frontier edge
    marking spans the disc could not physically roll across.
    """
    params = params or EnvelopeParams()
    s = signal.samples
    y_max = float(np.max(np.abs(s)))
    if y_max == 0.0:
        raise SilentSignal("signal is identically zero")
    cs = extract_candidates(signal, find_pulses(signal), "split")
    if cs.positive_indices.size == 0:
        raise NoPositivePulses("signal has no positive samples")
    return _chain(cs.positive_indices, cs.positive_values, y_max, params)


def lower_frontier(signal: Signal, params: EnvelopeParams | None = None):
    """Indices of the lower (negative) frontier: upper_frontier of -s."""
    try:
        return upper_frontier(Signal(-signal.samples, signal.sample_rate), params)
    except NoPositivePulses:
        raise NoNegativePulses("signal has no negative samples") from None


def envelope_indices(signal: Signal, params: EnvelopeParams | None = None):
    """Merged envelope: frontier of |s| over the extrema of every pulse."""
    params = params or EnvelopeParams()
    s = signal.samples
    y_max = float(np.max(np.abs(s)))
    if y_max == 0.0:
        raise SilentSignal("signal is identically zero")
    cs = extract_candidates(signal, find_pulses(signal), "merged-abs")
    return _chain(cs.positive_indices, cs.positive_values, y_max, params)


def frontiers(signal: Signal, params: EnvelopeParams | None = None) -> FrontierSet:
    """Both frontiers at once; a one-sided signal leaves one side empty."""
    result = FrontierSet()
    try:
        result.upper, result.upper_bridged = upper_frontier(signal, params)
    except NoPositivePulses:
        pass
    try:
        result.lower, result.lower_bridged = lower_frontier(signal, params)
    except NoNegativePulses:
        pass
    return result


def interpolate_frontier(n: int, indices, values) -> np.ndarray:
    """Densify a frontier to one value per sample.

    Linear between frontier members, constant extension outside their
    span.
    """
    indices = np.asarray(indices, dtype=np.int64)
    values = np.asarray(values, dtype=np.float64)
    if indices.size == 0:
        raise InvalidInput("frontier is empty")
    if n <= 0:
        raise InvalidInput("target length must be positive")
    if indices[0] < 0 or indices[-1] >= n:
        raise InvalidInput("frontier indices outside [0, n)")
    return np.interp(np.arange(n), indices, values)
