"""Domain types shared by the geometric pipeline."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput


@dataclass
class Signal:
    """A sampled real-valued signal.

    The sample rate is carried for I/O purposes only; the geometry never
    looks at it.
    """

    samples: np.ndarray
    sample_rate: int | None = None

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise InvalidInput("signal must be one-dimensional")
        if self.samples.size == 0:
            raise InvalidInput("signal is empty")
        if not np.all(np.isfinite(self.samples)):
            raise InvalidInput("signal contains NaN or Inf")
        if self.sample_rate is not None and self.sample_rate <= 0:
            raise InvalidInput("sample_rate must be positive")

    def __len__(self):
        return self.samples.size


@dataclass(frozen=True)
class Pulse:
    """Maximal run of strictly same-sign samples, inclusive bounds."""

    start: int
    end: int
    sign: int  # +1 or -1


@dataclass
class CandidateSet:
    """Per-pulse extrema, the raw material of the frontiers.

    In split mode positive and negative pulses feed their respective
    sides; in merged-abs mode every pulse contributes |extremum| to the
    positive side and the negative side is empty.
    """

    positive_indices: np.ndarray
    positive_values: np.ndarray
    negative_indices: np.ndarray
    negative_values: np.ndarray
    mode: str  # "split" or "merged-abs"


@dataclass
class ScaledPoints:
    """Candidates mapped to dimensionless geometry coordinates.

    x is the sample index divided by x_step (mean candidate spacing),
    y the amplitude divided by the global |s| maximum, so a single disc
    radius is meaningful on both axes.
    """

    x: np.ndarray
    y: np.ndarray
    x_step: float
    y_max: float


@dataclass
class EnvelopeParams:
    """Disc-radius selection and numeric tolerance.

    alpha is expressed in scaled units and is ignored in auto mode.
    """

    alpha_mode: str = "auto"  # "auto" or "manual"
    alpha: float = 0.0
    tol: float = 1e-9

    def __post_init__(self):
        if self.alpha_mode not in ("auto", "manual"):
            raise InvalidInput(f"unknown alpha_mode {self.alpha_mode!r}")
        if self.alpha_mode == "manual":
            if not math.isfinite(self.alpha) or self.alpha <= 0:
                raise InvalidInput("manual alpha must be finite and > 0")
        if not (0.0 < self.tol < 1e-3):
            raise InvalidInput("tol must lie in (0, 1e-3)")


@dataclass
class FrontierSet:
    """Upper and lower frontier indices plus per-edge bridge flags.

    An empty side means the signal had no pulses of that sign.
    """

    upper: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    lower: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    upper_bridged: np.ndarray = field(default_factory=lambda: np.empty(0, bool))
    lower_bridged: np.ndarray = field(default_factory=lambda: np.empty(0, bool))
