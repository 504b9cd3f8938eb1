"""Pulse splitting and per-pulse extremum extraction."""
from __future__ import annotations

import numpy as np

from .errors import InvalidInput, SilentSignal
from .types import CandidateSet, Pulse, Signal


def find_pulses(signal: Signal) -> list[Pulse]:
    """Split a signal into maximal runs of strictly same-sign samples.

    Samples equal to zero belong to no pulse, so a zero both terminates
    the run before it and separates the runs around it.
    """
    s = signal.samples
    if s.size == 0:
        raise InvalidInput("signal is empty")
    sgn = np.sign(s)
    change = np.empty(s.size, dtype=bool)
    change[0] = True
    change[1:] = sgn[1:] != sgn[:-1]
    starts = np.flatnonzero(change)
    ends = np.append(starts[1:] - 1, s.size - 1)
    return [
        Pulse(int(a), int(b), 1 if sgn[a] > 0 else -1)
        for a, b in zip(starts, ends)
        if sgn[a] != 0
    ]


def extract_candidates(signal: Signal, pulses: list[Pulse], mode: str) -> CandidateSet:
    """Pick one frontier candidate per pulse.

    Split mode keeps the signed extremum of each pulse on its own side;
    merged-abs mode keeps |s| at the pulse's absolute extremum and puts
    everything on the positive side. Ties resolve to the smallest index
    (numpy argmax/argmin return the first occurrence).
    """
    if mode not in ("split", "merged-abs"):
        raise InvalidInput(f"unknown candidate mode {mode!r}")
    if not pulses:
        raise SilentSignal("signal has no pulses")
    s = signal.samples
    pos_i: list[int] = []
    neg_i: list[int] = []
    if mode == "split":
        for p in pulses:
            seg = s[p.start : p.end + 1]
            if p.sign > 0:
                pos_i.append(p.start + int(np.argmax(seg)))
            else:
                neg_i.append(p.start + int(np.argmin(seg)))
        pi = np.asarray(pos_i, dtype=np.int64)
        ni = np.asarray(neg_i, dtype=np.int64)
        return CandidateSet(pi, s[pi], ni, s[ni], mode)
    for p in pulses:
        seg = np.abs(s[p.start : p.end + 1])
        pos_i.append(p.start + int(np.argmax(seg)))
    pi = np.asarray(pos_i, dtype=np.int64)
    return CandidateSet(
        pi, np.abs(s[pi]), np.empty(0, np.int64), np.empty(0, np.float64), mode
    )
