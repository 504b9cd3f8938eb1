"""Rolling-disc frontier geometry.

Everything here operates on scaled coordinates: sample index divided by
the mean candidate spacing on the x axis, amplitude divided by the
global |s| maximum on the y axis. The disc radius alpha lives in these
units, which is what makes a single radius meaningful on axes that are
otherwise incomparable.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import InvalidInput, NoNextPoint, SilentSignal
from .types import ScaledPoints

TWO_PI = 2.0 * np.pi
START_ANGLE = 0.5 * np.pi  # disc starts centered directly above the point


def normalize_and_scale(indices, values, y_max: float) -> ScaledPoints:
    """Map candidate (index, value) pairs to geometry coordinates.

    x_step is chosen so that the mean consecutive x spacing is exactly 1
    for two or more candidates; a single candidate keeps its index.
    """
    indices = np.asarray(indices, dtype=np.int64)
    values = np.asarray(values, dtype=np.float64)
    if indices.size == 0:
        raise InvalidInput("no candidates to scale")
    if y_max <= 0.0:
        raise SilentSignal("maximum amplitude is zero")
    m = indices.size
    if m >= 2:
        x_step = (indices[-1] - indices[0]) / (m - 1)
    else:
        x_step = 1.0
    x = indices / x_step
    y = values / y_max
    return ScaledPoints(x, y, float(x_step), float(y_max))


def menger_circumradius(p1, p2, p3, tol: float = 1e-9) -> float:
    """Circumradius of three plane points; math.inf for collinear triples.

    The reciprocal of this radius is the Menger curvature at the middle
    point. The collinearity test compares the cross term against
    tol times the product of the side lengths, so it is scale-free.
    """
    ax = p2[0] - p1[0]
    ay = p2[1] - p1[1]
    bx = p3[0] - p2[0]
    by = p3[1] - p2[1]
    cx = p3[0] - p1[0]
    cy = p3[1] - p1[1]
    a = math.sqrt(ax * ax + ay * ay)
    b = math.sqrt(bx * bx + by * by)
    c = math.sqrt(cx * cx + cy * cy)
    cross = ax * cy - ay * cx
    abc = a * b * c
    if abs(cross) <= tol * abc:
        return math.inf
    return abc / (2.0 * abs(cross))


def estimate_alpha(scaled: ScaledPoints, tol: float = 1e-9) -> float:
    """Auto disc radius from the discrete curvature of the candidates.

    Median of the finite circumradii of consecutive triples, clamped to
    [1, x_span]; fewer than three points or no finite radius falls back
    to max(1, x_span). The lower clamp guarantees the disc can reach a
    typical neighbor (mean spacing is 1 by construction).
    """
    x, y = scaled.x, scaled.y
    m = x.size
    x_span = float(x[-1] - x[0]) if m >= 2 else 0.0
    fallback = max(1.0, x_span)
    if m < 3:
        return fallback
    ax = x[1:-1] - x[:-2]
    ay = y[1:-1] - y[:-2]
    bx = x[2:] - x[1:-1]
    by = y[2:] - y[1:-1]
    cx = x[2:] - x[:-2]
    cy = y[2:] - y[:-2]
    a = np.sqrt(ax * ax + ay * ay)
    b = np.sqrt(bx * bx + by * by)
    c = np.sqrt(cx * cx + cy * cy)
    cross = np.abs(ax * cy - ay * cx)
    abc = a * b * c
    finite = cross > tol * abc
    if not np.any(finite):
        return fallback
    radii = abc[finite] / (2.0 * cross[finite])
    alpha = float(np.median(radii))
    return min(max(alpha, 1.0), max(1.0, x_span))


def next_contact(scaled: ScaledPoints, from_position: int, center_angle: float,
                 alpha: float, tol: float):
    """One step of the rolling disc along the upper chain.

    Candidates ahead of the current point are tried in x order; the
    first one whose chord is reachable (|pq| <= 2*alpha) and whose
    upper-centered radius-alpha disc contains no candidate ahead of the
    current point in its open interior becomes the next contact. An
    exactly tangent neighbor sits on the boundary, not the interior, so
    it never blocks a chord; with auto alpha (a median of candidate
    circumradii) such tangencies are routine, not rounding accidents.
    When no chord is acceptable the chain bridges to the next candidate
    in x order.

    Returns (next ordinal, angle of the disc center as seen from the
    new contact, bridged flag). center_angle and tol are accepted for
    chain state compatibility; the selection itself uses neither.
    """
    x, y = scaled.x, scaled.y
    m = x.size
    i = from_position
    if i >= m - 1:
        raise NoNextPoint("already at the last candidate")
    px = x[i]
    py = y[i]
    reach = 2.0 * alpha
    reach2 = reach * reach
    block = alpha
    block2 = block * block
    hi = int(np.searchsorted(x, px + reach, side="right"))
    for j in range(i + 1, hi):
        dx = x[j] - px
        dy = y[j] - py
        d2 = dx * dx + dy * dy
        if d2 > reach2:
            continue
        d = math.sqrt(d2)
        h2 = alpha * alpha - 0.25 * d2
        h = math.sqrt(h2) if h2 > 0.0 else 0.0
        cx = px + 0.5 * dx - h * dy / d
        cy = py + 0.5 * dy + h * dx / d
        # a point inside the open disc satisfies |x - cx| < alpha
        lo_k = max(int(np.searchsorted(x, cx - block, side="left")), i + 1)
        hi_k = int(np.searchsorted(x, cx + block, side="right"))
        ddx = x[lo_k:hi_k] - cx
        ddy = y[lo_k:hi_k] - cy
        inside = ddx * ddx + ddy * ddy < block2
        blocked = int(np.count_nonzero(inside))
        if lo_k <= j < hi_k and inside[j - lo_k]:
            blocked -= 1  # the chord endpoint sits on the disc itself
        if blocked:
            continue
        return j, math.atan2(cy - y[j], cx - x[j]), False
    return i + 1, START_ANGLE, True


def alpha_frontier(scaled: ScaledPoints, alpha: float, tol: float):
    """Chain pivot steps from the first candidate to the last.

    Returns the visited ordinals (strictly increasing, anchored at both
    ends) and one bridged flag per edge.
    """
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise InvalidInput("alpha must be finite and > 0")
    m = scaled.x.size
    ordinals = [0]
    bridged: list[bool] = []
    angle = START_ANGLE
    i = 0
    while i < m - 1:
        i, angle, was_bridged = next_contact(scaled, i, angle, alpha, tol)
        ordinals.append(i)
        bridged.append(was_bridged)
    return np.asarray(ordinals, dtype=np.int64), np.asarray(bridged, dtype=bool)
