"""End-to-end frontier and envelope pipelines."""
import numpy as np
import pytest

from envelope_kit import (
    EnvelopeParams,
    InvalidInput,
    NoNegativePulses,
    NoPositivePulses,
    Signal,
    SilentSignal,
    envelope_indices,
    frontiers,
    interpolate_frontier,
    lower_frontier,
    upper_frontier,
)


class TestUpperFrontier:
    def test_equal_peaks(self):
        idx, bridged = upper_frontier(Signal([1, -1, 1, -1, 1]))
        assert idx.tolist() == [0, 2, 4]
        assert bridged.tolist() == [False, False]

    def test_single_pulse_tie(self):
        idx, _ = upper_frontier(Signal([1, 1, 1, 1]))
        assert idx.tolist() == [0]

    def test_silent_signal(self):
        with pytest.raises(SilentSignal):
            upper_frontier(Signal([0, 0, 0]))

    def test_no_positive_samples(self):
        with pytest.raises(NoPositivePulses):
            upper_frontier(Signal([-1, -2, 0, -1]))

    def test_manual_alpha(self):
        params = EnvelopeParams(alpha_mode="manual", alpha=10.0)
        idx, _ = upper_frontier(Signal([1, -1, 0.5, -1, 1]), params)
        assert idx.tolist() == [0, 4]


class TestLowerFrontier:
    def test_equal_troughs(self):
        idx, _ = lower_frontier(Signal([1, -1, 1, -1, 1]))
        assert idx.tolist() == [1, 3]

    def test_single_negative_pulse_argmin_tie(self):
        # the deepest samples tie at -2; the smallest index wins
        idx, _ = lower_frontier(Signal([-2, -1, -2]))
        assert idx.tolist() == [0]

    def test_mirror_of_upper(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            s = rng.uniform(-1, 1, int(rng.integers(2, 100)))
            lo, lb = lower_frontier(Signal(-s))
            up, ub = upper_frontier(Signal(s))
            assert lo.tolist() == up.tolist()
            assert lb.tolist() == ub.tolist()

    def test_no_negative_samples(self):
        with pytest.raises(NoNegativePulses):
            lower_frontier(Signal([1, 2, 0, 1]))


class TestEnvelopeIndices:
    def test_equal_abs_collinear(self):
        idx, _ = envelope_indices(Signal([1, -1, 1, -1, 1]))
        assert idx.tolist() == [0, 1, 2, 3, 4]

    def test_outer_peaks_dominate_tangent_middle(self):
        idx, _ = envelope_indices(Signal([2, -1, 2]))
        assert idx.tolist() == [0, 2]

    def test_single_sample(self):
        idx, _ = envelope_indices(Signal([3]))
        assert idx.tolist() == [0]

    def test_silent_signal(self):
        with pytest.raises(SilentSignal):
            envelope_indices(Signal([0.0]))


class TestFrontiers:
    def test_both_sides(self):
        fs = frontiers(Signal([1, -1, 1, -1, 1]))
        assert fs.upper.tolist() == [0, 2, 4]
        assert fs.lower.tolist() == [1, 3]

    def test_one_sided_leaves_other_empty(self):
        fs = frontiers(Signal([1, 0, 1]))
        assert fs.upper.tolist() == [0, 2]
        assert fs.lower.size == 0
        assert fs.lower_bridged.size == 0

    def test_silent_propagates(self):
        with pytest.raises(SilentSignal):
            frontiers(Signal([0, 0]))


class TestInterpolateFrontier:
    def test_linear_plus_hold(self):
        dense = interpolate_frontier(4, [0, 2], [1.0, 3.0])
        assert dense.tolist() == [1.0, 2.0, 3.0, 3.0]

    def test_single_point_holds_everywhere(self):
        dense = interpolate_frontier(3, [1], [5.0])
        assert dense.tolist() == [5.0, 5.0, 5.0]

    def test_straight_line(self):
        dense = interpolate_frontier(5, [0, 4], [0.0, 4.0])
        assert dense.tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]

    def test_empty_frontier_rejected(self):
        with pytest.raises(InvalidInput):
            interpolate_frontier(3, [], [])

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInput):
            interpolate_frontier(3, [0, 3], [1.0, 1.0])


class TestEnvelopeParams:
    def test_defaults(self):
        p = EnvelopeParams()
        assert p.alpha_mode == "auto"
        assert p.tol == 1e-9

    def test_manual_requires_positive_alpha(self):
        with pytest.raises(InvalidInput):
            EnvelopeParams(alpha_mode="manual", alpha=0.0)
        with pytest.raises(InvalidInput):
            EnvelopeParams(alpha_mode="manual", alpha=float("inf"))

    def test_tol_bounds(self):
        with pytest.raises(InvalidInput):
            EnvelopeParams(tol=0.0)
        with pytest.raises(InvalidInput):
            EnvelopeParams(tol=1e-3)
        EnvelopeParams(tol=1e-12)  # in range

    def test_unknown_mode(self):
        with pytest.raises(InvalidInput):
            EnvelopeParams(alpha_mode="fixed")
