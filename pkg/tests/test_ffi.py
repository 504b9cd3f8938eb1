"""C-ABI shared-library surface."""
import ctypes

import numpy as np
import pytest

from envelope_kit import Signal, frontiers
from envelope_kit.ffi import (
    ENV_EMPTY,
    ENV_NULL_ARG,
    ENV_OK,
    ENV_ONE_SIDED,
    ENV_SILENT,
    EnvelopeLibrary,
)

from oracles import random_signal


@pytest.fixture(scope="module")
def lib():
    return EnvelopeLibrary()


class TestStatusCodes:
    def test_null_signal_pointer(self, lib):
        u64 = ctypes.c_uint64(0)
        buf = (ctypes.c_uint64 * 1)()
        status = lib._lib.env_frontiers(
            None, 1, -1.0, buf, ctypes.byref(u64), buf, ctypes.byref(u64)
        )
        assert status == ENV_NULL_ARG

    def test_empty_signal(self, lib):
        status, upper, lower = lib.frontiers([])
        assert status == ENV_EMPTY
        assert upper.size == 0 and lower.size == 0

    def test_silent_signal(self, lib):
        status, indices = lib.envelope([0.0, 0.0, 0.0])
        assert status == ENV_SILENT
        assert indices.size == 0

    def test_one_sided(self, lib):
        status, upper, lower = lib.frontiers([1.0, 1.0])
        assert status == ENV_ONE_SIDED
        assert upper.tolist() == [0]
        assert lower.size == 0


class TestEnvelope:
    def test_equal_abs_peaks(self, lib):
        status, indices = lib.envelope([1.0, -1.0, 1.0, -1.0, 1.0])
        assert status == ENV_OK
        assert indices.tolist() == [0, 1, 2, 3, 4]

    def test_tangent_middle_point(self, lib):
        status, indices = lib.envelope([2.0, -1.0, 2.0])
        assert status == ENV_OK
        assert indices.tolist() == [0, 2]

    def test_single_sample(self, lib):
        for alpha in (None, 0.5, 100.0):
            status, indices = lib.envelope([3.0], alpha)
            assert status == ENV_OK
            assert indices.tolist() == [0]


class TestVersion:
    def test_reports_semver(self, lib):
        status, version = lib.version(32)
        assert status == ENV_OK
        assert len(version.split(".")) == 3

    def test_capacity_too_small(self, lib):
        status, _ = lib.version(1)
        assert status == ENV_EMPTY

    def test_stable_across_calls(self, lib):
        assert lib.version() == lib.version()


class TestDifferential:
    def test_matches_in_process_results(self, lib):
        rng = np.random.default_rng(47)
        for _ in range(30):
            s = random_signal(rng, int(rng.integers(1, 500)))
            status, upper, lower = lib.frontiers(s)
            fs = frontiers(Signal(s))
            expected = (
                ENV_ONE_SIDED if fs.upper.size == 0 or fs.lower.size == 0 else ENV_OK
            )
            assert status == expected
            assert upper.tolist() == fs.upper.tolist()
            assert lower.tolist() == fs.lower.tolist()

    def test_manual_alpha_matches(self, lib):
        from envelope_kit import EnvelopeParams, upper_frontier

        rng = np.random.default_rng(53)
        for alpha in (0.7, 1.0, 5.0):
            s = rng.uniform(-1, 1, 200)
            status, upper, _ = lib.frontiers(s, alpha)
            assert status in (ENV_OK, ENV_ONE_SIDED)
            idx, _ = upper_frontier(
                Signal(s), EnvelopeParams(alpha_mode="manual", alpha=alpha)
            )
            assert upper.tolist() == idx.tolist()
