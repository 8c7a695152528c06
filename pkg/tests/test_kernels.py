import numpy as np
import pytest

from chordlab import _kernels as k


CASES = [
    (k.FILTER_ALL, 1), (k.FILTER_MINLEN, 2), (k.FILTER_MINLEN, 3),
    (k.FILTER_NONCROSSING, 1), (k.FILTER_NONNESTING, 1),
]


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("filt, fk", CASES)
@pytest.mark.parametrize("stat, sk", [(k.STAT_NONE, 1), (k.STAT_SC, 1), (k.STAT_SC, 2), (k.STAT_LR, 1)])
def test_backends_agree(n, filt, fk, stat, sk):
    a = k.histogram_numba(n, filt, fk, stat, sk)
    b = k.histogram_numpy(n, filt, fk, stat, sk)
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("backend", [k.histogram_numba, k.histogram_numpy])
def test_branch_ranges_partition(backend):
    n = 5
    whole = backend(n, k.FILTER_ALL, 1, k.STAT_LR, 1)
    parts = sum(backend(n, k.FILTER_ALL, 1, k.STAT_LR, 1, lo=b, hi=b) for b in range(2, 2 * n + 1))
    np.testing.assert_array_equal(whole, parts)


def test_numpy_blocking_does_not_change_result(monkeypatch):
    expected = k.histogram_numpy(6, k.FILTER_ALL, 1, k.STAT_SC, 1)
    monkeypatch.setattr(k, "NUMPY_BLOCK_ROWS", 7)
    np.testing.assert_array_equal(k.histogram_numpy(6, k.FILTER_ALL, 1, k.STAT_SC, 1), expected)


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("CHORDLAB_DISABLE_NUMBA", "1")
    assert k.backend() == "numpy"
    monkeypatch.setenv("CHORDLAB_DISABLE_NUMBA", "0")
    assert k.backend() == ("numba" if k.HAVE_NUMBA else "numpy")


def test_dispatch_result_independent_of_backend(monkeypatch):
    monkeypatch.setenv("CHORDLAB_DISABLE_NUMBA", "1")
    slow = k.histogram(6, k.FILTER_MINLEN, 2, k.STAT_SC, 2)
    monkeypatch.delenv("CHORDLAB_DISABLE_NUMBA")
    fast = k.histogram(6, k.FILTER_MINLEN, 2, k.STAT_SC, 2)
    np.testing.assert_array_equal(slow, fast)
