"""Sample orchestration."""

import sys

import pytest

from rotcocycle.utils import map_samples


def test_inline_results_in_index_order():
    assert map_samples(lambda k: k * k, 5) == [0, 1, 4, 9, 16]


def test_threaded_results_match_inline():
    assert map_samples(lambda k: k + 1, 20, workers=4) == map_samples(lambda k: k + 1, 20)


def test_zero_samples():
    assert map_samples(lambda k: k, 0, workers=3) == []


def test_progress_requires_tqdm(monkeypatch):
    monkeypatch.setitem(sys.modules, "tqdm", None)
    with pytest.raises(RuntimeError, match="tqdm is required"):
        map_samples(lambda k: k, 3, progress=True)


def test_progress_bar_keeps_results():
    pytest.importorskip("tqdm")
    assert map_samples(lambda k: -k, 4, workers=2, progress=True, desc="test") == [0, -1, -2, -3]
