"""Shared fixtures: cached lift contexts and word strategies."""

import pytest
from hypothesis import strategies as st

import rotcocycle
from rotcocycle.words import reduce


@pytest.fixture(scope="session")
def ctx2():
    return rotcocycle.context(2)


@pytest.fixture(scope="session")
def ctx3():
    return rotcocycle.context(3)


def letters(genus: int) -> st.SearchStrategy[int]:
    return st.integers(min_value=1, max_value=2 * genus).flatmap(lambda k: st.sampled_from((k, -k)))


def words(genus: int = 2, max_size: int = 10) -> st.SearchStrategy:
    """Freely reduced words built from arbitrary letter lists."""
    return st.lists(letters(genus), max_size=max_size).map(lambda raw: reduce(raw, genus))
