from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from fpgroups.words import Word


def words(p: int, max_len: int = 10, max_index: int = 6):
    letter = st.tuples(st.integers(0, max_index), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda ls: Word(p, tuple(ls)))


@pytest.fixture
def rng():
    return random.Random(12345)
