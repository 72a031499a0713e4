from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fpgroups.errors import ArityError, ParseError
from fpgroups.trees import (
    CaretClass,
    PTree,
    caret,
    caret_count,
    classify_carets,
    complete_tree,
    leaf_intervals,
    parse_tree,
    serialize_tree,
    tree_to_dot,
)


def test_parse_leaf_and_simple_caret():
    assert parse_tree(".", 2).is_leaf
    t = parse_tree("((..).)", 2)
    assert not t.children[0].is_leaf and t.children[1].is_leaf


def test_x1_source_tree_in_F3():
    t = parse_tree("(.(...).)", 3)
    assert t == caret(3, PTree.leaf(3), complete_tree(3, 1), PTree.leaf(3))
    assert serialize_tree(t) == "(.(...).)"
    assert caret_count(t) == 2


@pytest.mark.parametrize("text", ["(..", "(...)", "(.x)", "", "(..).", "()"])
def test_parse_errors(text):
    with pytest.raises((ParseError, ArityError)):
        parse_tree(text, 2)


def test_caret_arity_checked():
    with pytest.raises(ArityError):
        caret(3, PTree.leaf(3), PTree.leaf(3))


def test_leaf_intervals():
    assert leaf_intervals(PTree.leaf(2)) == [(0, 1)]
    assert leaf_intervals(parse_tree("(..)", 2)) == [(0, Fraction(1, 2)), (Fraction(1, 2), 1)]
    got = [(iv.lo, iv.hi) for iv in leaf_intervals(parse_tree("(.(...).)", 3))]
    F = Fraction
    assert got == [(0, F(1, 3)), (F(1, 3), F(4, 9)), (F(4, 9), F(5, 9)), (F(5, 9), F(2, 3)), (F(2, 3), 1)]


def test_classify_carets():
    assert classify_carets(parse_tree("(..)", 2)) == [((), CaretClass.RIGHT)]
    assert dict(classify_carets(parse_tree("((..).)", 2))) == {(): CaretClass.RIGHT, (0,): CaretClass.LEFT}
    assert dict(classify_carets(parse_tree("(.(...).)", 3)))[(1,)] == CaretClass.INTERIOR


def test_complete_tree_counts():
    assert complete_tree(2, 0).is_leaf
    t = complete_tree(2, 2)
    assert caret_count(t) == 3 and t.leaf_count() == 4
    t = complete_tree(3, 2)
    assert caret_count(t) == 4 and t.leaf_count() == 9


def test_dot_has_one_node_per_vertex():
    t = parse_tree("(.(...).)", 3)
    dot = tree_to_dot(t)
    assert dot.startswith("digraph")
    assert dot.count("->") == 2 * 3


@st.composite
def trees(draw, p):
    def build(depth):
        if depth == 0 or draw(st.booleans()):
            return PTree.leaf(p)
        return caret(p, *[build(depth - 1) for _ in range(p)])

    return build(4)


@given(st.integers(2, 5).flatmap(lambda p: trees(p)))
def test_serialize_round_trip(t):
    assert parse_tree(serialize_tree(t), t.p) == t
    assert t.leaf_count() == caret_count(t) * (t.p - 1) + 1
    assert sum(iv.length for iv in leaf_intervals(t)) == 1
