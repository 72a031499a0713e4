from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import words
from fpgroups.diagrams import (
    TreeDiagram,
    equal,
    generator_diagram,
    identity_diagram,
    invert,
    is_reduced,
    multiply,
    parse_diagram,
    power,
    reduce,
    unreduce,
)
from fpgroups.errors import ArityError, ArityMismatch, ParseError
from fpgroups.trees import parse_tree, serialize_tree
from fpgroups.words import parse_word, word_to_diagram


def w2d(text, p):
    return word_to_diagram(parse_word(text, p))


def test_identity():
    e = identity_diagram(2)
    assert (serialize_tree(e.source), serialize_tree(e.target)) == (".", ".")
    assert e.caret_count() == 0 and e.is_identity()


def test_generator_diagrams():
    g = generator_diagram(3, 1)
    assert g.key() == "(.(...).)->(..(...))"
    assert generator_diagram(2, 0).key() == "((..).)->(.(..))"
    assert serialize_tree(invert(generator_diagram(2, 0)).source) == "(.(..))"


def test_x3_in_F3_is_shifted_x1():
    assert generator_diagram(3, 3).key() == "(..(.(...).))->(..(..(...)))"


def test_leaf_count_mismatch():
    with pytest.raises(ArityError):
        TreeDiagram.from_trees(parse_tree("(..)", 2), parse_tree(".", 2))


def test_parse_diagram_errors():
    with pytest.raises(ParseError):
        parse_diagram("(..)", 2)


def test_reduce_whole_caret():
    assert reduce(parse_diagram("(..)->(..)", 2)).is_identity()


def test_product_x0sq_x1inv_x0():
    x = w2d("x0^2*x1^-1", 2)
    assert x.caret_count() == 3
    prod = multiply(x, generator_diagram(2, 0))
    assert prod.key() == "((((..).).).)->(.(.((..).)))"
    assert equal(prod, w2d("x0^3*x2^-1", 2))


def test_unreduced_middle_stage_reduces():
    x = w2d("x0^3*x2^-1", 2)
    assert reduce(unreduce(x, 2)) == x
    assert not is_reduced(unreduce(x, 2))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_relators(p):
    for i in range(4):
        for j in range(i + 1, i + 5):
            xi, xj = generator_diagram(p, i), generator_diagram(p, j)
            lhs = multiply(multiply(invert(xi), xj), xi)
            assert equal(lhs, generator_diagram(p, j + p - 1))


def test_distinct_generators():
    assert not equal(generator_diagram(2, 0), generator_diagram(2, 1))


def test_arity_mismatch_in_product():
    with pytest.raises(ArityMismatch):
        multiply(generator_diagram(2, 0), generator_diagram(3, 0))
    with pytest.raises(ArityMismatch):
        equal(generator_diagram(2, 0), generator_diagram(3, 0))


def test_power():
    g = generator_diagram(2, 1)
    assert equal(power(g, 3), w2d("x1^3", 2))
    assert equal(power(g, -2), w2d("x1^-2", 2))
    assert power(g, 0).is_identity()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda p: st.tuples(words(p), words(p), words(p))))
def test_group_laws(ws):
    x, y, z = (word_to_diagram(w) for w in ws)
    p = x.p
    e = identity_diagram(p)
    assert equal(multiply(x, e), x) and equal(multiply(e, x), x)
    assert multiply(x, invert(x)).is_identity()
    assert invert(invert(x)) == x
    assert equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z)))
    assert reduce(reduce(x)) == reduce(x) and is_reduced(x)


@settings(max_examples=60, deadline=None)
@given(words(3), st.lists(st.integers(0, 50), max_size=4))
def test_unreduce_is_invisible(w, leaves):
    x = word_to_diagram(w)
    y = x
    for leaf in leaves:
        y = unreduce(y, leaf % y.source.leaf_count())
    assert equal(x, y)
    assert reduce(y) == x
