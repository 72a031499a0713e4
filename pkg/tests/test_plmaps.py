from __future__ import annotations

import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import words
from fpgroups.diagrams import generator_diagram, identity_diagram, multiply
from fpgroups.errors import DomainError, VariantMismatch
from fpgroups.plmaps import (
    LINE,
    UNIT,
    compose_maps,
    diagram_to_map,
    generator_map_line,
    generator_map_unit,
    identity_map,
    in_dyadic_ring,
    last_breakpoint,
    word_to_line_map,
    word_to_unit_map,
)
from fpgroups.words import NormalForm, parse_word, word_to_diagram


def test_unit_generator_fixtures():
    assert generator_map_unit(3, 1).breakpoints == ((F(1, 3), F(1, 3)), (F(4, 9), F(2, 3)), (F(2, 3), F(8, 9)))
    g = generator_map_unit(2, 0)
    assert g.slopes() == [2, 1, F(1, 2)]
    assert g.breakpoints == ((F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)))


def test_scaled_copy():
    x1, x3 = generator_map_unit(3, 1), generator_map_unit(3, 3)
    for t in (F(0), F(1, 3), F(2, 3)):
        assert x3(t) == t
    for t in (F(1, 9), F(4, 9), F(5, 9), F(7, 9)):
        assert x3(F(2, 3) + t / 3) == F(2, 3) + x1(t) / 3


def test_diagram_maps():
    assert diagram_to_map(identity_diagram(2)).is_identity()
    assert diagram_to_map(generator_diagram(3, 1)) == generator_map_unit(3, 1)
    assert diagram_to_map(generator_diagram(2, 0)) == generator_map_unit(2, 0)


def test_line_generators():
    f = generator_map_line(2, 0)
    assert f.breakpoints == ((0, 0), (1, 2)) and f.tail_offset == 1
    g = generator_map_line(3, 2)
    assert g(F(1)) == 1 and g(F(5, 2)) == F(7, 2) and g(F(10)) == 12
    for i in range(6):
        assert generator_map_line(4, i)(i) == i


def test_line_word_fixtures():
    assert word_to_line_map(parse_word("e", 2)).is_identity()
    assert last_breakpoint(word_to_line_map(parse_word("e", 2))) is None
    for i in range(6):
        for r in range(1, 6):
            assert last_breakpoint(word_to_line_map(NormalForm(2, ((i, r),)))) == (i + 1, i + r + 1)
    assert last_breakpoint(word_to_line_map(parse_word("x0", 3))) == (1, 3)


def test_variant_errors():
    with pytest.raises(VariantMismatch):
        last_breakpoint(generator_map_unit(2, 0))
    with pytest.raises(VariantMismatch):
        compose_maps(generator_map_unit(2, 0), generator_map_line(2, 0))
    with pytest.raises(DomainError):
        generator_map_unit(2, 0)(F(3, 2))


def test_dyadic_ring():
    assert in_dyadic_ring(F(1, 2), 4)
    assert not in_dyadic_ring(F(1, 3), 4)
    assert in_dyadic_ring(F(5, 36), 6)


def test_emitters():
    f = generator_map_unit(3, 1)
    data = json.loads(f.to_json())
    assert data == {"variant": "unit", "p": 3, "breakpoints": [["1/3", "1/3"], ["4/9", "2/3"], ["2/3", "8/9"]]}
    assert json.loads(generator_map_line(2, 0).to_json())["tail_offset"] == "1"
    assert f.to_csv().splitlines()[0] == "x,y"
    assert f.to_csv().splitlines()[-1] == "1,1"


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda p: st.tuples(words(p, 8), words(p, 8))))
def test_homomorphism(ws):
    a, b = ws
    x, y = word_to_diagram(a), word_to_diagram(b)
    fx, fy = diagram_to_map(x), diagram_to_map(y)
    assert compose_maps(fx, fy) == diagram_to_map(multiply(x, y))
    assert compose_maps(fx, fx.inverse()).is_identity()
    assert compose_maps(fx, identity_map(x.p)) == fx
    assert word_to_unit_map(a) == fx
    assert not fx.validate()
    line = word_to_line_map(a)
    assert not line.validate()
    assert compose_maps(line, word_to_line_map(b)) == word_to_line_map(a * b)
