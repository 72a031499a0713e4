from __future__ import annotations

import pytest

from fpgroups.diagrams import generator_diagram, identity_diagram
from fpgroups.errors import DomainError, ResourceError
from fpgroups.metrics import (
    CapExceeded,
    LengthOracle,
    ball,
    exact_length,
    finite_generators,
    metric_D,
    metric_N,
    metric_N2,
    metric_report,
)
from fpgroups.words import NormalForm, normalize_word, parse_word, word_to_diagram


def nf(text, p):
    return normalize_word(parse_word(text, p))


def test_metric_D():
    assert metric_D(NormalForm(2)) == 0
    assert metric_D(nf("x0^3*x2^-1", 2)) == 6
    for i in range(6):
        for r in range(1, 6):
            assert metric_D(NormalForm(3, ((i, r),))) == i + r


def test_metric_N():
    assert metric_N(NormalForm(2)) == 0
    assert metric_N(nf("x0^2*x1^-1", 2)) == 3
    assert metric_N(nf("x0^3*x2^-1", 2)) == 4
    for i in range(6):
        for r in range(1, 6):
            assert metric_N(NormalForm(2, ((i, r),))) == i + r + 1


def test_metric_N2():
    assert metric_N2(NormalForm(2)) == 0
    assert metric_N2(nf("x1", 3)) == 4
    assert metric_N2(NormalForm(2, ((2, 3),))) == 6
    with pytest.raises(DomainError):
        metric_N2(nf("x1^-1", 2))


def test_finite_generators_order():
    gens = finite_generators(3)
    assert len(gens) == 6 and gens[0] == generator_diagram(3, 0)


def test_small_balls():
    assert ball(2, 0).sphere_sizes == [1]
    assert ball(2, 1).sphere_sizes == [1, 4]
    assert ball(3, 1).sphere_sizes == [1, 6]
    assert ball(2, 4).sphere_sizes == [1, 4, 12, 36, 108]


def test_ball_guard():
    with pytest.raises(ResourceError):
        ball(2, 6, max_states=50)


def test_guard_from_environment(monkeypatch):
    monkeypatch.setenv("FP_MAX_STATES", "20")
    with pytest.raises(ResourceError):
        ball(2, 4)


def test_exact_length_fixtures():
    assert exact_length(identity_diagram(2), 5) == 0
    for i in range(3):
        assert exact_length(generator_diagram(3, i), 5) == 1
    # regression fixture computed by the BFS oracle
    assert exact_length(word_to_diagram(nf("x0^2*x1^-1", 2)), 20) == 3
    assert exact_length(generator_diagram(2, 5), 10) == 9  # x0^-4 x1 x0^4
    assert exact_length(generator_diagram(2, 5), 3) == CapExceeded(3)
    assert str(CapExceeded(3)) == "cap exceeded"


def test_oracle_agrees_with_ball():
    b = ball(2, 6)
    oracle = LengthOracle(2)
    for k, (x, r) in enumerate(b.elements()):
        if k % 7 == 0:
            assert oracle.length(x, 10) == r


def test_metric_report_json():
    rep = metric_report(nf("x0^3*x2^-1", 2))
    assert (rep.D, rep.N, rep.caret_count, rep.N2) == (6, 4, 4, None)
    assert '"exact_length"' not in rep.to_json()
    rep = metric_report(identity_diagram(2), exact_cap=3)
    assert rep.exact_length == 0 and rep.to_json() == metric_report(identity_diagram(2), 3).to_json()
