import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from redgw.audit import ScopeError
from redgw.comparison import (
    ComparisonInput,
    build_PR_ring,
    coefficient_closed,
    coefficient_symbolic,
    comparison,
    golden_intermediates,
    raw_coefficient,
    sign_factor,
    twisted_bundle,
)
from redgw import bundles as bc


def test_quintic():
    rep = comparison(4, [5], 1)
    assert rep.coefficient == Fraction(1, 12)
    assert rep.raw_coefficient == Fraction(-1, 12)
    assert rep.gw0 == 2875 and rep.gw0_source == "grassmann_lines"
    assert rep.correction == Fraction(2875, 12)


def test_user_gw0_echoed():
    rep = comparison(4, [5], 3, gw0=317206375)
    assert rep.correction == Fraction(317206375, 12)
    assert rep.gw0_source == "user"
    assert comparison(4, [5], 2).correction is None


def test_quintic_intermediates():
    inter = golden_intermediates(ComparisonInput(4, (5,), 1))
    assert inter == {
        "s1(A_R)": "-1/24 * alpha + 5 * beta",
        "s2(A_R)": "-5/12 * alpha * beta",
        "c(twisted)": "1 + -1/8 * alpha + 3 * beta + -1/4 * alpha * beta",
        "pushforward": "-1/12 * alpha * beta",
    }


def test_other_threefolds():
    assert coefficient_symbolic(ComparisonInput(5, (2, 2), 3)) == Fraction(-1, 6)
    assert coefficient_symbolic(ComparisonInput(6, (2, 2, 2), 1)) == Fraction(1, 24)
    # P^3 itself: c1 . line = 4
    assert coefficient_symbolic(ComparisonInput(3, (), 1)) == Fraction(-1, 12)


def test_surfaces_are_zero():
    for n, degrees, d in [(3, (4,), 1), (4, (2, 3), 2), (2, (), 1), (5, (2, 2, 2), 5)]:
        rep = comparison(n, degrees, d)
        assert rep.coefficient == 0 and rep.raw_coefficient is None


def test_scope_errors():
    with pytest.raises(ScopeError):
        ComparisonInput(5, (5,), 1)
    with pytest.raises(ValueError):
        ComparisonInput(4, (5,), 0)


def test_report_roundtrip():
    rep = comparison(4, [5], 2, intermediates=True)
    text = rep.dumps()
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) == text
    assert "1/12 GW_0,2" in rep.to_text()


@given(st.integers(4, 8), st.integers(1, 6), st.data())
def test_pipeline_matches_closed_form(n, d, data):
    degrees = tuple(data.draw(st.lists(st.integers(1, 9), min_size=n - 3, max_size=n - 3)))
    inp = ComparisonInput(n, degrees, d)
    assert coefficient_symbolic(inp) == coefficient_closed(inp)
    assert raw_coefficient(inp) == (-1) ** (n + 1) * coefficient_closed(inp)


@given(st.integers(4, 8), st.integers(1, 4), st.data())
def test_segre_classes_of_A(n, d, data):
    degrees = tuple(data.draw(st.lists(st.integers(1, 9), min_size=n - 3, max_size=n - 3)))
    data_ = build_PR_ring(ComparisonInput(n, degrees, d))
    a, b = data_.alpha, data_.beta
    m, W = len(degrees), sum(degrees)
    s = bc.total_segre(data_.A)
    assert s.component(1) == Fraction(-m, 24) * a + W * d * b
    assert s.component(2) == Fraction(-(m + 1) * W * d, 24) * a * b
    e = (n + 1) * d - 2
    c = twisted_bundle(data_).total_chern
    F = data_.F
    assert c == 1 + e * data_.beta_bar - Fraction(n - 1, 24) * data_.alpha_bar \
        - Fraction((n - 2) * e, 24) * F


def test_sign_parity():
    for n, m, d, g in product((4, 5, 6), (1, 2, 3), (1, 2, 3), (0, 1)):
        if n - m not in (2, 3):
            continue
        degrees = tuple(range(2, m + 2))
        e = d * sum(degrees) + m - m * g
        assert sign_factor(ComparisonInput(n, degrees, d), g) == (-1) ** e
    with pytest.raises(ValueError):
        sign_factor(ComparisonInput(4, (5,), 1), 2)
