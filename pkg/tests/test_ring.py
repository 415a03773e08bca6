from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from redgw.ring import GradedClass, RingMismatchError, parse_class, simple_ring

R = simple_ring([("alpha", 1, 2), ("beta", 1, 2)], top_dim=2, point={"alpha": 1, "beta": 1})
S = simple_ring([("x", 1), ("y", 2, 3), ("z", 1, 2)], top_dim=4, point={"x": 2, "y": 1})

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def classes(draw, ring=S):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        mono = tuple(draw(st.integers(0, 4)) for _ in ring.generators)
        terms[mono] = draw(rationals)
    return GradedClass(ring, terms)


def test_truncation_and_nilpotency():
    a, b = R.gens()
    assert a * a == 0
    assert (a * b).degree() == 1
    assert (a + b) ** 3 == 0
    x, y, z = S.gens()
    assert y ** 3 == 0 and z ** 2 == 0
    assert x ** 5 == 0 and x ** 4 != 0


def test_degree_reads_point_coefficient():
    x, y, _ = S.gens()
    assert (Fraction(3, 7) * x ** 2 * y + x ** 3).degree() == Fraction(3, 7)
    ring = simple_ring([("h", 1)], 3, point={"h": 3}, normalization=5)
    assert ring.gen("h").__pow__(3).degree() == 5


def test_format_is_canonical():
    a, b = R.gens()
    c = 1 + Fraction(-1, 8) * a + 3 * b + Fraction(-1, 4) * a * b
    assert c.to_text() == "1 + -1/8 * alpha + 3 * beta + -1/4 * alpha * beta"
    assert R.zero().to_text() == "0"
    assert (b * 2 + a).to_text() == "1 * alpha + 2 * beta"


def test_floats_rejected():
    with pytest.raises(TypeError):
        R.gen("alpha") * 0.5


def test_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        R.gen("alpha") + S.gen("x")


def test_components():
    x, y, z = S.gens()
    c = 2 + x + y + x * z
    assert c.component(0) == 2
    assert c.component(2) == y + x * z
    assert set(c.components()) == {0, 1, 2}
    assert c.max_degree() == 2 and not c.is_homogeneous()


def test_substitute_is_a_ring_map():
    x, y, z = S.gens()
    images = {"x": x + z, "y": x * x - y, "z": z}
    p, q = x * y + 3 * z, x - y * z + 1
    assert (p * q).substitute(S, images) == p.substitute(S, images) * q.substitute(S, images)


def test_bad_point_class():
    with pytest.raises(ValueError):
        simple_ring([("a", 1, 2)], top_dim=2, point={"a": 2})


@given(classes(), classes(), classes())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * S.one() == a


@given(classes())
def test_parse_format_roundtrip(a):
    text = a.to_text()
    assert parse_class(S, text) == a
    assert parse_class(S, text).to_text() == text


@given(classes(), st.integers(0, 5), st.integers(0, 5))
def test_powers_add(a, i, j):
    assert a ** i * a ** j == a ** (i + j)


@given(classes(), classes())
def test_grading_is_multiplicative(a, b):
    for i in range(5):
        expect = sum((a.component(j) * b.component(i - j) for j in range(i + 1)), S.zero())
        assert (a * b).component(i) == expect
