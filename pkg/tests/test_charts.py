import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from redgw.charts import RED, build_atlas, cosection_expr
from redgw.trees import Stratum, TreeError, WeightedTree, advancing_sequences, assign_strata, random_tree

cases = st.builds(
    lambda r, size, k, n, m: (random_tree(r, size, 2, k), n, m),
    st.randoms(use_true_random=False), st.integers(2, 7), st.integers(0, 2),
    st.integers(1, 6), st.integers(0, 3),
)


def test_single_vertex_path():
    t = WeightedTree.path(["*", "v1"], 2)
    atlas = build_atlas(t, [], n=2)
    assert atlas.coordinates == ("tau_v1",)
    assert [str(e) for e in atlas.equations] == ["tau_v1*w1", "tau_v1*w2"]
    assert atlas.labels == {RED: RED, "tau_v1": Stratum.of((2, ()))}


def test_p_fields_and_zero_section(example_tree):
    atlas = build_atlas(example_tree, ["d", "g1"], n=4, m=1, with_p_fields=True)
    assert atlas.fiber_coordinates == ("w1", "w2", "w3", "w4", "t1")
    assert atlas.coordinates == ("tau_b", "tau_d", "tau_g1")
    plain = atlas.zero_section()
    assert len(plain.equations) == 4 and plain.equations == atlas.equations[:4]


def test_labels_follow_assign_strata(example_tree):
    atlas = build_atlas(example_tree, ["d", "g2"], n=3)
    strata = assign_strata(example_tree, ["d", "g2"])
    assert {k.removeprefix("tau_"): v for k, v in atlas.labels.items() if k != RED} == strata


def test_json_shape(example_tree):
    data = build_atlas(example_tree, ["c"], n=2, m=1, with_p_fields=True).to_json()
    assert data["equations"] == [[[0, 1], 0], [[0, 1], 1], [[0, 1], 2]]
    assert data["labels"]["red"] == "red"
    assert json.loads(json.dumps(data)) == data


def test_invalid_inputs(example_tree):
    with pytest.raises(TreeError):
        build_atlas(example_tree, ["g1"], n=2)
    with pytest.raises(ValueError):
        build_atlas(example_tree, ["c"], n=0)


def test_cosection_counts():
    c = cosection_expr(4, 1, [5])
    assert len(c) == 1 + 5
    assert len(c.sigma2()) == 1 and len(c.sigma1()) == 5
    assert cosection_expr(4, 0).is_zero() and str(cosection_expr(4, 0)) == "0"
    with pytest.raises(ValueError):
        cosection_expr(4, 2, [5])


@given(cases, st.booleans())
def test_atlas_shape(case, p_fields):
    t, n, m = case
    for seq in advancing_sequences(t):
        atlas = build_atlas(t, seq, n, m, with_p_fields=p_fields)
        assert len(atlas.equations) == n + (m if p_fields else 0)
        for eq in atlas.equations:
            assert eq.tau == atlas.coordinates
        assert set(atlas.labels) == {RED} | set(atlas.coordinates)
        assert atlas.stratum_labels() == set(assign_strata(t, seq).values())
        zero = {c: Fraction(3) for c in atlas.coordinates}
        zero.update({f: 0 for f in atlas.fiber_coordinates})
        assert all(v == 0 for v in atlas.evaluate(zero))
        for coord in atlas.coordinates:
            point = {c: Fraction(2) for c in atlas.coordinates + atlas.fiber_coordinates}
            point.update(atlas.branches()[coord])
            assert all(v == 0 for v in atlas.evaluate(point))


@given(st.integers(1, 8), st.integers(0, 4))
def test_cosection_split_partitions(n, m):
    c = cosection_expr(n, m)
    assert len(c) == m * (1 + (n + 1))
    assert set(c.sigma1().terms).isdisjoint(c.sigma2().terms)
    assert set(c.sigma1().terms) | set(c.sigma2().terms) == set(c.terms)
