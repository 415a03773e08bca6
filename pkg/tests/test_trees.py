import json

import pytest
from hypothesis import given, strategies as st

import tree_oracle as oracle
from redgw.trees import (
    Stratum,
    TreeError,
    WeightedTree,
    advancing_sequences,
    all_strata,
    assign_strata,
    enumerate_strata,
    random_tree,
    run_sequence,
)

trees = st.builds(
    lambda r, size, k: random_tree(r, size, 3, k),
    st.randoms(use_true_random=False), st.integers(2, 8), st.integers(0, 3),
)


def test_advance_at_terminal_vertex(example_tree):
    t = example_tree.advance("c")
    assert t.shape() == ("a", 0, (), (("b", 0, (), (("c", 4, (1, 2, 3), ()),)),))
    assert t.is_path()


def test_advance_at_nonterminal_vertex(example_tree):
    t = example_tree.advance("d")
    assert t.shape() == (
        "a", 0, (),
        (("b", 0, (),
          (("d", 0, (2, 3),
            (("c", 1, (1,), ()), ("g1", 2, (), ()), ("g2", 1, (), ()))),)),),
    )
    assert t.branch_vertex() == "d"


def test_example_sequences(example_tree):
    seqs = {s.steps for s in advancing_sequences(example_tree)}
    assert seqs == {("c",), ("d", "c"), ("d", "g1"), ("d", "g2")}
    strata = assign_strata(example_tree, ("d", "g1"))
    assert strata["b"] == Stratum.of((4, (1, 2, 3)))
    assert strata["d"] == Stratum.of((1, (1,)), (3, (2, 3)))
    assert strata["g1"] == Stratum.of((1, (1,)), (2, ()), (1, ()))


def test_two_branches_of_weight_one():
    t = WeightedTree.build("*", [("*", "b"), ("b", "x"), ("b", "y")], {"x": 1, "y": 1})
    found = enumerate_strata(t)
    assert Stratum.of((2, ())) in found
    assert Stratum.of((1, ()), (1, ())) in found
    assert Stratum.of((1, ()), (1, ())).length == 2


def test_path_tree_has_one_stratum():
    t = WeightedTree.path(["*", "v1"], 3, {"v1": [1, 2]})
    assert [s.steps for s in advancing_sequences(t)] == [()]
    assert enumerate_strata(t) == [Stratum.of((3, (1, 2)))]


def test_validation():
    with pytest.raises(TreeError):  # weighted interior vertex
        WeightedTree.build("*", [("*", "a"), ("a", "b")], {"a": 1, "b": 1})
    with pytest.raises(TreeError):  # unweighted leaf
        WeightedTree.build("*", [("*", "a"), ("*", "b")], {"a": 1})
    with pytest.raises(TreeError):  # legs not 1..k
        WeightedTree.build("*", [("*", "a")], {"a": 1}, {"a": [2]})
    with pytest.raises(TreeError):
        WeightedTree.from_json({"root": "*", "vertices": [{"id": "*", "parent": "a"}]})
    with pytest.raises(TreeError):
        Stratum.of((1, (1,)), (1, (1,)))


def test_invalid_sequence(example_tree):
    with pytest.raises(TreeError):
        run_sequence(example_tree, ["g1"])
    with pytest.raises(TreeError):
        run_sequence(example_tree, ["d"])  # stops before a path
    with pytest.raises(TreeError):
        example_tree.advance("g1")


def test_json_roundtrip(example_tree):
    text = json.dumps(example_tree.to_json(), sort_keys=True)
    back = WeightedTree.from_json(text)
    assert back.shape() == example_tree.shape()
    assert json.dumps(back.to_json(), sort_keys=True) == text
    mu = Stratum.of((2, (3, 1)), (1, ()))
    assert Stratum.from_json(json.loads(json.dumps(mu.to_json()))) == mu
    assert mu.to_json() == [[1, []], [2, [1, 3]]]


def test_all_strata_small():
    assert all_strata(2, 0) == [Stratum.of((1, ()), (1, ())), Stratum.of((2, ()))]
    # d = 1: one pair, legs any subset of {1, 2}
    assert len(all_strata(1, 2)) == 4


@given(trees)
def test_conservation_and_termination(t):
    d, legs = t.total_weight, t.all_legs
    for seq in advancing_sequences(t):
        cur = t
        for v in seq.steps:
            outside = len(cur.vertices) - len(cur.trunk())
            cur = cur.advance(v)
            cur.validate()
            assert len(cur.vertices) - len(cur.trunk()) < outside
            assert cur.total_weight == d and cur.all_legs == legs
        assert cur.is_path() and cur.shape() == seq.final.shape()


@given(trees)
def test_matches_independent_oracle(t):
    mine = {tuple(mu.pairs) for mu in enumerate_strata(t)}
    assert mine == oracle.strata(oracle.from_tree(t))
    finals = sorted(oracle.from_tree(s.final) for s in advancing_sequences(t))
    theirs = sorted(f for _, _, f in oracle.sequences(oracle.from_tree(t)))
    assert finals == theirs


@given(trees)
def test_enumeration_order_independent(t):
    found = set()

    def rec(cur, steps):
        if cur.is_path():
            found.update(assign_strata(t, steps).values())
            return
        for c in reversed(cur.branches()):
            rec(cur.advance(c), steps + (c,))

    rec(t, ())
    assert found == set(enumerate_strata(t))


@given(trees)
def test_strata_are_well_formed(t):
    for mu in enumerate_strata(t):
        assert mu.degree == t.total_weight
        assert mu.legs <= t.all_legs
        assert all(d > 0 for d, _ in mu.pairs)
        assert mu in set(all_strata(t.total_weight, t.k))
