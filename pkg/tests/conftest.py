import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def example_tree():
    """Root a, trunk a-b; c terminal with leg 1; d carries legs 2, 3 over g1, g2."""
    from redgw.trees import WeightedTree

    return WeightedTree.build(
        "a",
        [("a", "b"), ("b", "c"), ("b", "d"), ("d", "g1"), ("d", "g2")],
        weight={"c": 1, "g1": 2, "g2": 1},
        legs={"c": [1], "d": [2, 3]},
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
