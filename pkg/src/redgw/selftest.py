"""Invariant suite behind ``redgw selftest``.

Each check is a small deterministic function returning ``None`` on success
and raising ``AssertionError`` otherwise.  Randomized checks use a fixed seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, List

from . import bundles as bc
from .audit import SURVIVES, is_full, vanishing_verdicts
from .charts import RED, build_atlas, cosection_expr
from .comparison import ComparisonInput, base_ring, coefficient_closed, coefficient_symbolic, sign_factor
from .lines import catalan, line_count, line_count_roots, sigma1_power_degree
from .ring import parse_class, simple_ring
from .trees import advancing_sequences, enumerate_strata, random_tree

SEED = 20240601


@dataclass
class CheckResult:
    name: str
    ok: bool
    seconds: float
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "seconds": round(self.seconds, 4),
                "detail": self.detail}


def _random_class(ring, rng, terms=4):
    x = ring.zero()
    gens = ring.gens()
    for _ in range(terms):
        t = ring.scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        for g in gens:
            t = t * g ** rng.randint(0, 2)
        x = x + t
    return x


def check_ring_axioms():
    rng = random.Random(SEED)
    ring = simple_ring([("x", 1, None), ("y", 2, 3), ("z", 1, 2)], top_dim=4,
                       point={"x": 2, "y": 1})
    for _ in range(50):
        a, b, c = (_random_class(ring, rng) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert parse_class(ring, a.to_text()) == a


def check_chern_segre():
    ring = base_ring()
    alpha, beta = ring.gens()
    rng = random.Random(SEED)
    for _ in range(30):
        roots = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) * alpha + rng.randint(-4, 4) * beta
                 for _ in range(rng.randint(1, 4))]
        e = bc.from_roots(roots)
        assert e.total_chern * bc.total_segre(e) == ring.one()
        l = bc.line_bundle(rng.randint(-2, 2) * alpha + rng.randint(-2, 2) * beta)
        assert bc.euler_of_twist(e, l) == bc.euler_top(bc.twist_by_line(e, l))
        assert bc.twist_by_line(e, l) == bc.from_roots([r + l.chern(1) for r in roots])


def check_tree_conservation():
    rng = random.Random(SEED)
    for _ in range(200):
        t = random_tree(rng, 7, 3, rng.randint(0, 3))
        d, legs = t.total_weight, t.all_legs
        for seq in advancing_sequences(t):
            assert seq.final.is_path()
            assert seq.final.total_weight == d and seq.final.all_legs == legs
        for mu in enumerate_strata(t):
            assert mu.degree == d and mu.legs <= legs


def check_charts():
    rng = random.Random(SEED)
    for _ in range(50):
        t = random_tree(rng, 6, 2, rng.randint(0, 2))
        seq = advancing_sequences(t)[0]
        n, m = rng.randint(1, 6), rng.randint(0, 3)
        plain = build_atlas(t, seq, n, m)
        with_p = build_atlas(t, seq, n, m, with_p_fields=True)
        assert len(plain.equations) == n and len(with_p.equations) == n + m
        assert all(eq.tau == plain.coordinates for eq in with_p.equations)
        assert set(plain.labels.values()) - {RED} <= set(enumerate_strata(t))
        assert with_p.zero_section().equations == plain.equations
        c = cosection_expr(n, m)
        assert len(c) == m * (n + 2) and len(c.sigma1()) + len(c.sigma2()) == len(c)


def check_audit():
    for n, m in [(4, 1), (5, 2), (3, 1), (4, 2)]:
        degrees = [2] * m
        for d, k in product(range(1, 4), range(0, 3)):
            rep = vanishing_verdicts(n, degrees, d, k)
            for v in rep.verdicts:
                expect = n - m == 3 and is_full(v.stratum, d, k)
                assert (v.verdict == SURVIVES) == expect, (n, m, d, k, v)
            assert rep.F_contribution_vanishes


def check_coefficient():
    for d in range(1, 7):
        assert coefficient_symbolic(ComparisonInput(4, (5,), d)) == Fraction(1, 12)
    for n in range(4, 8):
        for degrees in product(range(1, 5), repeat=n - 3):
            for d in (1, 2, 3):
                inp = ComparisonInput(n, degrees, d)
                assert coefficient_symbolic(inp) == coefficient_closed(inp)
    assert coefficient_symbolic(ComparisonInput(3, (4,), 2)) == 0


def check_sign():
    for n, m, d, g in product(range(3, 7), range(1, 3), range(1, 4), (0, 1)):
        degrees = tuple(range(2, 2 + m))
        if n - m not in (2, 3):
            continue
        e = d * sum(degrees) + m - m * g
        assert sign_factor(ComparisonInput(n, degrees, d), g) == (-1) ** e


def check_lines():
    assert line_count(4, [5]) == 2875
    assert line_count(3, [3]) == 27
    assert line_count(4, [2, 2]) == 16
    assert line_count_roots(4, [5]) == 2875
    for n in range(2, 7):
        assert sigma1_power_degree(n) == catalan(n - 1) == sigma1_power_degree(n, "roots")


CHECKS: List[Callable[[], None]] = [
    check_ring_axioms,
    check_chern_segre,
    check_tree_conservation,
    check_charts,
    check_audit,
    check_coefficient,
    check_sign,
    check_lines,
]


def run_all() -> List[CheckResult]:
    results = []
    for check in CHECKS:
        name = check.__name__.removeprefix("check_")
        start = time.perf_counter()
        try:
            check()
        except AssertionError as exc:
            results.append(CheckResult(name, False, time.perf_counter() - start,
                                       str(exc) or "assertion failed"))
        else:
            results.append(CheckResult(name, True, time.perf_counter() - start))
    return results
