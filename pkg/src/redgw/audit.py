"""Rank and dimension bookkeeping for the rational-part contributions.

Each stratum ``mu`` contributes a cycle of dimension ``d(n+1) + k + m`` pushed
into a space ``X_mu``; when ``dim X_mu`` is smaller the contribution vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .trees import Stratum, all_strata

VANISHES = "vanishes_by_dimension"
SURVIVES = "survives"


class ScopeError(ValueError):
    """Inputs outside complete intersections of dimension 2 or 3."""


def check_scope(n: int, degrees: Sequence[int]) -> int:
    m = len(degrees)
    if n < 1:
        raise ScopeError(f"n must be positive, got {n}")
    if any(int(w) < 1 for w in degrees):
        raise ScopeError(f"hypersurface degrees must be positive, got {list(degrees)}")
    if n - m not in (2, 3):
        raise ScopeError(f"dim Q = n - m = {n - m}; only dimensions 2 and 3 are covered")
    return n - m


def stratum_dim(mu: Stratum, n: int, d: int, k: int) -> int:
    """Dimension of the space ``X_mu`` of genus-zero tails glued at one point."""
    ell = mu.length
    k0 = k - sum(len(legs) for _, legs in mu.pairs)
    if k0 < 0:
        raise ValueError(f"stratum {mu} uses more than {k} legs")
    if ell == 1:
        return (n + 1) * d + (n - 3) + k - k0
    return (n + 1) * d - 2 * ell + n + k - k0


def is_full(mu: Stratum, d: int, k: int) -> bool:
    """``mu == {(d, [k])}``."""
    return mu == Stratum(((d, tuple(range(1, k + 1))),))


@dataclass
class StratumVerdict:
    stratum: Stratum
    dim_X: int
    verdict: str

    def to_json(self) -> dict:
        return {"stratum": self.stratum.to_json(), "dim_X": self.dim_X, "verdict": self.verdict}


@dataclass
class AuditReport:
    n: int
    m: int
    degrees: List[int]
    d: int
    k: int
    verdicts: List[StratumVerdict] = field(default_factory=list)

    @property
    def dim_Q(self) -> int:
        return self.n - self.m

    @property
    def rank_V1(self) -> int:
        return self.n + 1

    @property
    def rank_V2(self) -> int:
        return self.d * sum(self.degrees) + self.m

    @property
    def rank_N(self) -> int:
        return self.d * sum(self.degrees)

    @property
    def dim_Mmu(self) -> int:
        return (self.d + 1) * (self.n + 1) + self.k - 2

    @property
    def dim_Mmu_p(self) -> int:
        return self.dim_Mmu + self.m

    @property
    def dim_cone(self) -> int:
        return (self.d + 1) * (self.n + 1) + self.k + self.m

    @property
    def dim_B(self) -> int:
        return self.dim_cone - self.rank_V1

    @property
    def dim_F_tot(self) -> int:
        # dim Theta + m with dim Theta = dim M^mu - n
        return self.dim_Mmu - self.n + self.m

    @property
    def F_contribution_vanishes(self) -> bool:
        return self.dim_F_tot < self.dim_B

    def survivors(self) -> List[Stratum]:
        return [v.stratum for v in self.verdicts if v.verdict == SURVIVES]

    def to_json(self) -> dict:
        return {
            "inputs": {"n": self.n, "m": self.m, "degrees": list(self.degrees),
                       "d": self.d, "k": self.k},
            "dim_Q": self.dim_Q,
            "rank_V1": self.rank_V1,
            "rank_V2": self.rank_V2,
            "dim_Mmu": self.dim_Mmu,
            "dim_cone": self.dim_cone,
            "dim_B": self.dim_B,
            "dim_F_tot": self.dim_F_tot,
            "F_contribution_vanishes": self.F_contribution_vanishes,
            "strata": [v.to_json() for v in self.verdicts],
            "survivors": [s.to_json() for s in self.survivors()],
        }


def vanishing_verdicts(
    n: int,
    degrees: Sequence[int],
    d: int,
    k: int = 0,
    strata: Optional[Sequence[Stratum]] = None,
) -> AuditReport:
    """Compare ``dim X_mu`` with ``d(n+1) + k + m`` for every stratum.

    Without ``strata`` every multiset of positive-degree pairs on ``k`` legs is used.
    """
    check_scope(n, degrees)
    if d < 1 or k < 0:
        raise ScopeError("need d >= 1 and k >= 0")
    report = AuditReport(n, len(degrees), [int(w) for w in degrees], d, k)
    if strata is None:
        strata = all_strata(d, k)
    for mu in strata:
        if mu.degree != d:
            raise ValueError(f"stratum {mu} has degree {mu.degree}, expected {d}")
        dim = stratum_dim(mu, n, d, k)
        verdict = SURVIVES if dim >= report.dim_B else VANISHES
        report.verdicts.append(StratumVerdict(mu, dim, verdict))
    return report


def rank_table(n: int, degrees: Sequence[int], d: int, k: int = 0) -> Dict[str, int]:
    r = AuditReport(n, len(degrees), list(degrees), d, k)
    return {
        "rank_V1": r.rank_V1,
        "rank_V2": r.rank_V2,
        "rank_N": r.rank_N,
        "dim_Mmu": r.dim_Mmu,
        "dim_Mmu_p": r.dim_Mmu_p,
        "dim_cone": r.dim_cone,
        "dim_B": r.dim_B,
        "dim_F_tot": r.dim_F_tot,
    }
