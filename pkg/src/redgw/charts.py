"""Local chart shapes of the desingularized genus-one moduli.

On the chart attached to an advancing sequence with final path
``root, v_1..v_r, a_1..a_q`` the moduli is cut out by ``tau * w_i = 0``
(and ``tau * t_j = 0`` once p-fields are added), where ``tau`` is the
product of the node-smoothing coordinates.  The zero locus splits into the
reduced branch ``{w = 0}`` and one rational branch ``{tau_v = 0}`` per
coordinate, labeled by a stratum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .trees import AdvancingSequence, WeightedTree, assign_strata, run_sequence

RED = "red"


@dataclass(frozen=True)
class Equation:
    """``prod(tau_coords) * fiber``."""

    tau: Tuple[str, ...]
    fiber: str

    def __str__(self):
        factors = list(self.tau) + [self.fiber]
        return "*".join(factors)


@dataclass(frozen=True)
class ChartAtlas:
    tree: WeightedTree
    sequence: Tuple[str, ...]
    vertices: Tuple[str, ...]  # v_1..v_r, a_1..a_q
    n: int
    m: int
    with_p_fields: bool
    labels: Mapping[str, object]  # branch name -> RED or Stratum

    @property
    def coordinates(self) -> Tuple[str, ...]:
        return tuple(f"tau_{v}" for v in self.vertices)

    @property
    def fiber_coordinates(self) -> Tuple[str, ...]:
        ws = tuple(f"w{i}" for i in range(1, self.n + 1))
        if not self.with_p_fields:
            return ws
        return ws + tuple(f"t{j}" for j in range(1, self.m + 1))

    @property
    def equations(self) -> List[Equation]:
        return [Equation(self.coordinates, f) for f in self.fiber_coordinates]

    def branches(self) -> Dict[str, Dict[str, int]]:
        """Each branch of ``{F = 0}`` as the coordinates it sets to zero."""
        out: Dict[str, Dict[str, int]] = {RED: {f: 0 for f in self.fiber_coordinates}}
        for c in self.coordinates:
            out[c] = {c: 0}
        return out

    def evaluate(self, point: Mapping[str, object]) -> List[Fraction]:
        values = []
        tau = Fraction(1)
        for c in self.coordinates:
            tau *= Fraction(point[c])
        for f in self.fiber_coordinates:
            values.append(tau * Fraction(point[f]))
        return values

    def zero_section(self) -> "ChartAtlas":
        """Restrict to ``{t = 0}``: the atlas without p-fields."""
        return build_atlas(self.tree, self.sequence, self.n, self.m, with_p_fields=False)

    def stratum_labels(self) -> set:
        return {lab for lab in self.labels.values() if lab != RED}

    def to_json(self) -> dict:
        coords = list(self.coordinates)
        fibers = list(self.fiber_coordinates)
        return {
            "n": self.n,
            "m": self.m,
            "with_p_fields": self.with_p_fields,
            "sequence": list(self.sequence),
            "coordinates": coords,
            "fiber_coordinates": fibers,
            "equations": [
                [[coords.index(c) for c in eq.tau], fibers.index(eq.fiber)]
                for eq in self.equations
            ],
            "labels": {
                name: (lab if lab == RED else lab.to_json())
                for name, lab in sorted(self.labels.items())
            },
        }

    def __str__(self):
        tau = "*".join(self.coordinates) or "1"
        lines = [f"tau = {tau}"]
        lines += [f"  {eq} = 0" for eq in self.equations]
        for name, lab in sorted(self.labels.items()):
            lines.append(f"  {{{name} = 0}} -> {lab}" if name != RED
                         else f"  {{{', '.join(self.fiber_coordinates)} = 0}} -> red")
        return "\n".join(lines)


def build_atlas(
    t: WeightedTree,
    seq: Union[AdvancingSequence, Sequence[str]],
    n: int,
    m: int = 0,
    with_p_fields: bool = False,
) -> ChartAtlas:
    if n < 1:
        raise ValueError("ambient dimension n must be at least 1")
    if m < 0:
        raise ValueError("codimension m must be non-negative")
    steps = tuple(seq.steps if isinstance(seq, AdvancingSequence) else seq)
    trees = run_sequence(t, steps)
    final = trees[-1]
    verts = tuple(final.trunk()[1:])
    strata = assign_strata(t, steps)
    labels: Dict[str, object] = {RED: RED}
    for v in verts:
        labels[f"tau_{v}"] = strata[v]
    return ChartAtlas(t, steps, verts, n, m, with_p_fields, labels)


# cosection template ------------------------------------------------------


@dataclass(frozen=True)
class Term:
    """One summand of the cosection; ``part`` is ``sigma1`` (u'-part) or ``sigma2`` (p'-part)."""

    factors: Tuple[str, ...]
    part: str

    def __str__(self):
        return "*".join(self.factors)


@dataclass(frozen=True)
class CosectionExpr:
    n: int
    m: int
    terms: Tuple[Term, ...]

    def sigma1(self) -> "CosectionExpr":
        return CosectionExpr(self.n, self.m, tuple(t for t in self.terms if t.part == "sigma1"))

    def sigma2(self) -> "CosectionExpr":
        return CosectionExpr(self.n, self.m, tuple(t for t in self.terms if t.part == "sigma2"))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return " + ".join(map(str, self.terms)) if self.terms else "0"


def cosection_expr(n: int, m: int, degrees: Optional[Sequence[int]] = None) -> CosectionExpr:
    """``sum_j p'_j f_j(u) + sum_{i,j} p_j u'_i (d f_j / d u_i)(u)`` as a flat term list.

    ``degrees`` only fixes ``m``; the template is the same for every degree.
    """
    if degrees is not None and len(degrees) != m:
        raise ValueError(f"expected {m} degrees, got {len(degrees)}")
    terms: List[Term] = []
    for j in range(1, m + 1):
        terms.append(Term((f"p'_{j}", f"f_{j}(u)"), "sigma2"))
    for j in range(1, m + 1):
        for i in range(n + 1):
            terms.append(Term((f"p_{j}", f"u'_{i}", f"d_u{i} f_{j}(u)"), "sigma1"))
    return CosectionExpr(n, m, tuple(terms))
