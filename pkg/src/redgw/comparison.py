"""The genus-one standard-minus-reduced coefficient.

For a complete intersection ``Q`` of dimension 3 the rational part of the
genus-one virtual class contributes ``c * GW_{0,d}``, where ``c`` is the
degree of an Euler class on ``P(A_R + O)`` over ``R = M11 x P^1``:

1. ``A*(R) = Q[alpha, beta] / (alpha^2, beta^2)`` with ``deg(alpha beta) = 1``
   (``alpha = 24 c_1(Hodge)``, ``beta`` the point class of ``P^1``);
2. ``E = H^v (x) N`` with ``c(N) = 1 + ((n+1)d - 2) beta`` of rank ``n - 1``;
3. ``e(E(-D))`` expanded in powers of ``-D``;
4. push forward with ``D^(m+i) -> s_i(A_R)``, ``A_R = sum_i H (x) O(-w_i d)``;
5. take the degree.

The raw value is ``(-1)^(n+1) (2 - c_1(T_Q).d) / 24``; the reported
coefficient drops that sign.  In dimension 2 every stratum vanishes by
dimension and the coefficient is 0.
"""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import bundles as bc
from .audit import check_scope
from .ring import GradedClass, RingPresentation, simple_ring


def _fmt(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ComparisonInput:
    n: int
    degrees: tuple
    d: int
    k: int = 0
    gw0: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(w) for w in self.degrees))
        if self.gw0 is not None:
            object.__setattr__(self, "gw0", Fraction(self.gw0))
        check_scope(self.n, self.degrees)
        if self.d < 1:
            raise ValueError(f"curve degree d must be >= 1, got {self.d}")
        if self.k < 0:
            raise ValueError(f"number of marked points must be >= 0, got {self.k}")

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def dim_Q(self) -> int:
        return self.n - self.m

    @property
    def c1_dot_line(self) -> int:
        """``c_1(T_Q) . d[line] = (n + 1 - sum w_i) d`` by adjunction."""
        return (self.n + 1 - sum(self.degrees)) * self.d


@dataclass
class PRData:
    """Rings and bundles of the coefficient computation."""

    base: RingPresentation
    proj: bc.ProjectiveCompletion
    hodge: bc.BundleExpr
    normal: bc.BundleExpr
    L: List[bc.BundleExpr]
    A: bc.BundleExpr

    @property
    def ring(self) -> RingPresentation:
        return self.proj.ring

    @property
    def alpha(self) -> GradedClass:
        return self.base.gen("alpha")

    @property
    def beta(self) -> GradedClass:
        return self.base.gen("beta")

    @property
    def alpha_bar(self) -> GradedClass:
        return self.ring.gen("alpha")

    @property
    def beta_bar(self) -> GradedClass:
        return self.ring.gen("beta")

    @property
    def F(self) -> GradedClass:
        return self.alpha_bar * self.beta_bar

    @property
    def D(self) -> GradedClass:
        return self.proj.D


@lru_cache(maxsize=None)
def base_ring() -> RingPresentation:
    """``A*(M11 x P^1)`` with ``deg(alpha beta) = 1``."""
    return simple_ring(
        [("alpha", 1, 2), ("beta", 1, 2)], top_dim=2, point={"alpha": 1, "beta": 1},
        normalization=1, name="A*(M11 x P1)",
    )


def build_PR_ring(inp: ComparisonInput) -> PRData:
    base = base_ring()
    alpha, beta = base.gens()
    hodge = bc.line_bundle(alpha / 24, name="H")
    normal = bc.BundleExpr(inp.n - 1, 1 + ((inp.n + 1) * inp.d - 2) * beta, name="N")
    L = [bc.line_bundle(alpha / 24 - w * inp.d * beta, name=f"L{i}")
         for i, w in enumerate(inp.degrees, 1)]
    A = bc.whitney_sum(L) if L else bc.trivial(base, 0)
    proj = bc.ProjectiveCompletion(A, "D", name="A*(P(A_R + O))")
    return PRData(base, proj, hodge, normal, L, A)


def twisted_bundle(data: PRData) -> bc.BundleExpr:
    """``gamma^*(H^v (x) N)`` on the projective completion."""
    E = bc.twist_by_line(data.normal, bc.dual(data.hodge))
    return data.proj.pull_bundle(E)


def euler_class(data: PRData) -> GradedClass:
    """``e(gamma^*(H^v (x) N)(-D))``."""
    E = twisted_bundle(data)
    minus_D = bc.line_bundle(-data.D, name="O(-D)")
    return bc.euler_of_twist(E, minus_D)


def raw_coefficient(inp: ComparisonInput) -> Fraction:
    """Degree of the Euler class, before discharging the ``(-1)^(n+1)`` sign."""
    data = build_PR_ring(inp)
    return data.proj.push(euler_class(data)).degree()


def coefficient_symbolic(inp: ComparisonInput) -> Fraction:
    if inp.dim_Q == 2:
        return Fraction(0)
    return (-1) ** (inp.n + 1) * raw_coefficient(inp)


def coefficient_closed(inp: ComparisonInput) -> Fraction:
    if inp.dim_Q == 2:
        return Fraction(0)
    return Fraction(2 - inp.c1_dot_line, 24)


def sign_factor(inp: ComparisonInput, g: int = 1) -> int:
    """``(-1)^(d sum w_i + m - m g)`` relating the p-field class to the virtual class of Q."""
    if g not in (0, 1):
        raise ValueError("genus must be 0 or 1")
    e = inp.d * sum(inp.degrees) + inp.m - inp.m * g
    return -1 if e % 2 else 1


def auto_gw0(inp: ComparisonInput) -> Optional[int]:
    """Line count for ``d = 1, k = 0`` when the expected dimension is zero."""
    from .lines import line_count

    if inp.d != 1 or inp.k != 0:
        return None
    if sum(w + 1 for w in inp.degrees) != 2 * (inp.n - 1):
        return None
    return line_count(inp.n, inp.degrees)


@dataclass
class ComparisonReport:
    input: ComparisonInput
    coefficient_symbolic: Fraction
    coefficient_closed: Fraction
    raw_coefficient: Optional[Fraction]
    sign_factor: int
    gw0: Optional[Fraction] = None
    gw0_source: Optional[str] = None
    correction: Optional[Fraction] = None
    intermediates: Dict[str, str] = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.coefficient_symbolic == self.coefficient_closed

    @property
    def coefficient(self) -> Fraction:
        return self.coefficient_symbolic

    def to_json(self) -> dict:
        inp = self.input
        return {
            "inputs": {"n": inp.n, "degrees": list(inp.degrees), "d": inp.d, "k": inp.k,
                       "gw0": _fmt(inp.gw0)},
            "dim_Q": inp.dim_Q,
            "c1_dot_line": inp.c1_dot_line,
            "coefficient": _fmt(self.coefficient_symbolic),
            "coefficient_symbolic": _fmt(self.coefficient_symbolic),
            "coefficient_closed": _fmt(self.coefficient_closed),
            "raw_coefficient": _fmt(self.raw_coefficient),
            "match": self.match,
            "sign_factor": self.sign_factor,
            "gw0": _fmt(self.gw0),
            "gw0_source": self.gw0_source,
            "correction": _fmt(self.correction),
            "intermediates": dict(self.intermediates),
        }

    def to_text(self) -> str:
        inp = self.input
        degs = ",".join(map(str, inp.degrees)) or "-"
        lines = [
            f"Q = complete intersection of degrees ({degs}) in P^{inp.n}, dim Q = {inp.dim_Q}",
            f"d = {inp.d}, k = {inp.k}, c1(T_Q).d[line] = {inp.c1_dot_line}",
        ]
        c = _fmt(self.coefficient)
        if inp.dim_Q == 3:
            lines.append(
                f"GW_1,{inp.d}(a) - GW^red_1,{inp.d}(a) = (2 - {inp.c1_dot_line})/24 "
                f"GW_0,{inp.d}(a) = {c} GW_0,{inp.d}(a)"
            )
        else:
            lines.append(f"GW_1,{inp.d}(a) - GW^red_1,{inp.d}(a) = 0")
        lines.append(f"pipeline = {c}, closed form = {_fmt(self.coefficient_closed)}, "
                     f"match = {self.match}")
        lines.append(f"sign (-1)^(d sum deg f + m - m g) at g=1: {self.sign_factor:+d}")
        if self.correction is not None:
            src = f" [{self.gw0_source}]" if self.gw0_source else ""
            lines.append(f"GW_0,{inp.d} = {_fmt(self.gw0)}{src}, "
                         f"correction = {_fmt(self.correction)}")
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def golden_intermediates(inp: ComparisonInput) -> Dict[str, str]:
    data = build_PR_ring(inp)
    s = bc.total_segre(data.A)
    out = {
        "s1(A_R)": s.component(1).to_text(),
        "s2(A_R)": s.component(2).to_text(),
        "c(twisted)": twisted_bundle(data).total_chern.to_text(),
        "pushforward": data.proj.push(euler_class(data)).to_text(),
    }
    return out


def compare(inp: ComparisonInput, auto_fill: bool = True, intermediates: bool = False) -> ComparisonReport:
    symbolic = coefficient_symbolic(inp)
    closed = coefficient_closed(inp)
    raw = raw_coefficient(inp) if inp.dim_Q == 3 else None
    gw0, source = inp.gw0, ("user" if inp.gw0 is not None else None)
    if gw0 is None and auto_fill:
        lines = auto_gw0(inp)
        if lines is not None:
            gw0, source = Fraction(lines), "grassmann_lines"
    report = ComparisonReport(
        inp, symbolic, closed, raw, sign_factor(inp, 1), gw0, source,
        correction=None if gw0 is None else symbolic * gw0,
    )
    if intermediates and inp.dim_Q == 3:
        report.intermediates = golden_intermediates(inp)
    return report


def comparison(n: int, degrees: Sequence[int], d: int, k: int = 0, gw0=None, **kw) -> ComparisonReport:
    return compare(ComparisonInput(n, tuple(degrees), d, k, gw0), **kw)
