"""Formal vector bundles: rank plus total Chern class.

Everything here is characteristic-class bookkeeping over a
:class:`~redgw.ring.RingPresentation`; there is no sheaf data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import GradedClass, RingMismatchError, RingPresentation


class BundleError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class BundleExpr:
    rank: int
    total_chern: GradedClass
    name: str = ""

    def __post_init__(self):
        if self.rank < 0:
            raise BundleError(f"negative rank {self.rank}")
        c = self.total_chern
        if c.component(0) != c.ring.one():
            raise BundleError(f"total Chern class of {self.name or 'bundle'} must start with 1")
        if c.max_degree() > self.rank:
            raise BundleError(
                f"{self.name or 'bundle'} has rank {self.rank} but a nonzero Chern class "
                f"in degree {c.max_degree()}"
            )

    @property
    def ring(self) -> RingPresentation:
        return self.total_chern.ring

    def chern(self, i: int) -> GradedClass:
        if i < 0:
            return self.ring.zero()
        return self.total_chern.component(i)

    def __eq__(self, other):
        if not isinstance(other, BundleExpr):
            return NotImplemented
        return self.rank == other.rank and self.total_chern == other.total_chern

    def __hash__(self):
        return hash((self.rank, self.total_chern))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"BundleExpr({label}rank {self.rank}, c = {self.total_chern})"


def trivial(ring: RingPresentation, rank: int = 0) -> BundleExpr:
    return BundleExpr(rank, ring.one(), name=f"O^{rank}")


def line_bundle(c1: GradedClass, name: str = "") -> BundleExpr:
    return BundleExpr(1, c1.ring.one() + c1, name=name)


def from_roots(roots: Sequence[GradedClass], name: str = "") -> BundleExpr:
    """Sum of line bundles with the given first Chern classes."""
    if not roots:
        raise BundleError("from_roots needs at least one root; use trivial() for rank 0")
    total = roots[0].ring.one()
    for x in roots:
        total = total * (1 + x)
    return BundleExpr(len(roots), total, name=name)


def total_segre(e: BundleExpr) -> GradedClass:
    """Inverse of the total Chern class, ``s = 1 - x + x^2 - ...`` with ``x = c - 1``."""
    x = e.total_chern - 1
    result = e.ring.one()
    power = e.ring.one()
    sign = 1
    # x has no constant term, so its powers die after top_dim steps
    for _ in range(e.ring.top_dim):
        power = power * x
        if not power:
            break
        sign = -sign
        result = result + sign * power
    return result


def segre(e: BundleExpr, i: int) -> GradedClass:
    return total_segre(e).component(i)


def whitney_sum(es: Iterable[BundleExpr]) -> BundleExpr:
    es = list(es)
    if not es:
        raise BundleError("whitney_sum of an empty list has no ring; use trivial()")
    ring = es[0].ring
    rank = 0
    total = ring.one()
    for e in es:
        if e.ring != ring:
            raise RingMismatchError("bundles live over different rings")
        rank += e.rank
        total = total * e.total_chern
    return BundleExpr(rank, total, name=" + ".join(e.name for e in es if e.name))


def dual(e: BundleExpr) -> BundleExpr:
    total = e.ring.zero()
    for i, part in e.total_chern.components().items():
        total = total + (part if i % 2 == 0 else -part)
    return BundleExpr(e.rank, total, name=f"{e.name}^v" if e.name else "")


def twist_by_line(e: BundleExpr, l: BundleExpr) -> BundleExpr:
    """``E (x) L``: ``c_k = sum_i C(r-i, k-i) c_i(E) c_1(L)^(k-i)``.

    Evaluated as ``sum_i c_i(E) (1 + c_1(L))^(r-i)``, which expands to the same sum.
    """
    if l.rank != 1:
        raise BundleError(f"twist needs a line bundle, got rank {l.rank}")
    if l.ring != e.ring:
        raise RingMismatchError("bundles live over different rings")
    r = e.rank
    one_plus_l = l.total_chern
    powers = [e.ring.one()]
    for _ in range(r):
        powers.append(powers[-1] * one_plus_l)
    total = e.ring.zero()
    for i, ci in e.total_chern.components().items():
        total = total + ci * powers[r - i]
    name = f"{e.name}({l.name})" if e.name and l.name else ""
    return BundleExpr(r, total, name=name)


def euler_top(e: BundleExpr) -> GradedClass:
    """Top Chern class; a rank-0 bundle has Euler class 1."""
    return e.chern(e.rank)


def euler_of_twist(e: BundleExpr, l: BundleExpr) -> GradedClass:
    """``e(E (x) L) = sum_i c_i(E) c_1(L)^(r-i)`` without forming the whole twist."""
    if l.rank != 1:
        raise BundleError(f"twist needs a line bundle, got rank {l.rank}")
    if l.ring != e.ring:
        raise RingMismatchError("bundles live over different rings")
    r = e.rank
    c1 = l.chern(1)
    total = e.ring.zero()
    power = e.ring.one()
    parts = e.total_chern.components()
    for i in range(r, -1, -1):
        if i in parts:
            total = total + parts[i] * power
        power = power * c1
    return total


def pullback(e: BundleExpr, target: RingPresentation, images) -> BundleExpr:
    """Pull a bundle back along the ring map given by generator images."""
    return BundleExpr(e.rank, e.total_chern.substitute(target, images), name=e.name)


_RINGS: dict = {}


def _completion_ring(base: RingPresentation, divisor: str, rank: int, name: str) -> RingPresentation:
    # shared instances keep the ring's product memo warm across calls
    key = (base, divisor, rank)
    ring = _RINGS.get(key)
    if ring is None:
        ring = _RINGS[key] = RingPresentation(
            base.generators + ((divisor, 1, None),),
            base.top_dim + rank,
            base.point_class + (rank,),
            base.degree_normalization,
            name=name,
        )
    return ring


class ProjectiveCompletion:
    """``P(A + O)`` over a base ring, with ``D`` the divisor at infinity.

    The ring is the base ring with one extra degree-1 generator (default ``D``)
    and top dimension ``base.top_dim + rank A``.  Only the pushforward to the
    base is modeled: ``D^(m+i) * x  ->  s_i(A) * x`` and lower powers of ``D``
    push forward to zero.
    """

    def __init__(self, a: BundleExpr, divisor: str = "D", name: str = ""):
        base = a.ring
        if divisor in base.names:
            raise BundleError(f"divisor name {divisor!r} clashes with a base generator")
        self.base = base
        self.bundle = a
        self.divisor = divisor
        self.fiber_dim = a.rank
        self.ring = _completion_ring(base, divisor, a.rank, name or f"P({a.name or 'A'} + O)")
        s = total_segre(a)
        self._segre = [s.component(i) for i in range(base.top_dim + 1)]

    def pull(self, x: GradedClass) -> GradedClass:
        if x.ring != self.base:
            raise RingMismatchError("class is not over the base ring")
        return GradedClass(self.ring, {m + (0,): c for m, c in x.terms.items()})

    def pull_bundle(self, e: BundleExpr) -> BundleExpr:
        return BundleExpr(e.rank, self.pull(e.total_chern), name=e.name)

    @property
    def D(self) -> GradedClass:
        return self.ring.gen(self.divisor)

    def push(self, p: GradedClass) -> GradedClass:
        if p.ring != self.ring:
            raise RingMismatchError("class is not over the projective completion")
        out = self.base.zero()
        m = self.fiber_dim
        for mono, c in p.terms.items():
            j = mono[-1]
            i = j - m
            if i < 0 or i >= len(self._segre):
                continue
            x = GradedClass(self.base, {mono[:-1]: c})
            out = out + x * self._segre[i]
        return out

    def degree(self, p: GradedClass):
        return self.push(p).degree()


def pushforward_proj(p: GradedClass, a: BundleExpr, divisor: str = "D") -> GradedClass:
    """Push a class on ``P(A + O)`` down to the base of ``A``.

    ``p.ring`` must be the base generators followed by ``divisor``.
    """
    base = a.ring
    if p.ring.names != base.names + (divisor,):
        raise RingMismatchError(
            f"expected generators {base.names + (divisor,)}, got {p.ring.names}"
        )
    proj = ProjectiveCompletion(a, divisor)
    return proj.push(GradedClass(proj.ring, p.terms))
