"""Lines on complete intersections, as Euler numbers over ``G(2, n+1)``.

The number of lines on ``Q = {f_1 = ... = f_m = 0}`` (when finite) is
``int_G prod_i e(Sym^{w_i} S^v)``.  Two independent evaluations are provided:

* ``chern_roots``: expand in the Chern roots ``x1, x2`` of ``S^v`` and
  integrate with ``int_G phi = -1/2 [x1^(N-1) x2^(N-1)] phi (x1 - x2)^2``;
* ``schubert``: rewrite the integrand in ``sigma_1 = x1 + x2`` and
  ``sigma_11 = x1 x2`` and multiply in the Schubert basis with Pieri's rule.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Dict, Sequence, Tuple

# polynomials in two variables: {(i, j): coefficient}
Poly2 = Dict[Tuple[int, int], int]


class DimensionMismatch(ValueError):
    def __init__(self, n: int, degrees: Sequence[int]):
        self.expected = 2 * (n - 1)
        self.actual = sum(w + 1 for w in degrees)
        super().__init__(
            f"integrand has degree {self.actual} but dim G(2,{n + 1}) = {self.expected}; "
            "the line count is not a finite number"
        )


def _mul(p: Poly2, q: Poly2) -> Poly2:
    out: Poly2 = defaultdict(int)
    for (a, b), c in p.items():
        for (e, f), g in q.items():
            out[a + e, b + f] += c * g
    return {k: v for k, v in out.items() if v}


def euler_sym_roots(w: int) -> Poly2:
    """``e(Sym^w S^v) = prod_{j=0..w} ((w-j) x1 + j x2)``."""
    out: Poly2 = {(0, 0): 1}
    for j in range(w + 1):
        lin = {k: v for k, v in {(1, 0): w - j, (0, 1): j}.items() if v}
        out = _mul(out, lin)
    return out


def integrate_roots(phi: Poly2, n: int) -> Fraction:
    """Integral over ``G(2, n+1)`` of a symmetric polynomial in the Chern roots."""
    N = n + 1
    vdm = {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    top = _mul(phi, vdm).get((N - 1, N - 1), 0)
    return Fraction(-top, 2)


def line_count_roots(n: int, degrees: Sequence[int]) -> Fraction:
    phi: Poly2 = {(0, 0): 1}
    for w in degrees:
        phi = _mul(phi, euler_sym_roots(w))
    return integrate_roots(phi, n)


# Schubert basis ------------------------------------------------------------

Partition = Tuple[int, int]  # (a, b) with N-2 >= a >= b >= 0


class SchubertRing:
    """``A*(G(2, N))`` in the basis ``sigma_{a,b}``."""

    def __init__(self, N: int):
        if N < 2:
            raise ValueError("need N >= 2")
        self.N = N
        self.width = N - 2

    def sigma1(self, x: Dict[Partition, int]) -> Dict[Partition, int]:
        # Pieri: add one box in either row
        out: Dict[Partition, int] = defaultdict(int)
        for (a, b), c in x.items():
            if a + 1 <= self.width:
                out[a + 1, b] += c
            if b + 1 <= a:
                out[a, b + 1] += c
        return {k: v for k, v in out.items() if v}

    def sigma11(self, x: Dict[Partition, int]) -> Dict[Partition, int]:
        # one box in each row
        out: Dict[Partition, int] = defaultdict(int)
        for (a, b), c in x.items():
            if a + 1 <= self.width:
                out[a + 1, b + 1] += c
        return {k: v for k, v in out.items() if v}

    def integrate(self, x: Dict[Partition, int]) -> int:
        return x.get((self.width, self.width), 0)

    def evaluate(self, poly: Dict[Tuple[int, int], int]) -> int:
        """Integral of ``sum c * sigma1^i * sigma11^j``."""
        total = 0
        for (i, j), c in poly.items():
            x = {(0, 0): 1}
            for _ in range(j):
                x = self.sigma11(x)
            for _ in range(i):
                x = self.sigma1(x)
            total += c * self.integrate(x)
        return total


def euler_sym_elementary(w: int) -> Dict[Tuple[int, int], int]:
    """``e(Sym^w S^v)`` as a polynomial in ``(e1, e2)``.

    Factors ``j`` and ``w - j`` pair to ``j(w-j) e1^2 + (w-2j)^2 e2``; for even
    ``w`` the middle factor is ``(w/2) e1``.
    """
    out = {(0, 0): 1}
    for j in range((w + 1) // 2):
        quad = {k: v for k, v in {(2, 0): j * (w - j), (0, 1): (w - 2 * j) ** 2}.items() if v}
        out = _mul(out, quad)
    if w % 2 == 0:
        out = _mul(out, {(1, 0): w // 2})
    return out


def line_count_schubert(n: int, degrees: Sequence[int]) -> int:
    poly = {(0, 0): 1}
    for w in degrees:
        poly = _mul(poly, euler_sym_elementary(w))
    return SchubertRing(n + 1).evaluate(poly)


def line_count(n: int, degrees: Sequence[int], check: bool = True) -> int:
    """Number of lines on a general complete intersection of the given degrees in ``P^n``."""
    degrees = [int(w) for w in degrees]
    if any(w < 1 for w in degrees):
        raise ValueError("degrees must be positive")
    if sum(w + 1 for w in degrees) != 2 * (n - 1):
        raise DimensionMismatch(n, degrees)
    value = line_count_schubert(n, degrees)
    if check:
        other = line_count_roots(n, degrees)
        if other != value:
            raise ArithmeticError(f"presentations disagree: Schubert {value}, roots {other}")
    return value


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def sigma1_power_degree(n: int, method: str = "schubert") -> Fraction:
    """``int_{G(2,n+1)} sigma_1^{2(n-1)}``."""
    e = 2 * (n - 1)
    if method == "schubert":
        return Fraction(SchubertRing(n + 1).evaluate({(e, 0): 1}))
    phi = {(i, e - i): comb(e, i) for i in range(e + 1)}
    return integrate_roots(phi, n)
