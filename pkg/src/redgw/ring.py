"""Truncated graded-commutative rings with exact rational coefficients.

A :class:`RingPresentation` lists generators (name, degree, nilpotency order)
and a top dimension; every monomial of degree above ``top_dim`` is zero.  A
:class:`GradedClass` is a sparse map from exponent tuples to ``Fraction``.
All generators are even, so multiplication is commutative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

try:  # exact rationals; gmpy2 is a drop-in speedup over fractions.Fraction
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

Monomial = Tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when two classes from different rings are combined."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    nilpotency: Optional[int] = None  # smallest e with name**e == 0

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise ValueError(f"bad generator name {self.name!r}")
        if self.degree < 1:
            raise ValueError(f"generator {self.name} must have degree >= 1")
        if self.nilpotency is not None and self.nilpotency < 1:
            raise ValueError(f"nilpotency order of {self.name} must be positive")


@dataclass(frozen=True)
class RingPresentation:
    """Generators, truncation degree and the integration data of a small Chow ring."""

    generators: Tuple[Generator, ...]
    top_dim: int
    point_class: Monomial = ()
    degree_normalization: Fraction = Fraction(1)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_degrees", tuple(g.degree for g in gens))
        object.__setattr__(self, "_nil", tuple(g.nilpotency or 0 for g in gens))
        # memo tables; not dataclass fields, so equality and hashing ignore them
        object.__setattr__(self, "_deg_memo", {})
        object.__setattr__(self, "_prod_memo", {})
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.top_dim < 0:
            raise ValueError("top_dim must be non-negative")
        point = tuple(self.point_class) or (0,) * len(gens)
        if len(point) != len(gens):
            raise ValueError("point_class must have one exponent per generator")
        object.__setattr__(self, "point_class", point)
        object.__setattr__(self, "degree_normalization", Fraction(self.degree_normalization))
        if self.monomial_degree(point) != self.top_dim:
            raise ValueError(
                f"point class has degree {self.monomial_degree(point)}, expected top_dim {self.top_dim}"
            )
        if self.reduce_monomial(point) is None:
            raise ValueError("point class is zero in this ring")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"ring has no generator {name!r}") from None

    def monomial_degree(self, mono: Monomial) -> int:
        memo = self._deg_memo
        deg = memo.get(mono)
        if deg is None:
            deg = memo[mono] = sum(e * g for e, g in zip(mono, self._degrees))
        return deg

    def product(self, m1: Monomial, m2: Monomial) -> Optional[Monomial]:
        """Reduced product of two normal-form monomials, or ``None``."""
        key = (m1, m2)
        memo = self._prod_memo
        if key in memo:
            return memo[key]
        red = memo[key] = self.reduce_monomial(tuple(a + b for a, b in zip(m1, m2)))
        return red

    def reduce_monomial(self, mono: Monomial) -> Optional[Monomial]:
        """Normal form of a monomial, or ``None`` if it vanishes."""
        total = 0
        for e, g, nil in zip(mono, self._degrees, self._nil):
            if e < 0:
                raise ValueError("negative exponent")
            if nil and e >= nil:
                return None
            total += e * g
        if total > self.top_dim:
            return None
        return tuple(mono)

    # constructors -----------------------------------------------------

    def zero(self) -> "GradedClass":
        return GradedClass._raw(self, {})

    def one(self) -> "GradedClass":
        return self.scalar(1)

    def scalar(self, c) -> "GradedClass":
        c = _as_fraction(c)
        return GradedClass._raw(self, {(0,) * len(self.generators): c} if c else {})

    def gen(self, name: str) -> "GradedClass":
        mono = [0] * len(self.generators)
        mono[self.index(name)] = 1
        return GradedClass(self, {tuple(mono): 1})

    def gens(self) -> Tuple["GradedClass", ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, **exponents: int) -> "GradedClass":
        mono = [0] * len(self.generators)
        for name, e in exponents.items():
            mono[self.index(name)] = e
        return GradedClass(self, {tuple(mono): 1})

    def point(self) -> "GradedClass":
        return GradedClass(self, {self.point_class: 1})

    def parse(self, text: str) -> "GradedClass":
        return parse_class(self, text)

    def __str__(self):
        gens = ", ".join(
            f"{g.name}:{g.degree}" + (f"^{g.nilpotency}=0" if g.nilpotency else "")
            for g in self.generators
        )
        return f"{self.name or 'Ring'}[{gens}] (top_dim={self.top_dim})"


_QTYPE = type(Q(0))


def _as_fraction(c):
    """Coerce to the internal exact rational type; floats are rejected."""
    if type(c) is _QTYPE:
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, (int, Rational, str)) or type(c).__name__ in ("mpz", "mpq"):
        return Q(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class GradedClass:
    """An element of a :class:`RingPresentation`, stored in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingPresentation, terms: Mapping[Monomial, object] = ()):
        self.ring = ring
        normal: Dict[Monomial, Fraction] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, c in items:
            red = ring.reduce_monomial(tuple(mono))
            if red is None:
                continue
            normal[red] = normal.get(red, 0) + _as_fraction(c)
        self.terms: Dict[Monomial, Fraction] = {m: c for m, c in normal.items() if c != 0}

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine classes of {self.ring} and {other.ring}")
            return other
        return self.ring.scalar(_as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return GradedClass._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            c = _as_fraction(other)
            if c == 0:
                return self.ring.zero()
            return GradedClass._raw(self.ring, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        product = self.ring.product
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                red = product(m1, m2)
                if red is None:
                    continue
                terms[red] = terms.get(red, 0) + c1 * c2
        return GradedClass._raw(self.ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; classes have no general inverse here
        if isinstance(other, GradedClass):
            raise TypeError("division by a class is not supported; use bundles.total_segre")
        return self * (1 / _as_fraction(other))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.scalar(_as_fraction(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # graded structure -------------------------------------------------

    def component(self, k: int) -> "GradedClass":
        """Homogeneous part of degree ``k``."""
        deg = self.ring.monomial_degree
        return GradedClass._raw(self.ring, {m: c for m, c in self.terms.items() if deg(m) == k})

    def components(self) -> Dict[int, "GradedClass"]:
        out: Dict[int, GradedClass] = {}
        for k in sorted({self.ring.monomial_degree(m) for m in self.terms}):
            out[k] = self.component(k)
        return out

    def constant_term(self) -> Fraction:
        return to_fraction(self.terms.get((0,) * len(self.ring.generators), Q(0)))

    def coefficient(self, mono) -> Fraction:
        if isinstance(mono, GradedClass):
            (mono,) = mono.terms
        return to_fraction(self.terms.get(tuple(mono), Q(0)))

    def max_degree(self) -> int:
        return max((self.ring.monomial_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.ring.monomial_degree(m) for m in self.terms}) <= 1

    def degree(self) -> Fraction:
        """Integrate: coefficient of the point class times the normalization."""
        return self.coefficient(self.ring.point_class) * self.ring.degree_normalization

    def substitute(self, target: RingPresentation, images: Mapping[str, "GradedClass"]) -> "GradedClass":
        """Ring map sending each generator to ``images[name]`` (missing names go to zero)."""
        out = target.zero()
        gens = [images.get(n, target.zero()) for n in self.ring.names]
        for mono, c in self.terms.items():
            term = target.scalar(c)
            for g, e in zip(gens, mono):
                if e:
                    term = term * g ** e
                    if not term:
                        break
            out = out + term
        return out

    # text form --------------------------------------------------------

    def to_text(self) -> str:
        return format_class(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GradedClass({self.to_text()!r})"


def _monomial_key(ring: RingPresentation, mono: Monomial):
    # total degree first, then reverse-lex on exponents for a stable print order
    return (ring.monomial_degree(mono), tuple(-e for e in mono))


def _format_rational(c) -> str:
    c = to_fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_class(x: GradedClass) -> str:
    """Canonical ``coef * g1^e1 * g2^e2 + ...`` text; zero prints as ``0``."""
    if not x.terms:
        return "0"
    parts = []
    for mono in sorted(x.terms, key=lambda m: _monomial_key(x.ring, m)):
        c = x.terms[mono]
        factors = [_format_rational(c)]
        for name, e in zip(x.ring.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append(" * ".join(factors))
    return " + ".join(parts)


_TERM_RE = re.compile(r"\s*\+\s*")


def parse_class(ring: RingPresentation, text: str) -> GradedClass:
    """Inverse of :func:`format_class` (accepts any ``+``-separated products)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    out: Dict[Monomial, Fraction] = {}
    for chunk in _TERM_RE.split(text):
        mono = [0] * len(ring.generators)
        coef = Q(1)
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {chunk!r}")
            if re.fullmatch(r"-?\d+(/\d+)?", factor):
                coef *= Q(factor)
                continue
            name, _, exp = factor.partition("^")
            mono[ring.index(name.strip())] += int(exp) if exp else 1
        out[tuple(mono)] = out.get(tuple(mono), 0) + coef
    return GradedClass(ring, out)


def simple_ring(
    generators: Iterable[Sequence],
    top_dim: int,
    point: Optional[Mapping[str, int]] = None,
    normalization=1,
    name: str = "",
) -> RingPresentation:
    """Build a presentation from ``(name, degree[, nilpotency])`` tuples."""
    gens = tuple(Generator(*s) for s in generators)
    if point is None:
        point_class: Monomial = ()
    else:
        names = [g.name for g in gens]
        point_class = tuple(point.get(n, 0) for n in names)
    return RingPresentation(gens, top_dim, point_class, Fraction(normalization), name=name)
