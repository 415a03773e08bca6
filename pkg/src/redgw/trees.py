"""Terminally weighted rooted trees with legs, and the advancing moves.

A tree records, for every non-root vertex, its parent; every vertex has a
non-negative weight and a set of legs (marked points, numbered from 1).
The trunk is the maximal chain of only-children starting at the root; its
last vertex is the branch vertex.  Advancing at a child ``c`` of the branch
vertex either absorbs all siblings into ``c`` (``c`` terminal) or hangs the
siblings below ``c`` (``c`` not terminal).  Repeating until the tree is a
path gives an advancing sequence, and each sequence assigns strata (multisets
of ``(degree, legs)`` pairs) to the coordinates of the final path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple


class TreeError(ValueError):
    pass


Pair = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True, order=True)
class Stratum:
    """A multiset ``{(d_1, L_1), ..., (d_l, L_l)}``, kept sorted."""

    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        norm = tuple(sorted((int(d), tuple(sorted(legs))) for d, legs in self.pairs))
        seen: set = set()
        for d, legs in norm:
            if d < 0:
                raise TreeError(f"negative degree in stratum {norm}")
            if seen & set(legs):
                raise TreeError(f"leg sets overlap in stratum {norm}")
            seen |= set(legs)
        object.__setattr__(self, "pairs", norm)

    @classmethod
    def of(cls, *pairs) -> "Stratum":
        return cls(tuple(pairs))

    @property
    def degree(self) -> int:
        return sum(d for d, _ in self.pairs)

    @property
    def length(self) -> int:
        return len(self.pairs)

    @property
    def legs(self) -> FrozenSet[int]:
        return frozenset(l for _, legs in self.pairs for l in legs)

    def to_json(self) -> list:
        return [[d, list(legs)] for d, legs in self.pairs]

    @classmethod
    def from_json(cls, data) -> "Stratum":
        return cls(tuple((d, tuple(legs)) for d, legs in data))

    def __str__(self):
        inner = ", ".join(f"({d}, {{{', '.join(map(str, legs))}}})" for d, legs in self.pairs)
        return "{" + inner + "}"


@dataclass(frozen=True)
class WeightedTree:
    root: str
    parent: Mapping[str, str]
    weight: Mapping[str, int]
    legs: Mapping[str, FrozenSet[int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "parent", dict(self.parent))
        object.__setattr__(self, "weight", {v: int(w) for v, w in self.weight.items()})
        object.__setattr__(
            self, "legs", {v: frozenset(ls) for v, ls in self.legs.items() if ls}
        )

    # construction -----------------------------------------------------

    @classmethod
    def build(cls, root: str, edges: Iterable[Tuple[str, str]], weight=None, legs=None,
              validate: bool = True) -> "WeightedTree":
        """``edges`` are ``(parent, child)`` pairs; unspecified weights are 0."""
        parent = {child: par for par, child in edges}
        verts = {root} | set(parent) | set(parent.values())
        w = {v: 0 for v in verts}
        w.update(weight or {})
        t = cls(root, parent, w, legs or {})
        if validate:
            t.validate()
        return t

    @classmethod
    def path(cls, names: Sequence[str], d: int, legs=None) -> "WeightedTree":
        edges = list(zip(names, names[1:]))
        return cls.build(names[0], edges, {names[-1]: d}, legs)

    # basic queries ----------------------------------------------------

    @property
    def vertices(self) -> List[str]:
        return sorted(self.weight)

    def children(self, v: str) -> List[str]:
        return sorted(c for c, p in self.parent.items() if p == v)

    def is_terminal(self, v: str) -> bool:
        return not any(p == v for p in self.parent.values())

    def legs_at(self, v: str) -> FrozenSet[int]:
        return self.legs.get(v, frozenset())

    def descendants(self, v: str) -> List[str]:
        out, stack = [], self.children(v)
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children(u))
        return sorted(out)

    def subtree(self, v: str) -> List[str]:
        return [v] + self.descendants(v)

    def subtree_weight(self, v: str) -> int:
        return sum(self.weight[u] for u in self.subtree(v))

    def subtree_legs(self, v: str) -> FrozenSet[int]:
        return frozenset().union(*(self.legs_at(u) for u in self.subtree(v)))

    @property
    def total_weight(self) -> int:
        return sum(self.weight.values())

    @property
    def all_legs(self) -> FrozenSet[int]:
        return frozenset().union(*self.legs.values()) if self.legs else frozenset()

    @property
    def k(self) -> int:
        return len(self.all_legs)

    def validate(self) -> None:
        verts = set(self.weight)
        if self.root not in verts:
            raise TreeError(f"root {self.root!r} has no weight entry")
        if self.root in self.parent:
            raise TreeError("root must not have a parent")
        if set(self.parent) != verts - {self.root}:
            raise TreeError("every non-root vertex needs exactly one parent")
        for child, par in self.parent.items():
            if par not in verts:
                raise TreeError(f"parent {par!r} of {child!r} is not a vertex")
        for v in verts:
            seen = {v}
            u = v
            while u != self.root:
                u = self.parent[u]
                if u in seen:
                    raise TreeError(f"cycle through {u!r}")
                seen.add(u)
        for v in verts:
            if self.weight[v] < 0:
                raise TreeError(f"negative weight at {v!r}")
            if (self.weight[v] > 0) != self.is_terminal(v):
                raise TreeError(
                    f"not terminally weighted at {v!r}: weight {self.weight[v]}, "
                    f"terminal={self.is_terminal(v)}"
                )
        for v in self.legs:
            if v not in verts:
                raise TreeError(f"legs attached to unknown vertex {v!r}")
        count = sum(len(ls) for ls in self.legs.values())
        legs = self.all_legs
        if count != len(legs):
            raise TreeError("leg sets are not disjoint")
        if legs != frozenset(range(1, len(legs) + 1)):
            raise TreeError(f"legs must be 1..k, got {sorted(legs)}")

    # structure --------------------------------------------------------

    def trunk(self) -> List[str]:
        """``[root, v_1, ..., v_r]``; the last entry is the branch vertex."""
        path = [self.root]
        kids = self.children(self.root)
        while len(kids) == 1:
            path.append(kids[0])
            kids = self.children(kids[0])
        return path

    def branch_vertex(self) -> str:
        return self.trunk()[-1]

    def is_path(self) -> bool:
        return self.is_terminal(self.branch_vertex())

    def branches(self) -> List[str]:
        """Tops of the branches hanging off the branch vertex."""
        return self.children(self.branch_vertex())

    def pairs_below(self, v: str) -> Stratum:
        """Each child subtree of ``v`` collapsed to ``(total weight, legs)``."""
        return Stratum(tuple(
            (self.subtree_weight(c), tuple(sorted(self.subtree_legs(c))))
            for c in self.children(v)
        ))

    # rewriting --------------------------------------------------------

    def _replace(self, parent=None, weight=None, legs=None) -> "WeightedTree":
        return WeightedTree(
            self.root,
            self.parent if parent is None else parent,
            self.weight if weight is None else weight,
            self.legs if legs is None else legs,
        )

    def prune(self) -> "WeightedTree":
        """Drop weight-0 terminal vertices (other than the root), moving their legs up."""
        t = self
        while True:
            dead = [v for v in t.vertices
                    if v != t.root and t.weight[v] == 0 and t.is_terminal(v)]
            if not dead:
                return t
            v = dead[0]
            par = t.parent[v]
            parent = {c: p for c, p in t.parent.items() if c != v}
            weight = {u: w for u, w in t.weight.items() if u != v}
            legs = dict(t.legs)
            moved = legs.pop(v, frozenset())
            if moved:
                legs[par] = legs.get(par, frozenset()) | moved
            t = t._replace(parent, weight, legs)

    def advance(self, v: str) -> "WeightedTree":
        """Advance at ``v``, a direct descendant of the branch vertex."""
        if v not in self.parent:
            raise TreeError(f"cannot advance at the root {v!r}")
        b = self.parent[v]
        siblings = [c for c in self.children(b) if c != v]
        if not siblings:
            return self
        if b != self.branch_vertex():
            raise TreeError(f"{v!r} is not a direct descendant of the branch vertex "
                            f"{self.branch_vertex()!r}")
        parent = dict(self.parent)
        weight = dict(self.weight)
        legs = dict(self.legs)
        if self.is_terminal(v):
            killed = [u for s in siblings for u in self.subtree(s)]
            gained_w = sum(self.weight[u] for u in killed)
            gained_l = frozenset().union(*(self.legs_at(u) for u in killed))
            for u in killed:
                parent.pop(u)
                weight.pop(u)
                legs.pop(u, None)
            weight[v] += gained_w
            if gained_l:
                legs[v] = legs.get(v, frozenset()) | gained_l
        else:
            for s in siblings:
                parent[s] = v
        return self._replace(parent, weight, legs).prune()

    # serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "vertices": [
                {
                    "id": v,
                    "parent": self.parent.get(v),
                    "weight": self.weight[v],
                    "legs": sorted(self.legs_at(v)),
                }
                for v in self.vertices
            ],
        }

    @classmethod
    def from_json(cls, data, validate: bool = True) -> "WeightedTree":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            root = data["root"]
            verts = data["vertices"]
            parent = {v["id"]: v["parent"] for v in verts if v.get("parent") is not None}
            weight = {v["id"]: v.get("weight", 0) for v in verts}
            legs = {v["id"]: v.get("legs", []) for v in verts}
        except (KeyError, TypeError) as exc:
            raise TreeError(f"malformed tree JSON: {exc}") from None
        t = cls(root, parent, weight, legs)
        if validate:
            t.validate()
        return t

    def shape(self) -> tuple:
        """Canonical nested form ``(id, weight, legs, children...)`` for comparisons."""
        def rec(v):
            return (v, self.weight[v], tuple(sorted(self.legs_at(v))),
                    tuple(rec(c) for c in self.children(v)))
        return rec(self.root)

    def __str__(self):
        lines: List[str] = []

        def rec(v, depth):
            bits = [v]
            if self.weight[v]:
                bits.append(f"w={self.weight[v]}")
            if self.legs_at(v):
                bits.append("legs=" + ",".join(map(str, sorted(self.legs_at(v)))))
            lines.append("  " * depth + " ".join(bits))
            for c in self.children(v):
                rec(c, depth + 1)

        rec(self.root, 0)
        return "\n".join(lines)


@dataclass(frozen=True)
class AdvancingSequence:
    """A maximal advancing sequence and the path tree it ends in."""

    steps: Tuple[str, ...]
    final: WeightedTree

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


def advancing_sequences(t: WeightedTree) -> List[AdvancingSequence]:
    """All maximal advancing sequences, in lexicographic order of choices."""
    out: List[AdvancingSequence] = []

    def rec(cur: WeightedTree, steps: Tuple[str, ...]):
        if cur.is_path():
            out.append(AdvancingSequence(steps, cur))
            return
        for c in cur.branches():
            rec(cur.advance(c), steps + (c,))

    rec(t, ())
    return out


def run_sequence(t: WeightedTree, steps: Sequence[str]) -> List[WeightedTree]:
    """The trees ``Gamma^[0], ..., Gamma^[q]`` visited by ``steps``."""
    trees = [t]
    for v in steps:
        cur = trees[-1]
        if cur.is_path():
            raise TreeError("sequence continues past a path tree")
        if v not in cur.branches():
            raise TreeError(f"{v!r} is not a direct descendant of the branch vertex "
                            f"{cur.branch_vertex()!r}")
        trees.append(cur.advance(v))
    if not trees[-1].is_path():
        raise TreeError("sequence is not maximal: final tree is not a path")
    return trees


def assign_strata(t: WeightedTree, seq) -> Dict[str, Stratum]:
    """Stratum attached to each non-root vertex ``v_1..v_r, a_1..a_q`` of the final path."""
    steps = tuple(seq.steps if isinstance(seq, AdvancingSequence) else seq)
    trees = run_sequence(t, steps)
    final = trees[-1]
    d = t.total_weight
    path = final.trunk()
    trunk = t.trunk()[1:]
    out: Dict[str, Stratum] = {}
    for i, v in enumerate(trunk):
        # legs sitting on v_i or further down the final path
        below = frozenset().union(*(final.legs_at(u) for u in path[i + 1:]))
        out[v] = Stratum(((d, tuple(sorted(below))),))
    for j, a in enumerate(steps):
        prev = trees[j]
        out[a] = prev.pairs_below(prev.branch_vertex())
    return out


def enumerate_strata(t: WeightedTree) -> List[Stratum]:
    """The set of strata reached from ``t`` over all advancing sequences, sorted."""
    found = set()
    for seq in advancing_sequences(t):
        found.update(assign_strata(t, seq).values())
    return sorted(found)


enumerate_S = enumerate_strata


def all_strata(d: int, k: int) -> List[Stratum]:
    """Every multiset of ``(d_i, L_i)`` with positive ``d_i`` summing to ``d``
    and disjoint ``L_i`` inside ``{1..k}`` (not necessarily covering it)."""
    legs = list(range(1, k + 1))
    found = set()

    # label each leg with a part index 0..l or "unused" (-1)
    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in partitions(n - p, p):
                yield (p,) + rest

    for parts in partitions(d, d):
        l = len(parts)
        for labels in product(range(-1, l), repeat=len(legs)):
            pairs = tuple(
                (parts[i], tuple(leg for leg, lab in zip(legs, labels) if lab == i))
                for i in range(l)
            )
            found.add(Stratum(pairs))
    return sorted(found)


def random_tree(rng, max_vertices: int = 8, max_weight: int = 3, k: int = 0) -> WeightedTree:
    """A random valid tree: grow a shape, weight the terminals, scatter legs ``1..k``.

    ``rng`` is a :class:`random.Random`.
    """
    size = rng.randint(2, max(2, max_vertices))
    names = ["*"] + [f"v{i}" for i in range(1, size)]
    edges = [(names[rng.randrange(i)], names[i]) for i in range(1, size)]
    parents = {p for p, _ in edges}
    weight = {v: rng.randint(1, max_weight) for v in names if v not in parents}
    legs: Dict[str, set] = {}
    for leg in range(1, k + 1):
        legs.setdefault(rng.choice(names), set()).add(leg)
    return WeightedTree.build("*", edges, weight, legs)
