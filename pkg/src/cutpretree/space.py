"""Finite connected graphs standing in for a connected space.

A vertex subset plays the role of a closed set, and the connected components
of the graph with that subset deleted play the role of the quasicomponents of
its complement.  Every vertex set is closed here, so all the separation
predicates below are decidable by a breadth-first search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

from .errors import InputError, PreconditionError

Vertex = Hashable


def vertex_key(v: Vertex):
    # Group by type first so mixed int/str identifiers still sort.
    return (type(v).__name__, v)


class VertexSet(frozenset):
    """Immutable vertex subset with a canonical member ordering."""

    @property
    def members(self) -> tuple:
        return tuple(sorted(self, key=vertex_key))

    def sort_key(self):
        return (len(self), [vertex_key(v) for v in self.members])

    def label(self) -> str:
        return ",".join(str(v) for v in self.members)

    def __repr__(self) -> str:
        return "{" + self.label() + "}"


def vset(items: Iterable[Vertex] = ()) -> VertexSet:
    return items if isinstance(items, VertexSet) else VertexSet(items)


def canonical_order(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Sort vertex sets by their least member, then by full member list."""
    return sorted(sets, key=lambda s: [vertex_key(v) for v in s.members])


@dataclass(frozen=True, eq=False)
class Space:
    """A finite connected simple graph.

    Construct through :meth:`from_edges` (or the constructor with explicit
    ``vertices``) so that the invariants are checked once.
    """

    vertices: tuple
    edges: frozenset
    _adj: dict = field(init=False, repr=False)
    _cache: dict = field(init=False, repr=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices), key=vertex_key))
        if len(verts) != len(self.vertices):
            raise InputError("duplicate vertex identifiers")
        if len(verts) < 2:
            raise InputError("a space needs at least 2 vertices")
        adj: dict = {v: set() for v in verts}
        for e in self.edges:
            u, v = tuple(e) if len(e) == 2 else (next(iter(e)),) * 2
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            if u not in adj or v not in adj:
                raise InputError(f"edge {u!r}-{v!r} references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_cache", {})
        if len(self.components(VertexSet())) != 1:
            raise InputError("graph is not connected")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Optional[Iterable] = None) -> Space:
        seen = set()
        for u, v in edges:
            key = frozenset((u, v))
            if key in seen:
                raise InputError(f"duplicate edge {u!r}-{v!r}")
            seen.add(key)
        if vertices is None:
            vertices = {x for e in seen for x in e}
        return cls(tuple(vertices), frozenset(seen))

    def __eq__(self, other):
        if not isinstance(other, Space):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __len__(self):
        return len(self.vertices)

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def edge_list(self) -> list[tuple]:
        pairs = [tuple(sorted(e, key=vertex_key)) for e in self.edges]
        return sorted(pairs, key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))

    def check_subset(self, s: Iterable[Vertex]) -> VertexSet:
        s = vset(s)
        unknown = [v for v in s if v not in self._adj]
        if unknown:
            raise InputError(f"unknown vertices {unknown!r}")
        return s

    def components(self, removed: Iterable[Vertex] = ()) -> list[VertexSet]:
        """Connected components of the graph with ``removed`` deleted.

        Ordered by least vertex.
        """
        removed = self.check_subset(removed)
        hit = self._cache.get(removed)
        if hit is not None:
            return list(hit[0])
        comps = []
        seen = set(removed)
        for start in self.vertices:
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(VertexSet(comp))
        labels = {v: i for i, c in enumerate(comps) for v in c}
        self._cache[removed] = (tuple(comps), labels)
        return comps

    def component_labels(self, removed: Iterable[Vertex]) -> dict:
        """Map each vertex outside ``removed`` to the index of its component."""
        removed = self.check_subset(removed)
        if removed not in self._cache:
            self.components(removed)
        return self._cache[removed][1]


def separates(space: Space, a: Iterable[Vertex]) -> bool:
    return len(space.components(a)) >= 2


def separates_set(space: Space, a: Iterable[Vertex], p: Iterable[Vertex]) -> bool:
    """True iff two points of ``p`` outside ``a`` lie in different components."""
    labels = space.component_labels(a)
    p = space.check_subset(p)
    return len({labels[x] for x in p if x in labels}) >= 2


def separates_from(space: Space, a: Iterable[Vertex], b: Iterable[Vertex],
                   c: Iterable[Vertex]) -> bool:
    labels = space.component_labels(a)
    lb = {labels[x] for x in space.check_subset(b) if x in labels}
    lc = {labels[x] for x in space.check_subset(c) if x in labels}
    if not lb or not lc:
        return False
    return not (len(lb) == 1 and lb == lc)


@dataclass(frozen=True)
class Separation:
    """A split of ``V - removed`` into two nonempty sides with no edge across."""

    space: Space = field(repr=False, compare=False)
    removed: VertexSet
    side_u: VertexSet
    side_v: VertexSet

    def __post_init__(self):
        removed = self.space.check_subset(self.removed)
        u = self.space.check_subset(self.side_u)
        v = self.space.check_subset(self.side_v)
        object.__setattr__(self, "removed", removed)
        object.__setattr__(self, "side_u", u)
        object.__setattr__(self, "side_v", v)
        if not u or not v:
            raise PreconditionError("separation sides must be nonempty")
        if u & v:
            raise PreconditionError("separation sides overlap")
        if u | v != frozenset(self.space.vertices) - removed:
            raise PreconditionError("separation sides must cover V minus the removed set")
        for x in u:
            if self.space.neighbors(x) & v:
                raise PreconditionError("an edge crosses the separation")


def refine_separations(s1: Separation, s2: Separation) -> Separation:
    """Shrink the U-side to ``U1 & U2``, moving everything else to the V-side."""
    if s1.removed != s2.removed:
        raise PreconditionError("separations of different removed sets")
    u = s1.side_u & s2.side_u
    if not u:
        raise PreconditionError("U-sides are disjoint; refinement needs U1 & U2 nonempty")
    return Separation(s1.space, s1.removed, VertexSet(u), VertexSet(s1.side_v | s2.side_v))


def separation_between(space: Space, a: Iterable[Vertex], b: Iterable[Vertex],
                       c: Iterable[Vertex]) -> Optional[Separation]:
    """Canonical separation of ``V - a`` putting ``b - a`` on one side, ``c - a`` on the other.

    The U-side is the union of the components meeting ``b - a``; everything
    else goes to the V-side.  Returns None when no separation of that shape
    exists.
    """
    a = space.check_subset(a)
    if not separates_from(space, a, b, c):
        return None
    labels = space.component_labels(a)
    lb = {labels[x] for x in b if x not in a}
    lc = {labels[x] for x in c if x not in a}
    if lb & lc:
        return None
    comps = space.components(a)
    u = VertexSet(x for i in sorted(lb) for x in comps[i])
    v = VertexSet(frozenset(space.vertices) - a - u)
    return Separation(space, a, u, v)


def all_separations(space: Space, removed: Iterable[Vertex]) -> list[Separation]:
    """Every separation of ``V - removed``: one per nontrivial 2-colouring of components."""
    removed = space.check_subset(removed)
    comps = space.components(removed)
    out = []
    n = len(comps)
    for mask in range(1, 2 ** n - 1):
        u = VertexSet(x for i in range(n) if mask >> i & 1 for x in comps[i])
        v = VertexSet(x for i in range(n) if not mask >> i & 1 for x in comps[i])
        out.append(Separation(space, removed, u, v))
    return out


def components(space: Space, removed: Iterable[Vertex] = ()) -> list[VertexSet]:
    return space.components(removed)
