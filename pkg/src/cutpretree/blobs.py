"""Inseparability, maximal inseparable sets, and the element set of the pretree."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .cuts import CutSystem
from .errors import ResourceError
from .space import Vertex, VertexSet, canonical_order, separates_set, vertex_key

DEFAULT_ELEMENT_LIMIT = 10_000


class Kind(enum.Enum):
    CUT = "cut"
    BLOB = "blob"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PretreeElement:
    kind: Kind
    support: VertexSet

    @property
    def is_cut(self) -> bool:
        return self.kind is Kind.CUT

    def label(self) -> str:
        return f"{self.kind}:{self.support.label()}"

    def __repr__(self):
        return f"{self.kind.value.capitalize()}{self.support!r}"


def Cut(support) -> PretreeElement:
    return PretreeElement(Kind.CUT, VertexSet(support))


def Blob(support) -> PretreeElement:
    return PretreeElement(Kind.BLOB, VertexSet(support))


def inseparable(cs: CutSystem, x: Vertex, y: Vertex) -> bool:
    """No cut has ``x`` and ``y`` outside it and in different components."""
    cs.space.check_subset([x, y])
    if x == y:
        return True
    for a in cs.cuts:
        labels = cs.space.component_labels(a)
        if x in labels and y in labels and labels[x] != labels[y]:
            return False
    return True


def is_inseparable_set(cs: CutSystem, p) -> bool:
    p = cs.space.check_subset(p)
    return not any(separates_set(cs.space, a, p) for a in cs.cuts)


def inseparability_graph(cs: CutSystem) -> dict:
    """Adjacency of the (irreflexive part of the) inseparability relation."""
    verts = cs.space.vertices
    adj = {v: set(verts) - {v} for v in verts}
    for a in cs.cuts:
        labels = cs.space.component_labels(a)
        for x, y in combinations(labels, 2):
            if labels[x] != labels[y]:
                adj[x].discard(y)
                adj[y].discard(x)
    return adj


def _maximal_cliques(adj: dict, limit: int):
    """Bron-Kerbosch with Tomita pivoting."""
    out = []
    stack = [(set(), set(adj), set())]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                out.append(r)
                if len(out) > limit:
                    raise ResourceError(f"more than {limit} maximal inseparable sets")
            continue
        pivot = max(p | x, key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot], key=vertex_key):
            stack.append((r | {v}, p & adj[v], x & adj[v]))
            p = p - {v}
            x = x | {v}
    return out


def maximal_inseparable_sets(cs: CutSystem, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[VertexSet]:
    cliques = _maximal_cliques(inseparability_graph(cs), limit)
    return canonical_order(VertexSet(c) for c in cliques)


def pretree_elements(cs: CutSystem, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[PretreeElement]:
    """Cuts first (canonical order), then blobs (canonical order).

    A maximal inseparable set that coincides with a cut appears once, as the cut.
    """
    cuts = set(cs.cuts)
    blobs = [s for s in maximal_inseparable_sets(cs, limit) if s not in cuts]
    elements = [Cut(c) for c in cs.cuts] + [Blob(b) for b in blobs]
    if len(elements) > limit:
        raise ResourceError(f"{len(elements)} pretree elements exceeds limit {limit}")
    return elements


def quotient_blobs(cs: CutSystem) -> list[VertexSet]:
    """Classes of "no cut separates x from y" on the vertices outside every cut."""
    covered = set().union(*cs.cuts) if cs.cuts else set()
    rest = [v for v in cs.space.vertices if v not in covered]
    classes: list[list] = []
    for v in rest:
        for cls in classes:
            if inseparable(cs, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return canonical_order(VertexSet(c) for c in classes)
