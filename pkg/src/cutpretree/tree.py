"""Simplicial tree realization of a finite complete median pretree.

Nodes are the pretree elements and edges join adjacent pairs (empty open
interval).  Every edge has unit length.  Exports are byte-deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .blobs import Kind, PretreeElement
from .errors import ConsistencyError, InputError
from .pretree import Pretree, interval
from .space import VertexSet

EXPORT_FORMATS = ("dot", "json")


@dataclass(frozen=True)
class SimplicialTree:
    nodes: tuple
    edges: tuple  # sorted (i, j) index pairs with i < j

    def __post_init__(self):
        adj = {i: [] for i in range(len(self.nodes))}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_adj", {i: sorted(n) for i, n in adj.items()})

    def neighbors(self, i: int) -> list[int]:
        return self._adj[i]

    def degree(self, node: PretreeElement) -> int:
        return len(self._adj[self.nodes.index(node)])

    def edge_pairs(self) -> list[tuple]:
        return [(self.nodes[i], self.nodes[j]) for i, j in self.edges]


def _check_tree(t: SimplicialTree):
    n = len(t.nodes)
    if len(t.edges) != n - 1:
        raise ConsistencyError(f"{len(t.edges)} edges on {n} nodes: not a tree")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in t.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise ConsistencyError("adjacency graph is disconnected")


def realize(p: Pretree, verify: bool = True) -> SimplicialTree:
    """Build the tree on adjacent pairs; with ``verify``, check path = interval for every pair."""
    n = len(p.elements)
    edges = tuple((i, j) for i, j in combinations(range(n), 2) if p.open_mask(i, j) == 0)
    t = SimplicialTree(p.elements, edges)
    if n:
        _check_tree(t)
    if verify:
        for a, b in combinations(p.elements, 2):
            if tree_path(t, a, b) != list(interval(p, a, b, "closed").members):
                raise ConsistencyError(f"tree path from {a!r} to {b!r} differs from the interval")
    return t


def tree_path(t: SimplicialTree, a: PretreeElement, b: PretreeElement) -> list[PretreeElement]:
    try:
        ia, ib = t.nodes.index(a), t.nodes.index(b)
    except ValueError:
        raise InputError("endpoint is not a tree node") from None
    parent = {ia: None}
    queue = deque([ia])
    while queue and ib not in parent:
        u = queue.popleft()
        for w in t.neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [ib]
    while path[-1] != ia:
        path.append(parent[path[-1]])
    return [t.nodes[i] for i in reversed(path)]


def to_dict(t: SimplicialTree) -> dict:
    return {
        "nodes": [{"kind": e.kind.value, "support": [str(v) for v in e.support.members]}
                  for e in t.nodes],
        "edges": [[i, j] for i, j in t.edges],
    }


def from_dict(d: dict) -> SimplicialTree:
    nodes = tuple(PretreeElement(Kind(nd["kind"]), VertexSet(nd["support"])) for nd in d["nodes"])
    edges = tuple(sorted((min(i, j), max(i, j)) for i, j in d["edges"]))
    return SimplicialTree(nodes, edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(t: SimplicialTree, fmt: str = "dot") -> str:
    if fmt == "json":
        return json.dumps(to_dict(t), indent=2) + "\n"
    if fmt == "dot":
        lines = ["graph pretree {"]
        for i, e in enumerate(t.nodes):
            shape = "box" if e.is_cut else "ellipse"
            lines.append(f"  n{i} [label={_dot_quote(e.label())}, shape={shape}];")
        for i, j in t.edges:
            lines.append(f"  n{i} -- n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown export format {fmt!r}")
