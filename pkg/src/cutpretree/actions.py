"""Graph automorphisms acting on the pretree and its tree."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .blobs import PretreeElement
from .cuts import CutSystem
from .errors import ConsistencyError, InputError
from .pretree import Pretree
from .space import Space, VertexSet
from .tree import SimplicialTree, realize

BRUTE_FORCE_MAX_VERTICES = 8


@dataclass(frozen=True)
class Automorphism:
    """A vertex permutation preserving the edge set and the cut family."""

    system: CutSystem = field(repr=False, compare=False)
    mapping: tuple  # sorted (vertex, image) pairs

    @classmethod
    def from_mapping(cls, system: CutSystem, mapping: Mapping) -> Automorphism:
        space = system.space
        verts = set(space.vertices)
        full = {v: mapping.get(v, v) for v in space.vertices}
        if set(full) != verts or set(full.values()) != verts:
            raise InputError("mapping is not a permutation of the vertices")
        if {frozenset(full[x] for x in e) for e in space.edges} != set(space.edges):
            raise InputError("mapping does not preserve edges")
        if {VertexSet(full[x] for x in a) for a in system.cuts} != set(system.cuts):
            raise InputError("mapping does not preserve the cut family")
        return cls(system, tuple((v, full[v]) for v in space.vertices))

    @classmethod
    def identity(cls, system: CutSystem) -> Automorphism:
        return cls(system, tuple((v, v) for v in system.space.vertices))

    def __call__(self, v):
        return dict(self.mapping)[v]

    def image(self, s) -> VertexSet:
        m = dict(self.mapping)
        return VertexSet(m[v] for v in s)

    def compose(self, other: Automorphism) -> Automorphism:
        """``self`` after ``other``."""
        m, o = dict(self.mapping), dict(other.mapping)
        return Automorphism(self.system, tuple((v, m[o[v]]) for v, _ in self.mapping))


def graph_automorphisms(space: Space) -> list[dict]:
    """All automorphisms of a small graph, by backtracking over vertex images."""
    if len(space) > BRUTE_FORCE_MAX_VERTICES:
        raise InputError(f"brute-force automorphisms limited to {BRUTE_FORCE_MAX_VERTICES} vertices")
    verts = list(space.vertices)
    deg = {v: len(space.neighbors(v)) for v in verts}
    out = []

    def extend(i, m, used):
        if i == len(verts):
            out.append(dict(m))
            return
        v = verts[i]
        for w in verts:
            if w in used or deg[w] != deg[v]:
                continue
            if all((m[u] in space.neighbors(w)) == (u in space.neighbors(v)) for u in verts[:i]):
                m[v] = w
                used.add(w)
                extend(i + 1, m, used)
                used.discard(w)
                del m[v]

    extend(0, {}, set())
    return out


def system_automorphisms(system: CutSystem) -> list[Automorphism]:
    cuts = set(system.cuts)
    out = []
    for m in graph_automorphisms(system.space):
        if {VertexSet(m[x] for x in a) for a in system.cuts} == cuts:
            out.append(Automorphism(system, tuple((v, m[v]) for v in system.space.vertices)))
    return out


def induce(p: Pretree, g: Automorphism) -> dict:
    """Element permutation induced by ``g``: same kind, image support."""
    by_key = {(e.kind, e.support): e for e in p.elements}
    perm = {}
    for e in p.elements:
        target = by_key.get((e.kind, g.image(e.support)))
        if target is None:
            raise ConsistencyError(f"image of {e!r} under the automorphism is not an element")
        perm[e] = target
    if len(set(perm.values())) != len(perm):
        raise ConsistencyError("induced map is not injective")
    return perm


@dataclass
class EquivarianceReport:
    betweenness_violations: list = field(default_factory=list)
    edge_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.betweenness_violations and not self.edge_violations


def verify_equivariance(p: Pretree, g: Automorphism, tree: SimplicialTree | None = None) -> EquivarianceReport:
    perm = induce(p, g)
    idx = [p.idx(perm[e]) for e in p.elements]
    n = len(p.elements)
    report = EquivarianceReport()
    for b, c, x in product(range(n), repeat=3):
        if bool(p.open_mask(b, c) >> x & 1) != bool(p.open_mask(idx[b], idx[c]) >> idx[x] & 1):
            report.betweenness_violations.append((p.elements[x], p.elements[b], p.elements[c]))
    tree = tree or realize(p, verify=False)
    edges = {frozenset(e) for e in tree.edge_pairs()}
    for a, b in tree.edge_pairs():
        if frozenset((perm[a], perm[b])) not in edges:
            report.edge_violations.append((a, b))
    return report


def permutation_as_labels(perm: Mapping[PretreeElement, PretreeElement]) -> dict:
    return {k.label(): v.label() for k, v in perm.items()}
