"""Independent reference computations used to cross-check the pipeline.

Nothing here imports the blob or pretree code: blocks come from a low-link
DFS over the raw adjacency, and trees are compared by canonical encodings.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .space import Space, VertexSet, canonical_order, vertex_key


def biconnected_blocks(space: Space) -> tuple[list[VertexSet], list]:
    """Blocks and articulation vertices via an iterative Hopcroft-Tarjan DFS."""
    disc: dict = {}
    low: dict = {}
    blocks: list[VertexSet] = []
    cut_vertices = set()
    edge_stack: list = []
    timer = 0
    root = space.vertices[0]
    nbrs = {v: sorted(space.neighbors(v), key=vertex_key) for v in space.vertices}

    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, None, iter(nbrs[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w not in disc:
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((u, w))
                if u == root:
                    root_children += 1
                stack.append((w, u, iter(nbrs[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent is None:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent != root:
                cut_vertices.add(parent)
            block = set()
            while True:
                e = edge_stack.pop()
                block.update(e)
                if e == (parent, u):
                    break
            blocks.append(VertexSet(block))
    if root_children >= 2:
        cut_vertices.add(root)
    return canonical_order(blocks), sorted(cut_vertices, key=vertex_key)


def block_cut_tree(space: Space) -> tuple[list, list]:
    """Nodes ("block", set) / ("cut", vertex) and the incidence edges between them."""
    blocks, cuts = biconnected_blocks(space)
    nodes = [("cut", VertexSet([v])) for v in cuts] + [("block", b) for b in blocks]
    edges = [(i, j) for i, (k1, s1) in enumerate(nodes) for j, (k2, s2) in enumerate(nodes)
             if k1 == "cut" and k2 == "block" and s1 <= s2]
    return nodes, edges


def _centers(n: int, adj: dict) -> list[int]:
    if n <= 2:
        return list(range(n))
    deg = {i: len(adj[i]) for i in range(n)}
    leaves = [i for i in range(n) if deg[i] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for w in adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[leaf] = 0
        leaves = nxt
    return sorted(leaves)


def canonical_encoding(labels: list[str], edges: list[tuple]) -> str:
    """AHU-style encoding of a node-labelled unrooted tree, rooted at its centre(s)."""
    n = len(labels)
    if n == 0:
        return ""
    adj = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)

    def encode(root):
        order, parent = [], {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        code = {}
        for u in reversed(order):
            kids = sorted(code[w] for w in adj[u] if parent.get(w) == u and w != parent[u])
            code[u] = labels[u] + "(" + "".join(kids) + ")"
        return code[root]

    return min(encode(c) for c in _centers(n, adj))


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.15) -> Space:
    """Random spanning tree plus independent extra edges."""
    verts = [f"v{i}" for i in range(n)]
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add(frozenset((verts[i], verts[j])))
    for a, b in combinations(verts, 2):
        if frozenset((a, b)) not in edges and rng.random() < extra_edge_prob:
            edges.add(frozenset((a, b)))
    return Space.from_edges([tuple(sorted(e)) for e in edges], vertices=verts)


@dataclass
class BlockCutComparison:
    blobs_match: bool
    cuts_match: bool
    tree_match: bool
    diff: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.blobs_match and self.cuts_match and self.tree_match


def compare_with_block_cut_tree(space: Space) -> BlockCutComparison:
    """Run the pipeline with articulation singletons and compare to the classical tree."""
    from .cuts import CutSystem, articulation_cuts
    from .pretree import Pretree
    from .tree import realize

    system = CutSystem.build(space, articulation_cuts(space))
    p = Pretree(system)
    t = realize(p)
    blocks, cut_vertices = biconnected_blocks(space)
    blobs = {e.support for e in p.blobs}
    cuts = {e.support for e in p.cuts}
    oracle_cuts = {VertexSet([v]) for v in cut_vertices}

    nodes, edges = block_cut_tree(space)
    ours = canonical_encoding(["C" if e.is_cut else "B" for e in t.nodes], list(t.edges))
    theirs = canonical_encoding(["C" if k == "cut" else "B" for k, _ in nodes], edges)
    diff = {}
    if blobs != set(blocks):
        diff["blobs_only"] = [b.label() for b in canonical_order(blobs - set(blocks))]
        diff["blocks_only"] = [b.label() for b in canonical_order(set(blocks) - blobs)]
    if cuts != oracle_cuts:
        diff["cuts"] = sorted(c.label() for c in cuts ^ oracle_cuts)
    if ours != theirs:
        diff["tree"] = {"pipeline": ours, "oracle": theirs}
    return BlockCutComparison(blobs == set(blocks), cuts == oracle_cuts, ours == theirs, diff)
