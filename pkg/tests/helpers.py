"""Brute-force reference implementations, independent of the library code paths."""

from __future__ import annotations

from itertools import combinations


def components_oracle(vertices, edges, removed):
    """Union-find over the induced subgraph."""
    keep = [v for v in vertices if v not in removed]
    parent = {v: v for v in keep}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        u, v = tuple(e)
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    groups = {}
    for v in keep:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: sorted(map(str, g)))


def label_of(vertices, edges, removed):
    return {v: i for i, c in enumerate(components_oracle(vertices, edges, removed)) for v in c}


def sep_from(space, a, b, c):
    lab = label_of(space.vertices, space.edges, a)
    return any(lab[x] != lab[y] for x in b if x not in a for y in c if y not in a)


def sep_set(space, a, p):
    return sep_from(space, a, p, p)


def inseparable_set_oracle(space, cuts, p):
    return not any(sep_set(space, a, p) for a in cuts)


def maximal_inseparable_oracle(space, cuts):
    """Enumerate every vertex subset; keep the inclusion-maximal inseparable ones."""
    verts = list(space.vertices)
    good = []
    for r in range(1, len(verts) + 1):
        for combo in combinations(verts, r):
            s = frozenset(combo)
            if inseparable_set_oracle(space, cuts, s):
                good.append(s)
    return {s for s in good if not any(s < t for t in good)}


def between_oracle(space, cuts, x, b, c):
    """x in (b, c), for elements given as (kind, support) with kind "cut" or "blob"."""
    if x == b or x == c or b == c:
        return False
    if x[0] == "cut":
        return sep_from(space, x[1], b[1], c[1])

    def half(end, mid):
        return {end} | {("cut", frozenset(a)) for a in cuts if sep_from(space, a, end[1], mid[1])}

    return not (half(b, x) & half(c, x))


def as_pair(e):
    return (e.kind.value, frozenset(e.support))
