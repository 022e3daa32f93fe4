"""Exhaustive checks of the structural guarantees on a finite pretree.

Each ``check_*`` function returns a list of counterexamples; an empty list
means the property holds on every applicable tuple.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .pretree import Pretree, _bits, _natural_order, verify_pretree_axioms
from .errors import ConsistencyError
from .space import separation_between


def _label_sets(p: Pretree) -> list[list[frozenset]]:
    # out[c][a]: components of V - support(c) met by support(a)
    out = []
    for c in p.elements:
        labels = p.space.component_labels(c.support)
        out.append([frozenset(labels[v] for v in a.support if v in labels) for a in p.elements])
    return out


def _sep_from(ls, c, a, b) -> bool:
    la, lb = ls[c][a], ls[c][b]
    return bool(la) and bool(lb) and not (len(la) == 1 and la == lb)


def check_cover(p: Pretree) -> list:
    covered = set().union(*(e.support for e in p.elements))
    return sorted(map(str, set(p.space.vertices) - covered))


def check_no_element_separates(p: Pretree) -> list:
    ls = _label_sets(p)
    n = len(p.elements)
    return [(p.elements[c], p.elements[a]) for c in range(n) for a in range(n) if len(ls[c][a]) >= 2]


def check_separation_equivalence(p: Pretree) -> list:
    """Both directions relating ``C in (A, B)`` to ``C`` separating ``A`` from ``B``.

    Only triples where neither ``A`` nor ``B`` is contained in ``C`` apply.
    """
    ls = _label_sets(p)
    els = p.elements
    n = len(els)
    subset_mask = [sum(1 << d for d in range(n) if els[d].support <= els[c].support) for c in range(n)]
    bad = []
    for a, b, c in product(range(n), repeat=3):
        if els[a].support <= els[c].support or els[b].support <= els[c].support:
            continue
        sep = _sep_from(ls, c, a, b)
        if p.open_mask(a, b) >> c & 1 and not sep:
            bad.append(("a", els[a], els[b], els[c]))
        if sep and not p.open_mask(a, b) & subset_mask[c]:
            bad.append(("b", els[a], els[b], els[c]))
    return bad


def check_medians(p: Pretree) -> list:
    bad = []
    n = len(p.elements)
    for a, b, c in combinations(range(n), 3):
        m = p.closed_mask(a, b) & p.closed_mask(b, c) & p.closed_mask(a, c)
        if m == 0 or m & (m - 1):
            bad.append((p.elements[a], p.elements[b], p.elements[c], len(list(_bits(m)))))
    return bad


def check_contain(p: Pretree) -> list:
    """A cut ``D`` in ``(B, C)`` with ``B`` a cut in ``(A, C)`` also lies in ``(A, C)``."""
    bad = []
    n = len(p.elements)
    cut_mask = p.cut_mask
    for a, c in product(range(n), repeat=2):
        for b in _bits(p.open_mask(a, c) & cut_mask):
            stray = p.open_mask(b, c) & cut_mask & ~p.open_mask(a, c)
            bad.extend((p.elements[a], p.elements[b], p.elements[c], p.elements[d]) for d in _bits(stray))
    return bad


def check_nesting(p: Pretree) -> list:
    """Canonical sides shrink along a chain of cuts.

    For cuts ``B in (A, C)`` and ``D in (B, C)``: the side of ``B`` holding
    ``A`` misses the side of ``D`` holding ``C``, and sits strictly inside
    the side of ``D`` holding ``B``.
    """
    bad = []
    els = p.elements
    space = p.space
    n = len(els)
    for a, c in product(range(n), repeat=2):
        if a == c:
            continue
        for b in _bits(p.open_mask(a, c) & p.cut_mask):
            sep_b = separation_between(space, els[b].support, els[a].support, els[c].support)
            for d in _bits(p.open_mask(b, c) & p.cut_mask):
                if d in (a, c):
                    continue
                sep_d = separation_between(space, els[d].support, els[b].support, els[c].support)
                if sep_b is None or sep_d is None:
                    bad.append((els[a], els[b], els[c], els[d], "no separation"))
                    continue
                u, o, w = sep_b.side_u, sep_d.side_u, sep_d.side_v
                if u & w or not u < o:
                    bad.append((els[a], els[b], els[c], els[d]))
    return bad


def check_quasicomponents(p: Pretree) -> list:
    """For a cut ``A`` in ``(B, C)``: ``B - A`` and ``C - A`` are nonempty, each in one component, different ones."""
    bad = []
    els = p.elements
    n = len(els)
    for b, c in permutations(range(n), 2):
        for a in _bits(p.open_mask(b, c) & p.cut_mask):
            labels = p.space.component_labels(els[a].support)
            lb = {labels[v] for v in els[b].support if v in labels}
            lc = {labels[v] for v in els[c].support if v in labels}
            if len(lb) != 1 or len(lc) != 1 or lb == lc:
                bad.append((els[a], els[b], els[c]))
    return bad


def check_blob_separation(p: Pretree) -> list:
    """Distinct blobs have a cut strictly between them, and every such cut contains their overlap."""
    bad = []
    blobs = [i for i, e in enumerate(p.elements) if not e.is_cut]
    for b, c in combinations(blobs, 2):
        witnesses = list(_bits(p.open_mask(b, c) & p.cut_mask))
        if not witnesses:
            bad.append((p.elements[b], p.elements[c], "no cut between"))
        overlap = p.elements[b].support & p.elements[c].support
        for a in witnesses:
            if not overlap <= p.elements[a].support:
                bad.append((p.elements[b], p.elements[c], p.elements[a]))
    return bad


def check_adjacent_pairs(p: Pretree) -> list:
    """Adjacent elements are one cut and one blob, the cut inside the blob."""
    bad = []
    for a, b in combinations(range(len(p.elements)), 2):
        if p.open_mask(a, b):
            continue
        ea, eb = p.elements[a], p.elements[b]
        if ea.is_cut == eb.is_cut:
            bad.append((ea, eb))
            continue
        cut, blob = (ea, eb) if ea.is_cut else (eb, ea)
        if not cut.support <= blob.support:
            bad.append((ea, eb))
    return bad


def check_natural_orders(p: Pretree) -> list:
    """The three four-point ordering facts for pretrees, over all distinct 4-tuples."""
    n = len(p.elements)
    orders: dict = {}

    def pos(x, w):
        if (x, w) not in orders:
            orders[(x, w)] = {e: i for i, e in enumerate(_natural_order(p, x, w))}
        return orders[(x, w)]

    def increasing(x, y, z, w):
        o = pos(x, w)
        return y in o and z in o and o[x] < o[y] < o[z] < o[w]

    bad = []
    inside = lambda y, x, z: bool(p.open_mask(x, z) >> y & 1)
    for x, y, z, w in permutations(range(n), 4):
        if inside(y, x, z) and inside(z, y, w) and not increasing(x, y, z, w):
            bad.append((1, x, y, z, w))
        if inside(y, x, w) and inside(z, y, w) and not increasing(x, y, z, w):
            bad.append((2, x, y, z, w))
        if inside(y, x, w) and inside(z, x, w) and not (increasing(x, y, z, w) or increasing(x, z, y, w)):
            bad.append((3, x, y, z, w))
    return [(case,) + tuple(p.elements[i] for i in t) for case, *t in bad]


def check_tree(p: Pretree) -> list:
    from .tree import realize
    try:
        realize(p, verify=True)
    except ConsistencyError as exc:
        return [str(exc)]
    return []


CHECKS = {
    "pretree_axioms": lambda p: verify_pretree_axioms(p).violations,
    "cover": check_cover,
    "no_element_separates": check_no_element_separates,
    "separation_equivalence": check_separation_equivalence,
    "medians": check_medians,
    "contain": check_contain,
    "nesting": check_nesting,
    "quasicomponents": check_quasicomponents,
    "blob_separation": check_blob_separation,
    "adjacent_pairs": check_adjacent_pairs,
    "tree": check_tree,
}


def run_all(p: Pretree, natural_orders: bool = True) -> dict:
    results = {name: fn(p) for name, fn in CHECKS.items()}
    if natural_orders:
        results["natural_orders"] = check_natural_orders(p)
    return results
