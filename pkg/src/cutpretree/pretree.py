"""Betweenness on cuts and blobs, intervals, medians, and the pretree axioms.

Betweenness is defined in two stages.  A cut ``X`` lies in ``(B, C)`` when it
separates ``B`` from ``C``.  A blob ``X`` lies in ``(B, C)`` when the
cut-stage half-open intervals ``[B, X)`` and ``(X, C]`` share nothing, where
``[B, X) = {B} + {cuts separating B from X}`` and likewise for ``(X, C]``.

All relations are stored as Python-int bitmasks over element indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .blobs import PretreeElement, pretree_elements
from .cuts import CutSystem
from .errors import ConsistencyError, InputError
from .space import separates_from

INTERVAL_KINDS = ("open", "closed", "half_open")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Interval:
    start: PretreeElement
    end: PretreeElement
    kind: str
    members: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, e):
        return e in self.members

    def position(self, e: PretreeElement) -> int:
        return self.members.index(e)


@dataclass
class AxiomViolationReport:
    violations: list = field(default_factory=list)
    triples_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> set:
        return {v[0] for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "triples_checked": self.triples_checked,
            "violations": [
                {"axiom": ax, "elements": [e.label() for e in els]} for ax, els in self.violations
            ],
        }


class Pretree:
    """The element set of cuts and blobs with its betweenness relation.

    ``checked=True`` recomputes every triple straight from the separation
    predicates and raises ConsistencyError on any disagreement with the
    cached relation, then runs the axiom check.
    """

    def __init__(self, system: CutSystem, elements: Optional[Sequence[PretreeElement]] = None,
                 checked: bool = False):
        self.system = system
        self.space = system.space
        self.elements: tuple = tuple(elements if elements is not None else pretree_elements(system))
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise InputError("duplicate pretree elements")
        self._build()
        if checked:
            self.check_against_definition()
            report = verify_pretree_axioms(self)
            if not report.ok:
                raise ConsistencyError(f"pretree axioms fail: {report.violations[:3]}")

    # construction

    def _build(self):
        n = len(self.elements)
        supports = [e.support for e in self.elements]
        self.cut_indices = [i for i, e in enumerate(self.elements) if e.is_cut]
        self.cut_mask = sum(1 << i for i in self.cut_indices)

        # sep[k][i]: set of component labels of element i outside cut k
        comp_sets = {}
        for k in self.cut_indices:
            labels = self.space.component_labels(supports[k])
            comp_sets[k] = [frozenset(labels[v] for v in s if v in labels) for s in supports]

        # cutsep[i][j]: bitmask of cuts separating element i from element j
        cutsep = [[0] * n for _ in range(n)]
        for k in self.cut_indices:
            cs = comp_sets[k]
            bit = 1 << k
            for i in range(n):
                li = cs[i]
                if not li:
                    continue
                for j in range(i + 1, n):
                    lj = cs[j]
                    if lj and not (len(li) == 1 and li == lj):
                        cutsep[i][j] |= bit
                        cutsep[j][i] |= bit
        self._cutsep = cutsep

        # between[b][c]: bitmask of x with x in (b, c)
        blob_indices = [i for i in range(n) if not self.elements[i].is_cut]
        between = [[0] * n for _ in range(n)]
        for b in range(n):
            for c in range(n):
                if b == c:
                    continue
                mask = cutsep[b][c] & ~((1 << b) | (1 << c))
                for x in blob_indices:
                    if x == b or x == c:
                        continue
                    left = cutsep[b][x] | (1 << b)
                    right = cutsep[x][c] | (1 << c)
                    if not left & right:
                        mask |= 1 << x
                between[b][c] = mask
        self._between = between

    def check_against_definition(self):
        n = len(self.elements)
        for b in range(n):
            for c in range(n):
                for x in range(n):
                    fast = bool(self._between[b][c] >> x & 1)
                    slow = _between_from_definition(self, x, b, c)
                    if fast != slow:
                        raise ConsistencyError(
                            f"cached betweenness disagrees for {self.elements[x]!r} "
                            f"in ({self.elements[b]!r}, {self.elements[c]!r})")

    # lookups

    def __len__(self):
        return len(self.elements)

    def idx(self, e: PretreeElement) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise InputError(f"{e!r} is not an element of this pretree") from None

    def find(self, support) -> PretreeElement:
        """Element whose support is exactly ``support`` (cuts and blobs never collide)."""
        s = frozenset(support)
        for e in self.elements:
            if e.support == s:
                return e
        raise InputError(f"no element with support {sorted(map(str, s))}")

    def open_mask(self, b: int, c: int) -> int:
        return self._between[b][c]

    def closed_mask(self, b: int, c: int) -> int:
        return self._between[b][c] | (1 << b) | (1 << c)

    def cuts_between(self, b: int, c: int) -> int:
        return self._cutsep[b][c]

    def elems(self, mask: int) -> list[PretreeElement]:
        return [self.elements[i] for i in _bits(mask)]

    @property
    def cuts(self) -> list[PretreeElement]:
        return [self.elements[i] for i in self.cut_indices]

    @property
    def blobs(self) -> list[PretreeElement]:
        return [e for e in self.elements if not e.is_cut]

    def to_dict(self, betweenness: bool = False) -> dict:
        d = {
            "elements": [{"kind": e.kind.value, "support": [str(v) for v in e.support.members]}
                         for e in self.elements],
        }
        if betweenness:
            n = len(self.elements)
            d["betweenness"] = [[x, b, c] for b in range(n) for c in range(n)
                                for x in _bits(self._between[b][c])]
        return d


def _between_from_definition(p: Pretree, x: int, b: int, c: int) -> bool:
    # Independent slow path: straight from the separation predicates.
    els = p.elements
    if x == b or x == c or b == c:
        return False
    space = p.space
    if els[x].is_cut:
        return separates_from(space, els[x].support, els[b].support, els[c].support)

    def half(end, mid):
        return {end} | {k for k in p.cut_indices
                        if separates_from(space, els[k].support, els[end].support, els[mid].support)}

    return not (half(b, x) & half(c, x))


def between(p: Pretree, x: PretreeElement, b: PretreeElement, c: PretreeElement) -> bool:
    """True iff ``x`` lies in the open interval ``(b, c)``."""
    return bool(p.open_mask(p.idx(b), p.idx(c)) >> p.idx(x) & 1)


def _natural_order(p: Pretree, a: int, b: int) -> list[int]:
    members = list(_bits(p.closed_mask(a, b)))
    if a == b:
        return [a]

    def before(y, x):
        # y < x in the order with a least: y in [a, x)
        return y != x and (y == a or bool(p.open_mask(a, x) >> y & 1))

    rank = {x: sum(before(y, x) for y in members) for x in members}
    ordered = sorted(members, key=rank.__getitem__)
    if [rank[x] for x in ordered] != list(range(len(members))):
        raise ConsistencyError(
            f"interval [{p.elements[a]!r}, {p.elements[b]!r}] is not totally ordered")
    for i, j in combinations(range(len(ordered)), 2):
        if not before(ordered[i], ordered[j]) or before(ordered[j], ordered[i]):
            raise ConsistencyError(
                f"interval [{p.elements[a]!r}, {p.elements[b]!r}] is not totally ordered")
    return ordered


def interval(p: Pretree, a: PretreeElement, b: PretreeElement, kind: str = "closed") -> Interval:
    """Interval from ``a`` to ``b`` listed in its natural order with ``a`` first.

    ``half_open`` means ``[a, b)``.
    """
    if kind not in INTERVAL_KINDS:
        raise InputError(f"unknown interval kind {kind!r}")
    ia, ib = p.idx(a), p.idx(b)
    order = _natural_order(p, ia, ib)
    if kind == "open":
        order = [i for i in order if i not in (ia, ib)]
    elif kind == "half_open":
        order = [i for i in order if i != ib] if ia != ib else []
    return Interval(a, b, kind, tuple(p.elements[i] for i in order))


def verify_pretree_axioms(p: Pretree) -> AxiomViolationReport:
    """Exhaustively check the four pretree axioms.

    1. (B, B) is empty
    2. (A, B) = (B, A)
    3. A in (B, C) implies B not in (A, C)
    4. (A, C) is contained in (A, B] + [B, C)
    """
    n = len(p.elements)
    els = p.elements
    report = AxiomViolationReport()
    for b in range(n):
        if p.open_mask(b, b):
            report.violations.append((1, (els[b],)))
    for a, b in combinations(range(n), 2):
        if p.open_mask(a, b) != p.open_mask(b, a):
            report.violations.append((2, (els[a], els[b])))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                report.triples_checked += 1
                if p.open_mask(b, c) >> a & 1 and p.open_mask(a, c) >> b & 1:
                    report.violations.append((3, (els[a], els[b], els[c])))
                stray = p.open_mask(a, c) & ~(p.open_mask(a, b) | p.open_mask(b, c) | 1 << b)
                for d in _bits(stray):
                    report.violations.append((4, (els[a], els[b], els[c], els[d])))
    return report


def adjacent(p: Pretree, a: PretreeElement, b: PretreeElement) -> bool:
    if a == b:
        raise InputError("adjacency is defined for distinct elements")
    return p.open_mask(p.idx(a), p.idx(b)) == 0


def median(p: Pretree, a: PretreeElement, b: PretreeElement, c: PretreeElement) -> PretreeElement:
    ia, ib, ic = p.idx(a), p.idx(b), p.idx(c)
    mask = p.closed_mask(ia, ib) & p.closed_mask(ib, ic) & p.closed_mask(ia, ic)
    found = list(_bits(mask))
    if len(found) != 1:
        raise ConsistencyError(
            f"median of {a!r}, {b!r}, {c!r} has {len(found)} members, expected exactly one")
    return p.elements[found[0]]


def supremum(p: Pretree, iv: Interval, subset: Iterable[PretreeElement]) -> PretreeElement:
    """Least upper bound of ``subset`` in the natural order of ``iv``."""
    subset = list(subset)
    if not subset:
        raise InputError("supremum of an empty subset")
    pos = {e: i for i, e in enumerate(iv.members)}
    missing = [e for e in subset if e not in pos]
    if missing:
        raise InputError(f"{missing!r} not in the interval")
    return iv.members[max(pos[e] for e in subset)]


def order_chain(p: Pretree, chain: Sequence[PretreeElement]) -> list[PretreeElement]:
    """Put ``chain`` in a natural linear order, or raise InputError if it has none.

    Of the two orders, the one starting at the endpoint listed first in
    ``chain`` is returned.
    """
    idxs = [p.idx(e) for e in chain]
    if len(set(idxs)) != len(idxs):
        raise InputError("chain has repeated elements")
    if len(idxs) <= 2:
        return list(chain)
    inner = set()
    for x in idxs:
        for b, c in combinations(idxs, 2):
            if x not in (b, c) and p.open_mask(b, c) >> x & 1:
                inner.add(x)
                break
    ends = [x for x in idxs if x not in inner]
    if len(ends) != 2:
        raise InputError("chain is not linearly ordered")
    start = ends[0]
    rank = {x: sum(1 for y in idxs if p.open_mask(start, x) >> y & 1) for x in idxs}
    ordered = sorted(idxs, key=lambda x: (x != start, rank[x]))
    for i, j, k in combinations(range(len(ordered)), 3):
        x, y, z = ordered[i], ordered[j], ordered[k]
        if not (p.open_mask(x, z) >> y & 1) or p.open_mask(y, z) >> x & 1 or p.open_mask(x, y) >> z & 1:
            raise InputError("chain is not linearly ordered")
    return [p.elements[i] for i in ordered]


def preseparability_witness(p: Pretree, chain: Sequence[PretreeElement]) -> list[PretreeElement]:
    """Cuts of the convex hull of ``chain``, checked to meet every closed interval of it.

    The hull is the closed interval between the two ends of the chain; it is
    linearly ordered and contains the chain.  Two distinct blobs always have a
    cut strictly between them, so this set is dense in the required sense.
    """
    ordered = order_chain(p, chain)
    if not ordered:
        return []
    hull = interval(p, ordered[0], ordered[-1], "closed")
    q = [e for e in hull.members if e.is_cut]
    qmask = sum(1 << p.idx(e) for e in q)
    for a, b in combinations(ordered, 2):
        ia, ib = p.idx(a), p.idx(b)
        if not p.closed_mask(ia, ib) & qmask:
            raise ConsistencyError(f"no witness cut in [{a!r}, {b!r}]")
        if not a.is_cut and not b.is_cut and not p.open_mask(ia, ib) & qmask:
            raise ConsistencyError(f"blobs {a!r}, {b!r} have no cut between them")
    return q
