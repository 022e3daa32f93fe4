"""Bundled fixture corpus with expected outcomes.

Vertex identifiers are strings so every fixture round-trips through the JSON
file formats.  The corners grid is the discretized version of the
square-with-a-tail example: columns L, M, R over heights 0..1, plus the tail
vertex M2 above M1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .space import Space


@dataclass(frozen=True)
class Fixture:
    name: str
    space: Space
    cuts: tuple
    valid: bool = True
    failing_condition: Optional[int] = None
    n_elements: Optional[int] = None
    n_blobs: Optional[int] = None
    union_of_cuts_blobs: tuple = ()
    notes: str = ""
    extra: dict = field(default_factory=dict)


def _path(names):
    return list(zip(names, names[1:]))


def _fixtures() -> dict:
    fx = {}

    def add(name, edges, cuts, **kw):
        fx[name] = Fixture(name, Space.from_edges(edges), tuple(frozenset(c) for c in cuts), **kw)

    add("path3", _path("abc"), [{"b"}], n_elements=3, n_blobs=2)
    add("path5", _path("abcde"), [{"b"}, {"c"}, {"d"}], n_elements=7, n_blobs=4,
        union_of_cuts_blobs=(frozenset("bc"), frozenset("cd")))
    add("path5_empty", _path("abcde"), [], n_elements=1, n_blobs=1)
    add("star", [("v", "x"), ("v", "y"), ("v", "z")], [{"v"}], n_elements=4, n_blobs=3)
    add("two_triangles", [("a", "b"), ("b", "v"), ("a", "v"), ("v", "c"), ("c", "d"), ("d", "v")],
        [{"v"}], n_elements=3, n_blobs=2)
    add("k4", [(a, b) for a in "pqrs" for b in "pqrs" if a < b], [], n_elements=1, n_blobs=1)
    add("cycle4_single", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")], [{"1", "3"}],
        n_elements=3, n_blobs=2)
    add("cycle4_double", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
        [{"1", "3"}, {"2", "4"}], valid=False, failing_condition=2,
        notes="crossing cut pairs: each separates the other")

    grid = [("L0", "L1"), ("M0", "M1"), ("R0", "R1"), ("L0", "M0"), ("M0", "R0"),
            ("L1", "M1"), ("M1", "R1"), ("M1", "M2")]
    a1, a2 = {"M0", "M1"}, {"M0", "M1", "M2"}
    add("corners", grid, [a1, a2], valid=False, failing_condition=3,
        notes="both cuts separate and neither separates the other, but their overlap separates",
        extra={"A1": frozenset(a1), "A2": frozenset(a2),
               "left_blob": frozenset({"L0", "L1", "M0", "M1"}),
               "right_blob": frozenset({"R0", "R1", "M0", "M1"})})
    add("corners_one_cut", grid, [a1], n_elements=4, n_blobs=3,
        notes="with a single cut the tail becomes its own blob")

    add("sun", [("x", "y"), ("y", "z"), ("z", "x"), ("x", "x1"), ("y", "y1"), ("z", "z1")],
        [{"x"}, {"y"}, {"z"}], n_elements=7, n_blobs=4,
        union_of_cuts_blobs=(frozenset("xyz"),),
        notes="the central triangle is a blob made entirely of cuts")
    add("cactus", [("v", "a"), ("a", "b"), ("b", "c"), ("c", "v"),
                   ("v", "d"), ("d", "e"), ("e", "f"), ("f", "v")],
        [{"v"}, {"a", "c"}, {"d", "f"}], n_elements=7, n_blobs=4,
        union_of_cuts_blobs=(frozenset("acv"), frozenset("dfv")))

    def ladder(k):
        top = [f"t{i}" for i in range(k)]
        bot = [f"b{i}" for i in range(k)]
        edges = _path(top) + _path(bot) + list(zip(top, bot))
        cuts = [{top[i], bot[i]} for i in range(1, k - 1)]
        return edges, cuts

    def rungs(*idx):
        return frozenset(f"{side}{i}" for i in idx for side in "tb")

    add("ladder4", *ladder(4), n_elements=5, n_blobs=3, union_of_cuts_blobs=(rungs(1, 2),))
    add("ladder6", *ladder(6), n_elements=9, n_blobs=5,
        union_of_cuts_blobs=(rungs(1, 2), rungs(2, 3), rungs(3, 4)))
    return fx


FIXTURES = _fixtures()


def valid_fixtures() -> list[Fixture]:
    return [f for f in FIXTURES.values() if f.valid]


def get(name: str) -> Fixture:
    return FIXTURES[name]
