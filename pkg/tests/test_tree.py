import json
from collections import deque
from itertools import combinations
from pathlib import Path

import pytest

from cutpretree import Blob, Cut, InputError, export, interval, realize, tree_path
from cutpretree.tree import from_dict

from conftest import pretree_of

GOLDEN = Path(__file__).parent / "golden"


def bfs_path(nodes, edges, a, b):
    adj = {n: set() for n in nodes}
    for x, y in edges:
        adj[x].add(y)
        adj[y].add(x)
    prev = {a: None}
    q = deque([a])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                q.append(w)
    out = [b]
    while out[-1] != a:
        out.append(prev[out[-1]])
    return out[::-1]


def test_path_realization():
    t = realize(pretree_of("path3"))
    assert {frozenset(e) for e in t.edge_pairs()} == {
        frozenset((Blob("ab"), Cut("b"))), frozenset((Cut("b"), Blob("bc")))}


def test_star_realization():
    t = realize(pretree_of("star"))
    assert t.degree(Cut("v")) == 3
    assert all(t.degree(b) == 1 for b in t.nodes if not b.is_cut)


def test_single_node():
    t = realize(pretree_of("k4"))
    assert len(t.nodes) == 1 and t.edges == ()
    assert export(t, "dot") == 'graph pretree {\n  n0 [label="blob:p,q,r,s", shape=ellipse];\n}\n'


def test_tree_path_examples():
    p = pretree_of("path5")
    t = realize(p)
    a = Blob("ab")
    assert tree_path(t, a, a) == [a]
    ends = tree_path(t, Blob("ab"), Blob("de"))
    assert ends == bfs_path(t.nodes, t.edge_pairs(), Blob("ab"), Blob("de"))
    assert len(ends) == 7 and [e.is_cut for e in ends] == [False, True] * 3 + [False]
    t = realize(pretree_of("star"))
    assert tree_path(t, Blob("vx"), Blob("vz")) == [Blob("vx"), Cut("v"), Blob("vz")]
    with pytest.raises(InputError):
        tree_path(t, Blob("ab"), Blob("vx"))


def test_realization_invariants(valid_name):
    p = pretree_of(valid_name)
    t = realize(p)
    assert len(t.edges) == len(t.nodes) - 1
    for a, b in combinations(p.elements, 2):
        assert tree_path(t, a, b) == bfs_path(t.nodes, t.edge_pairs(), a, b)
        assert tree_path(t, a, b) == list(interval(p, a, b).members)


def test_cut_degrees_recorded(valid_name):
    # measured, not a stated guarantee: every cut on these fixtures joins >= 2 blobs
    t = realize(pretree_of(valid_name))
    assert all(t.degree(c) >= 2 for c in t.nodes if c.is_cut)


def test_dot_golden():
    out = export(realize(pretree_of("path3")), "dot")
    assert out == (GOLDEN / "path3.dot").read_text()
    assert out.count(" -- ") == 2


def test_json_round_trip(valid_name):
    t = realize(pretree_of(valid_name))
    text = export(t, "json")
    assert from_dict(json.loads(text)) == t
    assert export(from_dict(json.loads(text)), "json") == text


def test_unknown_format():
    with pytest.raises(InputError):
        export(realize(pretree_of("path3")), "svg")
