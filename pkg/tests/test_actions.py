from itertools import permutations

import pytest

from cutpretree import (Automorphism, Blob, Cut, InputError, induce, realize,
                        system_automorphisms, verify_equivariance)
from cutpretree.actions import graph_automorphisms
from cutpretree.fixtures import FIXTURES, valid_fixtures

from conftest import pretree_of

SMALL = [f.name for f in valid_fixtures() if len(f.space) <= 8]


def test_identity():
    p = pretree_of("path3")
    perm = induce(p, Automorphism.identity(p.system))
    assert all(k == v for k, v in perm.items())
    assert verify_equivariance(p, Automorphism.identity(p.system)).ok


def test_path_reversal():
    p = pretree_of("path3")
    g = Automorphism.from_mapping(p.system, {"a": "c", "c": "a"})
    perm = induce(p, g)
    assert perm[Blob("ab")] == Blob("bc") and perm[Blob("bc")] == Blob("ab")
    assert perm[Cut("b")] == Cut("b")
    assert verify_equivariance(p, g).ok


def test_star_rotation():
    p = pretree_of("star")
    g = Automorphism.from_mapping(p.system, {"x": "y", "y": "z", "z": "x"})
    perm = induce(p, g)
    assert perm[Blob("vx")] == Blob("vy")
    assert perm[Blob("vy")] == Blob("vz")
    assert perm[Blob("vz")] == Blob("vx")
    assert perm[Cut("v")] == Cut("v")


def test_non_automorphisms_rejected():
    cs = pretree_of("path3").system
    with pytest.raises(InputError):
        Automorphism.from_mapping(cs, {"a": "b", "b": "a"})
    with pytest.raises(InputError):
        Automorphism.from_mapping(cs, {"a": "a", "c": "a"})
    cycle = pretree_of("cycle4_single").system
    # a rotation is a graph automorphism but moves the cut {1,3} onto {2,4}
    with pytest.raises(InputError):
        Automorphism.from_mapping(cycle, {"1": "2", "2": "3", "3": "4", "4": "1"})


def _brute_force_automorphisms(space):
    verts = list(space.vertices)
    out = []
    for img in permutations(verts):
        m = dict(zip(verts, img))
        if {frozenset(m[x] for x in e) for e in space.edges} == set(space.edges):
            out.append(m)
    return out


@pytest.mark.parametrize("name", ["path3", "star", "cycle4_single", "two_triangles", "sun", "ladder4"])
def test_backtracking_matches_permutation_scan(name):
    space = FIXTURES[name].space
    key = lambda m: tuple(sorted(m.items()))
    assert sorted(map(key, graph_automorphisms(space))) == sorted(map(key, _brute_force_automorphisms(space)))


@pytest.mark.parametrize("name", SMALL)
def test_equivariance_all_automorphisms(name):
    p = pretree_of(name)
    t = realize(p)
    for g in system_automorphisms(p.system):
        assert verify_equivariance(p, g, t).ok


@pytest.mark.parametrize("name", SMALL)
def test_functoriality(name):
    p = pretree_of(name)
    group = system_automorphisms(p.system)
    ident = induce(p, Automorphism.identity(p.system))
    assert all(k == v for k, v in ident.items())
    for g in group:
        for h in group:
            gh = induce(p, g.compose(h))
            ig, ih = induce(p, g), induce(p, h)
            assert gh == {e: ig[ih[e]] for e in p.elements}
