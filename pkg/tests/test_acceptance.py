"""Exit criteria.  Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import random
import time
from itertools import combinations, product

import pytest

from cutpretree import (CutSystem, Pretree, Space, articulation_cuts, filter_admissible,
                        induce, inseparable, is_inseparable_set, maximal_inseparable_sets,
                        quotient_blobs, realize, system_automorphisms, tree_path, interval,
                        validate, verify_equivariance, verify_pretree_axioms)
from cutpretree.actions import Automorphism
from cutpretree.fixtures import FIXTURES, valid_fixtures
from cutpretree.oracles import compare_with_block_cut_tree, random_connected_graph
from cutpretree.theorems import (check_adjacent_pairs, check_contain, check_cover,
                                 check_natural_orders, check_no_element_separates,
                                 check_separation_equivalence)

pytestmark = pytest.mark.acceptance

SEED = 20240601


def _ladder(k):
    top = [f"t{i}" for i in range(k)]
    bot = [f"b{i}" for i in range(k)]
    edges = list(zip(top, top[1:])) + list(zip(bot, bot[1:])) + list(zip(top, bot))
    return Space.from_edges(edges), [{top[i], bot[i]} for i in range(1, k - 1)]


def _random_tree(rng, n):
    verts = [f"u{i}" for i in range(n)]
    return Space.from_edges([(verts[i], verts[rng.randrange(i)]) for i in range(1, n)], vertices=verts)


def _random_system(rng, n, density):
    space = random_connected_graph(rng, n, density)
    cands = [frozenset(rng.sample(space.vertices, rng.randint(1, 3))) for _ in range(60)]
    return CutSystem.build(space, filter_admissible(space, cands))


def _desk_systems():
    """Bundled valid fixtures plus larger seeded systems, up to 40 elements."""
    out = {f.name: CutSystem.build(f.space, f.cuts) for f in valid_fixtures()}
    rng = random.Random(SEED)
    for k in (9, 13, 21):
        space, cuts = _ladder(k)
        out[f"ladder{k}"] = CutSystem.build(space, cuts)
    for n in (10, 13, 20):
        space = _random_tree(rng, n)
        out[f"random_tree{n}"] = CutSystem.build(space, articulation_cuts(space))
    for i in range(6):
        out[f"random_system{i}"] = _random_system(rng, rng.randint(8, 14), 0.08)
    return out


DESK = _desk_systems()
PRETREES = {name: Pretree(cs) for name, cs in DESK.items()}
assert max(len(p) for p in PRETREES.values()) <= 40


def report(capsys, name, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


def test_axiom_suite(capsys):
    worst, bad = 0.0, []
    for name, cs in DESK.items():
        t0 = time.perf_counter()
        p = Pretree(cs)
        r = verify_pretree_axioms(p)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not r.ok or r.triples_checked != len(p) ** 3:
            bad.append(name)
        if dt >= 5.0:
            bad.append(f"{name} took {dt:.2f}s")
    biggest = max(len(p) for p in PRETREES.values())
    report(capsys, "axiom suite", not bad,
           f"{len(DESK)} systems, largest |P|={biggest}, slowest {worst:.2f}s (< 5 s); failures {bad}")


def test_median_suite(capsys):
    bad, triples = [], 0
    for name, p in PRETREES.items():
        if len(p) > 25:
            continue
        n = len(p)
        triples += n ** 3
        for a, b, c in product(range(n), repeat=3):
            m = p.closed_mask(a, b) & p.closed_mask(b, c) & p.closed_mask(a, c)
            if m == 0 or m & (m - 1):
                bad.append((name, a, b, c))
    report(capsys, "median suite", not bad, f"{triples} ordered triples, {len(bad)} non-singleton medians")


def test_structural_conclusions(capsys):
    bad = {}
    for name, p in PRETREES.items():
        found = {"I": [c for c in p.system.cuts if not any(e.is_cut and e.support == c for e in p.elements)],
                 "II": check_cover(p), "III": check_no_element_separates(p),
                 "IV": check_separation_equivalence(p)}
        found = {k: v for k, v in found.items() if v}
        if found:
            bad[name] = found
    report(capsys, "structural conclusions", not bad, f"{len(PRETREES)} systems, counterexamples: {bad}")


def test_tree_realization(capsys):
    bad = []
    pairs = 0
    for name, p in PRETREES.items():
        t = realize(p, verify=False)
        if len(t.edges) != len(t.nodes) - 1:
            bad.append((name, "edge count"))
        for a, b in combinations(p.elements, 2):
            pairs += 1
            if tree_path(t, a, b) != list(interval(p, a, b).members):
                bad.append((name, a, b))
        try:
            realize(p, verify=True)
        except Exception as exc:
            bad.append((name, repr(exc)))
    report(capsys, "tree realization", not bad, f"{pairs} element pairs, path = interval; failures {bad[:3]}")


def test_block_cut_oracle(capsys):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    mismatches = []
    sizes = []
    for i in range(50):
        n = rng.randint(4, 12)
        space = random_connected_graph(rng, n, rng.choice([0.05, 0.15, 0.3]))
        sizes.append(n)
        cmp = compare_with_block_cut_tree(space)
        if not cmp.ok:
            mismatches.append((i, cmp.diff))
    dt = time.perf_counter() - t0
    ok = not mismatches and dt < 60 and min(sizes) >= 4 and max(sizes) <= 12
    report(capsys, "block-cut oracle", ok, f"50 graphs (n {min(sizes)}..{max(sizes)}), "
           f"{len(mismatches)} mismatches, {dt:.2f}s (< 60 s)")


def test_negative_fixtures(capsys):
    corners, cyc = FIXTURES["corners"], FIXTURES["cycle4_double"]
    rc = validate(corners.space, corners.cuts)
    ry = validate(cyc.space, cyc.cuts)
    forced = verify_pretree_axioms(Pretree(CutSystem.unchecked(corners.space, corners.cuts)))
    checks = {
        "corners fails exactly (3)": rc.failed() == [3] and rc.witnesses[3].reverify(corners.space),
        "cycle4 double fails exactly (2)": ry.failed() == [2] and ry.witnesses[2].reverify(cyc.space),
        "forced corners violates axiom (4)": 4 in forced.axioms_violated(),
    }
    report(capsys, "negative fixtures", all(checks.values()), checks)


def test_inseparability_equivalence(capsys):
    exhaustive, sampled, bad = 0, 0, []
    rng = random.Random(SEED)
    big = []
    for name, cs in DESK.items():
        verts = list(cs.space.vertices)
        if len(verts) <= 10:
            for r in range(len(verts) + 1):
                for sub in combinations(verts, r):
                    exhaustive += 1
                    if is_inseparable_set(cs, sub) != all(inseparable(cs, x, y) for x, y in combinations(sub, 2)):
                        bad.append((name, sub))
        else:
            big.append(cs)
    for _ in range(1000):
        cs = rng.choice(big)
        verts = list(cs.space.vertices)
        # bias toward small subsets so both verdicts occur
        sub = rng.sample(verts, rng.randint(0, min(len(verts), rng.choice([3, 5, len(verts)]))))
        sampled += 1
        if is_inseparable_set(cs, sub) != all(inseparable(cs, x, y) for x, y in combinations(sub, 2)):
            bad.append(("sampled", sub))
    report(capsys, "inseparability equivalence", not bad,
           f"{exhaustive} exhaustive subsets, {sampled} random subsets on {len(big)} larger systems")


def test_quotient_blob_comparison(capsys):
    bad = []
    missing_total = 0
    for name, cs in DESK.items():
        classes = quotient_blobs(cs)
        maxsets = maximal_inseparable_sets(cs)
        for c in classes:
            if sum(1 for m in maxsets if c <= m) != 1:
                bad.append((name, c))
        blobs = [e.support for e in PRETREES[name].blobs]
        missing = [b for b in blobs if not any(c <= b for c in classes)]
        missing_total += len(missing)
        for b in missing:
            if b != frozenset().union(*(a for a in cs.cuts if a <= b)):
                bad.append((name, b))
    sun = DESK["sun"]
    sun_missing = [e.support for e in PRETREES["sun"].blobs
                   if not any(c <= e.support for c in quotient_blobs(sun))]
    ok = not bad and sun_missing == [frozenset("xyz")]
    report(capsys, "quotient blob comparison", ok,
           f"{missing_total} blobs absent from the quotient version, all unions of cuts; sun: {sun_missing}")


def test_equivariance(capsys):
    bad, count = [], 0
    for name, cs in DESK.items():
        if len(cs.space) > 8:
            continue
        p = PRETREES[name]
        t = realize(p, verify=False)
        group = system_automorphisms(cs)
        for g in group:
            count += 1
            if not verify_equivariance(p, g, t).ok:
                bad.append((name, g.mapping))
        ident = induce(p, Automorphism.identity(cs))
        if any(k != v for k, v in ident.items()):
            bad.append((name, "identity"))
        for g, h in product(group, repeat=2):
            ig, ih = induce(p, g), induce(p, h)
            if induce(p, g.compose(h)) != {e: ig[ih[e]] for e in p.elements}:
                bad.append((name, "composition"))
    report(capsys, "equivariance", not bad, f"{count} automorphisms checked; failures {bad[:3]}")


def test_order_facts(capsys):
    bad = {}
    tuples = 0
    for name, p in PRETREES.items():
        found = {"contain": check_contain(p), "cutblob": check_adjacent_pairs(p)}
        if len(p) <= 15:
            n = len(p)
            tuples += n * (n - 1) * (n - 2) * (n - 3)
            found["natural orders"] = check_natural_orders(p)
        found = {k: v for k, v in found.items() if v}
        if found:
            bad[name] = found
    report(capsys, "order facts", not bad, f"{tuples} distinct 4-tuples; counterexamples: {bad}")
