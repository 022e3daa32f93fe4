"""Readers and writers for the graph, cut-family, and permutation file formats.

Graph JSON::

    {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}

A plain-text edge list (one ``u v`` pair per line, ``#`` comments allowed) is
also accepted; vertices are inferred.  Cut families are JSON lists of vertex
lists; permutations are JSON objects mapping vertex to vertex.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .space import Space


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed {what} JSON: {exc}") from None


def parse_graph(text: str) -> Space:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = _load_json(text, "graph")
        if not isinstance(data, dict) or "edges" not in data:
            raise InputError("graph JSON needs an 'edges' list")
        edges = data["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise InputError("each edge must be a two-element list")
        edges = [(str(u), str(v)) for u, v in edges]
        verts = data.get("vertices")
        if verts is not None:
            verts = [str(v) for v in verts]
        return Space.from_edges(edges, vertices=verts)
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((parts[0], parts[1]))
    if not edges:
        raise InputError("edge list is empty")
    return Space.from_edges(edges)


def parse_cuts(text: str) -> list[frozenset]:
    data = _load_json(text, "cut family")
    if not isinstance(data, list) or any(not isinstance(c, list) for c in data):
        raise InputError("cut family must be a JSON list of vertex lists")
    return [frozenset(str(v) for v in c) for c in data]


def parse_permutation(text: str) -> dict:
    data = _load_json(text, "permutation")
    if not isinstance(data, dict):
        raise InputError("permutation must be a JSON object mapping vertex to vertex")
    return {str(k): str(v) for k, v in data.items()}


def read_graph(path) -> Space:
    return parse_graph(_read(path))


def read_cuts(path) -> list[frozenset]:
    return parse_cuts(_read(path))


def read_permutation(path) -> dict:
    return parse_permutation(_read(path))


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def graph_to_json(space: Space) -> str:
    return json.dumps({"vertices": [str(v) for v in space.vertices],
                       "edges": [[str(u), str(v)] for u, v in space.edge_list()]}, indent=2) + "\n"


def cuts_to_json(cuts) -> str:
    from .space import VertexSet, canonical_order
    return json.dumps([[str(v) for v in c.members] for c in canonical_order(VertexSet(c) for c in cuts)]) + "\n"
