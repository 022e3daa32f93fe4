"""Cut families and their three admissibility conditions.

1. every cut separates the space;
2. no cut separates another cut (or itself);
3. the intersection of two distinct cuts does not separate the space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import AxiomViolation, InputError
from .space import Space, VertexSet, canonical_order, separates, vertex_key

CONDITIONS = (1, 2, 3)


@dataclass(frozen=True)
class Witness:
    condition: int
    cut_a: VertexSet
    cut_b: Optional[VertexSet] = None
    points: tuple = ()

    def to_dict(self) -> dict:
        d = {"condition": self.condition, "cut_a": list(self.cut_a.members)}
        if self.cut_b is not None:
            d["cut_b"] = list(self.cut_b.members)
        if self.points:
            d["points"] = list(self.points)
        return d

    def reverify(self, space: Space) -> bool:
        """Re-check the witness against the raw component computation."""
        if self.condition == 1:
            return len(space.components(self.cut_a)) == 1
        removed = self.cut_a if self.condition == 2 else self.cut_a & self.cut_b
        x, y = self.points
        labels = space.component_labels(removed)
        if x not in labels or y not in labels or labels[x] == labels[y]:
            return False
        if self.condition == 2:
            return x in self.cut_b and y in self.cut_b
        return True


@dataclass
class AxiomReport:
    passed: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def failed(self) -> list[int]:
        return [c for c in CONDITIONS if not self.passed[c]]

    def summary(self) -> str:
        lines = []
        for c in CONDITIONS:
            if self.passed[c]:
                lines.append(f"condition {c}: pass")
            else:
                w = self.witnesses[c]
                detail = f"cut {w.cut_a!r}"
                if w.cut_b is not None:
                    detail += f", cut {w.cut_b!r}"
                if w.points:
                    detail += ", points " + " ".join(map(str, w.points))
                lines.append(f"condition {c}: FAIL ({detail})")
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "conditions": {str(c): self.passed[c] for c in CONDITIONS},
            "witnesses": {str(c): w.to_dict() for c, w in sorted(self.witnesses.items())},
            "warnings": list(self.warnings),
        }


def _split_points(space: Space, removed: frozenset, pool: Iterable) -> Optional[tuple]:
    # First pair (in canonical order) of pool points in different components.
    labels = space.component_labels(removed)
    pts = [v for v in sorted(pool, key=vertex_key) if v in labels]
    if not pts:
        return None
    first = pts[0]
    for v in pts[1:]:
        if labels[v] != labels[first]:
            return (first, v)
    return None


def _normalize(space: Space, cuts: Iterable[Iterable]) -> list[VertexSet]:
    out = [space.check_subset(c) for c in cuts]
    if len(set(out)) != len(out):
        raise InputError("duplicate cut sets in family")
    n = len(space.vertices)
    for c in out:
        if not c or len(c) == n:
            raise InputError(f"cut {c!r} is empty or the whole vertex set")
    return canonical_order(out)


def validate(space: Space, cuts: Iterable[Iterable]) -> AxiomReport:
    """Check conditions (1)-(3); each failure carries the first witness found."""
    family = _normalize(space, cuts)
    report = AxiomReport()
    if not family:
        report.warnings.append("empty cut family (vacuously valid)")

    report.passed[1] = True
    for a in family:
        if not separates(space, a):
            report.passed[1] = False
            report.witnesses[1] = Witness(1, a)
            break

    report.passed[2] = True
    for a in family:
        for b in family:
            pts = _split_points(space, a, b - a)
            if pts:
                report.passed[2] = False
                report.witnesses[2] = Witness(2, a, b, pts)
                break
        if not report.passed[2]:
            break

    report.passed[3] = True
    for i, a in enumerate(family):
        for b in family[i + 1:]:
            pts = _split_points(space, a & b, space.vertices)
            if pts:
                report.passed[3] = False
                report.witnesses[3] = Witness(3, a, b, pts)
                break
        if not report.passed[3]:
            break
    return report


@dataclass(frozen=True)
class CutSystem:
    """A space with an admissible cut family, in canonical order."""

    space: Space
    cuts: tuple

    @classmethod
    def build(cls, space: Space, cuts: Iterable[Iterable]) -> CutSystem:
        cuts = list(cuts)
        report = validate(space, cuts)
        if not report.ok:
            raise AxiomViolation(report)
        return cls(space, tuple(_normalize(space, cuts)))

    @classmethod
    def unchecked(cls, space: Space, cuts: Iterable[Iterable]) -> CutSystem:
        """Skip conditions (1)-(3); for exhibiting what breaks without them."""
        return cls(space, tuple(_normalize(space, cuts)))


def articulation_cuts(space: Space) -> list[VertexSet]:
    """Singleton cuts at every articulation vertex."""
    return [VertexSet([v]) for v in space.vertices if separates(space, [v])]


def filter_admissible(space: Space, candidates: Iterable[Iterable]) -> list[VertexSet]:
    """Greedily keep candidates, in input order, while (1)-(3) still hold."""
    kept: list[VertexSet] = []
    n = len(space.vertices)
    for c in candidates:
        c = space.check_subset(c)
        if not c or len(c) == n or c in kept:
            continue
        if validate(space, kept + [c]).ok:
            kept.append(c)
    return kept
