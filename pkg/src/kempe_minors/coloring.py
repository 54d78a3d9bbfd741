"""Matching partitions (Kempe edge colorings), transversals, and the
pair-subgraph end counting used by the degree analysis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import UnknownVertexError
from .graph import EdgeId, Multigraph, VertexId, edge_components


@dataclass(frozen=True)
class MatchingPartition:
    """A partition of E(H) into (not necessarily maximum) matchings.

    Classes are indexed by position; the index is the handle the solver and
    the serialization layer use for bag-to-class accounting.
    """

    classes: tuple[frozenset[EdgeId], ...]

    @staticmethod
    def of(classes: Iterable[Iterable[EdgeId]]) -> "MatchingPartition":
        return MatchingPartition(tuple(frozenset(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    def all_edges(self) -> frozenset[EdgeId]:
        out: set[EdgeId] = set()
        for c in self.classes:
            out |= c
        return frozenset(out)

    def class_of(self, eid: EdgeId) -> int:
        for i, c in enumerate(self.classes):
            if eid in c:
                return i
        raise KeyError(eid)


Transversal = frozenset


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural verification, with diagnosable violations."""

    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _reject(*violations: str) -> Verdict:
    return Verdict(False, violations)


def verify_matching_partition(H: Multigraph, part: MatchingPartition) -> Verdict:
    """Accept iff the classes partition E(H) and each class is a matching."""
    violations: list[str] = []
    seen: dict[EdgeId, int] = {}
    for i, cls in enumerate(part.classes):
        if not cls:
            violations.append(f"class {i} is empty")
        for eid in sorted(cls):
            if eid not in H:
                violations.append(f"class {i}: unknown edge {eid!r}")
            elif eid in seen:
                violations.append(
                    f"edge {eid!r} occurs in classes {seen[eid]} and {i}"
                )
            else:
                seen[eid] = i
        # matching: no two class edges share an endpoint
        at: dict[VertexId, EdgeId] = {}
        for eid in sorted(cls):
            if eid not in H:
                continue
            for v in H.edge(eid).ends:
                if v in at:
                    violations.append(
                        f"class {i}: edges {at[v]!r} and {eid!r} share vertex {v!r}"
                    )
                else:
                    at[v] = eid
    missing = sorted(set(H.edge_ids) - set(seen))
    for eid in missing:
        violations.append(f"edge {eid!r} is in no class")
    return Verdict(not violations, tuple(violations))


def verify_kempe(H: Multigraph, part: MatchingPartition) -> Verdict:
    """Accept iff the union of any two classes is one connected edge set.

    Stops at the first failing pair; the verdict names it by class indices.
    """
    for i, j in combinations(range(part.k), 2):
        union = part.classes[i] | part.classes[j]
        if len(edge_components(H, union)) != 1:
            return _reject(f"union of classes {i} and {j} is not connected")
    return Verdict(True)


def verify_transversal(part: MatchingPartition, T: Iterable[EdgeId]) -> Verdict:
    """Accept iff T picks exactly one edge from every class and nothing else."""
    ts = frozenset(T)
    violations: list[str] = []
    for i, cls in enumerate(part.classes):
        hit = sorted(ts & cls)
        if len(hit) != 1:
            violations.append(
                f"class {i} is hit {len(hit)} times ({', '.join(map(repr, hit))})"
            )
    stray = sorted(ts - part.all_edges())
    for eid in stray:
        violations.append(f"edge {eid!r} belongs to no class")
    return Verdict(not violations, tuple(violations))


def pair_subgraph_ends(
    H: Multigraph, part: MatchingPartition, i: int, j: int
) -> frozenset[VertexId]:
    """End vertices of the subgraph formed by classes ``i`` and ``j``.

    A vertex is an end when it is covered by exactly one edge of the union;
    the union of two matchings is a disjoint union of paths and cycles, so
    each connected piece ends in two or zero vertices.
    """
    union = part.classes[i] | part.classes[j]
    deg: dict[VertexId, int] = {}
    for eid in union:
        for v in H.edge(eid).ends:
            deg[v] = deg.get(v, 0) + 1
    return frozenset(v for v, d in deg.items() if d == 1)


def pair_end_count(H: Multigraph, part: MatchingPartition, v: VertexId) -> int:
    """Number of class pairs whose two-class subgraph ends at ``v``.

    For a vertex of degree d in a valid partition of order k this always
    equals d*(k-d): the pairs with exactly one class covering v.
    """
    if not H.has_vertex(v):
        raise UnknownVertexError(f"unknown vertex {v!r}")
    count = 0
    for i, j in combinations(range(part.k), 2):
        if v in pair_subgraph_ends(H, part, i, j):
            count += 1
    return count
