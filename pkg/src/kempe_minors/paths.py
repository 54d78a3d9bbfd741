"""Menger-type subroutines.

Three operations back the solver: vertex-disjoint path systems or minimum
separators in a simple graph (run on the line graph), edge-disjoint path
systems between two vertices of a multigraph, and splitting a graph along a
separating edge set into its two edge sides.

Both path finders are unit-capacity augmenting-path flows with deterministic
(ascending id) augmentation order.  The vertex-disjoint variant splits every
node into an in/out pair of capacity one; the minimum separator is read off
the final residual reachability.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    InsufficientConnectivityError,
    NotTwoSidesError,
)
from .graph import EdgeId, LineGraphView, Multigraph, VertexId, edge_components


@dataclass(frozen=True)
class PathSystem:
    """A system of pairwise disjoint paths.

    ``mode`` is ``"vertex"`` or ``"edge"``.  In vertex mode each path is a
    sequence of host-graph nodes; in edge mode each path is a sequence of
    edge ids.  (On a line graph the two coincide: nodes are edge ids.)
    """

    mode: str
    paths: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class Separator:
    """A node set whose removal disconnects the declared sides."""

    nodes: frozenset[str]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class SideSplit:
    """The two connected edge sides left by removing a separating edge set."""

    side_c: frozenset[EdgeId]
    side_d: frozenset[EdgeId]
    covered_c: frozenset[VertexId]
    covered_d: frozenset[VertexId]


_SRC = ("s", "")
_SNK = ("t", "")
_INF = 1 << 30


def disjoint_paths_or_separator(
    G: LineGraphView,
    U: Iterable[str],
    T: Iterable[str],
    k: int,
) -> Union[PathSystem, Separator]:
    """Find k vertex-disjoint U,T-paths in G or a minimum U,T-separator.

    On success each path runs from a U-node to a T-node and is truncated at
    its first T-node, so it meets T exactly once.  On failure the returned
    separator has minimum cardinality (hence fewer than k nodes) and every
    U,T-path meets it.
    """
    us = frozenset(U)
    ts = frozenset(T)
    if not us or not ts:
        raise ValueError("U and T must be nonempty")
    for n in us | ts:
        if n not in G.nodes:
            raise KeyError(f"node {n!r} not in graph")
    if k < 1:
        raise ValueError("k must be positive")

    # Split graph: node x becomes ('i', x) -> ('o', x) of capacity 1; all
    # other arcs are effectively unbounded so a minimum cut consists of
    # split arcs only, i.e. is a vertex separator.
    res: dict[tuple, dict[tuple, int]] = {_SRC: {}, _SNK: {}}
    orig: dict[tuple, dict[tuple, int]] = {}

    def arc(a: tuple, b: tuple, cap: int) -> None:
        res.setdefault(a, {})[b] = cap
        res.setdefault(b, {}).setdefault(a, 0)
        orig.setdefault(a, {})[b] = cap

    for x in sorted(G.nodes):
        arc(("i", x), ("o", x), 1)
        for y in sorted(G.neighbors(x)):
            arc(("o", x), ("i", y), _INF)
    for u in sorted(us):
        arc(_SRC, ("i", u), _INF)
    for t in sorted(ts):
        arc(("o", t), _SNK, _INF)

    flow = 0
    while flow < k:
        # BFS augmenting path, neighbors in sorted order for determinism.
        prev: dict[tuple, tuple] = {_SRC: _SRC}
        queue = deque([_SRC])
        while queue and _SNK not in prev:
            a = queue.popleft()
            for b in sorted(res[a]):
                if res[a][b] > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if _SNK not in prev:
            break
        b = _SNK
        while b != _SRC:
            a = prev[b]
            res[a][b] -= 1
            res[b][a] += 1
            b = a
        flow += 1

    if flow >= k:
        return PathSystem("vertex", _decompose_vertex_paths(res, orig, ts, k))

    reach = {_SRC}
    queue = deque([_SRC])
    while queue:
        a = queue.popleft()
        for b, c in res[a].items():
            if c > 0 and b not in reach:
                reach.add(b)
                queue.append(b)
    sep = frozenset(
        x for x in G.nodes if ("i", x) in reach and ("o", x) not in reach
    )
    return Separator(sep)


def _decompose_vertex_paths(
    res: dict[tuple, dict[tuple, int]],
    orig: dict[tuple, dict[tuple, int]],
    ts: frozenset,
    k: int,
) -> tuple[tuple[str, ...], ...]:
    # Flow on an original arc a->b is its capacity minus the remaining
    # residual; walking from the source and consuming one unit per arc
    # peels off the k paths.
    paths: list[tuple[str, ...]] = []

    def take_arc(a: tuple) -> tuple | None:
        for b in sorted(orig.get(a, ())):
            if orig[a][b] - res[a][b] > 0:
                res[a][b] += 1
                return b
        return None

    for _ in range(k):
        node_seq: list[str] = []
        a = take_arc(_SRC)
        assert a is not None
        while a != _SNK:
            if a[0] == "i":
                node_seq.append(a[1])
            nxt = take_arc(a)
            assert nxt is not None
            a = nxt
        # truncate at the first T-node
        for idx, n in enumerate(node_seq):
            if n in ts:
                node_seq = node_seq[: idx + 1]
                break
        paths.append(tuple(node_seq))
    return tuple(paths)


def edge_disjoint_paths(
    H: Multigraph, a: VertexId, b: VertexId, k: int
) -> PathSystem:
    """Find k pairwise edge-disjoint a,b-paths, reported as edge-id sequences.

    Raises InsufficientConnectivityError when the unit-capacity max flow
    between a and b is below k.
    """
    if a == b:
        raise ValueError("endpoints must be distinct")
    H.edges_at(a)
    H.edges_at(b)
    if k < 1:
        raise ValueError("k must be positive")

    # flow[eid] is None (unused) or the ordered pair of endpoints giving the
    # direction of the unit of flow on that edge.
    flow: dict[EdgeId, tuple[VertexId, VertexId] | None] = {
        eid: None for eid in H.edge_ids
    }

    def traversable(eid: EdgeId, u: VertexId) -> VertexId | None:
        v = H.edge(eid).other(u)
        state = flow[eid]
        if state is None or state == (v, u):
            return v
        return None

    found = 0
    while found < k:
        prev: dict[VertexId, tuple[VertexId, EdgeId]] = {}
        seen = {a}
        queue = deque([a])
        while queue and b not in seen:
            u = queue.popleft()
            for eid in H.edges_at(u):
                v = traversable(eid, u)
                if v is not None and v not in seen:
                    seen.add(v)
                    prev[v] = (u, eid)
                    queue.append(v)
        if b not in seen:
            raise InsufficientConnectivityError(
                f"only {found} edge-disjoint {a!r},{b!r}-paths exist, need {k}"
            )
        v = b
        while v != a:
            u, eid = prev[v]
            flow[eid] = None if flow[eid] == (v, u) else (u, v)
            v = u
        found += 1

    # Decompose into k simple paths; cycles in the flow are discarded.
    out_arcs: dict[VertexId, list[tuple[EdgeId, VertexId]]] = {}
    for eid in H.edge_ids:
        state = flow[eid]
        if state is not None:
            out_arcs.setdefault(state[0], []).append((eid, state[1]))
    for u in out_arcs:
        out_arcs[u].sort()

    paths: list[tuple[EdgeId, ...]] = []
    for _ in range(k):
        verts = [a]
        eids: list[EdgeId] = []
        while verts[-1] != b:
            u = verts[-1]
            eid, v = out_arcs[u].pop(0)
            if v in verts:
                # splice out the loop; its arcs stay consumed
                i = verts.index(v)
                del verts[i + 1:]
                del eids[i:]
            else:
                verts.append(v)
                eids.append(eid)
        paths.append(tuple(eids))
    return PathSystem("edge", tuple(paths))


def split_sides(H: Multigraph, S: Iterable[EdgeId]) -> SideSplit:
    """Split H along the separating edge set S into its two edge sides.

    The edge set E(H) minus S must decompose into exactly two connected edge
    components, and together they must cover every vertex that S covers but
    no side would; otherwise NotTwoSidesError is raised.  Vertices covered
    by no edge at all are ignored.
    """
    ss = frozenset(S)
    for eid in ss:
        H.edge(eid)
    rest = set(H.edge_ids) - ss
    parts = edge_components(H, rest)
    if len(parts) != 2:
        raise NotTwoSidesError(
            f"removal leaves {len(parts)} edge components, need exactly 2"
        )
    side_c, side_d = parts
    cov_c = H.covered(side_c)
    cov_d = H.covered(side_d)
    stranded = H.covered(ss) - cov_c - cov_d
    if stranded:
        raise NotTwoSidesError(
            f"vertices {sorted(stranded)} are covered only by the separator"
        )
    return SideSplit(side_c, side_d, cov_c, cov_d)
