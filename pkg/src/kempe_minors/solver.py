"""The main constructive algorithm.

Given a multigraph H, a partition of E(H) into matchings whose pairwise
unions are connected, and a transversal T, produce k connected, pairwise
disjoint, pairwise incident edge sets of H, each containing exactly one edge
of T.  Such a system is exactly a complete minor of the line graph rooted at
T, with the bags as branching sets.

The construction recurses on the number of edges.  At each level it either
routes k vertex-disjoint paths in the line graph from the edge star of a
maximum-degree vertex to T, or finds a minimum separator, contracts one of
its sides, recurses, and lifts the answer back through edge-disjoint path
systems.  Parallel edges and the complete-graph endgame have dedicated
direct constructions.

Every recursion level re-checks the structural facts it relies on and the
final system is verified before it is returned; a failure surfaces as
InternalAssertionError, never as a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

from .coloring import (
    MatchingPartition,
    Verdict,
    verify_kempe,
    verify_matching_partition,
    verify_transversal,
)
from .errors import InternalAssertionError, InvalidInputError
from .graph import (
    EdgeId,
    Multigraph,
    VertexId,
    contract,
    edge_components,
    line_graph,
)
from .paths import (
    PathSystem,
    Separator,
    disjoint_paths_or_separator,
    edge_disjoint_paths,
    split_sides,
)


@dataclass(frozen=True)
class BagSystem:
    """The answer: k disjoint connected pairwise incident edge sets."""

    bags: tuple[frozenset[EdgeId], ...]

    @staticmethod
    def of(bags: Iterable[Iterable[EdgeId]]) -> "BagSystem":
        return BagSystem(tuple(frozenset(b) for b in bags))

    def __len__(self) -> int:
        return len(self.bags)


@dataclass(frozen=True)
class TraceStep:
    """One reduction step; ``details`` names the witnesses of that level."""

    kind: str  # base | parallel | menger | separator | complete
    details: dict[str, Any] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[TraceStep, ...]

    def kinds(self) -> tuple[str, ...]:
        return tuple(s.kind for s in self.steps)


@dataclass(frozen=True)
class CompleteFallback:
    """Confirmation that the leftover case is the complete graph on k vertices.

    ``end_slack`` holds d*(k-d) - max_deg*(k-max_deg) per occurring degree d
    and ``order_slack`` is (max_deg+1)*max_deg*(k-max_deg) - k*(k-1); both
    must vanish, which pins every degree to k-1 on exactly k vertices.
    """

    max_deg: int
    k: int
    end_slack: dict[int, int] = field(hash=False)
    order_slack: int = 0


def _require(cond: bool, fact: str) -> None:
    if not cond:
        raise InternalAssertionError(fact)


# ---------------------------------------------------------------------------
# verification


def verify_solution(
    H: Multigraph,
    part: MatchingPartition,
    T: Iterable[EdgeId],
    bags: BagSystem,
) -> Verdict:
    """Accept iff bags form a valid rooted system for (H, partition, T)."""
    ts = frozenset(T)
    violations: list[str] = []
    if len(bags) != part.k:
        violations.append(f"{len(bags)} bags for {part.k} classes")
    seen: dict[EdgeId, int] = {}
    for i, bag in enumerate(bags.bags):
        if not bag:
            violations.append(f"bag {i} is empty")
            continue
        bad = sorted(e for e in bag if e not in H)
        if bad:
            violations.append(f"bag {i} holds unknown edges {bad}")
            continue
        for eid in sorted(bag):
            if eid in seen:
                violations.append(
                    f"edge {eid!r} occurs in bags {seen[eid]} and {i}"
                )
            else:
                seen[eid] = i
        if len(edge_components(H, bag)) != 1:
            violations.append(f"bag {i} is not a connected edge set")
        hits = sorted(bag & ts)
        if len(hits) != 1:
            violations.append(
                f"bag {i} holds {len(hits)} transversal edges ({hits})"
            )
    for i, j in combinations(range(len(bags)), 2):
        a, b = bags.bags[i], bags.bags[j]
        if not a or not b:
            continue
        if not (a <= set(H.edge_ids) and b <= set(H.edge_ids)):
            continue
        if not (H.covered(a) & H.covered(b)):
            violations.append(f"bags {i} and {j} are not incident")
    unused = sorted(ts - set(seen))
    for eid in unused:
        violations.append(f"transversal edge {eid!r} is in no bag")
    return Verdict(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# base case k <= 2


def _solve_base(
    H: Multigraph, classes: list[frozenset[EdgeId]], ts: frozenset[EdgeId]
) -> list[frozenset[EdgeId]]:
    k = len(classes)
    if k == 0:
        return []
    if k == 1:
        (t,) = ts
        return [frozenset({t})]
    # k == 2: the whole edge set is one path or cycle.  Walk it and cut it
    # into two contiguous runs, one transversal edge each; the runs meet at
    # a cut vertex, hence they are incident.
    all_edges = classes[0] | classes[1]
    deg: dict[VertexId, list[EdgeId]] = {}
    for eid in sorted(all_edges):
        for v in H.edge(eid).ends:
            deg.setdefault(v, []).append(eid)
    endpoints = sorted(v for v, ids in deg.items() if len(ids) == 1)
    _require(
        all(len(ids) <= 2 for ids in deg.values()),
        "two-matching union has a vertex of degree > 2",
    )
    start = endpoints[0] if endpoints else min(deg)
    walk: list[EdgeId] = []
    used: set[EdgeId] = set()
    v = start
    while True:
        nxt = [e for e in deg[v] if e not in used]
        if not nxt:
            break
        eid = min(nxt)
        walk.append(eid)
        used.add(eid)
        v = H.edge(eid).other(v)
    _require(len(walk) == len(all_edges), "two-matching union is not connected")
    pos = sorted(walk.index(t) for t in ts)
    _require(len(pos) == 2, "transversal does not hit the pair union twice")
    i, j = pos
    if endpoints:
        first, second = walk[: i + 1], walk[i + 1:]
    else:
        first, second = walk[i:j], walk[j:] + walk[:i]
    return [frozenset(first), frozenset(second)]


# ---------------------------------------------------------------------------
# parallel edges


def _solve_with_parallel(
    H: Multigraph,
    classes: list[frozenset[EdgeId]],
    ts: frozenset[EdgeId],
    trace: list[TraceStep],
) -> list[frozenset[EdgeId]]:
    pair = H.parallel_pair()
    assert pair is not None
    e, f = pair
    x, y = H.edge(e).ends

    def cls_index(eid: EdgeId) -> int:
        for i, c in enumerate(classes):
            if eid in c:
                return i
        raise InternalAssertionError(f"edge {eid!r} in no class")

    ie, jf = cls_index(e), cls_index(f)
    _require(ie != jf, "parallel edges share a class")
    _require(
        classes[ie] == {e} and classes[jf] == {f},
        "classes of a parallel pair are not singletons",
    )

    others = [i for i in range(len(classes)) if i not in (ie, jf)]
    _require(
        all(len(classes[i]) <= 2 for i in others),
        "a class besides the parallel pair has more than two edges",
    )

    def incident(p: EdgeId, q: EdgeId) -> bool:
        return bool(set(H.edge(p).ends) & set(H.edge(q).ends))

    if all(incident(p, q) for p, q in combinations(sorted(ts), 2)):
        trace.append(TraceStep("parallel", {"case": "pairwise-incident-T"}))
        return [frozenset({t}) for t in sorted(ts)]

    singles = sorted(i for i in others if len(classes[i]) == 1)
    if singles:
        # Peel a singleton class: its edge is incident with every other
        # edge, so it can rejoin as its own bag after recursing without it.
        i = singles[0]
        (g,) = classes[i]
        trace.append(TraceStep("parallel", {"case": "peel-singleton", "edge": g}))
        rest = [c for j, c in enumerate(classes) if j != i]
        sub = _solve_rec(H.without_edges({g}), rest, ts - {g}, trace)
        return sub + [frozenset({g})]

    two = [i for i in others if len(classes[i]) == 2]
    ell = len(two)
    _require(2 <= ell <= 3, f"unclassified parallel structure (ell={ell})")

    def side_edges(i: int, at: VertexId) -> EdgeId:
        hits = [eid for eid in sorted(classes[i]) if H.edge(eid).covers(at)]
        _require(len(hits) == 1, f"class {i} does not split across the parallel pair")
        return hits[0]

    def layout(x0: VertexId, y0: VertexId):
        xe = {i: side_edges(i, x0) for i in two}
        ye = {i: side_edges(i, y0) for i in two}
        a = {i: H.edge(xe[i]).other(x0) for i in two}
        b = {i: H.edge(ye[i]).other(y0) for i in two}
        t_at_x = [i for i in two if (ts & classes[i]) == {xe[i]}]
        return xe, ye, a, b, t_at_x

    xe, ye, a, b, t_at_x = layout(x, y)
    if len(t_at_x) != 1:
        xe, ye, a, b, t_at_x = layout(y, x)
    _require(len(t_at_x) == 1, "transversal pattern outside the case analysis")
    first = t_at_x[0]
    order = [first]
    while len(order) < ell:
        succ = [j for j in two if j not in order and a[j] == b[order[-1]]]
        _require(len(succ) == 1, "two-edge classes do not chain cyclically")
        order.append(succ[0])
    _require(
        all(a[order[(i + 1) % ell]] == b[order[i]] for i in range(ell - 1)),
        "two-edge classes do not chain cyclically",
    )

    big = frozenset({xe[order[0]], xe[order[1]], ye[order[0]]})
    bags = [frozenset({e}), frozenset({f}), big]
    bags += [frozenset({ye[i]}) for i in order[1:]]
    trace.append(
        TraceStep("parallel", {"case": f"ell={ell}", "pair": (e, f), "big_bag": big})
    )
    return bags


# ---------------------------------------------------------------------------
# complete-graph endgame


def assert_complete_fallback(
    H: Multigraph, part: MatchingPartition
) -> CompleteFallback:
    """Confirm the leftover case: H is the simple complete graph on k vertices.

    Preconditions: no vertex of degree k, H simple, partition Kempe-verified.
    Vertices covered by no edge are ignored.  Any failed conclusion raises
    InternalAssertionError; on valid inputs that is unreachable.
    """
    k = part.k
    verts = sorted(H.covered_vertices())
    degs = {v: H.degree(v) for v in verts}
    delta = max(degs.values(), default=0)
    _require(delta < k, "a vertex of full degree is present")
    _require(H.is_simple(), "parallel edges present in the fallback")
    end_slack = {
        d: d * (k - d) - delta * (k - delta) for d in sorted(set(degs.values()))
    }
    order_slack = (delta + 1) * delta * (k - delta) - k * (k - 1)
    _require(delta == k - 1, f"maximum degree {delta} is not k-1")
    _require(len(verts) == delta + 1, f"{len(verts)} covered vertices, need {delta + 1}")
    _require(all(d == delta for d in degs.values()), "degrees are not uniform")
    for u, v in combinations(verts, 2):
        _require(
            any(H.edge(eid).covers(v) for eid in H.edges_at(u)),
            f"vertices {u!r},{v!r} are not adjacent",
        )
    return CompleteFallback(delta, k, end_slack, order_slack)


def solve_complete(H: Multigraph, T: Iterable[EdgeId]) -> BagSystem:
    """Direct construction on a simple complete graph.

    T may be any set of n edges of the complete graph on n >= 3 vertices,
    not necessarily a matching transversal.  Returns n bags, each with one
    T-edge.
    """
    ts = frozenset(T)
    verts = sorted(H.covered_vertices())
    n = len(verts)
    if n < 3:
        raise InvalidInputError(f"need at least 3 vertices, have {n}")
    if not H.is_simple():
        raise InvalidInputError("graph is not simple")
    by_pair: dict[tuple[VertexId, VertexId], EdgeId] = {}
    for e in H.edges():
        by_pair[e.ends] = e.id
    for u, v in combinations(verts, 2):
        if (u, v) not in by_pair:
            raise InvalidInputError(f"graph is not complete: no edge {u!r},{v!r}")
    if len(ts) != n:
        raise InvalidInputError(f"|T| = {len(ts)}, need n = {n}")
    for eid in ts:
        H.edge(eid)

    def eid_of(u: VertexId, v: VertexId) -> EdgeId:
        return by_pair[(u, v) if u < v else (v, u)]

    bags = _lemma_complete(verts, ts, eid_of, H)
    return BagSystem(tuple(bags))


def _lemma_complete(verts, ts, eid_of, H) -> list[frozenset[EdgeId]]:
    n = len(verts)
    if n == 3:
        return [frozenset({t}) for t in sorted(ts)]

    def t_neighbors(v):
        out = []
        for u in verts:
            if u != v and eid_of(u, v) in ts:
                out.append(u)
        return out

    def star(v, without=frozenset()):
        return frozenset(
            eid_of(u, v) for u in verts if u != v
        ) - frozenset(without)

    v = min((u for u in verts if len(t_neighbors(u)) <= 2), default=None)
    _require(v is not None, "no vertex of prescribed degree at most two")
    nbrs = t_neighbors(v)

    if len(nbrs) == 2:
        x, y = sorted(nbrs)
        rest = ts - {eid_of(v, x), eid_of(v, y)}
        if all(H.edge(t).covers(x) for t in rest):
            # rest is a spanning star at x; one of its leaves has prescribed
            # degree one, so restart from that leaf instead.
            leaves = [u for u in verts if u not in (v, x, y)]
            _require(bool(leaves), "spanning star without a free leaf")
            v, nbrs = min(leaves), [x]
        else:
            zs = [
                z
                for z in verts
                if z not in (v, x) and eid_of(x, z) not in ts
            ]
            _require(bool(zs), "no free edge at the degree-two pivot")
            z = min(zs)
            sub_t = rest | {eid_of(x, z)}
            sub = _lemma_complete([u for u in verts if u != v], sub_t, eid_of, H)
            fi = next(i for i, bag in enumerate(sub) if eid_of(x, z) in bag)
            grown = sub[fi] | {eid_of(v, x)}
            out = [bag for i, bag in enumerate(sub) if i != fi]
            return out + [grown, star(v, {eid_of(v, x)})]

    if len(nbrs) == 1:
        x = nbrs[0]
        sub = _lemma_complete(
            [u for u in verts if u != v], ts - {eid_of(v, x)}, eid_of, H
        )
        return sub + [star(v)]

    _require(len(nbrs) == 0, "pivot vertex has more than two prescribed neighbors")
    xy = min(ts)
    x, y = H.edge(xy).ends
    sub = _lemma_complete([u for u in verts if u != v], ts - {xy}, eid_of, H)
    holder = [i for i, bag in enumerate(sub) if xy in bag]
    if not holder:
        return sub + [star(v) | {xy}]
    fi = holder[0]
    bag_f = sub[fi]
    wz_cands = sorted((bag_f & ts) - {xy})
    _require(len(wz_cands) == 1, "bag holds more than one prescribed edge")
    wz = wz_cands[0]
    p, q = H.edge(wz).ends
    _require(not ({p, q} <= {x, y}), "prescribed edges coincide")
    if q in (x, y):
        w = p
    elif p in (x, y):
        w = q
    else:
        w = min(p, q)
    # put w on x's side of the bag split by removing xy; swap x and y if
    # the component containing w sees y but not x
    comps = edge_components(H, bag_f - {xy})
    wc = next(c for c in comps if w in H.covered(c))
    cov = H.covered(wc)
    if x not in cov and y in cov:
        x, y = y, x
    f1 = (bag_f - {xy}) | {eid_of(v, w), eid_of(v, y)}
    f2 = star(v, {eid_of(v, w), eid_of(v, y)}) | {xy}
    out = [bag for i, bag in enumerate(sub) if i != fi]
    return out + [f1, f2]


# ---------------------------------------------------------------------------
# main recursion


def solve(
    H: Multigraph, part: MatchingPartition, T: Iterable[EdgeId]
) -> tuple[BagSystem, ReductionTrace]:
    """Solve an instance; the returned system always passes verify_solution."""
    ts = frozenset(T)
    for name, verdict in (
        ("matching partition", verify_matching_partition(H, part)),
        ("kempe", verify_kempe(H, part)),
        ("transversal", verify_transversal(part, ts)),
    ):
        if not verdict:
            raise InvalidInputError(
                f"{name} verification failed: " + "; ".join(verdict.violations)
            )
    trace: list[TraceStep] = []
    bags = _solve_rec(H, list(part.classes), ts, trace)
    system = BagSystem(tuple(bags))
    verdict = verify_solution(H, part, ts, system)
    _require(bool(verdict), "output fails verification: " + "; ".join(verdict.violations))
    return system, ReductionTrace(tuple(trace))


def solve_parallel(
    H: Multigraph, part: MatchingPartition, T: Iterable[EdgeId]
) -> BagSystem:
    """Direct construction for a graph with parallel edges."""
    if H.parallel_pair() is None:
        raise InvalidInputError("graph has no parallel edges")
    ts = frozenset(T)
    for verdict in (
        verify_matching_partition(H, part),
        verify_kempe(H, part),
        verify_transversal(part, ts),
    ):
        if not verdict:
            raise InvalidInputError("; ".join(verdict.violations))
    trace: list[TraceStep] = []
    bags = _solve_with_parallel(H, list(part.classes), ts, trace)
    system = BagSystem(tuple(bags))
    verdict = verify_solution(H, part, ts, system)
    _require(bool(verdict), "output fails verification: " + "; ".join(verdict.violations))
    return system


def _solve_rec(
    H: Multigraph,
    classes: list[frozenset[EdgeId]],
    ts: frozenset[EdgeId],
    trace: list[TraceStep],
) -> list[frozenset[EdgeId]]:
    k = len(classes)
    if k <= 2:
        trace.append(TraceStep("base", {"k": k}))
        return _solve_base(H, classes, ts)

    if H.parallel_pair() is not None:
        return _solve_with_parallel(H, classes, ts, trace)

    full = sorted(v for v in H.covered_vertices() if H.degree(v) == k)
    if full:
        return _solve_menger(H, classes, ts, full[0], trace)

    part = MatchingPartition(tuple(classes))
    fallback = assert_complete_fallback(H, part)
    trace.append(
        TraceStep(
            "complete",
            {"k": fallback.k, "max_deg": fallback.max_deg,
             "order_slack": fallback.order_slack},
        )
    )
    sub = H.induced(H.covered_vertices())
    return list(solve_complete(sub, ts).bags)


def _solve_menger(
    H: Multigraph,
    classes: list[frozenset[EdgeId]],
    ts: frozenset[EdgeId],
    v: VertexId,
    trace: list[TraceStep],
) -> list[frozenset[EdgeId]]:
    k = len(classes)
    U = frozenset(H.edges_at(v))
    L = line_graph(H)
    result = disjoint_paths_or_separator(L, U, ts, k)

    if isinstance(result, PathSystem):
        trace.append(TraceStep("menger", {"vertex": v, "star": U, "paths": result.paths}))
        return [frozenset(p) for p in result.paths]

    S = result.nodes
    _require(len(S) == k - 1, f"separator has {len(S)} edges, expected k-1 = {k - 1}")
    avoiding = [i for i, c in enumerate(classes) if not (c & S)]
    _require(
        len(avoiding) == 1,
        f"{len(avoiding)} classes avoid the separator, expected exactly 1",
    )
    fi = avoiding[0]

    split = split_sides(H, S)
    side_c, side_d = split.side_c, split.side_d
    cov_c, cov_d = split.covered_c, split.covered_d
    u_rest = U - S
    if not (u_rest <= side_c):
        side_c, side_d = side_d, side_c
        cov_c, cov_d = cov_d, cov_c
    _require(u_rest <= side_c, "star edges fall on both sides of the separator")
    _require(v in cov_c, "pivot vertex is not on the star side")
    _require(bool(classes[fi] & side_c), "avoiding class misses the star side")
    _require(bool(classes[fi] & side_d), "avoiding class misses the far side")
    _require(not (ts & side_c), "transversal edge on the star side")
    _require(bool(ts & side_d), "no transversal edge on the far side")
    for eid in sorted(S):
        a, b = H.edge(eid).ends
        _require(
            (a in cov_c and b in cov_d) or (a in cov_d and b in cov_c),
            f"separator edge {eid!r} does not cross the sides",
        )

    # contract the far side; route k-1 edge-disjoint paths from v to the
    # contracted vertex, one per separator edge
    H_near, w = contract(H, side_d)
    psys = edge_disjoint_paths(H_near, v, w, k - 1)
    path_of: dict[EdgeId, frozenset[EdgeId]] = {}
    for p in psys.paths:
        hits = sorted(set(p) & S)
        _require(len(hits) == 1, "lift path does not use exactly one separator edge")
        first_u, first_x = H_near.edge(p[0]).ends
        _require(v in (first_u, first_x), "lift path does not start at the pivot")
        last_u, last_x = H_near.edge(p[-1]).ends
        _require(w in (last_u, last_x), "lift path does not end at the contraction")
        path_of[hits[0]] = frozenset(p)
    _require(len(path_of) == k - 1, "lift paths do not cover the separator")

    # contract the star side and recurse
    H_far, _ = contract(H, side_c)
    sub_classes = [c - side_c for c in classes]
    _require(all(sub_classes), "a restricted class became empty")
    _require(ts <= set(H_far.edge_ids), "transversal lost by contraction")
    _require(H_far.num_edges() < H.num_edges(), "recursion does not descend")

    trace.append(
        TraceStep(
            "separator",
            {
                "vertex": v,
                "star": U,
                "separator": S,
                "avoiding_class": fi,
                "side_c": side_c,
                "side_d": side_d,
                "lift_paths": dict(sorted(path_of.items())),
            },
        )
    )

    sub = _solve_rec(H_far, sub_classes, ts, trace)

    lifted: list[frozenset[EdgeId]] = []
    for bag in sub:
        extra: set[EdgeId] = set()
        for eid in bag & S:
            extra |= path_of[eid]
        lifted.append(bag | extra)
    return lifted
