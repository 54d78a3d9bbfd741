"""Disjoint path systems, minimum separators, and side splitting."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kempe_minors.errors import InsufficientConnectivityError, NotTwoSidesError
from kempe_minors.graph import Multigraph, edge, line_graph
from kempe_minors.paths import (
    PathSystem,
    Separator,
    disjoint_paths_or_separator,
    edge_disjoint_paths,
    split_sides,
)


def grid_2x3():
    """Two horizontal paths of three vertices joined by three rungs."""
    verts = [f"{r}{c}" for r in "ab" for c in "012"]
    edges = [
        edge("a01", "a0", "a1"),
        edge("a12", "a1", "a2"),
        edge("b01", "b0", "b1"),
        edge("b12", "b1", "b2"),
        edge("r0", "a0", "b0"),
        edge("r1", "a1", "b1"),
        edge("r2", "a2", "b2"),
    ]
    return Multigraph(verts, edges)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=3, max_value=6))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(
        st.lists(st.sampled_from(pairs), min_size=2, max_size=len(pairs), unique=True)
    )
    return Multigraph(verts, [edge(f"e{u}-{v}", u, v) for u, v in sorted(chosen)])


def separates(G, X, us, ts):
    """True iff every U,T-path of G meets the node set X."""
    if (us & ts) - X:
        return False
    seen = set(us - X)
    stack = list(seen)
    while stack:
        n = stack.pop()
        for m in G.neighbors(n):
            if m not in X and m not in seen:
                seen.add(m)
                stack.append(m)
    return not (seen & ts)


class TestVertexDisjoint:
    def test_paths_in_line_graph_of_k4(self):
        H = Multigraph(
            ["0", "1", "2", "3"],
            [
                edge("e01", "0", "1"),
                edge("e02", "0", "2"),
                edge("e03", "0", "3"),
                edge("e12", "1", "2"),
                edge("e13", "1", "3"),
                edge("e23", "2", "3"),
            ],
        )
        L = line_graph(H)
        us = {"e01", "e02", "e03"}
        ts = {"e12", "e13", "e23"}
        result = disjoint_paths_or_separator(L, us, ts, 3)
        assert isinstance(result, PathSystem)
        assert result.mode == "vertex"
        assert len(result) == 3
        used = [n for p in result.paths for n in p]
        assert len(used) == len(set(used))
        for p in result.paths:
            assert p[0] in us
            assert p[-1] in ts
            # internally disjoint from T: only the last node is a target
            assert all(n not in ts for n in p[:-1])
            assert all(L.adjacent(p[i], p[i + 1]) for i in range(len(p) - 1))

    def test_separator_on_bottleneck(self):
        # a triangle with a pendant path: every route to the tail edge
        # passes through the bridge node "mx" of the line graph
        H = Multigraph(
            ["a", "b", "m", "x", "y"],
            [
                edge("am", "a", "m"),
                edge("ab", "a", "b"),
                edge("bm", "b", "m"),
                edge("mx", "m", "x"),
                edge("xy", "x", "y"),
            ],
        )
        L = line_graph(H)
        result = disjoint_paths_or_separator(L, {"am", "ab"}, {"xy"}, 2)
        assert isinstance(result, Separator)
        assert result.nodes == {"mx"}
        assert separates(L, result.nodes, frozenset({"am", "ab"}), frozenset({"xy"}))

    def test_rejects_bad_arguments(self):
        L = line_graph(grid_2x3())
        with pytest.raises(ValueError):
            disjoint_paths_or_separator(L, set(), {"a01"}, 1)
        with pytest.raises(KeyError):
            disjoint_paths_or_separator(L, {"zz"}, {"a01"}, 1)
        with pytest.raises(ValueError):
            disjoint_paths_or_separator(L, {"a01"}, {"b01"}, 0)

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.data())
    def test_paths_or_minimum_separator(self, H, data):
        L = line_graph(H)
        nodes = sorted(L.nodes)
        us = frozenset(
            data.draw(st.sets(st.sampled_from(nodes), min_size=1, max_size=3))
        )
        ts = frozenset(
            data.draw(st.sets(st.sampled_from(nodes), min_size=1, max_size=3))
        )
        k = data.draw(st.integers(min_value=1, max_value=3))
        result = disjoint_paths_or_separator(L, us, ts, k)
        if isinstance(result, PathSystem):
            assert len(result) == k
            used = [n for p in result.paths for n in p]
            assert len(used) == len(set(used))
            for p in result.paths:
                assert p[0] in us and p[-1] in ts
                assert all(n not in ts for n in p[:-1])
        else:
            S = result.nodes
            assert len(S) < k
            assert separates(L, S, us, ts)
            # minimality, checked exhaustively against all smaller node sets
            for size in range(len(S)):
                for X in combinations(nodes, size):
                    assert not separates(L, frozenset(X), us, ts)


class TestEdgeDisjoint:
    def test_two_paths_on_grid(self):
        H = grid_2x3()
        psys = edge_disjoint_paths(H, "a0", "a2", 2)
        assert psys.mode == "edge"
        assert len(psys) == 2
        used = [e for p in psys.paths for e in p]
        assert len(used) == len(set(used))
        for p in psys.paths:
            v = "a0"
            for eid in p:
                v = H.edge(eid).other(v)
            assert v == "a2"

    def test_insufficient_connectivity(self):
        H = grid_2x3()
        with pytest.raises(InsufficientConnectivityError):
            edge_disjoint_paths(H, "a0", "a2", 3)

    def test_rejects_bad_arguments(self):
        H = grid_2x3()
        with pytest.raises(ValueError):
            edge_disjoint_paths(H, "a0", "a0", 1)
        with pytest.raises(ValueError):
            edge_disjoint_paths(H, "a0", "a2", 0)

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(), st.data())
    def test_paths_are_valid_and_disjoint(self, H, data):
        verts = sorted(H.covered_vertices())
        if len(verts) < 2:
            return
        a = data.draw(st.sampled_from(verts))
        b = data.draw(st.sampled_from([v for v in verts if v != a]))
        k = data.draw(st.integers(min_value=1, max_value=3))
        try:
            psys = edge_disjoint_paths(H, a, b, k)
        except InsufficientConnectivityError:
            return
        assert len(psys) == k
        used = [e for p in psys.paths for e in p]
        assert len(used) == len(set(used))
        for p in psys.paths:
            v = a
            seen = {a}
            for eid in p:
                v = H.edge(eid).other(v)
                assert v not in seen  # simple path
                seen.add(v)
            assert v == b


class TestSplitSides:
    def test_grid_rung_cut(self):
        H = grid_2x3()
        split = split_sides(H, {"a12", "b12"})
        sides = {split.side_c, split.side_d}
        assert frozenset({"a01", "b01", "r0", "r1"}) in sides
        assert frozenset({"r2"}) in sides
        assert split.covered_c | split.covered_d == H.covered_vertices()

    def test_not_a_cut(self):
        H = grid_2x3()
        with pytest.raises(NotTwoSidesError):
            split_sides(H, {"r1"})

    def test_single_component_rejected(self):
        H = Multigraph(
            ["a", "b", "c", "d"],
            [
                edge("ab", "a", "b"),
                edge("bc", "b", "c"),
                edge("cd", "c", "d"),
            ],
        )
        with pytest.raises(NotTwoSidesError):
            split_sides(H, {"bc", "cd"})  # only {ab} is left over

    def test_stranded_vertex(self):
        # star: removing all edges at the center leaves it stranded
        H = Multigraph(
            ["m", "a", "b", "x", "y"],
            [
                edge("ab", "a", "b"),
                edge("am", "a", "m"),
                edge("mx", "m", "x"),
                edge("xy", "x", "y"),
            ],
        )
        with pytest.raises(NotTwoSidesError):
            split_sides(H, {"am", "mx"})
