"""The constructive solver: base cases, parallel-edge constructions, the
complete-graph endgame, the Menger branch, and the separator branch."""

from itertools import combinations

import pytest

from kempe_minors.coloring import MatchingPartition
from kempe_minors.errors import InternalAssertionError, InvalidInputError
from kempe_minors.generators import (
    complete_graph,
    delete_vertex,
    gen_circulant,
    k4_seed,
    splice,
)
from kempe_minors.graph import Multigraph, edge
from kempe_minors.solver import (
    BagSystem,
    assert_complete_fallback,
    solve,
    solve_complete,
    solve_parallel,
    verify_solution,
)


def bags_as_sets(system):
    return sorted(sorted(b) for b in system.bags)


def k5_round_robin():
    """K_5 with five near-perfect matching classes; class i misses vertex i."""
    H = complete_graph(5)
    names = H.vertices

    def eid(u, v):
        return f"e{min(u, v)}-{max(u, v)}"

    classes = []
    for i in range(5):
        cls = {
            eid(names[u], names[v])
            for u, v in combinations(range(5), 2)
            if (u + v) % 5 == (2 * i) % 5
        }
        classes.append(cls)
    return H, MatchingPartition.of(classes)


def parallel_ell2():
    """Two parallel edges plus two chained two-edge classes."""
    H = Multigraph(
        ["x", "y", "a1", "c", "b2"],
        [
            edge("e", "x", "y"),
            edge("f", "x", "y"),
            edge("xa1", "x", "a1"),
            edge("yc", "y", "c"),
            edge("xc", "x", "c"),
            edge("yb2", "y", "b2"),
        ],
    )
    part = MatchingPartition.of([{"e"}, {"f"}, {"xa1", "yc"}, {"xc", "yb2"}])
    return H, part


def parallel_ell3():
    H = Multigraph(
        ["x", "y", "p", "q", "r"],
        [
            edge("e", "x", "y"),
            edge("f", "x", "y"),
            edge("xp", "x", "p"),
            edge("yq", "y", "q"),
            edge("xq", "x", "q"),
            edge("yr", "y", "r"),
            edge("xr", "x", "r"),
            edge("yp", "y", "p"),
        ],
    )
    part = MatchingPartition.of(
        [{"e"}, {"f"}, {"xp", "yq"}, {"xq", "yr"}, {"xr", "yp"}]
    )
    return H, part


class TestVerifySolution:
    def setup_method(self):
        self.H = Multigraph(
            ["a", "b", "c", "d"],
            [
                edge("ab", "a", "b"),
                edge("bc", "b", "c"),
                edge("cd", "c", "d"),
                edge("ad", "a", "d"),
            ],
        )
        self.part = MatchingPartition.of([{"ab", "cd"}, {"bc", "ad"}])
        self.T = frozenset({"ab", "bc"})

    def test_accepts_valid(self):
        bags = BagSystem.of([{"ab", "ad"}, {"bc", "cd"}])
        assert verify_solution(self.H, self.part, self.T, bags)

    def test_wrong_bag_count(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab"}])
        )
        assert any("1 bags for 2 classes" in v for v in verdict.violations)

    def test_empty_bag(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab"}, set()])
        )
        assert any("empty" in v for v in verdict.violations)

    def test_unknown_edge(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab"}, {"zz"}])
        )
        assert any("unknown edges" in v for v in verdict.violations)

    def test_overlapping_bags(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab", "bc"}, {"bc", "cd"}])
        )
        assert any("occurs in bags 0 and 1" in v for v in verdict.violations)

    def test_disconnected_bag(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab", "cd"}, {"bc"}])
        )
        assert any("not a connected edge set" in v for v in verdict.violations)

    def test_bag_without_transversal_edge(self):
        verdict = verify_solution(
            self.H, self.part, self.T, BagSystem.of([{"ab"}, {"cd", "ad"}])
        )
        assert any("0 transversal edges" in v for v in verdict.violations)
        assert any("'bc' is in no bag" in v for v in verdict.violations)

    def test_nonincident_bags(self):
        H = Multigraph(
            ["a", "b", "c", "d", "e"],
            [
                edge("ab", "a", "b"),
                edge("bc", "b", "c"),
                edge("cd", "c", "d"),
                edge("de", "d", "e"),
            ],
        )
        part = MatchingPartition.of([{"ab", "cd"}, {"bc", "de"}])
        verdict = verify_solution(
            H, part, {"ab", "de"}, BagSystem.of([{"ab"}, {"de"}])
        )
        assert any("not incident" in v for v in verdict.violations)


class TestBaseCases:
    def test_single_class(self):
        H = Multigraph(["a", "b"], [edge("ab", "a", "b")])
        part = MatchingPartition.of([{"ab"}])
        bags, trace = solve(H, part, {"ab"})
        assert bags_as_sets(bags) == [["ab"]]
        assert trace.kinds() == ("base",)

    def test_two_classes_on_a_path(self):
        H = Multigraph(
            ["a", "b", "c", "d"],
            [edge("p0", "a", "b"), edge("p1", "b", "c"), edge("p2", "c", "d")],
        )
        part = MatchingPartition.of([{"p0", "p2"}, {"p1"}])
        bags, trace = solve(H, part, {"p0", "p1"})
        assert trace.kinds() == ("base",)
        assert verify_solution(H, part, {"p0", "p1"}, bags)

    def test_two_classes_on_a_cycle(self):
        H = Multigraph(
            ["a", "b", "c", "d"],
            [
                edge("ab", "a", "b"),
                edge("bc", "b", "c"),
                edge("cd", "c", "d"),
                edge("ad", "a", "d"),
            ],
        )
        part = MatchingPartition.of([{"ab", "cd"}, {"bc", "ad"}])
        for T in [{"ab", "bc"}, {"ab", "ad"}, {"cd", "bc"}, {"cd", "ad"}]:
            bags, _ = solve(H, part, T)
            assert verify_solution(H, part, T, bags)


class TestParallel:
    def test_ell2_matches_expected_shape(self):
        H, part = parallel_ell2()
        bags = solve_parallel(H, part, {"e", "f", "xa1", "yb2"})
        assert bags_as_sets(bags) == [["e"], ["f"], ["xa1", "xc", "yc"], ["yb2"]]

    def test_ell2_incident_transversal_gives_singletons(self):
        H, part = parallel_ell2()
        bags = solve_parallel(H, part, {"e", "f", "yc", "xc"})
        assert bags_as_sets(bags) == [["e"], ["f"], ["xc"], ["yc"]]

    def test_ell2_all_transversals(self):
        H, part = parallel_ell2()
        for t2 in ("xa1", "yc"):
            for t3 in ("xc", "yb2"):
                T = {"e", "f", t2, t3}
                assert verify_solution(H, part, T, solve_parallel(H, part, T))

    def test_ell3_all_transversals(self):
        H, part = parallel_ell3()
        for t2 in ("xp", "yq"):
            for t3 in ("xq", "yr"):
                for t4 in ("xr", "yp"):
                    T = {"e", "f", t2, t3, t4}
                    bags = solve_parallel(H, part, T)
                    assert verify_solution(H, part, T, bags)

    def test_singleton_peel(self):
        H = Multigraph(
            ["x", "y", "z"],
            [edge("e", "x", "y"), edge("f", "x", "y"), edge("g", "x", "z")],
        )
        part = MatchingPartition.of([{"e"}, {"f"}, {"g"}])
        bags = solve_parallel(H, part, {"e", "f", "g"})
        assert bags_as_sets(bags) == [["e"], ["f"], ["g"]]

    def test_requires_parallel_edges(self):
        H, part = k4_seed()
        with pytest.raises(InvalidInputError):
            solve_parallel(H, part, {"e01", "e02", "e03"})


class TestCompleteEndgame:
    def test_fallback_certificate_on_k5(self):
        H, part = k5_round_robin()
        cert = assert_complete_fallback(H, part)
        assert cert.max_deg == 4 and cert.k == 5
        assert cert.order_slack == 0
        assert all(s == 0 for s in cert.end_slack.values())

    def test_fallback_rejects_cycle(self):
        H = Multigraph(
            ["a", "b", "c", "d", "e"],
            [
                edge("ab", "a", "b"),
                edge("bc", "b", "c"),
                edge("cd", "c", "d"),
                edge("de", "d", "e"),
                edge("ae", "a", "e"),
            ],
        )
        part = MatchingPartition.of([{"ab", "cd"}, {"bc", "de"}, {"ae"}])
        with pytest.raises(InternalAssertionError):
            assert_complete_fallback(H, part)

    def test_solve_complete_exhaustive_k4(self):
        H = complete_graph(4)
        for T in combinations(H.edge_ids, 4):
            bags = solve_complete(H, T)
            part = MatchingPartition.of([{t} for t in sorted(T)])
            assert verify_solution(H, part, T, bags)

    def test_solve_complete_input_validation(self):
        with pytest.raises(InvalidInputError):
            solve_complete(complete_graph(2), {"e0-1"})
        H = complete_graph(4)
        with pytest.raises(InvalidInputError):
            solve_complete(H, {"e0-1", "e0-2"})  # |T| != n
        missing = H.without_edges({"e0-1"})
        with pytest.raises(InvalidInputError):
            solve_complete(missing, {"e0-2", "e0-3", "e1-2", "e1-3"})
        multi = Multigraph(
            ["a", "b", "c"],
            [
                edge("ab", "a", "b"),
                edge("ab2", "a", "b"),
                edge("bc", "b", "c"),
                edge("ac", "a", "c"),
            ],
        )
        with pytest.raises(InvalidInputError):
            solve_complete(multi, {"ab", "bc", "ac"})

    def test_solve_routes_through_fallback(self):
        H, part = k5_round_robin()
        T = frozenset(min(c) for c in part.classes)
        bags, trace = solve(H, part, T)
        assert trace.kinds() == ("complete",)
        assert verify_solution(H, part, T, bags)


class TestMengerBranch:
    def test_circulant_solves_by_menger(self):
        H, part = gen_circulant(5, (0, 1, 2))
        T = frozenset(min(c) for c in part.classes)
        bags, trace = solve(H, part, T)
        assert "menger" in trace.kinds()
        assert verify_solution(H, part, T, bags)

    def test_k4_seed_all_transversals(self):
        H, part = k4_seed()
        for t0 in ("e01", "e23"):
            for t1 in ("e02", "e13"):
                for t2 in ("e03", "e12"):
                    T = {t0, t1, t2}
                    bags, _ = solve(H, part, T)
                    assert verify_solution(H, part, T, bags)


class TestSeparatorBranch:
    @staticmethod
    def thin_cut_instance():
        """Splice a circulant with K_4, then delete one bridge endpoint; the
        two surviving bridges are a cut one smaller than the class count."""
        a = gen_circulant(5, (0, 1, 2))
        b = k4_seed()
        sh, sp = splice(a, a[0].vertices[0], b, "0")
        H, part = delete_vertex(sh, sp, sh.edge("f0").ends[0])
        T = frozenset(
            next(e for e in sorted(c) if e.startswith("b.")) for c in part.classes
        )
        return H, part, T

    def test_separator_step_and_lift(self):
        H, part, T = self.thin_cut_instance()
        bags, trace = solve(H, part, T)
        assert verify_solution(H, part, T, bags)
        steps = [s for s in trace.steps if s.kind == "separator"]
        assert steps, f"no separator step in {trace.kinds()}"
        step = steps[0]
        S = step.details["separator"]
        assert len(S) == part.k - 1
        avoiding = [i for i, c in enumerate(part.classes) if not (c & S)]
        assert len(avoiding) == 1
        assert step.details["side_c"] and step.details["side_d"]
        assert set(step.details["lift_paths"]) == set(S)


class TestInputValidation:
    def test_bad_partition_rejected(self):
        H, _ = k4_seed()
        bad = MatchingPartition.of([{"e01", "e02"}, {"e03", "e12"}, {"e13", "e23"}])
        with pytest.raises(InvalidInputError):
            solve(H, bad, {"e01", "e03", "e13"})

    def test_bad_transversal_rejected(self):
        H, part = k4_seed()
        with pytest.raises(InvalidInputError):
            solve(H, part, {"e01", "e23", "e02"})

    def test_non_kempe_rejected(self):
        H = Multigraph(
            ["a", "b", "c", "d"], [edge("ab", "a", "b"), edge("cd", "c", "d")]
        )
        part = MatchingPartition.of([{"ab"}, {"cd"}])
        with pytest.raises(InvalidInputError):
            solve(H, part, {"ab", "cd"})
