import json
import logging

import pytest

from graphconj import (
    EnumerationBudgetError,
    FamilyFilter,
    builtin_conjectures,
    canonical_form,
    check_dataset,
    check_graph,
    enumerate_connected_range,
    hunt,
    invariant_record,
    mine_sharp,
    named_graph,
    parse_conjecture,
    regression_theorems,
)
from graphconj.engine import ConjectureReport, Outcome, Witness, scan

C1, C2, C3, C4 = builtin_conjectures()
C3_UNRESTRICTED = parse_conjecture(
    "c3_unrestricted: connected & min_degree >= 1 :: "
    "independent_domination <= min_maximal_matching"
)


def _form(name):
    return canonical_form(named_graph(name)).decode("ascii")


class TestCheckGraph:
    @pytest.mark.parametrize(
        ("conjecture", "graph", "outcome"),
        (
            (C1, "K4", Outcome.HOLDS_EQUAL),
            (C1, "C5", Outcome.HOLDS_EQUAL),
            (C1, "K3_3", Outcome.HOLDS_STRICT),
            (C1, "K1", Outcome.HYPOTHESIS_NOT_MET),
            (C1, "K2", Outcome.HYPOTHESIS_NOT_MET),
            (C1, "P3", Outcome.HOLDS_EQUAL),
            (C2, "K4", Outcome.HYPOTHESIS_NOT_MET),
            (C2, "K3_3", Outcome.HOLDS_EQUAL),
            (C2, "petersen", Outcome.HOLDS_EQUAL),
            (C3, "double_star(2,2)", Outcome.HYPOTHESIS_NOT_MET),
            (C3, "K3_3", Outcome.HOLDS_EQUAL),
            (C3_UNRESTRICTED, "P4", Outcome.FAILS),
            (C3_UNRESTRICTED, "double_star(2,2)", Outcome.FAILS),
            (C4, "P2", Outcome.HOLDS_EQUAL),
            (C4, "P3", Outcome.HOLDS_STRICT),
        ),
    )
    def test_outcomes(self, conjecture, graph, outcome):
        g = named_graph(graph)
        assert check_graph(conjecture, g) is outcome
        assert check_graph(conjecture, g, invariant_record(g)) is outcome

    def test_undefined(self):
        c = parse_conjecture("connected :: independence >= annihilation / max_degree")
        assert check_graph(c, named_graph("K1")) is Outcome.UNDEFINED

    def test_equality_relation(self):
        c = parse_conjecture("connected & bipartite :: independence = matching")
        assert check_graph(c, named_graph("K3_3")) is Outcome.HOLDS_EQUAL
        assert check_graph(c, named_graph("P3")) is Outcome.FAILS


class TestCheckDataset:
    def test_totals(self):
        graphs = [named_graph(name) for name in ("K1", "K4", "C5", "K3_3", "P4")]
        report = check_dataset(C1, graphs, "five graphs")
        assert report.name == "c1"
        assert report.dataset == "five graphs"
        assert report.statement == C1.statement
        assert report.totals == {
            "hypothesis_not_met": 1,
            "holds_strict": 1,
            "holds_equal": 3,
            "fails": 0,
            "undefined": 0,
        }
        assert sum(report.totals.values()) == report.scanned == 5
        assert report.touch_number == 3
        assert report.touch_set == ["C~", "Dhc", "Ch"]
        assert report.counterexamples == []
        assert report.sharp_claim and report.sharp_confirmed

    def test_k1_only(self):
        report = check_dataset(C1, [named_graph("K1")])
        assert report.totals["hypothesis_not_met"] == 1
        assert report.touch_number == 0
        assert not report.sharp_confirmed

    def test_counterexamples_keep_input_order(self):
        graphs = [
            ("a", named_graph("double_star(2,2)")),
            ("b", named_graph("C4")),
            ("c", named_graph("P4")),
        ]
        report = check_dataset(C3_UNRESTRICTED, graphs)
        assert report.fails == 2
        assert [w.graph_id for w in report.counterexamples] == ["a", "c"]
        assert report.counterexamples[1] == Witness("Ch", "c", "2", "1")
        assert report.touch_set == ["Cl"]

    def test_stop_first(self):
        graphs = [named_graph(name) for name in ("C4", "P4", "double_star(2,2)", "K4")]
        report = check_dataset(C3_UNRESTRICTED, graphs, stop_first=True)
        assert report.fails == 1
        assert report.scanned == 2
        assert [w.graph6 for w in report.counterexamples] == ["Ch"]

    def test_undefined_is_counted_and_logged(self, caplog):
        c = parse_conjecture("connected :: independence >= annihilation / max_degree")
        with caplog.at_level(logging.WARNING):
            report = check_dataset(c, [named_graph("K1"), named_graph("K2")])
        assert report.undefined == ["@"]
        assert report.totals["undefined"] == 1
        assert report.fails == 0
        assert "undefined" in caplog.text

    def test_touch_number_adds_over_disjoint_datasets(self, connected_upto_5):
        first, second = connected_upto_5[:15], connected_upto_5[15:]
        whole = check_dataset(C4, connected_upto_5)
        assert whole.touch_number == (
            check_dataset(C4, first).touch_number
            + check_dataset(C4, second).touch_number
        )

    def test_workers_do_not_change_report(self, connected_upto_5):
        serial = check_dataset(C1, connected_upto_5, "upto 5")
        parallel = check_dataset(C1, connected_upto_5, "upto 5", workers=2)
        assert serial.to_json() == parallel.to_json()

    def test_c4_upto_4(self):
        report = check_dataset(C4, enumerate_connected_range(2, 4))
        assert report.scanned == 1 + 2 + 6
        assert report.fails == 0
        for name in ("P2", "C4", "K4"):
            assert _form(name) in report.touch_set

    @pytest.mark.slow
    def test_c2_cubic_upto_10(self):
        graphs = list(enumerate_connected_range(4, 10, FamilyFilter("cubic")))
        assert len(graphs) == 27
        report = check_dataset(C2, graphs)
        assert report.fails == 0
        assert report.totals["hypothesis_not_met"] == 1

    def test_scan_keeps_ids(self):
        items = [("first", named_graph("P4")), ("second", named_graph("K2"))]
        out = [(graph_id, result.outcome) for graph_id, _, result in scan(C4, items)]
        assert out == [("first", Outcome.HOLDS_STRICT), ("second", Outcome.HOLDS_EQUAL)]


class TestReport:
    def test_json_round_trip(self):
        graphs = [named_graph(name) for name in ("P4", "C4", "K2")]
        report = check_dataset(C3_UNRESTRICTED, graphs, "three")
        data = json.loads(report.to_json())
        assert data["schema"] == 1
        assert data["counterexamples"] == [
            {"graph6": "Ch", "graph_id": "Ch", "lhs": "2", "rhs": "1"}
        ]
        assert ConjectureReport.from_dict(data) == report

    def test_fractions_are_strings(self):
        c = parse_conjecture("connected :: harmonic <= matching")
        report = check_dataset(c, [named_graph("P3")])
        (witness,) = report.counterexamples
        assert (witness.lhs, witness.rhs) == ("4/3", "1")


class TestHunt:
    def test_unrestricted_c3_finds_p4(self):
        report = hunt(C3_UNRESTRICTED, 6, stop_first=True)
        assert report.fails == 1
        (witness,) = report.counterexamples
        assert witness.graph6 == _form("P4")
        assert report.scanned <= 1 + 2 + 6
        assert report.dataset == "connected all graphs, 2 <= n <= 6"

    def test_budget(self):
        with pytest.raises(EnumerationBudgetError):
            hunt(C1, 11)

    def test_family(self):
        report = hunt(C2, 8, FamilyFilter("cubic"))
        assert report.scanned == 1 + 2 + 5
        assert report.fails == 0

    def test_c1_on_two_vertices_fails_only_on_k2(self):
        c = parse_conjecture(
            "connected & nontrivial :: "
            "independence >= (annihilation + residue) / max_degree"
        )
        report = hunt(c, 6)
        assert report.fails == 1
        assert report.counterexamples == [Witness("A_", "A_", "1", "2")]

    @pytest.mark.slow
    def test_c1_upto_8(self):
        report = hunt(C1, 8)
        assert report.fails == 0
        assert report.scanned == 1 + 2 + 6 + 21 + 112 + 853 + 11117

    @pytest.mark.slow
    def test_c3_cubic_upto_10(self):
        report = hunt(C3, 10, FamilyFilter("regular", 3))
        assert report.fails == 0
        assert _form("K3_3") in report.touch_set

    @pytest.mark.slow
    def test_c3_quartic_upto_10(self):
        report = hunt(C3, 10, FamilyFilter("regular", 4))
        assert report.scanned == 1 + 1 + 2 + 6 + 16 + 59
        assert report.fails == 0
        assert report.touch_number == 11

    @pytest.mark.slow
    def test_c2_cubic_upto_12(self):
        report = hunt(C2, 12, FamilyFilter("cubic"))
        assert report.fails == 0
        assert report.scanned == 1 + 2 + 5 + 19 + 85
        assert _form("K3_3") in report.touch_set

    @pytest.mark.slow
    def test_workers_do_not_change_hunt(self):
        serial = hunt(C1, 8)
        assert hunt(C1, 8, workers=8).to_json() == serial.to_json()

    @pytest.mark.slow
    def test_c4_upto_8(self):
        assert hunt(C4, 8).fails == 0


class TestMineSharp:
    def test_c1(self):
        graphs = [(name, named_graph(name)) for name in ("K4", "C5", "P4", "K1_3")]
        witnesses = mine_sharp(C1, graphs)
        assert [(w.graph_id, w.lhs, w.rhs) for w in witnesses] == [
            ("K4", "1", "1"),
            ("C5", "2", "2"),
            ("P4", "2", "2"),
        ]

    def test_c2_subcubic(self):
        graphs = enumerate_connected_range(2, 6, FamilyFilter("subcubic"))
        forms = [w.graph6 for w in mine_sharp(C2, graphs)]
        assert _form("K3_3") in forms

    def test_c4_p3(self):
        assert mine_sharp(C4, [named_graph("P3")]) == []


class TestRegressionTheorems:
    def test_catalogue(self):
        pairs = regression_theorems()
        names = [c.name for c, _ in pairs]
        assert "alpha_le_matching" in names
        assert "zero_forcing_le_twice_domination" in names
        assert len(names) == len(set(names)) == 5
        families = {c.name: str(f) for c, f in pairs}
        assert families["zero_forcing_le_twice_domination"] == "cubic"

    @pytest.mark.parametrize(
        ("name", "graph", "outcome"),
        (
            ("alpha_le_matching", "C5", Outcome.HOLDS_EQUAL),
            ("zero_forcing_le_twice_domination", "petersen", Outcome.HOLDS_STRICT),
            ("alpha_ge_residue", "K1_3", Outcome.HOLDS_EQUAL),
            ("alpha_le_annihilation", "P4", Outcome.HOLDS_EQUAL),
        ),
    )
    def test_examples(self, name, graph, outcome):
        theorems = {c.name: c for c, _ in regression_theorems()}
        assert check_graph(theorems[name], named_graph(graph)) is outcome

    def test_small_scale(self, subtests):
        for c, family in regression_theorems():
            with subtests.test(theorem=c.name):
                n_max = 6 if family.degree_bound is None else 8
                assert hunt(c, n_max, family).fails == 0

    @pytest.mark.slow
    def test_acceptance_scale(self, subtests):
        for c, family in regression_theorems():
            with subtests.test(theorem=c.name):
                n_max = 8 if family.degree_bound is None else 12
                assert hunt(c, n_max, family).fails == 0

