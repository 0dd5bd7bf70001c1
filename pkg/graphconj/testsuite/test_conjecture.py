import pickle
import random
from fractions import Fraction

import pytest

from graphconj import (
    UNDEFINED,
    ConjectureSyntaxError,
    GraphInvariants,
    UnknownIdentifierError,
    builtin_conjectures,
    evaluate_expr,
    evaluate_hypothesis,
    format_conjecture,
    invariant_record,
    named_graph,
    parse_conjecture,
    parse_conjecture_file,
)
from graphconj.conjecture import (
    KEYWORDS,
    RELATIONS,
    Atom,
    BinOp,
    Comparison,
    Conjecture,
    Const,
    Ref,
    appendix_conjectures,
    compare,
    format_expr,
    parse_conjecture_lines,
)


class TestParse:
    def test_full(self):
        c = parse_conjecture(
            "c1: connected & nontrivial :: independence >= "
            "(annihilation + residue) / max_degree [sharp]"
        )
        assert c == Conjecture(
            "c1",
            (Atom("connected"), Atom("nontrivial")),
            Ref("independence"),
            ">=",
            BinOp(
                "/",
                BinOp("+", Ref("annihilation"), Ref("residue")),
                Ref("max_degree"),
            ),
            True,
        )
        assert c.keywords() == ["independence", "annihilation", "residue", "max_degree"]

    def test_default_name(self):
        c = parse_conjecture("connected :: independence <= matching")
        assert c.name == "conjecture"
        assert not c.sharp
        c = parse_conjecture("connected :: order <= size", default_name="x")
        assert c.name == "x"

    @pytest.mark.parametrize(
        ("text", "hypothesis"),
        (
            ("connected & regular", (Atom("connected"), Atom("regular"))),
            ("cubic & claw_free", (Atom("cubic"), Atom("claw_free"))),
            ("r_regular(4)", (Atom("r_regular", 4),)),
            ("not_iso(K4)", (Atom("not_iso", "K4"),)),
            ("not_iso(K_{3,3})", (Atom("not_iso", "K3_3"),)),
            ("not_iso(double_star(2, 2))", (Atom("not_iso", "double_star(2,2)"),)),
            ("max_degree <= 3", (Comparison("max_degree", "<=", 3),)),
            ("order >= 1", (Comparison("order", ">=", 1),)),
            ("min_degree == 1", (Comparison("min_degree", "=", 1),)),
            ("bipartite & triangle_free & konig_egervary", (
                Atom("bipartite"),
                Atom("triangle_free"),
                Atom("konig_egervary"),
            )),
        ),
    )
    def test_hypotheses(self, text, hypothesis):
        c = parse_conjecture(f"{text} :: independence <= order")
        assert c.hypothesis == hypothesis

    @pytest.mark.parametrize(
        ("text", "expr"),
        (
            ("1/2 * order", BinOp("*", Const(Fraction(1, 2)), Ref("order"))),
            ("order / 2", BinOp("/", Ref("order"), Const(2))),
            ("-2", Const(-2)),
            ("-independence", BinOp("*", Const(-1), Ref("independence"))),
            ("+size", Ref("size")),
            ("3/6", Const(Fraction(1, 2))),
            (
                "matching - domination - 1",
                BinOp("-", BinOp("-", Ref("matching"), Ref("domination")), Const(1)),
            ),
        ),
    )
    def test_expressions(self, text, expr):
        assert parse_conjecture(f"connected :: {text} <= order").lhs == expr

    def test_relations(self):
        assert parse_conjecture("connected :: order = order").relation == "="
        assert parse_conjecture("connected :: order == order").relation == "="
        assert parse_conjecture("connected :: order >= size").relation == ">="
        c = parse_conjecture("connected :: (order + 1) * 2 <= size")
        assert c.relation == "<="
        assert c.lhs == BinOp("*", BinOp("+", Ref("order"), Const(1)), Const(2))

    def test_comments_are_ignored(self):
        c = parse_conjecture("connected :: order <= size  # trailing note")
        assert c.rhs == Ref("size")

    @pytest.mark.parametrize(
        ("text", "message"),
        (
            ("connected :: independence < matching", "unsupported relation '<'"),
            ("connected :: independence != matching", "unsupported relation '!='"),
            ("connected :: order <= size <= order", "exactly one relation"),
            (":: independence <= matching", "empty hypothesis"),
            ("connected independence <= matching", "expected '::'"),
            ("connected :: independence", "expected one of"),
            ("connected :: independence <=", "empty expression"),
            ("connected & :: order <= size", "empty hypothesis atom"),
            ("r_regular(x) :: order <= size", "natural number"),
            ("r_regular :: order <= size", "needs one argument"),
            ("not_iso() :: order <= size", "needs one argument"),
            ("not_iso(Q9) :: order <= size", "unknown named graph"),
            ("cubic(3) :: order <= size", "takes no argument"),
            ("independence :: order <= size", "needs a comparison"),
            ("independence <= 3 :: order <= size", "can be compared"),
            ("max_degree < 3 :: order <= size", "unsupported comparison"),
            ("max_degree <= x :: order <= size", "natural number"),
            ("connected :: order <= size [sharp] [sharp]", "annotation"),
            ("connected :: order [sharp] <= size", "annotation"),
            ("connected :: 1/0 <= size", "zero denominator"),
            ("connected :: 1.5 <= size", "p/q literal"),
            ("connected :: order ** 2 <= size", 'unexpected "**"'),
            ("connected :: 'order' <= size", "lexical error"),
            ("connected :: order <= size\nconnected :: order <= size", "one line"),
        ),
    )
    def test_errors(self, text, message):
        with pytest.raises(ConjectureSyntaxError) as exc:
            parse_conjecture(text)
        assert message in str(exc.value)

    @pytest.mark.parametrize(
        ("text", "col"),
        (
            ("connected :: (order <= size", 14),
            ("r_regular(3 :: order <= size", 10),
        ),
    )
    def test_unclosed_parenthesis(self, text, col):
        with pytest.raises(ConjectureSyntaxError) as exc:
            parse_conjecture(text)
        assert "unclosed parenthesis" in str(exc.value)
        assert exc.value.col == col

    @pytest.mark.parametrize(
        ("text", "name", "col"),
        (
            ("connected :: girth <= order", "girth", 14),
            ("planar :: order <= size", "planar", 1),
            ("connected & acyclic :: order <= size", "acyclic", 13),
        ),
    )
    def test_unknown_identifiers(self, text, name, col):
        with pytest.raises(UnknownIdentifierError) as exc:
            parse_conjecture(text)
        assert exc.value.name == name
        assert exc.value.col == col

    def test_error_location(self):
        with pytest.raises(ConjectureSyntaxError) as exc:
            parse_conjecture("connected :: order < size", lineno=7, filename="c.txt")
        assert exc.value.lineno == 7
        assert exc.value.filename == "c.txt"
        assert exc.value.col == 20
        assert str(exc.value).startswith("While opening c.txt, in line 7: column 20:")


class TestFormat:
    @pytest.mark.parametrize(
        ("text", "canonical"),
        (
            ("a:connected::order<=size", "a: connected :: order <= size"),
            ("a: connected :: (order) <= ((size))", "a: connected :: order <= size"),
            (
                "a: connected :: order - (size - matching) <= 1",
                "a: connected :: order - (size - matching) <= 1",
            ),
            (
                "a: connected :: (order - size) - matching <= 1",
                "a: connected :: order - size - matching <= 1",
            ),
            (
                "a: connected :: order * 1/2 <= size / (2 * matching)",
                "a: connected :: order * (1/2) <= size / (2 * matching)",
            ),
            (
                "a: connected :: 1/2 * order >= -1",
                "a: connected :: 1/2 * order >= -1",
            ),
            (
                "a: max_degree==3 & connected :: order == size [sharp]",
                "a: max_degree = 3 & connected :: order = size [sharp]",
            ),
            (
                "a: not_iso( K_4 ) :: order <= size",
                "a: not_iso(K4) :: order <= size",
            ),
        ),
    )
    def test_canonical_text(self, text, canonical):
        c = parse_conjecture(text)
        assert format_conjecture(c) == canonical
        assert str(c) == canonical
        assert parse_conjecture(canonical) == c

    def test_builtins_round_trip(self):
        for c in builtin_conjectures() + appendix_conjectures():
            assert parse_conjecture(format_conjecture(c)) == c

    def test_format_expr(self):
        e = BinOp("*", Const(-1), BinOp("+", Ref("order"), Ref("size")))
        assert format_expr(e) == "-1 * (order + size)"
        assert format_expr(Const(Fraction(-3, 4))) == "-3/4"

    def test_statement(self):
        c = builtin_conjectures()[0]
        assert c.statement == (
            "connected & order >= 3 :: independence >= "
            "(annihilation + residue) / max_degree"
        )

    @staticmethod
    def _random_expr(rng, depth):
        if depth == 0 or rng.random() < 0.25:
            if rng.random() < 0.6:
                return Ref(rng.choice(sorted(KEYWORDS)))
            return Const(Fraction(rng.randint(0, 12), rng.randint(1, 5)))
        return BinOp(
            rng.choice("+-*/"),
            TestFormat._random_expr(rng, depth - 1),
            TestFormat._random_expr(rng, depth - 1),
        )

    def test_random_round_trip(self, subtests):
        atoms = parse_conjecture(
            "connected & nontrivial & regular & cubic & subcubic & claw_free & "
            "bipartite & triangle_free & konig_egervary & r_regular(4) & "
            "not_iso(K4) & max_degree <= 3 & min_degree >= 1 & order = 6 "
            ":: order <= size"
        ).hypothesis
        rng = random.Random(4242)
        for index in range(300):
            c = Conjecture(
                f"r{index}",
                tuple(rng.sample(atoms, rng.randint(1, 3))),
                self._random_expr(rng, 4),
                rng.choice(RELATIONS),
                self._random_expr(rng, 4),
                rng.random() < 0.5,
            )
            text = format_conjecture(c)
            with subtests.test(text=text):
                assert parse_conjecture(text) == c


class TestFiles:
    def test_lines(self):
        lines = [
            "# conjectures",
            "",
            "connected :: independence <= order",
            "named: connected :: matching <= order  # comment",
        ]
        out = parse_conjecture_lines(lines, "c.txt")
        assert [c.name for c in out] == ["conjecture_3", "named"]

    def test_error_line(self):
        with pytest.raises(UnknownIdentifierError) as exc:
            parse_conjecture_lines(["connected :: order <= size", "c :: bad"], "c.txt")
        assert exc.value.lineno == 2
        assert exc.value.filename == "c.txt"

    def test_file(self, tmp_path):
        path = tmp_path / "conj.txt"
        path.write_text("x: connected :: order >= 1\n", encoding="utf-8")
        (c,) = parse_conjecture_file(path)
        assert c.name == "x"

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            parse_conjecture_file(tmp_path / "nope.txt")

    def test_builtins(self):
        builtins = builtin_conjectures()
        assert [c.name for c in builtins] == ["c1", "c2", "c3", "c4"]
        assert all(c.sharp for c in builtins)
        assert builtins[1].hypothesis == (
            Atom("connected"),
            Comparison("max_degree", "<=", 3),
            Atom("not_iso", "K4"),
        )
        appendix = appendix_conjectures()
        assert [c.name for c in appendix] == [
            "conjecture_one",
            "conjecture_two",
            "conjecture_three",
            "conjecture_four",
        ]
        for a, b in zip(appendix, builtins):
            assert (a.lhs, a.relation, a.rhs) == (b.lhs, b.relation, b.rhs)


class TestEvaluate:
    def test_exact_values(self):
        inv = GraphInvariants(named_graph("K4"))
        c1 = builtin_conjectures()[0]
        assert evaluate_expr(c1.lhs, inv) == 1
        assert evaluate_expr(c1.rhs, inv) == 1
        c4 = builtin_conjectures()[3]
        assert evaluate_expr(c4.rhs, GraphInvariants(named_graph("C5"))) == Fraction(
            5, 2
        )

    def test_on_record(self):
        rec = invariant_record(named_graph("P4"))
        e = parse_conjecture("connected :: harmonic - 1/2 <= order").lhs
        assert evaluate_expr(e, rec) == Fraction(4, 3)

    def test_division_by_zero(self):
        inv = GraphInvariants(named_graph("K1"))
        c1 = builtin_conjectures()[0]
        assert evaluate_expr(c1.rhs, inv) is UNDEFINED
        e = parse_conjecture("connected :: order + 1 / (size - size) <= 1").lhs
        assert evaluate_expr(e, inv) is UNDEFINED

    def test_undefined_is_singleton(self):
        assert pickle.loads(pickle.dumps(UNDEFINED)) is UNDEFINED
        assert repr(UNDEFINED) == "UNDEFINED"

    @pytest.mark.parametrize(
        ("lhs", "relation", "rhs", "expected"),
        (
            (Fraction(1), "<=", Fraction(1), True),
            (Fraction(1, 3), "<=", Fraction(1, 4), False),
            (Fraction(2), ">=", Fraction(3, 2), True),
            (Fraction(2), "=", Fraction(4, 2), True),
        ),
    )
    def test_compare(self, lhs, relation, rhs, expected):
        assert compare(lhs, relation, rhs) is expected

    @pytest.mark.parametrize(
        ("hypothesis", "graph", "expected"),
        (
            ("connected & nontrivial", "K1", False),
            ("connected & nontrivial", "K2", True),
            ("connected & max_degree <= 3 & not_iso(K4)", "K4", False),
            ("connected & max_degree <= 3 & not_iso(K4)", "K3_3", True),
            ("connected & max_degree <= 3 & not_iso(K4)", "K1_4", False),
            ("connected & regular & min_degree >= 1", "double_star(2,2)", False),
            ("connected & regular & min_degree >= 1", "C5", True),
            ("connected & regular & min_degree >= 1", "K1", False),
            ("cubic", "petersen", True),
            ("cubic", "C5", False),
            ("r_regular(2)", "C5", True),
            ("r_regular(3)", "K4", True),
            ("subcubic & bipartite", "P4", True),
            ("claw_free", "K1_3", False),
            ("triangle_free", "C5", True),
            ("triangle_free", "K4", False),
            ("konig_egervary", "K3_3", True),
            ("konig_egervary", "C5", False),
            ("order >= 5 & min_degree = 2", "C5", True),
        ),
    )
    def test_hypothesis(self, hypothesis, graph, expected):
        c = parse_conjecture(f"{hypothesis} :: order <= order")
        g = named_graph(graph)
        assert evaluate_hypothesis(c.hypothesis, GraphInvariants(g)) is expected
        assert evaluate_hypothesis(c.hypothesis, invariant_record(g)) is expected

    def test_not_iso_any_labelling(self):
        c = parse_conjecture("not_iso(P4) :: order <= order")
        g = named_graph("P4").relabel([2, 0, 3, 1])
        assert not evaluate_hypothesis(c.hypothesis, GraphInvariants(g))
