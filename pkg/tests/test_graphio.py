"""Instance text-format tests."""
import pytest

from fvs_toolkit.generators import GenSpec, gen_instance
from fvs_toolkit.graphio import (
    GraphFormatError,
    dump_graph,
    genspec_comment,
    genspec_from_text,
    load_graph,
    parse_graph,
    save_graph,
)
from fvs_toolkit.graphs import WeightedDigraph

GOOD = """\
# a comment
n 3 tournament
w 1 2 3

a 0 1
a 1 2
a 2 0
S 0 2
"""


def test_parse_good_instance():
    g, terms = parse_graph(GOOD)
    assert g.n == 3 and g.tournament
    assert g.weights == (1, 2, 3)
    assert sorted(g.arcs()) == [(0, 1), (1, 2), (2, 0)]
    assert terms == frozenset({0, 2})


def test_parse_without_terminals_gives_none():
    g, terms = parse_graph("n 2\nw 1 1\na 0 1\n")
    assert terms is None and g.arc_count == 1


def test_parse_empty_terminal_line():
    _, terms = parse_graph("n 2\nw 1 1\nS\n")
    assert terms == frozenset()


def test_dump_parse_round_trip():
    for seed in range(10):
        spec = GenSpec(n=9, alpha=2, cross_arc_prob=0.4, digon_allowed=bool(seed % 2),
                       weight_max=5, terminal_fraction=0.4, seed=seed)
        g, terms = gen_instance(spec)
        text = dump_graph(g, terms, comments=(genspec_comment(spec),))
        g2, terms2 = parse_graph(text)
        assert g2 == g and terms2 == terms
        assert genspec_from_text(text) == spec
        assert dump_graph(g2, terms2, comments=(genspec_comment(spec),)) == text


def test_dump_canonical_layout():
    g = WeightedDigraph(3, [(2, 0), (0, 1)], weights=[4, 0, 1])
    assert dump_graph(g) == "n 3\nw 4 0 1\na 0 1\na 2 0\n"
    assert dump_graph(g, frozenset()) == "n 3\nw 4 0 1\na 0 1\na 2 0\nS\n"
    assert dump_graph(g, frozenset({2, 1})).endswith("S 1 2\n")


def test_save_load(tmp_path):
    g = WeightedDigraph(3, [(0, 1), (1, 2), (2, 0)], tournament=True)
    path = tmp_path / "t.graph"
    save_graph(str(path), g, frozenset({1}))
    g2, terms = load_graph(str(path))
    assert g2 == g and terms == frozenset({1})


@pytest.mark.parametrize("text,fragment", [
    ("", "missing n"),
    ("w 1\n", "before"),
    ("n 2\n", "missing w"),
    ("n 2\na 0 1\n", "before"),
    ("n 2\nn 2\n", "duplicate"),
    ("n 2\nw 1 1\nw 1 1\n", "duplicate"),
    ("n x\n", "integer"),
    ("n 2 foo\n", "n line"),
    ("n 2\nw 1\n", "2"),
    ("n 2\nw 1 -1\n", "weight"),
    ("n 2\nw 1 1\na 0\n", "arc"),
    ("n 2\nw 1 1\na 0 2\n", "out of range"),
    ("n 2\nw 1 1\na 0 0\n", "self-loop"),
    ("n 2\nw 1 1\na 0 1\na 0 1\n", "duplicate"),
    ("n 2\nw 1 1\nS 0 0\n", "duplicate"),
    ("n 2\nw 1 1\nS 5\n", "out of range"),
    ("n 2\nw 1 1\nS 0\nS 1\n", "duplicate"),
    ("n 2\nw 1 1\nz 1\n", "unknown"),
    ("n 2 tournament\nw 1 1\n", "tournament"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert fragment in str(err.value)
    assert "line" in str(err.value)


def test_error_reports_line_number():
    with pytest.raises(GraphFormatError) as err:
        parse_graph("# c\nn 2\nw 1 1\na 0 0\n")
    assert err.value.line_no == 4


def test_genspec_from_text_absent():
    assert genspec_from_text("n 2\nw 1 1\n") is None
    assert genspec_from_text("# genspec garbage\nn 2\nw 1 1\n") is None
