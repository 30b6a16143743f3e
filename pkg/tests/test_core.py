import json
from itertools import combinations

import pytest
from hypothesis import given, settings

from coxjsj.core import (INF, CoxeterError, ParseError, coxeter_diagram_components,
                         diagram_components, finite_type, from_json, group_order,
                         induced_subsystem, is_complete, new_system, parse_cox,
                         serialize_cox, to_json)
from coxjsj.fixtures import complete, figure1
from coxjsj.oracle import coset_enumerate

from conftest import systems


def test_figure2_construction(fig2):
    assert fig2.generators == ("a", "b", "c", "d", "e")
    assert fig2.m("a", "b") == 3 and fig2.m("b", "d") == 2 and fig2.m("c", "d") == 3
    assert fig2.m("a", "e") == INF
    assert fig2.m("c", "c") == 1
    assert len(fig2.edges) == 6


def test_rank_one():
    W = new_system(["s"])
    assert W.rank == 1 and W.edges == ()
    assert diagram_components(W, ["s"]) == [("s",)]


@pytest.mark.parametrize("gens, orders", [
    (["a", "b"], [("a", "b", 3), ("b", "a", 3)]),
    (["a", "a"], []),
    (["a", "b"], [("a", "b", 1)]),
    (["a", "b"], [("a", "a", 3)]),
    (["a", "b"], [("a", "c", 3)]),
])
def test_new_system_errors(gens, orders):
    with pytest.raises(CoxeterError):
        new_system(gens, orders)


def test_generators_sorted():
    W = new_system(["c", "a", "b"], [("c", "a", 4)])
    assert W.generators == ("a", "b", "c")
    assert W.edges == (("a", "c", 4),)


def test_explicit_infinity_not_stored():
    W = new_system("ab", [("a", "b", INF)])
    assert W.edges == () and W.m("a", "b") == INF


def test_is_complete(fig2):
    assert is_complete(fig2, "cd")
    assert is_complete(fig2, ())
    assert is_complete(fig2, "a")
    assert not is_complete(fig2, "be")
    with pytest.raises(CoxeterError):
        is_complete(fig2, "az")


def test_induced_subsystem(fig2):
    R = induced_subsystem(fig2, "bcd")
    assert R.generators == ("b", "c", "d")
    assert R.edges == (("b", "c", 3), ("b", "d", 2), ("c", "d", 3))
    assert induced_subsystem(fig2, fig2.generators) == fig2
    empty = induced_subsystem(fig2, ())
    assert empty.rank == 0 and empty.edges == ()


def test_diagram_components(fig2, fig1):
    assert diagram_components(fig2, "abe") == [("a", "b"), ("e",)]
    assert diagram_components(fig2, ()) == []
    assert diagram_components(fig1, "acd") == [("a",), ("c",), ("d",)]


def test_coxeter_diagram_components(fig2):
    W = new_system("ab", [("a", "b", 2)])
    assert coxeter_diagram_components(W, "ab") == [("a",), ("b",)]
    assert coxeter_diagram_components(fig2, "bcd") == [("b", "c", "d")]
    assert coxeter_diagram_components(fig2, "e") == [("e",)]


def test_finite_type_examples(fig2):
    labels = finite_type(fig2, "bcd")
    assert [lab.name for lab in labels] == ["A3"]
    assert coset_enumerate(fig2, "bcd").order == 24 == labels[0].order
    assert [lab.name for lab in finite_type(new_system("st", [("s", "t", 7)]), "st")] == ["I2(7)"]
    assert finite_type(new_system("st"), "st") is None
    assert finite_type(fig2, ()) == []


def _template(names, pairs):
    """Coxeter-diagram description -> P-diagram (unlisted pairs commute)."""
    lookup = {frozenset(p[:2]): p[2] for p in pairs}
    return new_system(names, [(s, t, lookup.get(frozenset((s, t)), 2))
                              for s, t in combinations(names, 2)])


@pytest.mark.parametrize("name, names, pairs", [
    ("B3", "abc", [("a", "b", 3), ("b", "c", 4)]),
    ("F4", "abcd", [("a", "b", 3), ("b", "c", 4), ("c", "d", 3)]),
    ("H3", "abc", [("a", "b", 5), ("b", "c", 3)]),
    ("H4", "abcd", [("a", "b", 5), ("b", "c", 3), ("c", "d", 3)]),
    ("D5", "abcde", [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("c", "e", 3)]),
    ("E6", "abcdef", [("a", "c", 3), ("c", "d", 3), ("d", "e", 3), ("e", "f", 3), ("b", "d", 3)]),
    ("E7", "abcdefg", [("a", "c", 3), ("c", "d", 3), ("d", "e", 3), ("e", "f", 3),
                       ("f", "g", 3), ("b", "d", 3)]),
    ("B2", "ab", [("a", "b", 4)]),
])
def test_finite_type_templates(name, names, pairs):
    W = _template(names, pairs)
    assert [lab.name for lab in finite_type(W, W.generators)] == [name]


@pytest.mark.parametrize("names, pairs", [
    ("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]),  # affine A2 triangle
    ("abc", [("a", "b", 4), ("b", "c", 4)]),                 # affine C2
    ("abcd", [("a", "b", 3), ("b", "c", 5), ("c", "d", 3)]),
    ("abcde", [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("b", "e", 3), ("c", "a", 3)]),
])
def test_finite_type_rejects_infinite(names, pairs):
    W = _template(names, pairs)
    assert finite_type(W, W.generators) is None


def test_finite_type_product():
    W = _template("abcd", [("a", "b", 3), ("c", "d", 4)])
    assert sorted(lab.name for lab in finite_type(W, "abcd")) == ["A2", "B2"]
    assert group_order(W, "abcd") == 6 * 8


def test_text_format_roundtrip(fig2):
    text = serialize_cox(fig2)
    assert text.splitlines()[0] == "gens a b c d e"
    assert parse_cox(text) == fig2
    assert serialize_cox(parse_cox(text)) == text


def test_parse_examples():
    W = parse_cox("# comment\ngens a b\nedge a b 3  # trailing\n")
    assert W.rank == 2 and W.m("a", "b") == 3


@pytest.mark.parametrize("text, line", [
    ("gens a b\nedge a b 1\n", 2),
    ("gens a b\nedge a c 3\n", 2),
    ("gens a b\nedge a b 3\nedge b a 4\n", 3),
    ("gens a b\nedge a b x\n", 2),
    ("edge a b 3\n", 1),
    ("gens a b\nvertex c\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_cox(text)
    assert err.value.line == line


def test_json_mirror(fig2):
    data = to_json(fig2)
    assert data["generators"] == list("abcde")
    assert ["c", "d", 3] in data["edges"]
    assert from_json(json.loads(json.dumps(data))) == fig2


@settings(max_examples=60, deadline=None)
@given(systems())
def test_roundtrip_property(W):
    assert parse_cox(serialize_cox(W)) == W
    assert from_json(to_json(W)) == W


@settings(max_examples=60, deadline=None)
@given(systems())
def test_complete_iff_clique(W):
    for k in range(W.rank + 1):
        for C in combinations(W.generators, k):
            clique = all(t in W.neighbors(s) for s, t in combinations(C, 2))
            assert is_complete(W, C) == clique


@settings(max_examples=60, deadline=None)
@given(systems())
def test_components_refine(W):
    full = diagram_components(W, W.generators)
    for s in W.generators:
        smaller = diagram_components(W, [g for g in W.generators if g != s])
        for comp in smaller:
            assert any(set(comp) <= set(big) for big in full)


@settings(max_examples=40, deadline=None)
@given(systems(max_rank=6, labels=(2, 2, 3, 3, 4, 5)))
def test_finite_type_order_matches_enumeration(W):
    order = group_order(W, W.generators)
    if order is not None and order <= 10**4:
        assert coset_enumerate(W, W.generators, 10**4).order == order


def test_complete_fixture_is_complete():
    assert is_complete(complete(5), "abcde")
    assert not is_complete(figure1(), "abcde")
