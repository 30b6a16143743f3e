import pytest

from coxjsj.core import new_system
from coxjsj.fixtures import complete, cycle, figure1
from coxjsj.oracle import (BoundExceeded, OracleBoundError, brute_chordless_cycle,
                           brute_minimal_separators, brute_relative_minimal_separators,
                           brute_vertex_sets, coset_enumerate, longest_element,
                           oracle_w0_sigma)


def test_brute_vertex_sets_figures(fig1, fig2):
    assert brute_vertex_sets(fig1) == {("a", "b"), ("b", "c", "e"), ("b", "d", "e")}
    assert brute_vertex_sets(fig2) == {("a", "b"), ("b", "c", "d"), ("c", "d", "e")}


def test_brute_separators(fig2, fig3):
    assert brute_relative_minimal_separators(fig2) == {("b",), ("c", "d")}
    assert brute_minimal_separators(fig2) == {("b",), ("c", "d")}
    assert ("b", "c") not in brute_minimal_separators(fig3)


def test_brute_bound():
    with pytest.raises(OracleBoundError):
        brute_vertex_sets(complete(5), bound=4)


def test_brute_cycle():
    assert brute_chordless_cycle(cycle(5)) is not None
    assert brute_chordless_cycle(figure1()) is None


@pytest.mark.parametrize("m, order", [(2, 4), (3, 6), (4, 8), (6, 12), (9, 18)])
def test_dihedral_orders(m, order):
    W = new_system("st", [("s", "t", m)])
    table = coset_enumerate(W, "st")
    assert table.order == order
    w0 = longest_element(table)
    assert len(table.words[w0]) == m


def test_a3_table(fig2):
    table = coset_enumerate(fig2, "bcd")
    assert table.order == 24
    assert max(table.lengths) == 6
    assert oracle_w0_sigma(table, "bcd") == {"b": "d", "c": "c", "d": "b"}


def test_trivial_parabolic(fig2):
    table = coset_enumerate(fig2, ())
    assert table.order == 1
    assert oracle_w0_sigma(table, ()) == {}


def test_infinite_hits_cap():
    with pytest.raises(BoundExceeded):
        coset_enumerate(cycle(3), "abc", order_bound=100)
    with pytest.raises(BoundExceeded):
        coset_enumerate(new_system("st"), "st", order_bound=50)
