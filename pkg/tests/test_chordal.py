import networkx as nx
from hypothesis import given, settings

from coxjsj.chordal import check_theorem_4_1, chordless_cycle, is_chordal
from coxjsj.fixtures import complete, cycle, free_product, path
from coxjsj.oracle import brute_chordless_cycle, brute_is_chordal

from conftest import systems


def _nx(W):
    G = nx.Graph()
    G.add_nodes_from(W.generators)
    G.add_edges_from((s, t) for s, t, _ in W.edges)
    return G


def _is_chordless_cycle(W, cyc):
    n = len(cyc)
    if n < 4 or len(set(cyc)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j - i) in (1, n - 1)
            if (cyc[j] in W.neighbors(cyc[i])) != adjacent:
                return False
    return True


def test_fixtures(fig1, fig2, fig3):
    for W in (fig1, fig2, fig3, complete(5), free_product(4), path(6), cycle(3)):
        assert is_chordal(W)
        assert chordless_cycle(W) is None
        assert check_theorem_4_1(W).overall


def test_square():
    W = cycle(4)
    assert not is_chordal(W)
    assert chordless_cycle(W) == ["a", "b", "c", "d"]
    rep = check_theorem_4_1(W)
    assert rep.overall and [c.name for c in rep.checks] == ["chordal_iff_complete_vertex_sets"]


def test_long_cycle_witness():
    W = cycle(7)
    cyc = chordless_cycle(W)
    assert _is_chordless_cycle(W, cyc) and len(cyc) == 7


@settings(max_examples=200, deadline=None)
@given(systems(max_rank=9))
def test_against_networkx_and_brute(W):
    chordal = is_chordal(W)
    assert chordal == nx.is_chordal(_nx(W))
    assert chordal == brute_is_chordal(W)
    cyc = chordless_cycle(W)
    if chordal:
        assert cyc is None and brute_chordless_cycle(W) is None
    else:
        assert _is_chordless_cycle(W, cyc)
    assert check_theorem_4_1(W).overall
