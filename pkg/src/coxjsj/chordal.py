"""Chordality of presentation diagrams.

Labels play no part: a system is chordal when the underlying graph of its
diagram is.  Recognition is maximum cardinality search followed by the
zero-fill test of the resulting elimination ordering.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .core import CoxeterSystem, is_complete
from .jsj import Check, VerificationReport, vertex_sets
from .search import mcs


def is_chordal(sys: CoxeterSystem) -> bool:
    """True iff every cycle of length at least four in the diagram has a chord.

    >>> from .fixtures import figure1, cycle
    >>> is_chordal(figure1()), is_chordal(cycle(4))
    (True, False)
    """
    adj = sys.adjacency()
    order = mcs(adj)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in adj[v] if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = set(earlier) - {parent}
        if not rest <= adj[parent]:
            return False
    return True


def chordless_cycle(sys: CoxeterSystem):
    """A chordless cycle of length >= 4 as a list of generators, or ``None``.

    For each vertex ``v`` and non-adjacent pair ``u, w`` of its neighbours, a
    shortest ``u``-``w`` path avoiding the rest of ``N[v]`` closes an induced
    cycle through ``v``.
    """
    adj = sys.adjacency()
    for v in sys.generators:
        for u, w in combinations(sorted(adj[v]), 2):
            if w in adj[u]:
                continue
            blocked = (adj[v] | {v}) - {u, w}
            prev = {u: None}
            queue = deque([u])
            while queue and w not in prev:
                x = queue.popleft()
                for y in sorted(adj[x]):
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if w in prev:
                path = [w]
                while path[-1] != u:
                    path.append(prev[path[-1]])
                return [v] + path[::-1]
    return None


def check_theorem_4_1(sys: CoxeterSystem) -> VerificationReport:
    """Chordal iff every vertex set of the JSJ tree is complete."""
    chordal = is_chordal(sys)
    incomplete = [R for R in sorted(vertex_sets(sys)) if not is_complete(sys, R)]
    all_complete = not incomplete
    witness = {"chordal": chordal, "all_vertex_sets_complete": all_complete,
               "incomplete_vertex_sets": [list(R) for R in incomplete]}
    if not chordal:
        witness["chordless_cycle"] = chordless_cycle(sys)
    return VerificationReport([Check("chordal_iff_complete_vertex_sets",
                                     chordal == all_complete, witness)])
