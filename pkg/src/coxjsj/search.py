"""Maximum cardinality search and its minimal-triangulation variant MCS-M.

Both work on plain adjacency mappings ``{vertex: set(neighbours)}`` and break
ties by the least vertex name, so their output is deterministic.
"""

from __future__ import annotations

import heapq
from typing import Mapping


def mcs(adj: Mapping) -> list:
    """Visit order of maximum cardinality search.

    For a chordal graph the reverse of this order is a perfect elimination
    ordering.
    """
    weight = {v: 0 for v in adj}
    order = []
    while weight:
        v = min(weight, key=lambda u: (-weight[u], u))
        del weight[v]
        order.append(v)
        for w in adj[v]:
            if w in weight:
                weight[w] += 1
    return order


def mcs_m(adj: Mapping):
    """MCS-M: a minimal elimination ordering together with its fill.

    Returns ``(elimination, madj, generators)``.  ``elimination`` lists the
    vertices from first eliminated to last (the reverse of the visit order);
    ``madj[x]`` is the set of neighbours of ``x`` in the minimal triangulation
    that are eliminated after ``x``; ``generators`` are the vertices at which
    the search weight failed to increase, whose ``madj`` sets are exactly the
    minimal separators of the triangulation.
    """
    weight = {v: 0 for v in adj}
    madj = {v: set() for v in adj}
    generators = set()
    visit = []
    prev = -1
    while weight:
        v = min(weight, key=lambda u: (-weight[u], u))
        wv = weight.pop(v)
        if wv <= prev:
            generators.add(v)
        prev = wv
        visit.append(v)
        # u is reached if some path v .. u has every inner vertex unnumbered
        # and lighter than u; compute the least possible heaviest inner vertex
        best = {}
        heap = []
        for u in adj[v]:
            if u in weight:
                best[u] = -1
                heapq.heappush(heap, (-1, u))
        while heap:
            b, u = heapq.heappop(heap)
            if best.get(u) != b:
                continue
            through = max(b, weight[u])
            for z in adj[u]:
                if z in weight and z != v and through < best.get(z, float("inf")):
                    best[z] = through
                    heapq.heappush(heap, (through, z))
        reached = [u for u, b in best.items() if b < weight[u]]
        for u in reached:
            weight[u] += 1
            madj[u].add(v)
    return visit[::-1], madj, generators
