"""Visual reduced JSJ decompositions over subgroups with property FA.

A decomposition is a tree whose vertices carry generator subsets ``R`` (the
vertex groups ``<R>``) and whose edges carry complete subsets ``T`` (the edge
groups).  Vertex labels are the maximal subsets not split by a complete
separator, edge labels the complete relative minimal separators; only the
tree shape is not unique, and different shapes are related by slide moves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .core import (CoxeterError, CoxeterSystem, INF, induced_subsystem, is_complete,
                   size_lex_key, subset)
from .search import mcs_m
from .separators import complete_relative_minimal_separators, make_separation

DEFAULT_ORBIT_BUDGET = 10_000


class OrbitOverflow(CoxeterError):
    """More distinct trees than the exploration budget allows."""


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(passed), witness))

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"overall": self.overall,
                "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                           for c in self.checks]}


@dataclass(frozen=True)
class GraphOfGroups:
    vertices: tuple  # generator subsets
    edges: tuple     # (i, j, label)
    ambient: CoxeterSystem = field(repr=False)

    def vertex_labels(self) -> list:
        return sorted(self.vertices)

    def edge_labels(self) -> list:
        return sorted(e[2] for e in self.edges)

    def neighbours(self) -> dict:
        nb = {i: [] for i in range(len(self.vertices))}
        for i, j, T in self.edges:
            nb[i].append((j, T))
            nb[j].append((i, T))
        return nb

    def canonical(self):
        """Label-aware AHU encoding, invariant under relabelling tree nodes."""
        return canonical_tree(self)

    def to_json(self) -> dict:
        return {"vertices": [list(R) for R in self.vertices],
                "edges": [[i, j, list(T)] for i, j, T in self.edges]}


def _is_tree(n: int, edges) -> bool:
    if n == 0 or len(edges) != n - 1:
        return False
    nb = {i: [] for i in range(n)}
    for i, j, _ in edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            return False
        nb[i].append(j)
        nb[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        for w in nb[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def canonical_tree(gog: GraphOfGroups):
    n = len(gog.vertices)
    if not _is_tree(n, gog.edges):
        raise CoxeterError("canonical form is only defined for trees")
    nb = gog.neighbours()
    degree = {i: len(nb[i]) for i in nb}
    layer = [i for i in nb if degree[i] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for leaf in layer:
            for w, _ in nb[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer

    def encode(v, parent):
        kids = sorted((T, encode(w, v)) for w, T in nb[v] if w != parent)
        return (gog.vertices[v], tuple(kids))

    return min(encode(c, None) for c in centres)


def _decompose(sys: CoxeterSystem):
    seps = complete_relative_minimal_separators(sys)
    if not seps:
        return [sys.generators], []
    S0 = min(seps, key=size_lex_key)
    sep = make_separation(sys, S0)
    lv, le = _decompose(induced_subsystem(sys, sep.left))
    rv, re = _decompose(induced_subsystem(sys, sep.right))
    cut = set(S0)
    i = min((k for k, R in enumerate(lv) if cut <= set(R)), key=lambda k: lv[k])
    j = min((k for k, R in enumerate(rv) if cut <= set(R)), key=lambda k: rv[k])
    off = len(lv)
    edges = le + [(a + off, b + off, T) for a, b, T in re] + [(i, j + off, S0)]
    return lv + rv, edges


def decompose(sys: CoxeterSystem) -> GraphOfGroups:
    """Recursive construction along least complete minimal separators.

    Split along the smallest complete separator (ties broken
    lexicographically), decompose both sides, and join the two trees by an
    edge labelled with the separator between the least vertex label on each
    side that contains it.

    >>> from .fixtures import figure1
    >>> t = decompose(figure1())
    >>> t.vertices, [e[2] for e in t.edges]
    ((('a', 'b'), ('b', 'c', 'e'), ('b', 'd', 'e')), [('b', 'e'), ('b',)])
    """
    if sys.rank == 0:
        raise CoxeterError("cannot decompose the empty system")
    vertices, edges = _decompose(sys)
    return GraphOfGroups(tuple(vertices), tuple(edges), sys)


def atoms(sys: CoxeterSystem) -> list:
    """Clique-separator atoms of the diagram, from an MCS-M elimination ordering."""
    adj = sys.adjacency()
    elimination, madj, generators = mcs_m(adj)
    remaining = set(sys.generators)
    found = []
    for x in elimination:
        if x not in generators or x not in remaining:
            continue
        S = madj[x]
        if not is_complete(sys, S):
            continue
        comp = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in remaining and w not in S and w not in comp:
                    comp.add(w)
                    stack.append(w)
        found.append(subset(S | comp))
        remaining -= comp
    found.append(subset(remaining))
    return sorted(found)


def decompose_fast(sys: CoxeterSystem) -> GraphOfGroups:
    """Atoms joined by a maximum-weight spanning tree of their intersections.

    Filling every atom to a clique gives a chordal graph whose maximal cliques
    are the atoms, so any maximum-weight spanning tree of the intersection
    graph is a valid tree; its edge labels are the pairwise intersections.
    """
    if sys.rank == 0:
        raise CoxeterError("cannot decompose the empty system")
    verts = atoms(sys)
    pairs = sorted(combinations(range(len(verts)), 2),
                   key=lambda p: (-len(set(verts[p[0]]) & set(verts[p[1]])), p))
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j, subset(set(verts[i]) & set(verts[j]))))
    return GraphOfGroups(tuple(verts), tuple(edges), sys)


def vertex_sets(sys: CoxeterSystem) -> frozenset:
    """Maximal subsets not separated by a complete subset (vertex labels of the tree)."""
    if sys.rank == 0:
        return frozenset()
    return frozenset(decompose(sys).vertices)


def _unseparated_by_complete(sys: CoxeterSystem, R) -> bool:
    return not complete_relative_minimal_separators(induced_subsystem(sys, R))


def validate(gog: GraphOfGroups, sys: CoxeterSystem) -> VerificationReport:
    """Check that ``gog`` is a visual reduced JSJ tree of ``sys``."""
    if gog.ambient != sys:
        raise CoxeterError("decomposition belongs to a different system")
    rep = VerificationReport()
    n = len(gog.vertices)
    gens = set(sys.generators)

    rep.add("tree", _is_tree(n, gog.edges), {"vertices": n, "edges": len(gog.edges)})
    if not rep.overall:
        return rep

    bad = []
    for i, j, T in gog.edges:
        if not (set(T) <= set(gog.vertices[i]) and set(T) <= set(gog.vertices[j])):
            bad.append(["edge label not in both endpoints", list(T)])
    covered = set().union(*map(set, gog.vertices))
    if covered != gens:
        bad.append(["vertex labels do not cover S", sorted(gens ^ covered)])
    for s, t in combinations(sys.generators, 2):
        if sys.m(s, t) != INF and not any(s in R and t in R for R in gog.vertices):
            bad.append(["finite pair in no common vertex", [s, t]])
    rep.add("visual", not bad, bad)

    unreduced = [[list(T)] for i, j, T in gog.edges
                 if T in (gog.vertices[i], gog.vertices[j])]
    rep.add("reduced", not unreduced, unreduced)

    split = [list(R) for R in gog.vertices if not _unseparated_by_complete(sys, R)]
    rep.add("vertex_labels_unseparated", not split, split)

    incomplete = [list(T) for _, _, T in gog.edges if not is_complete(sys, T)]
    rep.add("edge_labels_complete", not incomplete, incomplete)

    V = vertex_sets(sys)
    E = complete_relative_minimal_separators(sys)
    got_v, got_e = set(gog.vertices), {e[2] for e in gog.edges}
    rep.add("vertex_labels_equal_V", got_v == V,
            {"missing": sorted(map(list, V - got_v)), "extra": sorted(map(list, got_v - V))})
    rep.add("edge_labels_equal_E", got_e == E,
            {"missing": sorted(map(list, E - got_e)), "extra": sorted(map(list, got_e - E))})

    wrong = [[i, j, list(T)] for i, j, T in gog.edges
             if set(gog.vertices[i]) & set(gog.vertices[j]) != set(T)]
    rep.add("adjacent_intersection_is_edge_label", not wrong, wrong)
    return rep


def slide_moves(gog: GraphOfGroups) -> list:
    """All trees one slide away.

    An edge ``e = (u, v)`` slides across an adjacent edge ``f = (v, w)`` when
    ``label(e)`` is contained in ``label(f)``; it is then reattached as
    ``(u, w)``.  Results are deduplicated up to label-preserving isomorphism.
    """
    out = []
    seen = set()
    for ei, (a, b, Te) in enumerate(gog.edges):
        for u, v in ((a, b), (b, a)):
            for fi, (c, d, Tf) in enumerate(gog.edges):
                if fi == ei or v not in (c, d) or not set(Te) <= set(Tf):
                    continue
                w = d if c == v else c
                edges = list(gog.edges)
                edges[ei] = (u, w, Te)
                moved = GraphOfGroups(gog.vertices, tuple(edges), gog.ambient)
                key = moved.canonical()
                if key not in seen:
                    seen.add(key)
                    out.append(moved)
    return out


def jsj_orbit(sys: CoxeterSystem, budget: int = DEFAULT_ORBIT_BUDGET) -> list:
    """Closure of ``decompose(sys)`` under slide moves, one tree per shape."""
    start = decompose(sys)
    seen = {start.canonical()}
    found = [start]
    queue = deque([start])
    while queue:
        for nxt in slide_moves(queue.popleft()):
            key = nxt.canonical()
            if key in seen:
                continue
            if len(found) >= budget:
                raise OrbitOverflow(f"slide orbit exceeds budget {budget}")
            seen.add(key)
            found.append(nxt)
            queue.append(nxt)
    return found
