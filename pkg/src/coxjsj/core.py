"""Coxeter systems of finite rank, stored as sparse presentation diagrams.

A system is determined by its generators and the order ``m(s, t)`` of each
product ``st``.  Only finite off-diagonal orders are stored; every pair that is
absent has order infinity.  Subsets of generators are passed around as sorted
tuples of names, which makes them hashable and gives the lexicographic order
used for all tie-breaking.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

INF = math.inf

# Letters, digits, underscore.  The apostrophe is accepted so that twisted
# generators (``e'``, ``e''``) stay valid names.
NAME_RE = re.compile(r"^[A-Za-z0-9_']+$")

Subset = tuple  # sorted tuple of generator names


class CoxeterError(ValueError):
    """Raised for malformed systems or arguments that are not subsets."""


def subset(names: Iterable[str]) -> Subset:
    """Normalise any iterable of names to a sorted, duplicate-free tuple."""
    return tuple(sorted(set(names)))


def size_lex_key(s: Sequence[str]):
    """Order subsets by size, then lexicographically."""
    return (len(s), tuple(s))


@dataclass(frozen=True)
class CoxeterSystem:
    generators: tuple
    edges: tuple  # sorted ((s, t, m), ...) with s < t and 2 <= m < inf
    _adj: Mapping = field(default=None, repr=False, compare=False, hash=False)
    _order: Mapping = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = {s: set() for s in self.generators}
        order = {}
        for s, t, m in self.edges:
            adj[s].add(t)
            adj[t].add(s)
            order[(s, t)] = order[(t, s)] = m
        object.__setattr__(self, "_adj", {s: frozenset(n) for s, n in adj.items()})
        object.__setattr__(self, "_order", order)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def m(self, s: str, t: str):
        """Order of ``st``: 1 on the diagonal, ``INF`` for non-edges."""
        if s == t:
            return 1
        return self._order.get((s, t), INF)

    def neighbors(self, s: str) -> frozenset:
        """Neighbours of ``s`` in the presentation diagram."""
        return self._adj[s]

    def adjacency(self) -> Mapping:
        return self._adj

    def check_subset(self, names: Iterable[str]) -> Subset:
        sub = subset(names)
        missing = [s for s in sub if s not in self._adj]
        if missing:
            raise CoxeterError(f"not generators of the system: {missing}")
        return sub

    def __str__(self):
        return serialize_cox(self).strip()


def new_system(generators: Iterable[str], orders: Iterable[tuple] = ()) -> CoxeterSystem:
    """Build a system from generator names and ``(s, t, m)`` triples.

    Pairs that are not listed have order infinity; an explicit ``INF`` label is
    allowed and simply not stored.

    >>> W = new_system("ab", [("a", "b", 3)])
    >>> W.m("a", "b"), W.m("b", "a"), W.rank
    (3, 3, 2)
    """
    gens = list(generators)
    for g in gens:
        if not isinstance(g, str) or not NAME_RE.match(g):
            raise CoxeterError(f"invalid generator name {g!r}")
    if len(set(gens)) != len(gens):
        dup = sorted({g for g in gens if gens.count(g) > 1})
        raise CoxeterError(f"duplicate generator(s) {dup}")
    known = set(gens)
    seen = set()
    edges = []
    for s, t, m in orders:
        if s not in known or t not in known:
            raise CoxeterError(f"unknown generator in pair ({s}, {t})")
        if s == t:
            raise CoxeterError(f"self-pair ({s}, {t})")
        pair = frozenset((s, t))
        if pair in seen:
            raise CoxeterError(f"duplicate pair ({s}, {t})")
        seen.add(pair)
        if m == INF:
            continue
        if isinstance(m, bool) or not isinstance(m, int) or m < 2:
            raise CoxeterError(f"order label for ({s}, {t}) must be an integer >= 2 or INF, got {m!r}")
        a, b = sorted((s, t))
        edges.append((a, b, m))
    return CoxeterSystem(tuple(sorted(gens)), tuple(sorted(edges)))


def is_complete(sys: CoxeterSystem, C: Iterable[str]) -> bool:
    """True iff every pair in ``C`` has finite order (cliques of the diagram)."""
    C = sys.check_subset(C)
    adj = sys.adjacency()
    return all(t in adj[s] for s, t in combinations(C, 2))


def induced_subsystem(sys: CoxeterSystem, R: Iterable[str]) -> CoxeterSystem:
    """Coxeter system of the visual subgroup generated by ``R``."""
    R = sys.check_subset(R)
    keep = set(R)
    edges = tuple(e for e in sys.edges if e[0] in keep and e[1] in keep)
    return CoxeterSystem(R, edges)


def _components(vertices: Iterable[str], linked) -> list:
    remaining = set(vertices)
    parts = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in linked(v):
                if w in remaining:
                    remaining.discard(w)
                    comp.append(w)
                    stack.append(w)
        parts.append(tuple(sorted(comp)))
    return parts


def diagram_components(sys: CoxeterSystem, R: Iterable[str]) -> list:
    """Connected components of the presentation diagram induced on ``R``.

    Components come back as sorted tuples, ordered by their least member.
    """
    R = sys.check_subset(R)
    return _components(R, sys.neighbors)


def coxeter_diagram_components(sys: CoxeterSystem, R: Iterable[str]) -> list:
    """Irreducible factors of ``<R>``: components of the graph joining ``s, t``
    whenever ``m(s, t) >= 3`` (including infinity)."""
    R = sys.check_subset(R)
    members = set(R)

    def linked(s):
        return [t for t in members if t != s and sys.m(s, t) != 2]

    return _components(R, linked)


# --- finite classification -------------------------------------------------

@dataclass(frozen=True)
class FiniteTypeLabel:
    """One irreducible finite factor.

    ``members`` lists the factor's generators in the standard numbering of the
    template (chain order for A, B, F, H; for D the two fork leaves come last;
    for E the Bourbaki numbering 1..n).
    """

    family: str
    rank: int
    m: int | None = None
    members: tuple = ()

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "B":
            return 2**n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == "I2":
            return 2 * self.m
        return {"E6": 51840, "E7": 2903040, "E8": 696729600,
                "F4": 1152, "H3": 120, "H4": 14400}[self.name]

    def template_edges(self) -> list:
        """Labelled diagram edges ``(i, j, m)`` on positions ``0..rank-1``."""
        n, fam = self.rank, self.family
        if fam == "I2":
            return [(0, 1, self.m)]
        if fam == "A":
            return [(i, i + 1, 3) for i in range(n - 1)]
        if fam == "B":
            return [(i, i + 1, 3) for i in range(n - 2)] + [(n - 2, n - 1, 4)]
        if fam == "F":
            return [(0, 1, 3), (1, 2, 4), (2, 3, 3)]
        if fam == "H":
            return [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)]
        if fam == "D":
            chain = [(i, i + 1, 3) for i in range(n - 3)]
            return chain + [(n - 3, n - 2, 3), (n - 3, n - 1, 3)]
        if fam == "E":
            # Bourbaki: 1-3-4-5-...-n with 2 hanging off 4 (0-based below)
            edges = [(0, 2, 3), (1, 3, 3), (2, 3, 3)]
            edges += [(i, i + 1, 3) for i in range(3, n - 1)]
            return edges
        raise AssertionError(fam)


def _path_order(sub: Sequence[str], linked) -> list | None:
    ends = [s for s in sub if len(linked[s]) == 1]
    if len(ends) != 2:
        return None
    start = min(ends)
    order = [start]
    prev = None
    while len(order) < len(sub):
        nxt = [t for t in linked[order[-1]] if t != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _classify_factor(sys: CoxeterSystem, factor: Sequence[str]) -> FiniteTypeLabel | None:
    n = len(factor)
    if n == 1:
        return FiniteTypeLabel("A", 1, members=tuple(factor))
    linked = {s: [t for t in factor if t != s and sys.m(s, t) != 2] for s in factor}
    labels = {(s, t): sys.m(s, t) for s in factor for t in linked[s]}
    if any(m == INF for m in labels.values()):
        return None
    if n == 2:
        s, t = factor
        m = sys.m(s, t)
        if m == 3:
            return FiniteTypeLabel("A", 2, members=(s, t))
        if m == 4:
            return FiniteTypeLabel("B", 2, members=(s, t))
        return FiniteTypeLabel("I2", 2, m=m, members=(s, t))
    if sum(len(v) for v in linked.values()) != 2 * (n - 1):
        return None  # contains a cycle
    degrees = sorted(len(v) for v in linked.values())
    if degrees[-1] <= 2:
        order = _path_order(factor, linked)
        seq = [labels[(order[i], order[i + 1])] for i in range(n - 1)]
        if all(m == 3 for m in seq):
            return FiniteTypeLabel("A", n, members=tuple(order))
        # orient so that a special label sits at the front when possible
        for path, lab in ((order, seq), (order[::-1], seq[::-1])):
            if lab[-1] == 4 and all(m == 3 for m in lab[:-1]):
                return FiniteTypeLabel("B", n, members=tuple(path))
            if n == 4 and lab == [3, 4, 3]:
                return FiniteTypeLabel("F", 4, members=tuple(path))
            if n in (3, 4) and lab[0] == 5 and all(m == 3 for m in lab[1:]):
                return FiniteTypeLabel("H", n, members=tuple(path))
        return None
    if degrees[-1] != 3 or degrees[-2] > 2 or any(m != 3 for m in labels.values()):
        return None
    centre = next(s for s in factor if len(linked[s]) == 3)
    arms = []
    for first in linked[centre]:
        arm = [first]
        prev = centre
        while True:
            nxt = [t for t in linked[arm[-1]] if t != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a))
    lengths = [len(a) for a in arms]
    if lengths[0] == 1 and lengths[1] == 1:
        # D_n: chain from the long arm's tip to the centre, then the two leaves
        chain = arms[2][::-1] + [centre]
        return FiniteTypeLabel("D", n, members=tuple(chain + arms[0] + arms[1]))
    if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
        short, a2, rest = arms
        # Bourbaki positions: 1 = tip of a 2-arm, 2 = short leaf, 3, 4 = centre, 5..n
        if n == 6:
            a2, rest = sorted((a2, rest))
        members = [a2[1], short[0], a2[0], centre] + rest
        return FiniteTypeLabel("E", n, members=tuple(members))
    return None


def finite_type(sys: CoxeterSystem, C: Iterable[str]) -> list | None:
    """Classify ``<C>`` as a product of irreducible finite Coxeter groups.

    Returns one :class:`FiniteTypeLabel` per irreducible factor, or ``None`` if
    some factor is not in the finite classification.  The empty set gives
    ``[]`` (the trivial group).
    """
    C = sys.check_subset(C)
    labels = []
    for factor in coxeter_diagram_components(sys, C):
        lab = _classify_factor(sys, factor)
        if lab is None:
            return None
        _check_template(sys, lab)
        labels.append(lab)
    return labels


def _check_template(sys: CoxeterSystem, lab: FiniteTypeLabel) -> None:
    pos = lab.members
    want = {frozenset((pos[i], pos[j])): m for i, j, m in lab.template_edges()}
    for s, t in combinations(pos, 2):
        expected = want.get(frozenset((s, t)), 2)
        if sys.m(s, t) != expected:
            raise AssertionError(f"template mismatch for {lab.name} at ({s}, {t})")


def group_order(sys: CoxeterSystem, C: Iterable[str]) -> int | None:
    labels = finite_type(sys, C)
    if labels is None:
        return None
    return math.prod(lab.order for lab in labels)


# --- text and JSON formats -------------------------------------------------

class ParseError(CoxeterError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def serialize_cox(sys: CoxeterSystem) -> str:
    """Canonical ``.cox`` text: one ``gens`` line, then sorted ``edge`` lines."""
    lines = ["gens " + " ".join(sys.generators)]
    lines += [f"edge {s} {t} {m}" for s, t, m in sys.edges]
    return "\n".join(lines) + "\n"


def parse_cox(text: str) -> CoxeterSystem:
    """Parse the ``.cox`` format.

    >>> parse_cox("gens a b\\nedge a b 3\\n").m("a", "b")
    3
    """
    gens = None
    orders = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if head == "gens":
            if gens is not None:
                raise ParseError("second 'gens' line", lineno)
            gens = parts[1:]
            if not gens:
                raise ParseError("'gens' needs at least one generator", lineno)
            for g in gens:
                if not NAME_RE.match(g):
                    raise ParseError(f"invalid generator name {g!r}", lineno)
            if len(set(gens)) != len(gens):
                raise ParseError("duplicate generator", lineno)
        elif head == "edge":
            if gens is None:
                raise ParseError("'edge' before 'gens'", lineno)
            if len(parts) != 4:
                raise ParseError("expected 'edge s t m'", lineno)
            s, t, label = parts[1:]
            for g in (s, t):
                if g not in gens:
                    raise ParseError(f"unknown generator {g!r}", lineno)
            if s == t:
                raise ParseError(f"self-pair ({s}, {t})", lineno)
            pair = frozenset((s, t))
            if pair in seen:
                raise ParseError(f"duplicate edge ({s}, {t}); first on line {seen[pair]}", lineno)
            seen[pair] = lineno
            try:
                m = int(label)
            except ValueError:
                raise ParseError(f"label must be an integer >= 2, got {label!r}", lineno) from None
            if m < 2:
                raise ParseError(f"label must be >= 2, got {m}", lineno)
            orders.append((s, t, m))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if gens is None:
        raise ParseError("missing 'gens' line")
    return new_system(gens, orders)


def to_json(sys: CoxeterSystem) -> dict:
    return {"generators": list(sys.generators), "edges": [[s, t, m] for s, t, m in sys.edges]}


def from_json(data: Mapping) -> CoxeterSystem:
    orders = []
    for s, t, m in data.get("edges", []):
        orders.append((s, t, INF if m in ("inf", None) else m))
    return new_system(data["generators"], orders)
