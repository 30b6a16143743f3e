"""Exhaustive ground truth for small systems.

Nothing here calls into the decomposition or separator code: subsets are
enumerated as bitmasks straight from the definitions, and finite visual
subgroups are realised by Todd-Coxeter coset enumeration over the trivial
subgroup (HLT strategy with a hard cap on the table size).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import CoxeterError, CoxeterSystem, INF

DEFAULT_RANK_BOUND = 12


class OracleBoundError(CoxeterError):
    """The system is too large for exhaustive enumeration."""


class BoundExceeded(CoxeterError):
    """Coset enumeration hit its cap.  Inconclusive: not a proof of infiniteness."""


def _masks(sys: CoxeterSystem, bound: int):
    if sys.rank > bound:
        raise OracleBoundError(f"rank {sys.rank} exceeds the brute-force bound {bound}")
    gens = sys.generators
    index = {g: i for i, g in enumerate(gens)}
    adj = [0] * len(gens)
    for s, t, _ in sys.edges:
        adj[index[s]] |= 1 << index[t]
        adj[index[t]] |= 1 << index[s]
    return gens, adj


def _to_subset(gens, mask) -> tuple:
    return tuple(g for i, g in enumerate(gens) if mask >> i & 1)


def _component_count(adj, mask) -> int:
    count = 0
    while mask:
        seed = mask & -mask
        seen = seed
        frontier = seed
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = adj[bit.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        mask &= ~seen
        count += 1
    return count


def _same_component(adj, mask, a, b) -> bool:
    seen = 1 << a
    frontier = seen
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        new = adj[bit.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return bool(seen >> b & 1)


def _is_clique(adj, mask) -> bool:
    m = mask
    while m:
        bit = m & -m
        m ^= bit
        if (mask & ~bit) & ~adj[bit.bit_length() - 1]:
            return False
    return True


def brute_vertex_sets(sys: CoxeterSystem, bound: int = DEFAULT_RANK_BOUND) -> frozenset:
    """Maximal subsets ``R`` such that no complete ``C`` inside ``R`` disconnects ``R - C``."""
    gens, adj = _masks(sys, bound)
    full = (1 << len(gens)) - 1
    cliques = [c for c in range(full + 1) if _is_clique(adj, c)]
    good = []
    for R in range(1, full + 1):
        if all(_component_count(adj, R & ~C) < 2 for C in cliques if C & R == C):
            good.append(R)
    good.sort(key=lambda r: -bin(r).count("1"))
    maximal = []
    for R in good:
        if not any(R & M == R for M in maximal):
            maximal.append(R)
    return frozenset(_to_subset(gens, R) for R in maximal)


def brute_minimal_ab_separators(sys: CoxeterSystem, a: str, b: str,
                                bound: int = DEFAULT_RANK_BOUND) -> frozenset:
    gens, adj = _masks(sys, bound)
    ia, ib = gens.index(a), gens.index(b)
    full = (1 << len(gens)) - 1
    pool = full & ~(1 << ia) & ~(1 << ib)
    separating = []
    sub = pool
    while True:
        if not _same_component(adj, full & ~sub, ia, ib):
            separating.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & pool
    minimal = [S for S in separating
               if not any(T != S and T & S == T for T in separating)]
    return frozenset(_to_subset(gens, S) for S in minimal)


def brute_relative_minimal_separators(sys: CoxeterSystem,
                                      bound: int = DEFAULT_RANK_BOUND) -> frozenset:
    out = set()
    for a, b in combinations(sys.generators, 2):
        if sys.m(a, b) == INF:
            out |= brute_minimal_ab_separators(sys, a, b, bound)
    return frozenset(out)


def brute_complete_relative_minimal_separators(sys: CoxeterSystem,
                                               bound: int = DEFAULT_RANK_BOUND) -> frozenset:
    gens, adj = _masks(sys, bound)
    return frozenset(S for S in brute_relative_minimal_separators(sys, bound)
                     if _is_clique(adj, sum(1 << gens.index(g) for g in S)))


def brute_minimal_separators(sys: CoxeterSystem, bound: int = DEFAULT_RANK_BOUND) -> frozenset:
    """Inclusion-minimal separators of the whole diagram."""
    gens, adj = _masks(sys, bound)
    full = (1 << len(gens)) - 1
    seps = [S for S in range(full + 1) if _component_count(adj, full & ~S) >= 2]
    return frozenset(_to_subset(gens, S) for S in seps
                     if not any(T != S and T & S == T for T in seps))


def brute_chordless_cycle(sys: CoxeterSystem, bound: int = DEFAULT_RANK_BOUND):
    """An induced cycle of length >= 4 as a vertex list, or ``None``."""
    gens, adj = _masks(sys, bound)
    n = len(gens)
    for k in range(4, n + 1):
        for combo in combinations(range(n), k):
            mask = sum(1 << i for i in combo)
            if all(bin(adj[i] & mask).count("1") == 2 for i in combo) \
                    and _component_count(adj, mask) == 1:
                cyc = [combo[0]]
                prev = None
                while len(cyc) < k:
                    nbrs = [j for j in combo if adj[cyc[-1]] >> j & 1 and j != prev]
                    prev = cyc[-1]
                    cyc.append(nbrs[0])
                return [gens[i] for i in cyc]
    return None


def brute_is_chordal(sys: CoxeterSystem, bound: int = DEFAULT_RANK_BOUND) -> bool:
    return brute_chordless_cycle(sys, bound) is None


# --- coset enumeration -------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroupTable:
    """Regular representation of a finite visual subgroup.

    Element 0 is the identity; ``actions[g][x]`` is ``x * g``; ``words[x]`` is a
    reduced word for element ``x`` and ``lengths[x]`` its length.
    """

    generators: tuple
    actions: dict
    lengths: tuple
    words: tuple

    @property
    def order(self) -> int:
        return len(self.lengths)

    def act(self, x: int, word: Iterable[str]) -> int:
        for g in word:
            x = self.actions[g][x]
        return x


def coset_enumerate(sys: CoxeterSystem, S0: Iterable[str], order_bound: int = 10**4,
                    table_cap: int | None = None) -> FiniteGroupTable:
    """Enumerate the elements of ``<S0>`` from its Coxeter presentation.

    Generators are involutions, so a single column per generator doubles as its
    inverse column.  Raises :class:`BoundExceeded` if more than ``table_cap``
    cosets are ever live-or-dead at once, or the final order exceeds
    ``order_bound``.
    """
    S0 = sys.check_subset(S0)
    if order_bound < 1:
        raise CoxeterError("order_bound must be >= 1")
    if table_cap is None:
        table_cap = max(16 * order_bound, 4096)
    k = len(S0)
    col = {g: i for i, g in enumerate(S0)}
    relators = []
    for s, t in combinations(S0, 2):
        m = sys.m(s, t)
        if m != INF:
            relators.append([col[s], col[t]] * m)

    table = [[-1] * k]
    parent = [0]

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c, g):
        if len(table) >= table_cap:
            raise BoundExceeded(f"coset table exceeded {table_cap} rows for {list(S0)}")
        d = len(table)
        table.append([-1] * k)
        parent.append(d)
        table[c][g] = d
        table[d][g] = c
        return d

    def coincidence(a, b):
        queue = []

        def merge(x, y):
            x, y = rep(x), rep(y)
            if x != y:
                if x > y:
                    x, y = y, x
                parent[y] = x
                queue.append(y)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for g in range(k):
                f = table[e][g]
                if f == -1:
                    continue
                table[e][g] = -1
                if table[f][g] == e:
                    table[f][g] = -1
                e1, f1 = rep(e), rep(f)
                if table[e1][g] != -1:
                    merge(f1, table[e1][g])
                elif table[f1][g] != -1:
                    merge(e1, table[f1][g])
                else:
                    table[e1][g] = f1
                    table[f1][g] = e1

    def scan_and_fill(c, word):
        n = len(word)
        while True:
            f, i = c, 0
            while i < n and table[f][word[i]] != -1:
                f = table[f][word[i]]
                i += 1
            if i == n:
                if f != c:
                    coincidence(f, c)
                return
            b, j = c, n - 1
            while j >= i and table[b][word[j]] != -1:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            define(f, word[i])

    c = 0
    while c < len(table):
        if rep(c) == c:
            for rel in relators:
                scan_and_fill(c, rel)
                if rep(c) != c:
                    break
            if rep(c) == c:
                for g in range(k):
                    if table[c][g] == -1:
                        define(c, g)
        c += 1

    live = [x for x in range(len(table)) if rep(x) == x]
    if len(live) > order_bound:
        raise BoundExceeded(f"<{','.join(S0)}> has order {len(live)} > {order_bound}")
    renum = {x: i for i, x in enumerate(live)}
    actions = {g: [renum[rep(table[x][col[g]])] for x in live] for g in S0}
    lengths = [-1] * len(live)
    words = [None] * len(live)
    lengths[0], words[0] = 0, ()
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in S0:
            y = actions[g][x]
            if lengths[y] == -1:
                lengths[y] = lengths[x] + 1
                words[y] = words[x] + (g,)
                queue.append(y)
    return FiniteGroupTable(S0, actions, tuple(lengths), tuple(words))


def longest_element(table: FiniteGroupTable) -> int:
    top = max(table.lengths)
    tops = [x for x, n in enumerate(table.lengths) if n == top]
    if len(tops) != 1:
        raise CoxeterError(f"{len(tops)} elements of maximal length; table is corrupt")
    return tops[0]


def oracle_w0_sigma(table: FiniteGroupTable, S0: Iterable[str] | None = None) -> dict:
    """The permutation ``s -> w0 s w0^-1`` of the generators, computed in the table."""
    gens = table.generators if S0 is None else tuple(sorted(S0))
    if set(gens) != set(table.generators):
        raise CoxeterError("S0 must be the generating set of the table")
    w0 = table.words[longest_element(table)]
    inverse = w0[::-1]  # generators are involutions
    image_of = {table.actions[g][0]: g for g in gens}
    sigma = {}
    for s in gens:
        x = table.act(0, w0 + (s,) + inverse)
        if x not in image_of:
            raise CoxeterError(f"w0 {s} w0^-1 is not a generator")
        sigma[s] = image_of[x]
    return sigma
