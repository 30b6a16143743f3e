"""Elementary twists and twist orbits of presentation diagrams.

A twist along a separation ``(S1, S0, S2)`` replaces every generator ``t`` of
``S2 - S0`` by ``l t l^-1`` where ``l`` is the longest element of the finite
group ``<S0>``.  Conjugation by ``l`` permutes ``S0`` by a diagram
automorphism ``sigma``, and the new orders are ``m'(s, t') = m(sigma^-1(s), t)``
for ``s`` in ``S0``; all other orders are inherited or infinite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .core import (INF, CoxeterError, CoxeterSystem, finite_type, induced_subsystem,
                   is_complete, new_system, subset)
from .jsj import VerificationReport, decompose
from .separators import Separation, _complement_components

DEFAULT_TWIST_BUDGET = 500


class NotFiniteType(CoxeterError):
    pass


@dataclass(frozen=True)
class ElementaryTwist:
    separation: Separation
    sigma: tuple  # ((s, sigma(s)), ...) sorted by s

    @property
    def mapping(self) -> dict:
        return dict(self.sigma)


def _factor_sigma(lab) -> dict:
    pos = list(lab.members)
    image = list(pos)
    if lab.family == "A" or (lab.family == "I2" and lab.m % 2):
        image = pos[::-1]
    elif lab.family == "D" and lab.rank % 2:
        image[-1], image[-2] = pos[-2], pos[-1]
    elif lab.family == "E" and lab.rank == 6:
        image = [pos[5], pos[1], pos[4], pos[3], pos[2], pos[0]]
    return dict(zip(pos, image))


def w0_automorphism(sys: CoxeterSystem, S0: Iterable[str]) -> dict:
    """Permutation of ``S0`` induced by conjugating with the longest element.

    Read off the classification: reversal for ``A_n``, the fork swap for
    ``D_n`` with ``n`` odd, the diagram involution of ``E6``, the swap for
    ``I2(m)`` with ``m`` odd; identity otherwise.

    >>> from .fixtures import figure2
    >>> w0_automorphism(figure2(), "bcd")
    {'b': 'd', 'c': 'c', 'd': 'b'}
    """
    S0 = sys.check_subset(S0)
    labels = finite_type(sys, S0)
    if labels is None:
        raise NotFiniteType(f"<{','.join(S0)}> is not of finite type")
    sigma = {}
    for lab in labels:
        sigma.update(_factor_sigma(lab))
    return {s: sigma[s] for s in S0}


def is_diagram_automorphism(sys: CoxeterSystem, S0, sigma: Mapping) -> bool:
    S0 = subset(S0)
    if set(sigma) != set(S0) or set(sigma.values()) != set(S0):
        return False
    return all(sys.m(s, t) == sys.m(sigma[s], sigma[t]) for s, t in combinations(S0, 2))


def complete_subsets(sys: CoxeterSystem) -> list:
    """Every clique of the diagram, including the empty set."""
    adj = sys.adjacency()
    out = []

    def grow(current, candidates):
        out.append(tuple(current))
        for i, v in enumerate(candidates):
            grow(current + [v], [w for w in candidates[i + 1:] if w in adj[v]])

    grow([], list(sys.generators))
    return out


def _check_separation(sys: CoxeterSystem, sep: Separation) -> None:
    S1, S0, S2 = set(sep.left), set(sep.cut), set(sep.right)
    if S1 | S2 != set(sys.generators) or S1 & S2 != S0:
        raise CoxeterError("sides must cover S and meet exactly in S0")
    if not (S1 - S0) or not (S2 - S0):
        raise CoxeterError("both sides must properly contain S0")
    for a in S1 - S0:
        for b in S2 - S0:
            if sys.m(a, b) != INF:
                raise CoxeterError(f"m({a}, {b}) is finite across the separation")


def make_twist(sys: CoxeterSystem, S1: Iterable[str], S0: Iterable[str],
               sigma: Mapping | None = None, order_bound: int = 10**4) -> ElementaryTwist:
    """Twist with left side ``S1`` and cut ``S0``; the right side is the rest plus ``S0``.

    Without ``sigma`` the longest element of ``<S0>`` is used.  A supplied
    ``sigma`` must be a diagram automorphism and must be realised by
    conjugation with some element of ``<S0>`` in the coset-enumerated group.
    """
    S0 = sys.check_subset(S0)
    S1 = sys.check_subset(set(S1) | set(S0))
    S2 = subset((set(sys.generators) - set(S1)) | set(S0))
    sep = Separation(S1, S0, S2)
    _check_separation(sys, sep)
    if sigma is None:
        sigma = w0_automorphism(sys, S0)
    else:
        sigma = dict(sigma)
        if not is_diagram_automorphism(sys, S0, sigma):
            raise CoxeterError("sigma is not an automorphism of the diagram on S0")
        if not _realised(sys, S0, sigma, order_bound):
            raise CoxeterError("sigma is not induced by an element of <S0> normalising S0")
    return ElementaryTwist(sep, tuple(sorted(sigma.items())))


def _realised(sys, S0, sigma, order_bound) -> bool:
    from .oracle import coset_enumerate

    if not S0:
        return True
    if finite_type(sys, S0) is None:
        raise NotFiniteType("only finite <S0> can be checked")
    table = coset_enumerate(sys, S0, order_bound)
    image_of = {table.actions[g][0]: g for g in S0}
    for x, word in enumerate(table.words):
        inverse = word[::-1]
        if all(image_of.get(table.act(0, word + (s,) + inverse)) == sigma[s] for s in S0):
            return True
    return False


def admissible_twists(sys: CoxeterSystem) -> list:
    """Longest-element twists along every separation with a finite-type cut.

    Separations are listed once up to swapping sides: the left side always
    holds the component of ``S - S0`` with the least generator.
    """
    out = []
    for S0 in complete_subsets(sys):
        comps = _complement_components(sys, S0)
        if len(comps) < 2:
            continue
        labels = finite_type(sys, S0)
        if labels is None:
            continue
        sigma = w0_automorphism(sys, S0)
        key = tuple(sorted(sigma.items()))
        others = comps[1:]
        for bits in range(2 ** len(others) - 1):
            left = set(S0) | set(comps[0])
            right = set(S0)
            for i, c in enumerate(others):
                (left if bits >> i & 1 else right).update(c)
            out.append(ElementaryTwist(Separation(subset(left), S0, subset(right)), key))
    return out


def rename_map(sys: CoxeterSystem, tw: ElementaryTwist) -> dict:
    """New names for the conjugated generators: ``t -> t'`` (more primes on collision)."""
    sep = tw.separation
    taken = set(sep.left)
    renames = {}
    for t in sorted(set(sep.right) - set(sep.cut)):
        name = t + "'"
        while name in taken:
            name += "'"
        taken.add(name)
        renames[t] = name
    return renames


def apply_twist(sys: CoxeterSystem, tw: ElementaryTwist) -> CoxeterSystem:
    """The twisted system ``S1 | l (S2 - S0) l^-1``.

    >>> from .fixtures import figure2
    >>> W = figure2()
    >>> print(apply_twist(W, make_twist(W, "abcd", "bcd")))
    gens a b c d e'
    edge a b 3
    edge b c 3
    edge b d 2
    edge b e' 2
    edge c d 3
    edge c e' 2
    """
    sep = tw.separation
    _check_separation(sys, sep)
    sigma = tw.mapping
    if not is_diagram_automorphism(sys, sep.cut, sigma):
        raise CoxeterError("sigma is not an automorphism of the diagram on S0")
    inverse = {v: k for k, v in sigma.items()}
    renames = rename_map(sys, tw)
    moved = sorted(renames)
    orders = []
    for s, t in combinations(sep.left, 2):
        orders.append((s, t, sys.m(s, t)))
    for t, u in combinations(moved, 2):
        orders.append((renames[t], renames[u], sys.m(t, u)))
    for t in moved:
        for s in sep.cut:
            orders.append((s, renames[t], sys.m(inverse[s], t)))
    gens = list(sep.left) + [renames[t] for t in moved]
    return new_system(gens, orders)


# --- isomorphism and canonical form -------------------------------------------

def _code(m) -> int:
    return 0 if m == INF else m


def _invariant(sys: CoxeterSystem, s: str):
    return tuple(sorted(_code(sys.m(s, t)) for t in sys.generators if t != s))


def diagram_isomorphic(sys1: CoxeterSystem, sys2: CoxeterSystem) -> dict | None:
    """A label-preserving bijection of generators, or ``None``.

    Plain backtracking: vertices of ``sys1`` are placed most-connected first,
    and candidates in ``sys2`` must share the multiset of incident labels.
    """
    if sys1.rank != sys2.rank or sorted(e[2] for e in sys1.edges) != sorted(e[2] for e in sys2.edges):
        return None
    inv1 = {s: _invariant(sys1, s) for s in sys1.generators}
    inv2 = {s: _invariant(sys2, s) for s in sys2.generators}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return None
    order = []
    remaining = set(sys1.generators)
    while remaining:
        v = max(remaining, key=lambda s: (sum(1 for t in order if sys1.m(s, t) != INF),
                                          len(sys1.neighbors(s)), s))
        order.append(v)
        remaining.discard(v)
    mapping = {}
    used = set()

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        for w in sys2.generators:
            if w in used or inv2[w] != inv1[v]:
                continue
            if all(sys1.m(v, x) == sys2.m(w, mapping[x]) for x in order[:i]):
                mapping[v] = w
                used.add(w)
                if place(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(sorted(mapping.items())) if place(0) else None


def _refine(sys, gens, colour):
    while True:
        sig = {v: (colour[v], tuple(sorted((colour[w], _code(sys.m(v, w)))
                                          for w in gens if w != v)))
               for v in gens}
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in gens}
        if len(ranks) == len(set(colour.values())):
            return new
        colour = new


def canonical_order(sys: CoxeterSystem) -> list:
    """Generator order minimising the label matrix, by individualisation-refinement.

    Twins (generators with identical labels to everything else) are
    interchangeable, so only one of them is individualised per cell.
    """
    gens = list(sys.generators)
    if not gens:
        return []

    def twins(u, w):
        return all(sys.m(u, x) == sys.m(w, x) for x in gens if x not in (u, w))

    best = [None, None]

    def search(colour):
        colour = _refine(sys, gens, colour)
        cells = {}
        for v in gens:
            cells.setdefault(colour[v], []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(gens, key=colour.__getitem__)
            key = tuple(_code(sys.m(order[i], order[j]))
                        for j in range(len(order)) for i in range(j))
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        tried = []
        for v in target:
            if any(twins(v, u) for u in tried):
                continue
            tried.append(v)
            split = {u: 2 * c for u, c in colour.items()}
            split[v] -= 1
            search(split)

    search({v: 0 for v in gens})
    return best[1]


def canonical_form(sys: CoxeterSystem) -> tuple:
    """Isomorphism-invariant key: rank and the minimal label matrix."""
    order = canonical_order(sys)
    return (len(order),) + tuple(_code(sys.m(order[i], order[j]))
                                 for j in range(len(order)) for i in range(j))


# --- orbits -----------------------------------------------------------------

@dataclass
class TwistOrbit:
    members: list = field(default_factory=list)
    keys: list = field(default_factory=list)
    overflow: bool = False


def twist_orbit(sys: CoxeterSystem, budget: int = DEFAULT_TWIST_BUDGET) -> TwistOrbit:
    """Breadth-first closure under longest-element twists, one system per
    isomorphism class of diagram.  Stops with ``overflow`` set once
    ``budget`` classes have been found and another new one turns up."""
    if budget < 1:
        raise CoxeterError("budget must be >= 1")
    orbit = TwistOrbit()
    start = canonical_form(sys)
    orbit.members.append(sys)
    orbit.keys.append(start)
    seen = {start}
    queue = deque([sys])
    while queue:
        current = queue.popleft()
        for tw in admissible_twists(current):
            nxt = apply_twist(current, tw)
            key = canonical_form(nxt)
            if key in seen:
                continue
            if len(orbit.members) >= budget:
                orbit.overflow = True
                return orbit
            seen.add(key)
            orbit.members.append(nxt)
            orbit.keys.append(key)
            queue.append(nxt)
    return orbit


def decomposition_types(sys: CoxeterSystem):
    """(vertex-label types as a sorted list, edge-label types as a sorted list)."""
    tree = decompose(sys)
    vtypes = sorted(canonical_form(induced_subsystem(sys, R)) for R in tree.vertices)
    etypes = sorted(canonical_form(induced_subsystem(sys, T)) for _, _, T in tree.edges)
    return vtypes, etypes


def orbit_invariants(members: list) -> VerificationReport:
    """Invariants every twist orbit must satisfy.

    Vertex groups correspond one-to-one up to conjugacy, so the number of
    vertices and the multiset of vertex diagram types agree across members.
    Every edge group has a conjugate edge group in every other member, so
    the *sets* of edge diagram types agree (edge counts may differ).
    """
    rep = VerificationReport()
    types = [decomposition_types(W) for W in members]
    counts = [len(v) for v, _ in types]
    rep.add("same_vertex_count", len(set(counts)) <= 1, counts)
    vt = {tuple(v) for v, _ in types}
    rep.add("same_vertex_type_multiset", len(vt) <= 1, len(vt))
    missing = []
    for i, (_, ei) in enumerate(types):
        for j, (_, ej) in enumerate(types):
            lost = set(ei) - set(ej)
            if i != j and lost:
                missing.append([i, j, len(lost)])
    rep.add("edge_types_have_counterparts", not missing, missing[:10])
    return rep
