"""Separations and separators of presentation diagrams.

A subset ``S0`` separates ``S`` when deleting it disconnects the diagram.
A *relative minimal separator* is a minimal ``(a, b)``-separator for some pair,
i.e. a minimal vertex separator in the graph-theoretic sense.  These are
enumerated with the close-separator expansion: every minimal separator is
reached from the neighbourhoods ``N(C)`` of components ``C`` of
``G - N[v]`` by repeatedly replacing ``S`` with ``N(C)`` for components of
``G - (S | N(x))``, ``x`` in ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import CoxeterError, CoxeterSystem, INF, _components, is_complete, subset


@dataclass(frozen=True)
class Separation:
    left: tuple   # S1
    cut: tuple    # S0
    right: tuple  # S2


def _complement_components(sys: CoxeterSystem, removed) -> list:
    removed = set(removed)
    return _components((s for s in sys.generators if s not in removed), sys.neighbors)


def _boundary(sys: CoxeterSystem, comp) -> tuple:
    comp = set(comp)
    out = set()
    for v in comp:
        out |= sys.neighbors(v)
    return subset(out - comp)


def separates_pair(sys: CoxeterSystem, S0: Iterable[str], a: str, b: str) -> bool:
    """True iff ``a`` and ``b`` lie in different components of the diagram minus ``S0``."""
    S0 = sys.check_subset(S0)
    sys.check_subset((a, b))
    if a == b:
        raise CoxeterError("a and b must differ")
    if a in S0 or b in S0:
        raise CoxeterError("a and b must lie outside S0")
    for comp in _complement_components(sys, S0):
        if a in comp:
            return b not in comp
    raise AssertionError("unreachable")


def is_separator(sys: CoxeterSystem, S0: Iterable[str]) -> bool:
    S0 = sys.check_subset(S0)
    return len(_complement_components(sys, S0)) >= 2


def make_separation(sys: CoxeterSystem, S0: Iterable[str]) -> Separation:
    """Binary separation: the least component goes left, all others right.

    >>> from .fixtures import figure2
    >>> make_separation(figure2(), ["b"])
    Separation(left=('a', 'b'), cut=('b',), right=('b', 'c', 'd', 'e'))
    """
    S0 = sys.check_subset(S0)
    comps = _complement_components(sys, S0)
    if len(comps) < 2:
        raise CoxeterError(f"{list(S0)} does not separate the system")
    rest = [s for c in comps[1:] for s in c]
    return Separation(subset(S0 + comps[0]), S0, subset(S0 + tuple(rest)))


def is_minimal_separator(sys: CoxeterSystem, S0: Iterable[str]) -> bool:
    """``S0`` separates and no proper subset does.

    Separators are not closed upwards (a larger cut can swallow a whole
    component), so every proper subset is tried.
    """
    S0 = sys.check_subset(S0)
    if len(_complement_components(sys, S0)) < 2:
        return False
    for k in range(len(S0)):
        for T in combinations(S0, k):
            if len(_complement_components(sys, T)) >= 2:
                return False
    return True


def _full_components(sys: CoxeterSystem, S0) -> list:
    return [c for c in _complement_components(sys, S0) if _boundary(sys, c) == S0]


def relative_minimal_separators(sys: CoxeterSystem) -> frozenset:
    """All minimal ``(a, b)``-separators over non-adjacent pairs.

    >>> from .fixtures import figure1
    >>> sorted(relative_minimal_separators(figure1()))
    [('b',), ('b', 'e')]
    """
    found = set()
    frontier = []

    def consider(seps):
        for S in seps:
            if S not in found:
                found.add(S)
                frontier.append(S)

    for v in sys.generators:
        closed = set(sys.neighbors(v)) | {v}
        consider(_boundary(sys, c) for c in _complement_components(sys, closed))
    while frontier:
        S = frontier.pop()
        for x in S:
            grown = set(S) | sys.neighbors(x)
            consider(_boundary(sys, c) for c in _complement_components(sys, grown))
    return frozenset(found)


def minimal_ab_separators(sys: CoxeterSystem, a: str, b: str) -> frozenset:
    """All minimal ``(a, b)``-separators.

    A separator ``S0`` avoiding ``a`` and ``b`` is minimal for the pair exactly
    when the components of ``a`` and ``b`` in the complement are different and
    both have neighbourhood ``S0``.  Adjacent (finite-order) pairs have no
    separators and give the empty set.
    """
    sys.check_subset((a, b))
    if a == b:
        raise CoxeterError("a and b must differ")
    if sys.m(a, b) != INF:
        return frozenset()
    out = set()
    for S in relative_minimal_separators(sys):
        if a in S or b in S:
            continue
        full = _full_components(sys, S)
        ca = next((c for c in full if a in c), None)
        cb = next((c for c in full if b in c), None)
        if ca is not None and cb is not None and ca != cb:
            out.add(S)
    return frozenset(out)


def complete_relative_minimal_separators(sys: CoxeterSystem) -> frozenset:
    """The complete relative minimal separators: the edge labels of a JSJ tree."""
    return frozenset(S for S in relative_minimal_separators(sys) if is_complete(sys, S))
