"""Cross-check every structural output for one system against the oracles."""

from __future__ import annotations

from .chordal import check_theorem_4_1, chordless_cycle, is_chordal
from .core import CoxeterSystem, finite_type, group_order
from .jsj import (DEFAULT_ORBIT_BUDGET, OrbitOverflow, VerificationReport, decompose,
                  decompose_fast, jsj_orbit, validate, vertex_sets)
from .oracle import (DEFAULT_RANK_BOUND, brute_complete_relative_minimal_separators,
                     brute_is_chordal, brute_relative_minimal_separators,
                     brute_vertex_sets, coset_enumerate, oracle_w0_sigma)
from .separators import complete_relative_minimal_separators, relative_minimal_separators
from .twist import complete_subsets, w0_automorphism


def _sets(family) -> list:
    return sorted(list(x) for x in family)


def w0_report(sys: CoxeterSystem, subsets, order_bound: int = 10**4) -> VerificationReport:
    """Classification-table sigma against coset enumeration for each finite parabolic."""
    rep = VerificationReport()
    for S0 in subsets:
        if not S0 or finite_type(sys, S0) is None or group_order(sys, S0) > order_bound:
            continue
        table = coset_enumerate(sys, S0, order_bound)
        want = w0_automorphism(sys, S0)
        got = oracle_w0_sigma(table, S0)
        rep.add(f"w0_sigma[{','.join(S0)}]",
                got == want and table.order == group_order(sys, S0),
                {"table": want, "oracle": got, "order": table.order})
    return rep


def verify_system(sys: CoxeterSystem, bound: int = DEFAULT_RANK_BOUND,
                  order_bound: int = 10**4,
                  orbit_budget: int = DEFAULT_ORBIT_BUDGET) -> VerificationReport:
    rep = VerificationReport()
    slow, fast = decompose(sys), decompose_fast(sys)
    rep.extend(validate(slow, sys), "decompose.")
    rep.extend(validate(fast, sys), "decompose_fast.")
    rep.add("fast_matches_slow",
            slow.vertex_labels() == fast.vertex_labels() and slow.edge_labels() == fast.edge_labels(),
            {"slow": slow.to_json(), "fast": fast.to_json()})
    try:
        orbit = jsj_orbit(sys, orbit_budget)
        bad = [i for i, t in enumerate(orbit) if not validate(t, sys).overall]
        rep.add("slide_orbit_valid", not bad, {"size": len(orbit), "invalid": bad})
    except OrbitOverflow as exc:
        rep.add("slide_orbit_valid", False, str(exc))
    rep.extend(check_theorem_4_1(sys))
    if sys.rank <= bound:
        V, BV = vertex_sets(sys), brute_vertex_sets(sys, bound)
        rep.add("vertex_sets_match_brute", V == BV, {"fast": _sets(V), "brute": _sets(BV)})
        R, BR = relative_minimal_separators(sys), brute_relative_minimal_separators(sys, bound)
        rep.add("relative_minimal_separators_match_brute", R == BR,
                {"fast": _sets(R), "brute": _sets(BR)})
        E, BE = complete_relative_minimal_separators(sys), brute_complete_relative_minimal_separators(sys, bound)
        rep.add("edge_sets_match_brute", E == BE, {"fast": _sets(E), "brute": _sets(BE)})
        chordal, brute = is_chordal(sys), brute_is_chordal(sys, bound)
        rep.add("chordal_matches_brute", chordal == brute,
                {"mcs": chordal, "brute": brute, "witness": chordless_cycle(sys)})
    rep.extend(w0_report(sys, complete_subsets(sys), order_bound))
    return rep
