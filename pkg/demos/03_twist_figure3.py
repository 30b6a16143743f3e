"""
An elementary twist by a longest element
========================================

"""

from coxjsj.core import induced_subsystem
from coxjsj.fixtures import figure2
from coxjsj.jsj import decompose
from coxjsj.oracle import coset_enumerate, oracle_w0_sigma
from coxjsj.separators import is_minimal_separator
from coxjsj.twist import (apply_twist, diagram_isomorphic, make_twist, orbit_invariants,
                          rename_map, twist_orbit, w0_automorphism)

W = figure2()

# <b,c,d> is of type A3; its longest element swaps the ends
print(w0_automorphism(W, "bcd"))
table = coset_enumerate(W, "bcd")
print("order", table.order, "oracle", oracle_w0_sigma(table, "bcd"))

# conjugate the e side by w0 and rename e to e'
tw = make_twist(W, "abcd", "bcd")
print("renames:", rename_map(W, tw))
twisted = apply_twist(W, tw)
print(twisted)

# {c,d} and {b,c} are both A2, but only the first is a minimal separator
print(decompose(W).edge_labels(), "->", decompose(twisted).edge_labels())
print(diagram_isomorphic(induced_subsystem(W, "cd"), induced_subsystem(twisted, "bc")))
print(is_minimal_separator(W, "cd"), is_minimal_separator(twisted, "bc"))

# everything reachable by such twists, up to diagram isomorphism
orbit = twist_orbit(W)
print(len(orbit.members), "systems;", "invariants hold:", orbit_invariants(orbit.members).overall)
