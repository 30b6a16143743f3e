"""
Separators: minimal, relative minimal, complete
===============================================

"""

from coxjsj.fixtures import figure1, figure2
from coxjsj.oracle import brute_relative_minimal_separators
from coxjsj.separators import (complete_relative_minimal_separators, is_minimal_separator,
                               is_separator, make_separation, relative_minimal_separators)

W = figure2()

# {b} cuts off a; {c,d} cuts off e
print(make_separation(W, "b"))
print(make_separation(W, "cd"))
print("{c,d} minimal:", is_minimal_separator(W, "cd"))

# close-separator expansion against the bitmask oracle
print(sorted(relative_minimal_separators(W)))
print(sorted(brute_relative_minimal_separators(W)))

# {b,e} is minimal for the pair (c, d) but {b} alone already separates the set
V = figure1()
print(sorted(complete_relative_minimal_separators(V)))
print("{b} separates:", is_separator(V, "b"), " {b,e} minimal:", is_minimal_separator(V, "be"))
