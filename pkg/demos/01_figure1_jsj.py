"""
Visual JSJ decompositions of a five-generator system
=====================================================

"""

from coxjsj.fixtures import figure1
from coxjsj.formats import emit_dot
from coxjsj.jsj import decompose, decompose_fast, jsj_orbit, validate

# every label here is 3; absent pairs are infinite
W = figure1()
print(W)

# split along the smallest complete separator, recurse on both sides
tree = decompose(W)
print("vertex labels:", tree.vertex_labels())
print("edge labels:  ", tree.edge_labels())
print("valid:", validate(tree, W).overall)

# the atom-based construction lands on the same labels
fast = decompose_fast(W)
print("fast agrees:", fast.vertex_labels() == tree.vertex_labels())

# {a,b} can hang off either triangle: two trees, one slide move apart
for t in jsj_orbit(W):
    print(emit_dot(t))
