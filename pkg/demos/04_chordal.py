"""
Chordal diagrams and complete vertex labels
===========================================

"""

from coxjsj.chordal import check_theorem_4_1, chordless_cycle, is_chordal
from coxjsj.core import is_complete
from coxjsj.fixtures import cycle, figure1
from coxjsj.formats import random_corpus
from coxjsj.jsj import vertex_sets

for W in (figure1(), cycle(4), cycle(6)):
    print(W.generators, "chordal:", is_chordal(W), "witness:", chordless_cycle(W))

# a diagram is chordal exactly when every vertex label of the JSJ tree is complete
agree = 0
corpus = random_corpus(100, 9, seed=1)
for W in corpus:
    complete = all(is_complete(W, R) for R in vertex_sets(W))
    agree += is_chordal(W) == complete and check_theorem_4_1(W).overall
print(agree, "of", len(corpus), "random systems agree")
