"""
Burning a growing network
=========================

Iterated local transitivity clones every node at each step. The burning
number settles immediately at b(G_0) or b(G_0) + 1, and which one is read
off the optimal sequences of the seed graph.
"""

from graphburn import graph as gr
from graphburn.ilt import ilt_iterate, ilt_predict, ilt_verify

trace = ilt_iterate(gr.path(3), 3)
print("P_3 under ILT, node counts:", [h.n for h in trace.graphs])
print("edge counts:              ", [h.m for h in trace.graphs])

# Paths whose length is a perfect square have no slack: the last source
# always sits where its neighbours burn late, so the clones need one more round.
for name, g0 in [("P_3", gr.path(3)), ("P_4", gr.path(4)), ("C_5", gr.cycle(5)), ("K_1,3", gr.star(3))]:
    pred = ilt_predict(g0)
    rows = ilt_verify(g0, 2)
    exact = [r["exact"] for r in rows]
    print(f"{name:<6} b(G_0)={pred.b0}  predicted={pred.predicted}  exact t=0..2: {exact}")
    if pred.witness:
        print("       witness sequence:", pred.witness)
