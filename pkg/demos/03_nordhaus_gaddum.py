"""
A graph and its complement
==========================

Sum and product of b(G) and b(complement of G) over random graphs, against
the known inequalities and one open conjecture.
"""

import numpy as np

from graphburn import graph as gr
from graphburn.bounds import nordhaus_gaddum

# Cliques reach the upper end: the complement has no edges at all.
for n in (4, 6, 8):
    ng = nordhaus_gaddum(gr.complete(n))
    print(f"K_{n}: b={ng.b}, complement b={ng.b_complement}, sum={ng.sum} (n+2={n + 2})")

# Random G(n, 1/2) samples. Tally how often each check applies and holds.
rng = np.random.default_rng(7)
tally: dict = {}
sums = []
for _ in range(40):
    g = gr.gnp_random(9, 0.5, int(rng.integers(2 ** 31)))
    ng = nordhaus_gaddum(g)
    sums.append(ng.sum)
    for name, c in ng.checks.items():
        t = tally.setdefault(name, [0, 0])
        if c["applies"]:
            t[0] += 1
            t[1] += bool(c["holds"])

print()
print("G(9, 1/2), 40 samples, sums range", min(sums), "-", max(sums))
for name, (applies, holds) in tally.items():
    print(f"  {name:<18} holds {holds}/{applies}")
