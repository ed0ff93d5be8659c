"""
Every small connected graph
===========================

Burning numbers of all 12,113 connected graphs on up to 8 nodes, read from
the shipped catalog. Takes a few seconds.
"""

from collections import Counter

from graphburn.catalog import load_catalog
from graphburn.solver import burning_number, ceil_sqrt

graphs = load_catalog()
print(len(graphs), "connected graphs")

table: dict = {}
worst = Counter()
for g in graphs:
    b = burning_number(g).burning_number
    table.setdefault(g.n, Counter())[b] += 1
    worst[g.n] = max(worst[g.n], b)

print(f"{'n':>2}  {'count':>6}  distribution of b(G)           max  ceil(sqrt n)")
for n in sorted(table):
    dist = dict(sorted(table[n].items()))
    print(f"{n:>2}  {sum(table[n].values()):>6}  {str(dist):<30} {worst[n]:>3}  {ceil_sqrt(n):>5}")

# Graphs with b = 2 are exactly those with a node missing at most one neighbour.
two = [g for g in graphs if g.n >= 2 and burning_number(g).burning_number == 2]
print()
print("b = 2 graphs:", len(two), "all with max degree >= n-2:",
      all(g.max_degree >= g.n - 2 for g in two))
