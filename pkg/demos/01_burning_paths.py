"""
Burning a path, round by round
==============================

Watch the fire spread on a short path, then let the solver find optimal
sequences for longer paths and cycles.
"""

from graphburn import graph as gr
from graphburn.burning import check_sequence, simulate
from graphburn.solver import burning_number, enumerate_optimal_sequences, path_sequence

# The path 0 - 1 - 2 - 3. Light node 1 first, then node 3.
p4 = gr.path(4)
sched = simulate(p4, [1, 3])
print("P_4 with sources (1, 3): burn rounds", sched.burn_round, "valid:", sched.valid)

# Lighting two neighbours wastes a round: node 3 never catches.
bad = simulate(p4, [1, 2])
print("P_4 with sources (1, 2): fails at round", bad.invalid_at, "-", bad.reason)

# The same verdicts come from the ball-cover view, without simulating.
print("cover check (1, 3):", check_sequence(p4, [1, 3]))
print("cover check (1, 2):", check_sequence(p4, [1, 2]))

# Every optimal sequence of P_4.
print("optimal sequences of P_4:", enumerate_optimal_sequences(p4))

# Paths need ceil(sqrt(n)) rounds; the explicit construction hits that exactly.
print()
print(f"{'n':>3} {'b(P_n)':>7} {'b(C_n)':>7}  construction")
for n in (4, 9, 10, 16, 17, 25):
    bp = burning_number(gr.path(n), use_closed_forms=False).burning_number
    bc = burning_number(gr.cycle(n), use_closed_forms=False).burning_number
    print(f"{n:>3} {bp:>7} {bc:>7}  {path_sequence(n)}")
