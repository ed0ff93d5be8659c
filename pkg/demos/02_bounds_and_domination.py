"""
Bounds that sandwich the burning number
=======================================

Every closed-form bound next to the exact value, for a few families, and a
look at distance domination, which drives the tightest bounds.
"""

from graphburn import graph as gr
from graphburn.bounds import bounds_report, domination_profile

family = {
    "P_9": gr.path(9),
    "C_12": gr.cycle(12),
    "K_5": gr.complete(5),
    "spider(4,3)": gr.spider(4, 3),
    "W_5": gr.wheel(5),
    "G(12, 0.3)": gr.gnp_random(12, 0.3, seed=4),
}

for name, g in family.items():
    rep = bounds_report(g, with_exact=True)
    lo = max(rep.lower.values())
    hi = min(rep.upper.values())
    print(f"{name:<12} n={g.n:<3} {lo} <= b={rep.exact} <= {hi}   sandwich ok: {rep.sandwich_ok()}")
    print("   lower", rep.lower)
    print("   upper", rep.upper)

# The k-distance domination numbers fall as the radius grows; the best
# trade-off k + gamma_k brackets b(G) within a factor of two.
g = gr.spider(4, 3)
prof = domination_profile(g)
print()
print("spider(4,3) gamma_k:", prof)
print("min over k of gamma_k + k:", min(v + k for k, v in prof.items()))
