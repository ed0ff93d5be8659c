"""Closed-form bounds on b(G), distance domination, Nordhaus-Gaddum reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import InvalidParameter
from .graph import Graph, complement, metrics
from .solver import burning_number, ceil_sqrt


def gamma_k(g: Graph, k: int) -> int:
    """k-distance domination number: fewest radius-``k`` balls covering ``g``.

    Branch and bound over set cover. Each level branches on the uncovered
    node reachable from the fewest centers, trying only balls not contained
    in another candidate ball; a branch dies once the incumbent cannot be
    beaten even if every further ball were as large as the largest one.
    """
    if k < 1:
        raise InvalidParameter("gamma_k needs k >= 1")
    balls = g.ball_masks(k)
    n = g.n
    # greedy incumbent
    uncovered = g.all_mask
    best = 0
    while uncovered:
        x = max(range(n), key=lambda v: (balls[v] & uncovered).bit_count())
        uncovered &= ~balls[x]
        best += 1
    if best == 1:
        return 1

    state = {"best": best}
    dead: dict = {}

    def rec(uncovered: int, used: int):
        if not uncovered:
            state["best"] = min(state["best"], used)
            return
        biggest = max((b & uncovered).bit_count() for b in balls)
        need = -(-uncovered.bit_count() // biggest)
        if used + need >= state["best"]:
            return
        if dead.get(uncovered, n + 1) <= used:
            return
        dead[uncovered] = used
        target, fewest = -1, n + 1
        rest = uncovered
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            c = balls[u].bit_count()
            if c < fewest:
                target, fewest = u, c
        cands = []
        reach = balls[target]
        while reach:
            low = reach & -reach
            reach ^= low
            cov = balls[low.bit_length() - 1] & uncovered
            cands.append(cov)
        cands.sort(key=lambda c: -c.bit_count())
        kept = []
        for cov in cands:
            if not any(cov & ~kc == 0 for kc in kept):
                kept.append(cov)
        for cov in kept:
            rec(uncovered & ~cov, used + 1)

    rec(g.all_mask, 0)
    return state["best"]


def domination_profile(g: Graph) -> dict:
    """``{k: gamma_k}`` for ``k = 1 .. n-1``; balls past the radius cover everything."""
    radius = metrics(g).radius
    out = {}
    for k in range(1, g.n):
        out[k] = 1 if radius is not None and k >= radius else gamma_k(g, k)
    return out


def hamiltonian_path_ok(g: Graph, walk) -> bool:
    walk = list(walk)
    return (
        sorted(walk) == list(range(g.n))
        and all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))
    )


@dataclass
class BoundsReport:
    n: int
    connected: bool
    lower: dict
    upper: dict
    gamma: dict
    m_star: int | None
    exact: int | None = None
    ng_checks: dict | None = None
    inapplicable: list = field(default_factory=list)

    def sandwich_ok(self) -> bool:
        lo = max(self.lower.values())
        hi = min(self.upper.values())
        if self.exact is None:
            return lo <= hi
        return lo <= self.exact <= hi

    def to_json(self) -> dict:
        out = asdict(self)
        out["gamma"] = {str(k): v for k, v in self.gamma.items()}
        return out


def bounds_report(g: Graph, with_exact: bool = False, hamiltonian_path=None,
                  with_nordhaus_gaddum: bool = False) -> BoundsReport:
    n = g.n
    met = metrics(g)
    lower: dict = {"trivial": 1 if n == 1 else 2}
    upper: dict = {"nodes": n}
    inapplicable = []
    gamma: dict = {}
    m_star = None

    if n >= 2:
        upper["max_degree"] = 2 if met.max_degree == n - 1 else n - met.max_degree

    if met.connected:
        lower["diameter"] = ceil_sqrt(met.diameter + 1)
        upper["radius"] = met.radius + 1
        upper["order"] = 2 * ceil_sqrt(n) - 1
        if n >= 2:
            gamma = domination_profile(g)
            m_star = min(gk + k for k, gk in gamma.items())
            lower["domination_m"] = -(-(m_star + 1) // 2)
            upper["domination_m"] = m_star
    else:
        lower["components"] = len(met.component_radii)
        inapplicable = ["diameter", "radius", "domination_m", "order"]

    if hamiltonian_path is not None:
        if hamiltonian_path_ok(g, hamiltonian_path):
            upper["hamiltonian"] = ceil_sqrt(n)
        else:
            raise InvalidParameter("supplied walk is not a Hamiltonian path of g")

    exact = burning_number(g).burning_number if with_exact else None
    report = BoundsReport(n, met.connected, lower, upper, gamma, m_star, exact,
                          inapplicable=inapplicable)
    if with_nordhaus_gaddum and n >= 2:
        report.ng_checks = nordhaus_gaddum(g, b=exact).checks
    return report


def conjecture_check(g: Graph, exact: int | None = None) -> dict:
    """Compare ``b(G)`` with the conjectured ``ceil(sqrt(n))``; reports only."""
    if exact is None:
        exact = burning_number(g).burning_number
    bound = ceil_sqrt(g.n)
    return {"holds": exact <= bound, "exact": exact, "bound": bound}


@dataclass
class NordhausGaddum:
    n: int
    b: int
    b_complement: int
    connected: bool
    complement_connected: bool
    checks: dict

    @property
    def sum(self) -> int:
        return self.b + self.b_complement

    @property
    def product(self) -> int:
        return self.b * self.b_complement

    def failures(self, include_conjectures: bool = False) -> list:
        return [
            name for name, c in self.checks.items()
            if c["applies"] and not c["holds"] and (include_conjectures or not c["conjecture"])
        ]

    def to_json(self) -> dict:
        out = asdict(self)
        out["sum"] = self.sum
        out["product"] = self.product
        return out


def nordhaus_gaddum(g: Graph, b: int | None = None, b_complement: int | None = None) -> NordhausGaddum:
    """Burning numbers of ``g`` and its complement against every NG inequality.

    Each check records whether it applies (order and connectivity
    preconditions), its threshold and whether it holds. ``product_n_plus_4``
    is an open conjecture and is flagged as such.
    """
    n = g.n
    if n < 2:
        raise InvalidParameter("Nordhaus-Gaddum checks need n >= 2")
    h = complement(g)
    if b is None:
        b = burning_number(g).burning_number
    if b_complement is None:
        b_complement = burning_number(h).burning_number
    s, p = b + b_complement, b * b_complement
    both = g.is_connected() and h.is_connected()

    def check(applies, value, bound, conjecture=False, lower=False):
        holds = (value >= bound) if lower else (value <= bound)
        return {"applies": applies, "bound": bound, "holds": holds if applies else None,
                "conjecture": conjecture}

    checks = {
        "sum_lower": check(True, s, 4, lower=True),
        "sum_upper": check(True, s, n + 2),
        "product_2n": check(n >= 6, p, 2 * n),
        "sum_sqrt": check(both and n >= 6, s, 3 * ceil_sqrt(n) - 1),
        "product_n_plus_6": check(both and n >= 6, p, n + 6),
        "product_n_plus_4": check(both, p, n + 4, conjecture=True),
    }
    return NordhausGaddum(n, b, b_complement, g.is_connected(), h.is_connected(), checks)


def gamb_check(g: Graph, exact: int | None = None) -> bool:
    """True iff ``b(G) >= gamma_{b(G)-1}(G)``."""
    if exact is None:
        exact = burning_number(g).burning_number
    if exact < 2:
        raise InvalidParameter("needs b(G) >= 2")
    return exact >= gamma_k(g, exact - 1)
