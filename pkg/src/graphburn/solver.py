"""Exact and heuristic burning numbers.

The exact search works on the cover form of the problem: ``b(G) <= k`` iff
some nodes ``x_1 .. x_k`` have balls of radii ``k-1, ..., 0`` covering every
node. Such a cover is turned back into a genuine burning sequence with
:func:`graphburn.burning.sequence_from_centers`, so the distance conditions
between sources never enter the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .burning import sequence_from_centers, simulate
from .errors import LimitExceeded
from .graph import Graph, enumerate_spanning_trees, metrics

EXACT = "exact"
CLOSED_FORM = "closed-form"
HEURISTIC = "heuristic-upper"


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True)
class SolveResult:
    burning_number: int
    witness: tuple
    method: str
    nodes_explored: int = 0


def lower_bound(g: Graph) -> int:
    """Cheap lower bound: the longest shortest path, and one source per component."""
    if g.n == 1:
        return 1
    met = metrics(g)
    diam_bound = max(ceil_sqrt(d + 1) for d in met.component_diameters)
    return max(2, diam_bound, len(met.component_diameters))


class _CoverSearch:
    """Depth-first search for a ball cover with radii ``k-1 .. 0``.

    Each level picks the uncovered node with the fewest centers able to reach
    it at the largest open radius and branches on every (radius, center) pair
    covering it. A pair is skipped when another pair with radius no larger
    covers a superset of what is still uncovered; one of radii that give the
    same coverage only the smallest is tried. Dead states are memoised.
    """

    def __init__(self, g: Graph, k: int):
        self.n = g.n
        self.k = k
        self.balls = [g.ball_masks(r) for r in range(k)]
        self.nodes_explored = 0
        self.dead: set = set()

    def run(self):
        self.centers = [None] * self.k
        all_radii = (1 << self.k) - 1
        full = (1 << self.n) - 1
        if self._search(full, all_radii):
            return self.centers
        return None

    def _search(self, uncovered: int, radii: int) -> bool:
        self.nodes_explored += 1
        if not uncovered:
            return True
        if not radii or (uncovered, radii) in self.dead:
            return False
        open_radii = [r for r in range(self.k - 1, -1, -1) if radii >> r & 1]
        need = uncovered.bit_count()
        reach = 0
        for r in open_radii:
            reach += max((b & uncovered).bit_count() for b in self.balls[r])
        if reach < need:
            self.dead.add((uncovered, radii))
            return False

        big = self.balls[open_radii[0]]
        target = -1
        fewest = self.n + 1
        rest = uncovered
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            c = big[u].bit_count()
            if c < fewest:
                fewest, target = c, u

        candidates = []
        for r in reversed(open_radii):
            ball_r = self.balls[r]
            reach_u = ball_r[target]
            while reach_u:
                low = reach_u & -reach_u
                x = low.bit_length() - 1
                reach_u ^= low
                candidates.append((r, x, ball_r[x] & uncovered))
        candidates.sort(key=lambda c: (c[0], -c[2].bit_count(), c[1]))
        kept = []
        for r, x, cov in candidates:
            if any(cov & ~kc == 0 for _, _, kc in kept):
                continue
            kept.append((r, x, cov))
        kept.sort(key=lambda c: (-c[2].bit_count(), c[0], c[1]))

        for r, x, cov in kept:
            self.centers[r] = x
            if self._search(uncovered & ~cov, radii & ~(1 << r)):
                return True
            self.centers[r] = None
        self.dead.add((uncovered, radii))
        return False


def find_cover(g: Graph, k: int):
    """Centers of a radius ``k-1, ..., 0`` ball cover, or None if none exists.

    ``result[r]`` is the center whose ball has radius ``r`` (None when the
    cover finished before that radius was needed). Also returns the number
    of search nodes visited.
    """
    search = _CoverSearch(g, k)
    return search.run(), search.nodes_explored


def _centers_in_round_order(centers, k):
    return [centers[k - 1 - i] for i in range(k) if centers[k - 1 - i] is not None]


def decide(g: Graph, k: int, stats: dict | None = None):
    """A burning sequence of length at most ``k``, or None when ``b(G) > k``."""
    if k < 1:
        return None
    if k >= g.n:
        return sequence_from_centers(g, list(range(g.n)))
    centers, explored = find_cover(g, k)
    if stats is not None:
        stats["nodes_explored"] = stats.get("nodes_explored", 0) + explored
    if centers is None:
        return None
    seq = sequence_from_centers(g, _centers_in_round_order(centers, k))
    assert len(seq) <= k and simulate(g, seq).valid
    return seq


def path_sequence(n: int) -> tuple:
    """Optimal sources on the path ``0 - 1 - ... - n-1`` (0-based ids).

    Source ``k - i`` sits at 1-based position ``n - i^2 - i`` for
    ``i = 0 .. k-2``; the first source is at ``n - (k-1)^2 - (k-1)`` when
    that keeps it on the path's far side, else at the first node.
    """
    k = ceil_sqrt(n)
    seq = [0] * k
    for i in range(k - 1):
        seq[k - 1 - i] = n - i * i - i - 1
    if n >= (k - 1) ** 2 + k:
        seq[0] = n - (k - 1) ** 2 - (k - 1) - 1
    else:
        seq[0] = 0
    return tuple(seq)


def closed_form(g: Graph) -> SolveResult | None:
    """Burning number of a recognised generator instance, with a witness."""
    if g.kind is None:
        return None
    family = g.kind[0]
    if family in ("path", "cycle"):
        n = g.kind[1]
        witness = sequence_from_centers(g, path_sequence(n))
        return SolveResult(ceil_sqrt(n), witness, CLOSED_FORM)
    if family == "complete":
        witness = (0, 1) if g.n > 1 else (0,)
        return SolveResult(len(witness), witness, CLOSED_FORM)
    return None


def burning_number(g: Graph, *, use_closed_forms: bool = True, upper: int | None = None) -> SolveResult:
    """Exact ``b(G)``: the smallest ``k`` from the lower bound up that is feasible."""
    if use_closed_forms:
        known = closed_form(g)
        if known is not None:
            return known
    if upper is None:
        upper = g.n
    stats: dict = {}
    for k in range(lower_bound(g), upper + 1):
        seq = decide(g, k, stats)
        if seq is not None:
            return SolveResult(len(seq), seq, EXACT, stats.get("nodes_explored", 0))
    raise ValueError(f"no burning sequence of length <= {upper}")


def greedy_upper_bound(g: Graph) -> SolveResult:
    """Greedy max-coverage cover for increasing ``k``; an upper bound on ``b(G)``."""
    full = g.all_mask
    for k in range(lower_bound(g), g.n + 1):
        uncovered = full
        centers = []
        for i in range(1, k + 1):
            balls = g.ball_masks(k - i)
            x = max(range(g.n), key=lambda v: ((balls[v] & uncovered).bit_count(), -v))
            centers.append(x)
            uncovered &= ~balls[x]
            if not uncovered:
                break
        if not uncovered:
            seq = sequence_from_centers(g, centers)
            return SolveResult(len(seq), seq, HEURISTIC, k)
    raise AssertionError("greedy cover must succeed by k = n")


def enumerate_optimal_sequences(g: Graph, limit: int = 100_000, k: int | None = None) -> list[tuple]:
    """Every valid burning sequence of length ``b(G)`` (or ``k`` if given).

    Sequences are grown one round at a time by the burning process itself, so
    each emitted sequence is valid by construction. A branch is cut when the
    nodes the current fire cannot reach in the remaining rounds outnumber the
    largest balls the remaining sources could cover.
    """
    if k is None:
        k = burning_number(g).burning_number
    n = g.n
    closed = g.ball_masks(1)
    full = g.all_mask
    best_ball = [max(b.bit_count() for b in g.ball_masks(r)) for r in range(k)]
    # slack[i]: most nodes sources i+1..k (0-based) can still cover
    slack = [sum(best_ball[k - 1 - j] for j in range(i, k)) for i in range(k + 1)]
    out: list[tuple] = []
    seq: list[int] = []

    def spread(mask, steps):
        for _ in range(steps):
            nxt = mask
            rest = mask
            while rest:
                low = rest & -rest
                nxt |= closed[low.bit_length() - 1]
                rest ^= low
            if nxt == mask:
                break
            mask = nxt
        return mask

    def rec(burned: int):
        i = len(seq)
        if i == k:
            if burned == full:
                out.append(tuple(seq))
                if len(out) > limit:
                    raise LimitExceeded(f"more than {limit} optimal sequences", partial=out[:limit])
            return
        will_burn = spread(burned, k - i)
        if (full & ~will_burn).bit_count() > slack[i]:
            return
        after_spread = spread(burned, 1)
        for x in range(n):
            if burned >> x & 1:
                continue
            seq.append(x)
            rec(after_spread | (1 << x))
            seq.pop()

    rec(0)
    return out


def burning_number_via_spanning_trees(g: Graph, tree_limit: int = 10_000) -> int:
    """``min b(T)`` over the spanning trees ``T`` of a connected graph."""
    trees = enumerate_spanning_trees(g, limit=tree_limit)
    return min(burning_number(t).burning_number for t in trees)
