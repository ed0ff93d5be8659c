"""Iterated Local Transitivity (ILT) graphs and their burning numbers.

Each ILT step gives every node ``x`` a clone ``x + n`` joined to ``x`` and
to every neighbour of ``x``. Whether ``b(G_t)`` equals ``b(G_0)`` or
``b(G_0) + 1`` for ``t >= 1`` is decided by looking at the last source of the
optimal burning sequences of ``G_0``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .burning import simulate
from .errors import Disconnected, LimitExceeded
from .graph import Graph, from_edge_list
from .solver import burning_number, enumerate_optimal_sequences

MAX_NODES = 2 ** 20


def ilt_step(g: Graph):
    """One ILT step; returns the new graph and ``clone_of[x] = x + n``."""
    n = g.n
    edges = g.edges()
    for x in range(n):
        edges.append((x, x + n))
        edges.extend((x + n, y) for y in g.adj[x])
    clone_of = tuple(range(n, 2 * n))
    return from_edge_list(2 * n, edges), clone_of


@dataclass
class IltTrace:
    g0: Graph
    steps: list = field(default_factory=list)

    @property
    def graphs(self) -> list:
        return [self.g0] + [h for h, _ in self.steps]

    def at(self, t: int) -> Graph:
        return self.graphs[t]


def ilt_iterate(g0: Graph, t: int, max_nodes: int = MAX_NODES) -> IltTrace:
    if not g0.is_connected():
        raise Disconnected("the ILT model starts from a connected graph")
    if g0.n * 2 ** t > max_nodes:
        raise LimitExceeded(f"G_{t} would have {g0.n * 2 ** t} nodes (cap {max_nodes})")
    trace = IltTrace(g0)
    g = g0
    for _ in range(t):
        g, clone_of = ilt_step(g)
        trace.steps.append((g, clone_of))
    return trace


@dataclass(frozen=True)
class IltPrediction:
    b0: int
    predicted: int
    witness: tuple | None
    sequences_checked: int


def last_source_has_early_neighbour(g: Graph, seq) -> bool:
    """Does the last source have a neighbour burning by round ``k - 1``?"""
    sched = simulate(g, seq)
    k = len(seq)
    return any(0 < sched.burn_round[w] <= k - 1 for w in g.adj[seq[-1]])


def ilt_predict(g0: Graph, limit: int = 100_000) -> IltPrediction:
    """Predicted ``b(G_t)`` for every ``t >= 1``.

    ``b(G_0)`` when some optimal sequence of ``G_0`` ends on a node with a
    neighbour already burning by the second-to-last round, else ``b(G_0) + 1``.
    """
    b0 = burning_number(g0).burning_number
    seqs = enumerate_optimal_sequences(g0, limit=limit, k=b0)
    for idx, seq in enumerate(seqs, 1):
        if last_source_has_early_neighbour(g0, seq):
            return IltPrediction(b0, b0, seq, idx)
    return IltPrediction(b0, b0 + 1, None, len(seqs))


def _exact(g: Graph) -> int:
    return burning_number(g).burning_number


def ilt_verify(g0: Graph, t_max: int, workers: int = 1) -> list[dict]:
    """Exact ``b(G_t)`` against the prediction for ``t = 0 .. t_max``.

    Row ``t = 0`` carries ``b(G_0)`` and no prediction. The ``constant`` flag
    on each later row says whether every ``b(G_s)``, ``1 <= s <= t``, agrees.
    """
    pred = ilt_predict(g0)
    graphs = ilt_iterate(g0, t_max).graphs
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            exact = list(pool.map(_exact, graphs))
    else:
        exact = [_exact(h) for h in graphs]
    rows = []
    for t, (h, b) in enumerate(zip(graphs, exact)):
        row = {"t": t, "nodes": h.n, "exact": b}
        if t >= 1:
            row["predicted"] = pred.predicted
            row["match"] = b == pred.predicted
            row["constant"] = len(set(exact[1: t + 1])) == 1
        rows.append(row)
    return rows
