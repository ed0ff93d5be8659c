"""Simple undirected graphs on dense integer ids, with hop metrics.

Nodes are ``0 .. n-1``. Node sets are handled throughout the package as
Python ints used as bit sets (bit ``v`` set means node ``v`` is present);
:meth:`Graph.ball_masks` is the hot path for the solver and the bounds code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    Disconnected,
    EmptyGraph,
    InvalidEdge,
    InvalidEmbedding,
    InvalidNode,
    InvalidParameter,
    LimitExceeded,
    ParseError,
)

UNREACHABLE = -1


def mask_to_nodes(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def nodes_to_mask(nodes: Iterable[int]) -> int:
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph.

    Build instances with :func:`from_edge_list` or one of the generators;
    the constructor trusts its input. ``kind`` is a generator tag such as
    ``("path", 9)`` and is only ever set by this module's generators.
    """

    __slots__ = ("n", "adj", "labels", "kind", "_dist", "_balls", "_hash")

    def __init__(self, n: int, adj: Sequence[Sequence[int]], labels=None, kind=None):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self.labels = tuple(labels) if labels is not None else None
        self.kind = kind
        self._dist = None
        self._balls = {}
        self._hash = None

    # -- basic structure ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def dist(self) -> np.ndarray:
        """Read-only all-pairs hop distance matrix, computed on first use."""
        if self._dist is None:
            self._dist = all_pairs_distances(self)
        return self._dist

    def ball_masks(self, r: int) -> list[int]:
        """Bit masks of the closed radius-``r`` balls around every node."""
        r = max(r, 0)
        cached = self._balls.get(r)
        if cached is None:
            d = self.dist
            inside = (d >= 0) & (d <= r)
            packed = np.packbits(inside, axis=1, bitorder="little")
            cached = [int.from_bytes(row.tobytes(), "little") for row in packed]
            self._balls[r] = cached
        return cached

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return bool((self.dist[0] >= 0).all())

    def induced_subgraph(self, nodes: Sequence[int]) -> Graph:
        """Subgraph induced by ``nodes``; node ``nodes[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(nodes)}
        adj = [sorted(index[w] for w in self.adj[v] if w in index) for v in nodes]
        return Graph(len(nodes), adj)

    def node_name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        tag = f" kind={self.kind}" if self.kind else ""
        return f"<Graph n={self.n} m={self.m}{tag}>"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels=None, kind=None) -> Graph:
    """Build a simple graph on nodes ``0..n-1``; duplicate edges collapse."""
    if n <= 0:
        raise EmptyGraph("graph must have at least one node")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidNode(f"edge ({u}, {v}) outside node range [0, {n})")
        if u == v:
            raise InvalidEdge(f"self-loop at node {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if labels is not None and len(labels) != n:
        raise InvalidParameter("labels must have one entry per node")
    return Graph(n, [sorted(s) for s in nbrs], labels=labels, kind=kind)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop distances by one BFS per source; ``UNREACHABLE`` across components."""
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    adj = g.adj
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if row[w] < 0:
                        row[w] = d
                        nxt.append(w)
            frontier = nxt
    dist.flags.writeable = False
    return dist


@dataclass(frozen=True)
class GraphMetrics:
    """Radius, diameter and center of a graph.

    For a disconnected graph ``radius``, ``diameter`` and ``center`` are None
    and the per-component values live in ``component_radii`` and
    ``component_diameters`` (components ordered by smallest node id).
    """

    radius: int | None
    diameter: int | None
    center: frozenset | None
    max_degree: int
    connected: bool
    component_radii: tuple
    component_diameters: tuple


def eccentricities(g: Graph) -> np.ndarray:
    """Eccentricity of each node inside its own component."""
    return g.dist.max(axis=1)


def metrics(g: Graph) -> GraphMetrics:
    ecc = eccentricities(g)
    radii, diams = [], []
    for comp in g.components():
        radii.append(int(ecc[comp].min()))
        diams.append(int(ecc[comp].max()))
    connected = len(radii) == 1
    if connected:
        radius, diameter = radii[0], diams[0]
        center = frozenset(int(v) for v in np.flatnonzero(ecc == radius))
    else:
        radius = diameter = center = None
    return GraphMetrics(radius, diameter, center, g.max_degree, connected,
                        tuple(radii), tuple(diams))


def ball(g: Graph, v: int, r: int) -> frozenset:
    """Closed neighbourhood ``{u : d(u, v) <= r}``."""
    if not 0 <= v < g.n:
        raise InvalidNode(f"node {v} outside [0, {g.n})")
    if r < 0:
        raise InvalidParameter("radius must be non-negative")
    return frozenset(mask_to_nodes(g.ball_masks(r)[v]))


def complement(g: Graph) -> Graph:
    n = g.n
    adj = []
    for u in range(n):
        present = set(g.adj[u])
        adj.append([v for v in range(n) if v != u and v not in present])
    return Graph(n, adj, labels=g.labels)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise EmptyGraph("disjoint union of an empty list")
    adj = []
    offset = 0
    for h in gs:
        adj.extend([w + offset for w in a] for a in h.adj)
        offset += h.n
    return Graph(offset, adj)


# -- generators -------------------------------------------------------------


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidParameter(message)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], kind=("path", n))


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], kind=("cycle", n))


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return from_edge_list(n, edges, kind=("complete", n))


def empty(n: int) -> Graph:
    _require(n >= 1, "empty graph needs n >= 1")
    return from_edge_list(n, [], kind=("empty", n))


def star(s: int) -> Graph:
    """K_{1,s} with the center at node 0."""
    _require(s >= 1, "star needs s >= 1")
    return from_edge_list(s + 1, [(0, i) for i in range(1, s + 1)], kind=("star", s))


def spider(s: int, r: int) -> Graph:
    """SP(s, r): ``s`` arms of length ``r`` hanging off center node 0."""
    _require(s >= 3 and r >= 1, "spider needs s >= 3 and r >= 1")
    edges = []
    for arm in range(s):
        prev = 0
        for step in range(r):
            node = 1 + arm * r + step
            edges.append((prev, node))
            prev = node
    return from_edge_list(s * r + 1, edges, kind=("spider", s, r))


def add_universal_node(g: Graph) -> Graph:
    """Append node ``g.n`` adjacent to every existing node."""
    edges = g.edges() + [(v, g.n) for v in range(g.n)]
    return from_edge_list(g.n + 1, edges)


def wheel(n: int) -> Graph:
    """W_n: a universal hub (node ``n``) over the rim cycle C_n."""
    _require(n >= 4, "wheel needs n >= 4")
    edges = cycle(n).edges() + [(v, n) for v in range(n)]
    return from_edge_list(n + 1, edges, kind=("wheel", n))


def gnp_random(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a given seed."""
    _require(n >= 1, "gnp needs n >= 1")
    _require(0.0 <= p <= 1.0, "gnp needs 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_tree(n: int, seed) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    _require(n >= 1, "tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    prufer = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return from_edge_list(n, edges)


# -- subgraph relations -----------------------------------------------------


def is_isometric_subgraph(h: Graph, g: Graph, embed: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff ``embed`` maps ``h`` into ``g`` preserving every distance.

    ``embed`` must be injective and send edges of ``h`` to edges of ``g``.
    """
    phi = [embed[v] for v in range(h.n)]
    if len(set(phi)) != h.n or any(not 0 <= x < g.n for x in phi):
        raise InvalidEmbedding("embedding must be injective into g's nodes")
    for u, v in h.edges():
        if not g.has_edge(phi[u], phi[v]):
            raise InvalidEmbedding(f"edge ({u}, {v}) of h is not an edge of g")
    sub = g.dist[np.ix_(phi, phi)]
    return bool(np.array_equal(sub, h.dist))


def enumerate_spanning_trees(g: Graph, limit: int = 10_000) -> list[Graph]:
    """Every spanning tree of ``g`` by edge inclusion/exclusion.

    Excluding an edge is only tried when the remaining edges can still
    connect the graph; including one only when it joins two components.
    """
    if not g.is_connected():
        raise Disconnected("spanning trees need a connected graph")
    n = g.n
    edges = g.edges()
    trees: list[Graph] = []

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def connectable(chosen, start):
        parent = list(range(n))
        parts = n
        for u, v in list(chosen) + edges[start:]:
            a, b = find(parent, u), find(parent, v)
            if a != b:
                parent[a] = b
                parts -= 1
        return parts == 1

    def rec(i, chosen, parent):
        if len(chosen) == n - 1:
            trees.append(from_edge_list(n, chosen))
            if len(trees) > limit:
                raise LimitExceeded(f"more than {limit} spanning trees", partial=trees[:limit])
            return
        if i == len(edges):
            return
        u, v = edges[i]
        a, b = find(parent, u), find(parent, v)
        if a != b:
            child = parent.copy()
            child[a] = b
            chosen.append((u, v))
            rec(i + 1, chosen, child)
            chosen.pop()
        if connectable(chosen, i + 1):
            rec(i + 1, chosen, parent)

    rec(0, [], list(range(n)))
    return trees


# -- edge-list text format ----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
