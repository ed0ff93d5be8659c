"""Burning sequences: simulation, the covering characterization, tree partitions.

Round convention: in round ``i`` the source ``x_i`` must be a node that was
still unburned at the end of round ``i - 1``; during round ``i`` the fire also
spreads one hop from everything burned by the end of round ``i - 1``. Under
this convention a sequence is valid exactly when the balls
``N_{k-1}[x_1], ..., N_0[x_k]`` cover the graph and
``d(x_i, x_j) >= j - i`` for all ``i < j``.

Rounds and sequence positions are 1-based everywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidCover, InvalidNode, InvalidPartition, InvalidSequence
from .graph import Graph, mask_to_nodes, nodes_to_mask

UNBURNED = 0


def _check_ids(g: Graph, seq: Sequence[int]):
    for x in seq:
        if not 0 <= x < g.n:
            raise InvalidNode(f"source {x} outside [0, {g.n})")


@dataclass(frozen=True)
class BurnSchedule:
    """Outcome of running the burning process on a sequence.

    ``burn_round[v]`` is the round node ``v`` caught fire, or ``UNBURNED``.
    ``invalid_at`` is None for a valid sequence; otherwise it is the first
    round ``i`` whose source was already burned, or ``k + 1`` when nodes are
    left unburned after the last round.
    """

    sequence: tuple
    burn_round: tuple
    invalid_at: int | None = None
    reason: str | None = None

    @property
    def valid(self) -> bool:
        return self.invalid_at is None

    @property
    def rounds(self) -> int:
        return len(self.sequence)


def simulate(g: Graph, seq: Sequence[int]) -> BurnSchedule:
    """Run the round-by-round burning process (no distance tables involved)."""
    seq = tuple(int(x) for x in seq)
    _check_ids(g, seq)
    burn = [UNBURNED] * g.n
    frontier: list[int] = []
    for i, x in enumerate(seq, 1):
        if burn[x] != UNBURNED:
            return BurnSchedule(seq, tuple(burn), i, "source already burned")
        lit = []
        for u in frontier:
            for w in g.adj[u]:
                if burn[w] == UNBURNED:
                    burn[w] = i
                    lit.append(w)
        if burn[x] == UNBURNED:
            burn[x] = i
            lit.append(x)
        frontier = lit
    if UNBURNED in burn:
        return BurnSchedule(seq, tuple(burn), len(seq) + 1, "nodes unburned after last round")
    return BurnSchedule(seq, tuple(burn))


@dataclass(frozen=True)
class SequenceCheck:
    """Verdict of the covering characterization, with a failure witness.

    ``uncovered`` is the lowest uncovered node; ``violation`` the first pair
    of positions ``(i, j)`` with ``d(x_i, x_j) < j - i``.
    """

    valid: bool
    uncovered: int | None = None
    violation: tuple | None = None


def check_sequence(g: Graph, seq: Sequence[int]) -> SequenceCheck:
    """Validate via ball cover plus pairwise source distances."""
    seq = tuple(int(x) for x in seq)
    _check_ids(g, seq)
    k = len(seq)
    d = g.dist
    for i in range(k):
        for j in range(i + 1, k):
            dij = d[seq[i], seq[j]]
            if 0 <= dij < j - i:
                return SequenceCheck(False, violation=(i + 1, j + 1))
    covered = 0
    for i, x in enumerate(seq):
        covered |= g.ball_masks(k - 1 - i)[x]
    missing = g.all_mask & ~covered
    if missing:
        return SequenceCheck(False, uncovered=(missing & -missing).bit_length() - 1)
    return SequenceCheck(True)


def is_burning_sequence(g: Graph, seq: Sequence[int]) -> bool:
    return check_sequence(g, seq).valid


# -- rooted tree partitions ---------------------------------------------------


@dataclass(frozen=True)
class TreePart:
    root: int
    members: frozenset
    parent: dict = field(hash=False)

    def depth(self, v: int) -> int:
        steps = 0
        while v != self.root:
            v = self.parent[v]
            steps += 1
        return steps

    @property
    def height(self) -> int:
        return max(self.depth(v) for v in self.members)


@dataclass(frozen=True)
class RootedTreePartition:
    parts: tuple

    @property
    def roots(self) -> tuple:
        return tuple(p.root for p in self.parts)


def sequence_to_partition(g: Graph, seq: Sequence[int]) -> RootedTreePartition:
    """Split ``V(G)`` into trees rooted at the sources of a valid sequence.

    A node joins the part of the *latest* source whose fire reaches it at its
    burn round; with ``d(x_i, x_j) >= j - i`` allowed to be tight, taking the
    earliest such source can strand a part's root inside another part. Tree
    parents are the lowest-id neighbour one step closer to the root.
    """
    sched = simulate(g, seq)
    if not sched.valid:
        raise InvalidSequence(f"not a burning sequence (fails at round {sched.invalid_at})")
    seq = sched.sequence
    d = g.dist
    owner = [-1] * g.n
    for v in range(g.n):
        for i in range(len(seq) - 1, -1, -1):
            dv = d[seq[i], v]
            if dv >= 0 and i + 1 + dv == sched.burn_round[v]:
                owner[v] = i
                break
    parts = []
    for i, x in enumerate(seq):
        members = [v for v in range(g.n) if owner[v] == i]
        parent = {}
        for v in members:
            if v == x:
                continue
            parent[v] = min(w for w in g.adj[v] if owner[w] == i and d[x, w] == d[x, v] - 1)
        parts.append(TreePart(x, frozenset(members), parent))
    return RootedTreePartition(tuple(parts))


def partition_to_sequence(g: Graph, p: RootedTreePartition) -> tuple:
    """Return the roots of a rooted tree partition as a burning sequence.

    Checks that the parts partition the nodes, that each parent map is a tree
    over edges of ``g`` rooted at its root, that part ``i`` has height at most
    ``k - i`` and that roots of parts ``i, j`` are at distance ``>= |i - j|``.
    """
    k = len(p.parts)
    seen = 0
    for i, part in enumerate(p.parts, 1):
        mask = nodes_to_mask(part.members)
        if mask & seen:
            raise InvalidPartition(f"part {i} overlaps an earlier part")
        seen |= mask
        if part.root not in part.members:
            raise InvalidPartition(f"part {i}: root {part.root} is not a member")
        if set(part.parent) != set(part.members) - {part.root}:
            raise InvalidPartition(f"part {i}: parent map must cover exactly the non-root members")
        for v, w in part.parent.items():
            if w not in part.members or not g.has_edge(v, w):
                raise InvalidPartition(f"part {i}: parent link {v}->{w} is not an edge inside the part")
        for v in part.members:
            steps, u = 0, v
            while u != part.root:
                u = part.parent[u]
                steps += 1
                if steps > len(part.members):
                    raise InvalidPartition(f"part {i}: parent links contain a cycle")
            if steps > k - i:
                raise InvalidPartition(f"part {i}: height exceeds {k - i}")
    if seen != g.all_mask:
        raise InvalidPartition("parts do not cover every node")
    roots = p.roots
    d = g.dist
    for i in range(k):
        for j in range(i + 1, k):
            dij = d[roots[i], roots[j]]
            if 0 <= dij < j - i:
                raise InvalidPartition(f"roots of parts {i + 1} and {j + 1} are too close")
    return roots


# -- covers ------------------------------------------------------------------


def _spread(g: Graph, burned: int) -> int:
    closed = g.ball_masks(1)
    out = burned
    for v in mask_to_nodes(burned):
        out |= closed[v]
    return out


def sequence_from_centers(g: Graph, centers: Sequence[int]) -> tuple:
    """Build a burning sequence that lights every given center in time.

    Each round picks the first center, in the given order, that is still
    unburned; once every center has burned the remaining rounds take the
    lowest-id unburned node, until nothing is left. Center ``j`` (1-based)
    therefore burns by round ``j``.
    """
    seq = []
    burned = 0
    full = g.all_mask
    while burned != full:
        pick = next((c for c in centers if not burned >> c & 1), None)
        if pick is None:
            rest = full & ~burned
            pick = (rest & -rest).bit_length() - 1
        burned = _spread(g, burned) | (1 << pick)
        seq.append(pick)
    return tuple(seq)


def cover_to_sequence(g: Graph, cover: Sequence, k: int) -> tuple:
    """Turn a cover by connected pieces of radius ``<= k`` into a sequence.

    The result has length at most ``len(cover) + k``; when piece ``i`` has
    radius at most ``k - i`` the length is at most ``k``.
    """
    centers = []
    covered = 0
    for idx, piece in enumerate(cover, 1):
        nodes = sorted(set(piece))
        if not nodes:
            raise InvalidCover(f"cover element {idx} is empty")
        _check_ids(g, nodes)
        sub = g.induced_subgraph(nodes)
        if not sub.is_connected():
            raise InvalidCover(f"cover element {idx} is not connected")
        ecc = sub.dist.max(axis=1)
        if ecc.min() > k:
            raise InvalidCover(f"cover element {idx} has radius {int(ecc.min())} > {k}")
        centers.append(nodes[int(np.argmin(ecc))])
        covered |= nodes_to_mask(nodes)
    if covered != g.all_mask:
        raise InvalidCover("cover does not contain every node")
    return sequence_from_centers(g, centers)


def cone_substitution(g: Graph, seq: Sequence[int], j: int, x: int) -> tuple | None:
    """Replace source ``x_j`` by ``x`` when that provably keeps validity.

    Requires ``x`` outside the sequence, ``1 <= j <= k - 1``,
    ``N[x_j] ⊆ N[x]`` and ``d(x, x_i) >= |i - j|`` for all ``i != j``.
    Returns the new sequence, or None when a precondition fails.
    """
    seq = tuple(seq)
    k = len(seq)
    if x in seq or not 1 <= j <= k - 1:
        return None
    closed = g.ball_masks(1)
    xj = seq[j - 1]
    if closed[xj] & ~closed[x]:
        return None
    d = g.dist
    for i, xi in enumerate(seq, 1):
        if i != j and 0 <= d[x, xi] < abs(i - j):
            return None
    return seq[: j - 1] + (x,) + seq[j:]
