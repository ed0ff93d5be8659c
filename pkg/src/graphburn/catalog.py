"""All connected graphs on up to 8 nodes, up to isomorphism.

Graphs are grown one node at a time: every connected graph has a node whose
removal leaves it connected, so attaching a new node to every nonempty
subset of every connected ``(n-1)``-node graph reaches all of them.
Duplicates are removed with a canonical labelling (colour refinement plus
individualisation, keeping the ordering with the largest adjacency code).

The generated catalog ships as ``data/connected_le8.g6`` (graph6 format).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graph import Graph, from_edge_list

# Connected unlabelled graphs on n nodes (OEIS A001349).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

CATALOG_FILE = "connected_le8.g6"


# -- canonical labelling --------------------------------------------------------


def _refine(nb, cells):
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        out = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                counts = [0] * len(cells)
                m = nb[v]
                while m:
                    low = m & -m
                    counts[where[low.bit_length() - 1]] += 1
                    m ^= low
                groups.setdefault(tuple(counts), []).append(v)
            for key in sorted(groups):
                out.append(groups[key])
        if len(out) == len(cells):
            return out
        cells = out


def _code(nb, order):
    code = 0
    n = len(order)
    for i in range(n):
        row = nb[order[i]]
        for j in range(i + 1, n):
            code <<= 1
            if row >> order[j] & 1:
                code |= 1
    return code


def _twin_reps(nb, cell):
    reps = []
    for v in cell:
        bv = 1 << v
        if not any((nb[v] & ~(1 << w)) == (nb[w] & ~bv) for w in reps):
            reps.append(v)
    return reps


def canonical_order(nb: list[int]) -> list[int]:
    """Node ordering whose adjacency code is maximal among the search leaves."""
    n = len(nb)
    best = [None, None]

    def search(cells):
        cells = _refine(nb, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(nb, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        ci = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[ci]
        for v in _twin_reps(nb, cell):
            rest = [w for w in cell if w != v]
            search(cells[:ci] + [[v], rest] + cells[ci + 1:])

    degree_cells: dict = {}
    for v in range(n):
        degree_cells.setdefault(nb[v].bit_count(), []).append(v)
    search([degree_cells[d] for d in sorted(degree_cells)])
    return best[1]


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in a) for a in g.adj]


def canonical_key(g: Graph) -> tuple:
    nb = _masks(g)
    return g.n, _code(nb, canonical_order(nb))


def canonical_form(g: Graph) -> Graph:
    nb = _masks(g)
    order = canonical_order(nb)
    pos = {v: i for i, v in enumerate(order)}
    return from_edge_list(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


# -- graph6 ---------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("only n <= 62 supported")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    n = ord(s[0]) - 63
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edge_list(n, edges)


# -- generation -----------------------------------------------------------------


def generate_connected(max_n: int) -> dict[int, list[Graph]]:
    """``{n: [connected graphs on n nodes]}`` for ``n = 1 .. max_n``, canonical."""
    levels = {1: [from_edge_list(1, [])]}
    for n in range(2, max_n + 1):
        seen: dict = {}
        for h in levels[n - 1]:
            base = h.edges()
            for subset in range(1, 1 << (n - 1)):
                edges = base + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
                g = from_edge_list(n, edges)
                nb = _masks(g)
                order = canonical_order(nb)
                key = _code(nb, order)
                if key not in seen:
                    pos = {v: i for i, v in enumerate(order)}
                    seen[key] = from_edge_list(n, [(pos[u], pos[v]) for u, v in edges])
        levels[n] = [seen[key] for key in sorted(seen, reverse=True)]
    return levels


def write_catalog(path, max_n: int = 8) -> None:
    levels = generate_connected(max_n)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for n in sorted(levels):
            for g in levels[n]:
                fh.write(to_graph6(g) + "\n")


def _catalog_text() -> str:
    return resources.files("graphburn").joinpath("data", CATALOG_FILE).read_text("ascii")


def load_catalog(max_n: int = 8, min_n: int = 1) -> list[Graph]:
    """Connected graphs with ``min_n <= n <= max_n`` from the shipped cache."""
    if max_n > 8:
        raise ValueError("the shipped catalog stops at n = 8")
    out = []
    for line in _catalog_text().split():
        n = ord(line[0]) - 63
        if min_n <= n <= max_n:
            out.append(from_graph6(line))
    return out


def main():  # regenerate the shipped file
    target = Path(__file__).with_name("data") / CATALOG_FILE
    write_catalog(target)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
