"""Synthesized DIMACS clique benchmark instances.

Each generator reconstructs a published benchmark family from its defining
combinatorial rule, producing a graph isomorphic to the canonical file
(node numbering may differ). The (n, m) pairs of the complement graphs are
pinned in EXPECTED_COMPLEMENT_DIMENSIONS and checked by tests against the
published dimensions, which also match the canonical files edge-for-edge.

All generators return the clique-side graph, i.e. what the benchmark file
itself stores; the solver complements it before searching, exactly as it
does for the canonical files.
"""

from __future__ import annotations

import math
from itertools import combinations

from wao.graph import Graph


def johnson_graph(word_length: int, weight: int, min_distance: int) -> Graph:
    """Nodes are binary words of fixed weight; edges join words at Hamming
    distance >= min_distance."""
    nodes = list(combinations(range(word_length), weight))
    index = {node: i for i, node in enumerate(nodes)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(nodes, 2)
        if len(set(a) ^ set(b)) >= min_distance
    ]
    return Graph.from_edges(len(nodes), edges)


def hamming_graph(word_length: int, min_distance: int) -> Graph:
    """Nodes are all binary words of the given length; edges join words at
    Hamming distance >= min_distance."""
    n = 2**word_length
    edges = [
        (a, b)
        for a, b in combinations(range(n), 2)
        if (a ^ b).bit_count() >= min_distance
    ]
    return Graph.from_edges(n, edges)


def c_fat_graph(n: int, c: int) -> Graph:
    """Ring of floor(n / (c ln n)) node sets: each set is a clique and is
    completely joined to the two ring-adjacent sets. Set sizes are as equal
    as possible, with the larger sets first and contiguous."""
    k = int(n // (c * math.log(n)))
    base = n // k
    larger = n - k * base
    sizes = [base + 1] * larger + [base] * (k - larger)
    groups: list[list[int]] = []
    next_node = 0
    for size in sizes:
        groups.append(list(range(next_node, next_node + size)))
        next_node += size
    edges: list[tuple[int, int]] = []
    for i, group in enumerate(groups):
        edges.extend(combinations(group, 2))
        for u in group:
            for v in groups[(i + 1) % k]:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def _steiner_triple_system_9() -> list[tuple[int, int, int]]:
    """The twelve lines of the affine plane of order 3 on points 0..8."""
    points = [(i, j) for i in range(3) for j in range(3)]
    index = {p: k for k, p in enumerate(points)}
    lines: set[tuple[int, int, int]] = set()
    for x, y in points:
        for dx, dy in ((0, 1), (1, 0), (1, 1), (1, 2)):
            line = tuple(
                sorted(index[((x + t * dx) % 3, (y + t * dy) % 3)] for t in range(3))
            )
            lines.add(line)  # type: ignore[arg-type]
    assert len(lines) == 12
    return sorted(lines)


def mann_a9_graph() -> Graph:
    """Clique formulation of the Steiner-triple covering instance on 9 points.

    The complement has, per triple, a triangle on that triple's three
    (triple, element) vertices plus a spoke from each to its element vertex;
    the clique-side graph returned here is the complement of that.
    """
    triples = _steiner_triple_system_9()
    pair_index: dict[tuple[int, int], int] = {}
    for r, triple in enumerate(triples):
        for e in triple:
            pair_index[(r, e)] = len(pair_index)
    element_base = len(pair_index)
    n = element_base + 9
    conflict: list[tuple[int, int]] = []
    for r, triple in enumerate(triples):
        for a, b in combinations(triple, 2):
            conflict.append((pair_index[(r, a)], pair_index[(r, b)]))
        for e in triple:
            conflict.append((pair_index[(r, e)], element_base + e))
    conflict_graph = Graph.from_edges(n, conflict)
    present = set(conflict_graph.edges)
    clique_side = [
        (u, v) for u, v in combinations(range(n), 2) if (u, v) not in present
    ]
    return Graph.from_edges(n, clique_side)


GENERATORS = {
    "johnson8-2-4": lambda: johnson_graph(8, 2, 4),
    "johnson8-4-4": lambda: johnson_graph(8, 4, 4),
    "johnson16-2-4": lambda: johnson_graph(16, 2, 4),
    "hamming6-2": lambda: hamming_graph(6, 2),
    "hamming6-4": lambda: hamming_graph(6, 4),
    "MANN_a9": mann_a9_graph,
    "c-fat200-1": lambda: c_fat_graph(200, 1),
    "c-fat200-2": lambda: c_fat_graph(200, 2),
    "c-fat200-5": lambda: c_fat_graph(200, 5),
}

# (n, m) of the complement graph, as published for each benchmark.
EXPECTED_COMPLEMENT_DIMENSIONS = {
    "johnson8-2-4": (28, 168),
    "johnson8-4-4": (70, 560),
    "johnson16-2-4": (120, 1680),
    "hamming6-2": (64, 192),
    "hamming6-4": (64, 1312),
    "MANN_a9": (45, 72),
    "c-fat200-1": (200, 18366),
    "c-fat200-2": (200, 16665),
    "c-fat200-5": (200, 11427),
}

# Published best-of-twenty results for the solver on the complement graphs.
EXPECTED_BEST = {
    "johnson8-2-4": 4,
    "johnson8-4-4": 14,
    "hamming6-2": 32,
    "hamming6-4": 4,
    "MANN_a9": 16,
    "c-fat200-1": 12,
    "c-fat200-2": 24,
    "c-fat200-5": 58,
}
