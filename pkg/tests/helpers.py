"""Independent reference implementations used only to check the package.

Everything here is deliberately written from scratch against the
definitions, not by calling into the code under test.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from wao.graph import Graph
from wao.orientation import Orientation


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < density]
    return Graph.from_edges(n, edges)


def augmenting_path_matching(n: int, arcs: list[tuple[int, int]]) -> int:
    """Plain recursive Kuhn matching on left->right arcs, no greedy phase."""
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        adjacency[a].append(b)
    matched_left_of_right: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in adjacency[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in matched_left_of_right or try_augment(
                matched_left_of_right[v], seen
            ):
                matched_left_of_right[v] = u
                return True
        return False

    size = 0
    for u in range(n):
        if try_augment(u, set()):
            size += 1
    return size


def is_acyclic(n: int, arcs: frozenset[tuple[int, int]] | tuple) -> bool:
    """Cycle check by iterated source removal."""
    outgoing: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for a, b in arcs:
        outgoing[a].append(b)
        indegree[b] += 1
    frontier = [v for v in range(n) if indegree[v] == 0]
    removed = 0
    while frontier:
        v = frontier.pop()
        removed += 1
        for w in outgoing[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                frontier.append(w)
    return removed == n


def make_source_flip(o: Orientation, node: int) -> frozenset[tuple[int, int]]:
    """Redirect every arc incident to ``node`` outward from it."""
    return frozenset(
        (node, a) if b == node else (a, b) for a, b in o.arcs
    )


def brute_force_alpha(g: Graph) -> int:
    """Maximum independent set size by subset enumeration (tiny n only)."""
    best = 0
    nodes = range(g.node_count)
    edge_set = set(g.edges)
    for size in range(g.node_count, best, -1):
        for subset in combinations(nodes, size):
            if all((u, v) not in edge_set for u, v in combinations(subset, 2)):
                return size
    return 0


def max_clique_size(g: Graph) -> int:
    """Direct clique enumeration via recursive extension (tiny n only)."""
    adjacency = [set(ns) for ns in g.adjacency]
    best = 0

    def extend(clique: list[int], candidates: set[int]) -> None:
        nonlocal best
        best = max(best, len(clique))
        if len(clique) + len(candidates) <= best:
            return
        for v in sorted(candidates):
            extend(clique + [v], {w for w in candidates if w > v} & adjacency[v])

    extend([], set(range(g.node_count)))
    return best


def all_acyclic_orientations(g: Graph) -> set[frozenset[tuple[int, int]]]:
    """Every acyclic orientation by direction enumeration + cycle filter."""
    m = len(g.edges)
    found: set[frozenset[tuple[int, int]]] = set()
    for mask in range(1 << m):
        arcs = frozenset(
            (u, v) if not (mask >> k & 1) else (v, u)
            for k, (u, v) in enumerate(g.edges)
        )
        if is_acyclic(g.node_count, arcs):
            found.add(arcs)
    return found


def all_graphs(n: int):
    """Every labeled simple graph on n nodes (tiny n only)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        )
