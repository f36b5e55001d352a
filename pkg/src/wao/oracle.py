"""Exact desk-scale references: independence number, orientation sweeps,
and brute-force path partitions.

These exist to check the solver, so they refuse instances beyond their
size guards instead of ever degrading to a heuristic answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .fitness_flow import fitness
from .graph import Graph
from .orientation import LinearRepresentation, Orientation, induce_orientation


class OracleSizeError(ValueError):
    """The instance exceeds the oracle's size guard."""


class OracleBudgetError(RuntimeError):
    """The search budget ran out before an exact answer was proven."""


@dataclass(frozen=True)
class OracleResult:
    alpha: int
    witness: frozenset[int]
    method: str


MAX_EXACT_NODES = 200


def exact_mis(g: Graph, node_budget: int | None = None) -> OracleResult:
    """Exact maximum independent set by bitset branch-and-bound.

    Branches on a maximum-degree vertex (include/exclude) with the trivial
    bound |current| + |remaining|. ``node_budget`` caps search-tree nodes;
    exceeding it raises :class:`OracleBudgetError` rather than returning an
    unproven answer.
    """
    n = g.node_count
    if n > MAX_EXACT_NODES:
        raise OracleSizeError(f"exact_mis refuses n={n} > {MAX_EXACT_NODES}")
    adjacency = [0] * n
    for u, v in g.edges:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    best_size = 0
    best_set = 0
    expansions = 0

    def grab(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def search(available: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set, expansions
        expansions += 1
        if node_budget is not None and expansions > node_budget:
            raise OracleBudgetError(f"exceeded node budget {node_budget}")
        if size + available.bit_count() <= best_size:
            return
        pivot = -1
        pivot_degree = -1
        for v in grab(available):
            d = (adjacency[v] & available).bit_count()
            if d > pivot_degree:
                pivot_degree = d
                pivot = v
        if pivot_degree <= 0:
            total = size + available.bit_count()
            if total > best_size:
                best_size = total
                best_set = chosen | available
            return
        bit = 1 << pivot
        search(available & ~(adjacency[pivot] | bit), chosen | bit, size + 1)
        search(available & ~bit, chosen, size)

    search((1 << n) - 1 if n else 0, 0, 0)
    witness = frozenset(i for i in range(n) if best_set >> i & 1)
    return OracleResult(alpha=best_size, witness=witness, method="branch-and-bound")


MAX_SWEEP_NODES = 7


def induced_orientations(g: Graph) -> Iterator[Orientation]:
    """All distinct orientations induced by the n! node permutations."""
    if g.node_count > MAX_SWEEP_NODES:
        raise OracleSizeError(
            f"orientation sweep refuses n={g.node_count} > {MAX_SWEEP_NODES}"
        )
    seen: set[tuple[tuple[int, int], ...]] = set()
    for perm in permutations(range(g.node_count)):
        o = induce_orientation(g, LinearRepresentation(perm))
        if o.arcs not in seen:
            seen.add(o.arcs)
            yield o


def exhaustive_widest_orientation(g: Graph) -> int:
    """Max fitness over every permutation-induced orientation (n <= 7).

    Equals the independence number: the orientation whose minimum chain
    decomposition is largest witnesses a maximum independent set.
    """
    if g.node_count == 0:
        return 0
    return max(fitness(g, o).fitness for o in induced_orientations(g))


MAX_PARTITION_NODES = 9


def min_path_partition_bruteforce(g: Graph, o: Orientation) -> int:
    """Fewest blocks over all partitions of the nodes into directed paths.

    Enumerates chain partitions directly: scanning nodes in topological
    order, each node either extends a block whose current endpoint points
    to it or opens a new block. Prunes on block count.
    """
    n = g.node_count
    if n > MAX_PARTITION_NODES:
        raise OracleSizeError(f"path partition refuses n={n} > {MAX_PARTITION_NODES}")
    if n == 0:
        return 0
    arcs = o.arc_set
    outgoing: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for a, b in arcs:
        outgoing[a].append(b)
        indegree[b] += 1
    topo: list[int] = []
    frontier = [v for v in range(n) if indegree[v] == 0]
    while frontier:
        v = frontier.pop()
        topo.append(v)
        for w in outgoing[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                frontier.append(w)
    if len(topo) != n:
        raise ValueError("orientation contains a directed cycle")

    best = n  # singleton blocks are always a valid partition
    tails: list[int] = []

    def search(index: int) -> None:
        nonlocal best
        if len(tails) >= best:
            return
        if index == n:
            best = len(tails)
            return
        node = topo[index]
        for slot, tail in enumerate(tails):
            if (tail, node) in arcs:
                tails[slot] = node
                search(index + 1)
                tails[slot] = tail
        tails.append(node)
        search(index + 1)
        tails.pop()

    search(0)
    return best
