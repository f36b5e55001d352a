"""Fitness of an acyclic orientation via max flow on a split network.

For a graph with n nodes and an orientation, the flow network has 2n+2
nodes: a source s, a sink t, and per graph node i an out-copy i' and an
in-copy i''. Arcs s->i' and i''->t have capacity 1; each oriented edge
i->j contributes an arc i'->j'' of capacity n+1 (effectively unbounded:
total flow is at most n, so these arcs never sit in a minimum cut). The
max-flow value F equals n minus the minimum number of directed paths
needed to cover all nodes, so the orientation's fitness is n - F, and the
residual cut yields a node cover whose complement is an independent set
of that size (or larger).

Because every middle arc has slack capacity, the network is a bipartite
matching problem in disguise: F equals the maximum matching between
out-copies and in-copies. The hot path below exploits that with a
jitted greedy-plus-augmenting-path matcher; the residual reachability it
reports is identical to that of the equivalent max flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from .graph import Graph
from .orientation import LinearRepresentation, Orientation, induce_orientation


@njit(cache=True, nogil=True)
def _match_csr(n, indptr, indices):
    """Max bipartite matching size on left->right CSR arcs.

    Greedy initialization followed by Kuhn-style augmenting paths with an
    iterative DFS. Returns (F, left_match, right_match); -1 marks unmatched.
    """
    left_match = np.full(n, -1, dtype=np.int32)
    right_match = np.full(n, -1, dtype=np.int32)
    flow = 0
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if right_match[v] < 0:
                left_match[u] = v
                right_match[v] = u
                flow += 1
                break
    stack_node = np.empty(n + 1, dtype=np.int32)
    stack_arc = np.empty(n + 1, dtype=np.int64)
    visited = np.full(n, -1, dtype=np.int32)
    came_from = np.empty(n, dtype=np.int32)
    stamp = 0
    for start in range(n):
        if left_match[start] >= 0:
            continue
        top = 0
        stack_node[0] = start
        stack_arc[0] = indptr[start]
        free_right = -1
        while top >= 0:
            u = stack_node[top]
            k = stack_arc[top]
            if k >= indptr[u + 1]:
                top -= 1
                continue
            stack_arc[top] = k + 1
            v = indices[k]
            if visited[v] == stamp:
                continue
            visited[v] = stamp
            came_from[v] = u
            w = right_match[v]
            if w < 0:
                free_right = v
                break
            top += 1
            stack_node[top] = w
            stack_arc[top] = indptr[w]
        if free_right >= 0:
            v = free_right
            while True:
                u = came_from[v]
                previous = left_match[u]
                left_match[u] = v
                right_match[v] = u
                if u == start:
                    break
                v = previous
            flow += 1
        stamp += 1
    return flow, left_match, right_match


@njit(cache=True, nogil=True)
def _match_arcs(n, tails, heads):
    """Bucket oriented arcs into CSR form (counting sort) and match."""
    m = tails.shape[0]
    counts = np.zeros(n, dtype=np.int64)
    for e in range(m):
        counts[tails[e]] += 1
    indptr = np.empty(n + 1, dtype=np.int64)
    indptr[0] = 0
    for i in range(n):
        indptr[i + 1] = indptr[i] + counts[i]
        counts[i] = indptr[i]
    indices = np.empty(m, dtype=np.int32)
    for e in range(m):
        t = tails[e]
        indices[counts[t]] = heads[e]
        counts[t] += 1
    return _match_csr(n, indptr, indices)


@njit(cache=True, nogil=True)
def _match_sequence(n, edge_u, edge_v, sequence):
    """Orient each edge by sequence order, then match (fitness hot path)."""
    position = np.empty(n, dtype=np.int32)
    for i in range(n):
        position[sequence[i]] = i
    m = edge_u.shape[0]
    tails = np.empty(m, dtype=np.int32)
    heads = np.empty(m, dtype=np.int32)
    for e in range(m):
        u = edge_u[e]
        v = edge_v[e]
        if position[u] < position[v]:
            tails[e] = u
            heads[e] = v
        else:
            tails[e] = v
            heads[e] = u
    return _match_arcs(n, tails, heads)


@dataclass(frozen=True)
class FlowNetwork:
    """The explicit 2n+2-node network for one (graph, orientation) pair.

    Node ids: out-copy i' = i, in-copy i'' = n + i, source = 2n,
    sink = 2n + 1. ``arcs`` holds (tail, head, capacity) with the 2n unit
    arcs first and one arc of capacity n+1 per oriented edge after them.
    """

    graph_node_count: int
    arcs: tuple[tuple[int, int, int], ...]

    @property
    def source(self) -> int:
        return 2 * self.graph_node_count

    @property
    def sink(self) -> int:
        return 2 * self.graph_node_count + 1

    @property
    def node_count(self) -> int:
        return 2 * self.graph_node_count + 2

    def out_copy(self, i: int) -> int:
        return i

    def in_copy(self, i: int) -> int:
        return self.graph_node_count + i


@dataclass(frozen=True)
class FitnessResult:
    flow_value: int
    fitness: int
    reachable: frozenset[int]
    independent_set: frozenset[int]
    cover: frozenset[int]


def build_network(g: Graph, o: Orientation) -> FlowNetwork:
    """Assemble the split network for ``g`` under orientation ``o``."""
    n = g.node_count
    if o.node_count != n or len(o.arcs) != len(g.edges):
        raise ValueError("orientation does not match the graph")
    for (u, v), (a, b) in zip(g.edges, o.arcs):
        if {a, b} != {u, v}:
            raise ValueError(f"arc ({a}, {b}) does not orient edge ({u}, {v})")
    source, infinite = 2 * n, n + 1
    arcs = [(source, i, 1) for i in range(n)]
    arcs += [(n + i, 2 * n + 1, 1) for i in range(n)]
    arcs += [(a, n + b, infinite) for a, b in o.arcs]
    return FlowNetwork(n, tuple(arcs))


def _residual_reachable(
    n: int, tails: Sequence[int], heads: Sequence[int], left_match, right_match
) -> frozenset[int]:
    """Nodes reachable from the source in the residual of any max flow.

    Forward middle arcs always have slack (capacity n+1, flow <= 1), so from
    a reachable out-copy every successor in-copy is reachable; a matched
    middle arc can be traversed backwards from its in-copy. An arc s->i' has
    slack exactly when i is unmatched on the left.
    """
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for t, h in zip(tails, heads):
        adjacency[t].append(h)
    reachable_left = [False] * n
    reachable_right = [False] * n
    queue = [i for i in range(n) if left_match[i] < 0]
    for i in queue:
        reachable_left[i] = True
    while queue:
        u = queue.pop()
        for j in adjacency[u]:
            if not reachable_right[j]:
                reachable_right[j] = True
                w = right_match[j]
                if w >= 0 and not reachable_left[w]:
                    reachable_left[w] = True
                    queue.append(w)
    nodes = {2 * n}
    nodes.update(i for i in range(n) if reachable_left[i])
    nodes.update(n + j for j in range(n) if reachable_right[j])
    return frozenset(nodes)


def max_flow_value(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Exact max-flow value and the source side of the minimum cut.

    Only the value and the residual reachability are computed; individual
    arc flows are never materialized.
    """
    n = net.graph_node_count
    middle = net.arcs[2 * n :]
    tails = np.fromiter((a[0] for a in middle), dtype=np.int32, count=len(middle))
    heads = np.fromiter((a[1] - n for a in middle), dtype=np.int32, count=len(middle))
    flow, left_match, right_match = _match_arcs(n, tails, heads)
    reachable = _residual_reachable(n, tails.tolist(), heads.tolist(), left_match, right_match)
    return int(flow), reachable


def extract_independent_set(
    g: Graph, o: Orientation, reachable: frozenset[int]
) -> tuple[frozenset[int], frozenset[int]]:
    """Turn the residual cut into a node cover and its independent complement.

    The cut consists of saturated unit arcs only; node i lands in the cover
    when s->i' is cut (i' unreachable) or i''->t is cut (i'' reachable).
    """
    n = g.node_count
    cover = frozenset(
        i for i in range(n) if i not in reachable or (n + i) in reachable
    )
    independent = frozenset(range(n)) - cover
    return independent, cover


def fitness(g: Graph, o: Orientation) -> FitnessResult:
    """Score an orientation: build the network, run max flow, extract the set."""
    net = build_network(g, o)
    flow, reachable = max_flow_value(net)
    independent, cover = extract_independent_set(g, o, reachable)
    return FitnessResult(
        flow_value=flow,
        fitness=g.node_count - flow,
        reachable=reachable,
        independent_set=independent,
        cover=cover,
    )


def verify_independent_set(g: Graph, nodes: Sequence[int]) -> tuple[int, int] | None:
    """Return None if ``nodes`` is independent in g, else one offending edge."""
    members = set(nodes)
    for v in members:
        if not (0 <= v < g.node_count):
            raise ValueError(f"node {v} out of range for n={g.node_count}")
    for u, v in g.edges:
        if u in members and v in members:
            return (u, v)
    return None


class FitnessEvaluator:
    """Reusable fast fitness evaluation for many permutations of one graph.

    Pure function of the sequence: safe to call from multiple threads, and
    guaranteed to agree with :func:`fitness` (which it sidesteps only to
    avoid per-call network object construction).
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._n = g.node_count
        m = len(g.edges)
        self._edge_u = np.fromiter((e[0] for e in g.edges), dtype=np.int32, count=m)
        self._edge_v = np.fromiter((e[1] for e in g.edges), dtype=np.int32, count=m)

    def flow_value(self, sequence: Sequence[int]) -> int:
        seq = np.asarray(sequence, dtype=np.int32)
        flow, _, _ = _match_sequence(self._n, self._edge_u, self._edge_v, seq)
        return int(flow)

    def fitness_value(self, sequence: Sequence[int]) -> int:
        return self._n - self.flow_value(sequence)

    def full_result(self, rep: LinearRepresentation) -> FitnessResult:
        return fitness(self.graph, induce_orientation(self.graph, rep))
