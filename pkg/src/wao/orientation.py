"""Permutation encodings of acyclic orientations and the two search operators.

An acyclic orientation is encoded as a node permutation: each edge points
from the endpoint appearing earlier to the one appearing later. Both
operators are O(n) sequence edits, and every edit stays inside the space of
valid encodings, so acyclicity never has to be re-checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class LinearRepresentation:
    """A permutation of the nodes 0..n-1 plus its inverse ``position`` map."""

    sequence: tuple[int, ...]
    position: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.sequence)
        position = [-1] * n
        for index, node in enumerate(self.sequence):
            if not (0 <= node < n) or position[node] != -1:
                raise ValueError(f"sequence is not a permutation of 0..{n - 1}")
            position[node] = index
        object.__setattr__(self, "position", tuple(position))

    def __len__(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class Orientation:
    """A direction per edge of an underlying graph, induced from a permutation.

    ``arcs[k]`` is the (tail, head) orientation of ``graph.edges[k]``.
    """

    node_count: int
    arcs: tuple[tuple[int, int], ...]

    @property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)


def induce_orientation(g: Graph, rep: LinearRepresentation) -> Orientation:
    """Direct every edge from the earlier node to the later node in ``rep``."""
    if len(rep) != g.node_count:
        raise ValueError(
            f"representation length {len(rep)} != node count {g.node_count}"
        )
    pos = rep.position
    arcs = tuple(
        (u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges
    )
    return Orientation(g.node_count, arcs)


def random_representation(g: Graph, rng: random.Random) -> LinearRepresentation:
    """A uniformly random permutation of the nodes (Fisher-Yates)."""
    seq = list(range(g.node_count))
    rng.shuffle(seq)
    return LinearRepresentation(tuple(seq))


def crossover(
    rep1: LinearRepresentation, rep2: LinearRepresentation, z: int
) -> tuple[LinearRepresentation, LinearRepresentation]:
    """One-point order crossover at cut ``z`` (1 <= z < n).

    Offspring 1 keeps the first z entries of ``rep1`` and appends the
    remaining nodes in the order they appear in ``rep2``; offspring 2 is the
    symmetric construction. Edges touching the inherited prefix keep the
    prefix parent's direction; edges internal to the suffix keep the other
    parent's direction.
    """
    n = len(rep1)
    if len(rep2) != n:
        raise ValueError(f"mismatched lengths: {n} vs {len(rep2)}")
    if not (1 <= z < n):
        raise ValueError(f"crossover point {z} outside [1, {n - 1}]")

    def child(prefix_parent: LinearRepresentation, other: LinearRepresentation):
        prefix = prefix_parent.sequence[:z]
        in_prefix = bytearray(n)
        for node in prefix:
            in_prefix[node] = 1
        tail = tuple(node for node in other.sequence if not in_prefix[node])
        return LinearRepresentation(prefix + tail)

    return child(rep1, rep2), child(rep2, rep1)


def mutate(rep: LinearRepresentation, z: int) -> LinearRepresentation:
    """Move the node at position ``z`` (1-based, 1 <= z <= n) to the front.

    On the induced orientation this turns that node into a source: all its
    incident edges point outward afterwards, and nothing else changes.
    """
    n = len(rep)
    if not (1 <= z <= n):
        raise ValueError(f"mutation point {z} outside [1, {n}]")
    if z == 1:
        return rep
    seq = rep.sequence
    return LinearRepresentation((seq[z - 1],) + seq[: z - 1] + seq[z:])
