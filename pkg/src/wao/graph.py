"""Undirected graph model, DIMACS ASCII parsing/writing, and complementation.

Nodes are numbered 0..n-1 internally. DIMACS files are 1-based; the parser
and writer translate at the boundary, as does everything user-facing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import IO, Iterable, Iterator

logger = logging.getLogger(__name__)


class DimacsParseError(ValueError):
    """Raised for malformed DIMACS input; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no duplicate edges.

    ``edges`` holds unordered pairs normalized to (u, v) with u < v, sorted.
    ``adjacency[i]`` is the sorted tuple of neighbors of node i.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, node_count: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        if node_count < 0:
            raise ValueError(f"node_count must be nonnegative, got {node_count}")
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"endpoint out of range: ({u}, {v}) with n={node_count}")
            seen.add((u, v) if u < v else (v, u))
        edges = tuple(sorted(seen))
        neighbors: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        return cls(node_count, edges, adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        # cached lazily on the instance; Graph is immutable so this is safe
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])


def validate(g: Graph) -> list[str]:
    """Check every Graph invariant; return all violations (empty list = ok)."""
    problems: list[str] = []
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if u == v:
            problems.append(f"self-loop at node {u + 1}")
        if not (0 <= u < g.node_count) or not (0 <= v < g.node_count):
            problems.append(f"endpoint out of range: ({u + 1}, {v + 1})")
            continue
        if u > v:
            problems.append(f"edge not normalized: ({u + 1}, {v + 1})")
        key = (min(u, v), max(u, v))
        if key in seen:
            problems.append(f"duplicate edge ({key[0] + 1}, {key[1] + 1})")
        seen.add(key)
    if len(g.adjacency) != g.node_count:
        problems.append(
            f"adjacency has {len(g.adjacency)} rows for {g.node_count} nodes"
        )
        return problems
    adj_pairs: set[tuple[int, int]] = set()
    for u, ns in enumerate(g.adjacency):
        if tuple(sorted(ns)) != tuple(ns):
            problems.append(f"adjacency of node {u + 1} not sorted")
        for v in ns:
            if not (0 <= v < g.node_count):
                problems.append(f"adjacency endpoint out of range: {v + 1}")
                continue
            adj_pairs.add((min(u, v), max(u, v)))
            if u not in g.adjacency[v]:
                problems.append(f"asymmetric adjacency between {u + 1} and {v + 1}")
    if adj_pairs != seen:
        problems.append("adjacency inconsistent with edge set")
    return problems


def _tokens(line: str) -> list[str]:
    return line.split()


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(f"non-numeric {what}: {token!r}", line_number) from None


def _iter_lines(source: str | IO[str] | Iterable[str]) -> Iterator[str]:
    if isinstance(source, str):
        return iter(source.splitlines())
    return iter(source)


def parse_dimacs(source: str | IO[str] | Iterable[str]) -> Graph:
    """Parse DIMACS ASCII graph format.

    Accepts comment lines (``c``), exactly one problem line (``p edge n m``,
    ``p col`` tolerated as an alias), and edge lines (``e i j``, 1-based).
    Duplicate edge lines and both orderings of a pair collapse to one
    undirected edge (logged as a warning, not an error); the declared edge
    count is advisory and a mismatch is logged too. Self-loops, out-of-range
    endpoints, and malformed tokens raise :class:`DimacsParseError`.
    """
    node_count: int | None = None
    declared_m = 0
    pairs: set[tuple[int, int]] = set()
    duplicates = 0
    for line_number, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if node_count is not None:
                raise DimacsParseError("duplicate problem line", line_number)
            tokens = _tokens(line)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col", "edges"):
                raise DimacsParseError(
                    f"malformed problem line: {line!r} (expected 'p edge <n> <m>')",
                    line_number,
                )
            node_count = _parse_int(tokens[2], "node count", line_number)
            declared_m = _parse_int(tokens[3], "edge count", line_number)
            if node_count < 0:
                raise DimacsParseError(f"negative node count {node_count}", line_number)
        elif line.startswith("e"):
            if node_count is None:
                raise DimacsParseError("edge line before problem line", line_number)
            tokens = _tokens(line)
            if len(tokens) != 3:
                raise DimacsParseError(f"malformed edge line: {line!r}", line_number)
            u = _parse_int(tokens[1], "endpoint", line_number)
            v = _parse_int(tokens[2], "endpoint", line_number)
            if u == v:
                raise DimacsParseError(f"self-loop at node {u}", line_number)
            if not (1 <= u <= node_count and 1 <= v <= node_count):
                raise DimacsParseError(
                    f"endpoint out of range: ({u}, {v}) with n={node_count}", line_number
                )
            pair = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if pair in pairs:
                duplicates += 1
            else:
                pairs.add(pair)
        else:
            raise DimacsParseError(f"unrecognized line: {line!r}", line_number)
    if node_count is None:
        raise DimacsParseError("missing problem line")
    if duplicates:
        logger.warning("collapsed %d duplicate edge line(s)", duplicates)
    if declared_m != len(pairs):
        logger.warning(
            "problem line declares %d edges, parsed %d distinct", declared_m, len(pairs)
        )
    return Graph.from_edges(node_count, pairs)


def write_dimacs(g: Graph, out: IO[str], comments: Iterable[str] = ()) -> None:
    """Emit the graph in DIMACS ASCII: comments, problem line, sorted edges."""
    for comment in comments:
        out.write(f"c {comment}\n")
    out.write(f"p edge {g.node_count} {g.edge_count}\n")
    for u, v in g.edges:
        out.write(f"e {u + 1} {v + 1}\n")


def complement(g: Graph) -> Graph:
    """The graph on the same nodes whose edges are exactly the non-edges of g."""
    present = g._edge_set
    missing = [
        (u, v) for u, v in combinations(range(g.node_count), 2) if (u, v) not in present
    ]
    return Graph.from_edges(g.node_count, missing)
