"""Undirected graph loading and basic statistics.

Graphs are read from plain edge lists: one edge per line, two
whitespace-separated node labels, lines starting with '#' ignored.
Node labels are remapped to contiguous internal ids 0..n-1 in order of
first appearance.  Self-loops are dropped (the endpoint still counts as
a node) and duplicate edges are merged.
"""

from __future__ import annotations

import gzip
from dataclasses import dataclass
from typing import IO, Iterable, Iterator


class EdgeListParseError(ValueError):
    """Raised for a malformed edge-list line; message carries the line number."""


class Graph:
    """Immutable undirected graph over internal ids 0..n-1.

    Attributes:
        n: number of nodes.
        m: number of distinct undirected edges.
        adj: per-node neighbor lists, each sorted by internal id.
        labels: internal id -> original external label.
        id_map: external label -> internal id.
    """

    __slots__ = ("n", "m", "adj", "labels", "id_map", "_edges")

    def __init__(self, n: int, edges: list[tuple[int, int]], labels: list[str] | None = None):
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValueError("labels must have one entry per node")
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            adj[i].append(j)
            adj[j].append(i)
        for nbrs in adj:
            nbrs.sort()
        self.n = n
        self.m = len(edges)
        self.adj = adj
        self.labels = labels
        self.id_map = {lab: i for i, lab in enumerate(labels)}
        ## edges kept in insertion order so serialization round-trips exactly
        self._edges = edges

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from integer id pairs, dropping self-loops and duplicates."""
        seen: set[tuple[int, int]] = set()
        kept: list[tuple[int, int]] = []
        for i, j in edges:
            if i == j:
                continue
            e = (i, j) if i < j else (j, i)
            if e in seen:
                continue
            seen.add(e)
            kept.append(e)
        return cls(n, kept)

    def neighbors(self, i: int) -> list[int]:
        return self.adj[i]

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (min, max) id pairs, in first-appearance order."""
        return iter(self._edges)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self._edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    d_min: int
    d_max: int
    d_avg: float


def load_edge_list(source: Iterable[str]) -> Graph:
    """Parse an edge-list text stream into a Graph.

    Args:
        source: iterable of lines (an open text file works).

    Raises:
        EdgeListParseError: if a non-comment line does not contain
            exactly two tokens, with the 1-based line number.
    """
    id_map: dict[str, int] = {}
    labels: list[str] = []
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []

    def intern(label: str) -> int:
        node = id_map.get(label)
        if node is None:
            node = len(labels)
            id_map[label] = node
            labels.append(label)
        return node

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two node labels, got {len(parts)} tokens")
        u = intern(parts[0])
        v = intern(parts[1])
        if u == v:
            continue  # self-loop: node registered, edge dropped
        e = (u, v) if u < v else (v, u)
        if e not in seen:
            seen.add(e)
            edges.append(e)

    g = Graph(len(labels), edges, labels)
    return g


def write_edge_list(g: Graph, sink: IO[str]) -> None:
    """Serialize a graph so that reloading reproduces the identical internal structure.

    Edges are written in first-appearance order with original labels, which
    preserves the id assignment on reload.  Degree-zero nodes (possible only
    via self-loop-only input) cannot be expressed in an edge list and are lost.
    """
    for i, j in g.edges():
        sink.write(f"{g.labels[i]} {g.labels[j]}\n")


def load_graph(path: str) -> Graph:
    """Load an edge list from a file path, transparently decompressing .gz."""
    if path.endswith(".gz"):
        with gzip.open(path, "rt") as fh:
            return load_edge_list(fh)
    with open(path, "r") as fh:
        return load_edge_list(fh)


def degree_sequence(g: Graph) -> list[int]:
    """Per-node degrees indexed by internal id."""
    return [len(g.adj[i]) for i in range(g.n)]


def stats(g: Graph) -> GraphStats:
    """Node/edge counts and degree summary. Errors on an empty graph."""
    if g.n == 0:
        raise ValueError("stats undefined for an empty graph")
    degs = degree_sequence(g)
    return GraphStats(
        n=g.n,
        m=g.m,
        d_min=min(degs),
        d_max=max(degs),
        d_avg=2.0 * g.m / g.n,
    )
