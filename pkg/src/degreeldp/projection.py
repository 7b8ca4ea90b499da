"""Degree-bounded graph projection by edge addition or edge removal.

Addition strategies rebuild the graph from an empty edge set.  Nodes
take turns initiating: the initiator asks each not-yet-connected
neighbor whether it still has spare capacity (answered truthfully or
through randomized response, depending on the privacy mode), estimates
the number of willing neighbors, and connects to that many of them in
rank order.  An edge is established only while both endpoints are below
the degree bound theta, so the bound holds unconditionally.

The removal strategy instead visits nodes in random order and deletes
random incident edges (symmetrically) until no degree exceeds theta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph
from .mechanisms import PrivacyParams, wrr_debias_count, wrr_respond


class Strategy(enum.Enum):
    LPEA_LOW = "lpea-low"
    LPEA_HIGH = "lpea-high"
    RANDOM_ADD = "random-add"
    EDGE_REMOVE = "edge-remove"


@dataclass(frozen=True)
class ProjectionConfig:
    theta: int
    strategy: Strategy = Strategy.LPEA_LOW
    private: bool = False
    params: PrivacyParams | None = None

    def __post_init__(self):
        if self.theta < 1:
            raise ValueError(f"theta must be at least 1, got {self.theta}")
        if self.private and self.params is None:
            raise ValueError("private projection needs PrivacyParams for the negotiation budget")


class ProjectedGraph:
    """Mutable adjacency produced by a projection run."""

    __slots__ = ("n", "neighbors", "degrees")

    def __init__(self, n: int, neighbors: list[set[int]]):
        self.n = n
        self.neighbors = neighbors
        self.degrees = [len(s) for s in neighbors]

    def degree_sequence(self) -> list[int]:
        return list(self.degrees)

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i in range(self.n) for j in self.neighbors[i] if i < j}

    def edges(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.edge_set()))


def _addition_run(
    g: Graph,
    order_of: Sequence[int] | None,
    cfg: ProjectionConfig,
    rng: np.random.Generator,
) -> ProjectedGraph:
    """Shared engine for the three addition strategies.

    order_of gives each node's scheduling rank (private order or true
    degree); None selects the uniform-random strategy.  Randomness is
    consumed in a fixed documented order: schedule first (random
    strategy only), then per initiator one response per request in
    neighbor-rank order, then the responder draw (random strategy only).
    """
    n = g.n
    theta = cfg.theta
    strategy = cfg.strategy
    budget = cfg.params.negotiation_budget if cfg.private else 0.0

    if strategy is Strategy.RANDOM_ADD:
        schedule = [int(i) for i in rng.permutation(n)]
        ranked_adj = g.adj
    else:
        descending = strategy is Strategy.LPEA_HIGH
        ## composite int key sorts by (order, id); negated for the high-first variant
        key = [order_of[i] * n + i for i in range(n)]
        if descending:
            key = [-k for k in key]
        schedule = sorted(range(n), key=key.__getitem__)
        ranked_adj = [sorted(g.adj[i], key=key.__getitem__) for i in range(n)]

    established: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n

    for i in schedule:
        est_i = established[i]
        pending = [j for j in ranked_adj[i] if j not in est_i]
        if not pending:
            continue
        if cfg.private:
            willing = [j for j in pending if wrr_respond(rng, deg[j] < theta, budget)]
            debiased = wrr_debias_count(len(pending), len(willing), budget)
            count = min(max(int(round(debiased)), 0), len(willing))
        else:
            willing = [j for j in pending if deg[j] < theta]
            count = len(willing)
        count = min(count, theta - deg[i])
        if count <= 0:
            continue
        if strategy is Strategy.RANDOM_ADD:
            picks = rng.choice(len(willing), size=count, replace=False)
            chosen = [willing[int(k)] for k in picks]
        else:
            chosen = willing[:count]
        for j in chosen:
            ## hard capacity cap; randomized answers can nominate full nodes
            if deg[i] < theta and deg[j] < theta:
                est_i.add(j)
                established[j].add(i)
                deg[i] += 1
                deg[j] += 1

    return ProjectedGraph(n, established)


def lpea_low(g: Graph, orders: Sequence[int], cfg: ProjectionConfig, rng: np.random.Generator) -> ProjectedGraph:
    """Edge addition scheduled low-order-first; ties broken by node id.

    Initiators run in ascending (order, id) and connect to their
    lowest-ranked willing neighbors first, which favors nodes that can
    least afford to lose edges.
    """
    _check_orders(g, orders)
    return _addition_run(g, orders, cfg, rng)


def lpea_high(g: Graph, orders: Sequence[int], cfg: ProjectionConfig, rng: np.random.Generator) -> ProjectedGraph:
    """Edge addition with both sort keys reversed: high-order nodes go first."""
    _check_orders(g, orders)
    return _addition_run(g, orders, cfg, rng)


def random_add(g: Graph, cfg: ProjectionConfig, rng: np.random.Generator) -> ProjectedGraph:
    """Edge addition with a uniform-random schedule and uniform responder choice."""
    return _addition_run(g, None, cfg, rng)


def edge_remove(g: Graph, cfg: ProjectionConfig, rng: np.random.Generator) -> ProjectedGraph:
    """Delete random incident edges until every degree is at most theta.

    Nodes are visited in a uniform random permutation; each over-bound
    node removes uniformly chosen incident edges, which also lowers the
    other endpoint's degree.
    """
    n = g.n
    theta = cfg.theta
    established: list[set[int]] = [set(g.adj[i]) for i in range(n)]
    deg = [len(s) for s in established]
    for i in rng.permutation(n):
        i = int(i)
        excess = deg[i] - theta
        if excess <= 0:
            continue
        current = sorted(established[i])
        picks = rng.choice(len(current), size=excess, replace=False)
        for k in picks:
            j = current[int(k)]
            established[i].discard(j)
            established[j].discard(i)
            deg[i] -= 1
            deg[j] -= 1
    return ProjectedGraph(n, established)


def project(
    g: Graph,
    cfg: ProjectionConfig,
    rng: np.random.Generator,
    orders: Sequence[int] | None = None,
) -> ProjectedGraph:
    """Dispatch to the configured strategy.

    The two rank-scheduled strategies need per-node orders (private
    encodings, or true degrees in non-private mode).
    """
    if cfg.strategy in (Strategy.LPEA_LOW, Strategy.LPEA_HIGH):
        if orders is None:
            raise ValueError(f"{cfg.strategy.value} requires per-node orders")
        fn = lpea_low if cfg.strategy is Strategy.LPEA_LOW else lpea_high
        return fn(g, orders, cfg, rng)
    if cfg.strategy is Strategy.RANDOM_ADD:
        return random_add(g, cfg, rng)
    return edge_remove(g, cfg, rng)


def projection_error(g: Graph, pg: ProjectedGraph) -> tuple[np.ndarray, int]:
    """Per-node absolute degree loss and its total."""
    if pg.n != g.n:
        raise ValueError("projected graph has a different node set")
    orig = np.array([len(g.adj[i]) for i in range(g.n)])
    proj = np.array(pg.degrees)
    loss = np.abs(orig - proj)
    return loss, int(loss.sum())


def _check_orders(g: Graph, orders: Sequence[int]) -> None:
    if len(orders) != g.n:
        raise ValueError(f"orders must cover all {g.n} nodes, got {len(orders)}")
