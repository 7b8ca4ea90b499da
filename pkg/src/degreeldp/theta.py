"""Collaborative selection of the projection threshold theta.

Two protocols pick theta before any degree is released.  Both move only
masked sums between the parties and the collector, so the collector
learns aggregate statistics and nothing per-node.

- by sum: for every candidate k, run a truthful trial projection and
  aggregate the per-node degree losses; pick the k minimizing the
  modeled total error (noise term plus projection term).
- by deviation: binary-search the threshold at which the number of
  nodes above it drops below n / epsilon, probing one masked indicator
  sum per round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, degree_sequence
from .projection import ProjectionConfig, Strategy, lpea_low, projection_error
from .secure_agg import DEFAULT_BITS, ka_param, masked_sum_round


@dataclass(frozen=True)
class ThetaSearchConfig:
    K: int
    epsilon: float
    alpha: float = 0.1
    bits: int = DEFAULT_BITS
    method: str = "deviation"

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"K must be at least 1, got {self.K}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.method not in ("sum", "deviation"):
            raise ValueError(f"method must be 'sum' or 'deviation', got {self.method!r}")


@dataclass(frozen=True)
class ErrorModel:
    """Additive decomposition of the expected release error at a threshold."""

    laplace_term: float
    projection_term: float

    @property
    def total(self) -> float:
        return self.laplace_term + self.projection_term


def quantile_oracle(degrees: Sequence[int], epsilon: float, K: int) -> int:
    """Smallest theta in [1, K] with fewer than n / epsilon degrees above it.

    Reference linear scan used to validate the interactive protocol;
    returns K when no threshold qualifies.
    """
    if K < 1:
        raise ValueError(f"K must be at least 1, got {K}")
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    d = np.sort(np.asarray(degrees))
    n = d.size
    ## count of degrees strictly above each candidate, all candidates at once
    above = n - np.searchsorted(d, np.arange(1, K + 1), side="right")
    for theta, cnt in enumerate(above, start=1):
        if cnt * epsilon < n:
            return theta
    return K


def theta_by_deviation(
    degrees: Sequence[int],
    cfg: ThetaSearchConfig,
    rng: np.random.Generator,
    masked: bool = True,
    round_log: list | None = None,
) -> int:
    """Binary-search theta so that about an epsilon-th of nodes exceed it.

    Each probe is one aggregation round: every party submits a masked
    indicator of its degree exceeding the probe, and the collector
    compares the exact sum against n / epsilon.  The search runs until
    the candidate window is empty, which lands on the same threshold as
    the linear-scan oracle, in at most ceil(log2 K) + 1 rounds.
    """
    degrees = np.asarray(degrees)
    n = int(degrees.size)
    if n == 0:
        raise ValueError("degrees must be nonempty")
    params = ka_param(cfg.bits)
    lo, hi = 1, cfg.K
    while lo <= hi:
        probe = (lo + hi) // 2
        indicators = (degrees > probe).astype(int)
        count = masked_sum_round(indicators.tolist(), params, rng, masked=masked, round_log=round_log)
        ## compare count < n / epsilon without dividing
        if count * cfg.epsilon < n:
            hi = probe - 1
        else:
            lo = probe + 1
    return min(max(lo, 1), cfg.K)


def theta_by_sum(
    g: Graph,
    orders: Sequence[int],
    cfg: ThetaSearchConfig,
    rng: np.random.Generator,
    masked: bool = True,
    round_log: list | None = None,
) -> int:
    """Pick theta by trialing every candidate and aggregating its masked loss.

    For each k in 1..K the parties run one truthful low-order-first
    addition projection at bound k and submit their degree losses to a
    masked sum (fresh keys every round).  The collector scores each k as
    n * k / epsilon plus the summed loss and returns the smallest
    minimizer.  Exactly K aggregation rounds.
    """
    n = g.n
    if n == 0:
        raise ValueError("graph must be nonempty")
    params = ka_param(cfg.bits)
    best_k = 1
    best_score = None
    for k in range(1, cfg.K + 1):
        pcfg = ProjectionConfig(theta=k, strategy=Strategy.LPEA_LOW, private=False)
        pg = lpea_low(g, orders, pcfg, rng)
        losses, _ = projection_error(g, pg)
        total_loss = masked_sum_round(losses.tolist(), params, rng, masked=masked, round_log=round_log)
        score = ErrorModel(laplace_term=n * k / cfg.epsilon, projection_term=float(total_loss)).total
        if best_score is None or score < best_score:
            best_score = score
            best_k = k
    return best_k


def resolve_theta(
    g: Graph,
    cfg: ThetaSearchConfig,
    rng: np.random.Generator,
    masked: bool = True,
) -> int:
    """Run the configured selection method on a graph's degree sequence."""
    degs = degree_sequence(g)
    if cfg.method == "deviation":
        return theta_by_deviation(degs, cfg, rng, masked=masked)
    return theta_by_sum(g, degs, cfg, rng, masked=masked)
