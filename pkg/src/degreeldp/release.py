"""Final degree-sequence release with Laplace noise.

After projection bounds every degree by theta, each node's reported
degree has sensitivity theta, so adding Laplace(theta / release_budget)
noise per node gives the release stage its share of the privacy budget.
The raw noisy sequence is kept as reals; the degree distribution is
computed from the rounded, clamped values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .mechanisms import PrivacyParams, laplace_sample
from .projection import ProjectedGraph


@dataclass(frozen=True)
class ReleaseReport:
    noisy_degrees: tuple[float, ...]
    distribution: tuple[float, ...]
    theta: int
    params: PrivacyParams
    seed: int | None = None
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        """Deterministic serialization; float repr round-trips exactly."""
        payload = {
            "theta": self.theta,
            "epsilon": self.params.epsilon,
            "alpha": self.params.alpha,
            "seed": self.seed,
            "noisy_degrees": [repr(x) for x in self.noisy_degrees],
            "distribution": [repr(x) for x in self.distribution],
            "metadata": self.metadata,
        }
        return json.dumps(payload, sort_keys=True)


def noise_scale(theta: int, params: PrivacyParams) -> float:
    """Laplace scale for one node's bounded degree: theta over the release budget."""
    if theta < 1:
        raise ValueError(f"theta must be at least 1, got {theta}")
    return theta / params.release_budget


def degree_distribution(noisy_degrees, n: int) -> np.ndarray:
    """Proportion of nodes per degree bin 0..n-1 after rounding and clamping."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    vals = np.rint(np.asarray(noisy_degrees, dtype=float)).astype(int)
    vals = np.clip(vals, 0, n - 1)
    return np.bincount(vals, minlength=n) / len(vals)


def dsr(
    pg: ProjectedGraph,
    theta: int,
    params: PrivacyParams,
    rng: np.random.Generator,
    seed: int | None = None,
) -> ReleaseReport:
    """Perturb each projected degree with Laplace noise and assemble the release.

    Nodes are processed in id order, one noise draw each, so a seed
    pins the whole report.
    """
    scale = noise_scale(theta, params)
    noisy = [pg.degrees[i] + laplace_sample(rng, scale) for i in range(pg.n)]
    dist = degree_distribution(noisy, pg.n)
    return ReleaseReport(
        noisy_degrees=tuple(noisy),
        distribution=tuple(dist.tolist()),
        theta=theta,
        params=params,
        seed=seed,
    )
