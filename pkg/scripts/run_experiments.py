#!/usr/bin/env python3
"""Regenerate the benchmark sweeps on the downloaded datasets.

Three modes, each writing one CSV per dataset under --out (default ./results):

  projection   non-private strategy comparison over a theta grid
  release      private end-to-end release over an epsilon grid, auto theta
  theta-table  print the selected threshold per epsilon, no CSV

Datasets are named as loader tokens: a file path, a bare name resolved via
$LDP_DEGREE_DATA_DIR, or synthetic:<n>[:<attach>[:<seed>]].
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from degreeldp import (
    ExperimentConfig,
    Strategy,
    ThetaSearchConfig,
    degree_sequence,
    emit_csv,
    load_dataset,
    run_pipeline,
    theta_by_deviation,
)

STRATEGIES = [s.value for s in Strategy]


def _slug(label: str) -> str:
    return label.replace(":", "-").replace("/", "-")


def projection_sweep(token, thetas, trials, seed, out_dir):
    g, label = load_dataset(token)
    rows = []
    for theta in thetas:
        for strategy in STRATEGIES:
            cfg = ExperimentConfig(dataset=token, strategy=Strategy(strategy), theta=theta,
                                   trials=trials, seed=seed, private=False, projection_only=True)
            got, _ = run_pipeline(cfg, graph=g)
            rows.extend(got)
    path = out_dir / f"projection_{_slug(label)}.csv"
    emit_csv(rows, str(path))
    print(f"{label}: {len(rows)} rows -> {path}")


def release_sweep(token, epsilons, trials, seed, out_dir):
    g, label = load_dataset(token)
    rows = []
    for eps in epsilons:
        for strategy in STRATEGIES:
            cfg = ExperimentConfig(dataset=token, strategy=Strategy(strategy), epsilon=eps,
                                   theta="auto-deviation", trials=trials, seed=seed, private=True)
            got, _ = run_pipeline(cfg, graph=g)
            rows.extend(got)
    path = out_dir / f"release_{_slug(label)}.csv"
    emit_csv(rows, str(path))
    print(f"{label}: {len(rows)} rows -> {path}")


def theta_table(token, epsilons):
    g, label = load_dataset(token)
    degs = degree_sequence(g)
    K = max(degs)
    row = []
    for eps in epsilons:
        cfg = ThetaSearchConfig(K=K, epsilon=eps)
        row.append(theta_by_deviation(degs, cfg, np.random.default_rng(0)))
    cells = "  ".join(f"eps={e:g}:{t}" for e, t in zip(epsilons, row))
    print(f"{label}  {cells}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("mode", choices=["projection", "release", "theta-table"])
    ap.add_argument("datasets", nargs="+", help="paths, names, or synthetic:<n> tokens")
    ap.add_argument("--thetas", type=int, nargs="*", default=[16, 64, 128])
    ap.add_argument("--epsilons", type=float, nargs="*", default=[1.0, 1.5, 2.0, 2.5, 3.0])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args(argv)

    if args.mode != "theta-table":
        args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for token in args.datasets:
        try:
            if args.mode == "projection":
                projection_sweep(token, args.thetas, args.trials, args.seed, args.out)
            elif args.mode == "release":
                release_sweep(token, args.epsilons, args.trials, args.seed, args.out)
            else:
                theta_table(token, args.epsilons)
        except (OSError, ValueError) as exc:
            print(f"{token}: error: {exc}", file=sys.stderr)
            status = 1
    return status


if __name__ == "__main__":
    raise SystemExit(main())
