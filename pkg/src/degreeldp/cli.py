"""Command-line interface.

Subcommands:
    stats         print node/edge counts and degree summary for a dataset
    project       non-private degree-bounded projection, metrics per trial
    select-theta  run a threshold-selection protocol and print theta
    release       full private pipeline: encode, project, perturb, metrics
    sweep         grid of runs over thresholds or budgets

Datasets are edge-list files (optionally .gz), looked up directly or under
$LDP_DEGREE_DATA_DIR, or synthetic tokens like synthetic:2000:4:7.
"""

from __future__ import annotations

import argparse
import sys
from collections import OrderedDict

from .graph import degree_sequence, stats
from .harness import ExperimentConfig, MetricsRow, emit_csv, load_dataset, run_pipeline
from .projection import Strategy
from .secure_agg import DEFAULT_BITS
from .theta import ThetaSearchConfig, resolve_theta

import numpy as np

_STRATEGY_CHOICES = [s.value for s in Strategy] + ["all"]


def _theta_arg(text: str):
    if text in ("auto-sum", "auto-deviation"):
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"theta must be an integer, 'auto-sum' or 'auto-deviation', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"theta must be at least 1, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    """Parse '1,5,10' or '1:10' or '1:10:3' (inclusive range) into ints."""
    out: list[int] = []
    for chunk in text.split(","):
        if ":" in chunk:
            parts = chunk.split(":")
            if len(parts) not in (2, 3):
                raise argparse.ArgumentTypeError(f"bad range {chunk!r}")
            start, stop = int(parts[0]), int(parts[1])
            step = int(parts[2]) if len(parts) == 3 else 1
            out.extend(range(start, stop + 1, step))
        else:
            out.append(int(chunk))
    if not out:
        raise argparse.ArgumentTypeError("empty value list")
    return out


def _float_list(text: str) -> list[float]:
    try:
        return [float(chunk) for chunk in text.split(",") if chunk]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad float list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degreeldp",
        description="Locally private release of graph degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_strategy: bool = True) -> None:
        p.add_argument("dataset", help="edge-list path or synthetic:<n>[:<attach>[:<seed>]]")
        p.add_argument("--epsilon", type=float, default=3.0, help="total privacy budget (default 3.0)")
        p.add_argument("--alpha", type=float, default=0.1, help="budget share for the interactive stages (default 0.1)")
        p.add_argument("--K", type=int, default=None, help="upper bound of the threshold search (default: max degree)")
        p.add_argument("--psize", type=int, default=50, help="partition width for degree-order encoding (default 50)")
        p.add_argument("--lambda", dest="bits", type=int, default=DEFAULT_BITS,
                       help="modulus bit length for masked aggregation (default 61)")
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        p.add_argument("--trials", type=int, default=20, help="independent trials (default 20)")
        p.add_argument("--out", default=None, help="write the metrics CSV here (default: CSV on stdout)")
        p.add_argument("--no-mask", action="store_true",
                       help="skip pairwise masking in threshold selection (same result, much faster on large graphs)")
        if with_strategy:
            p.add_argument("--strategy", choices=_STRATEGY_CHOICES, default=Strategy.LPEA_LOW.value,
                           help="projection strategy (default lpea-low)")

    p_stats = sub.add_parser("stats", help="print dataset summary")
    p_stats.add_argument("dataset")

    p_project = sub.add_parser("project", help="non-private projection, metrics vs original degrees")
    add_common(p_project)
    p_project.add_argument("--theta", type=_theta_arg, default="auto-deviation",
                           help="projection bound, or auto-sum / auto-deviation (default auto-deviation)")

    p_theta = sub.add_parser("select-theta", help="run a threshold-selection protocol and print theta")
    add_common(p_theta, with_strategy=False)
    p_theta.add_argument("--method", choices=["sum", "deviation"], default="deviation",
                         help="selection protocol (default deviation)")

    p_release = sub.add_parser("release", help="full private pipeline with Laplace release")
    add_common(p_release)
    p_release.add_argument("--theta", type=_theta_arg, default="auto-deviation",
                           help="projection bound, or auto-sum / auto-deviation (default auto-deviation)")

    p_sweep = sub.add_parser("sweep", help="grid of runs over thresholds or budgets")
    add_common(p_sweep)
    p_sweep.add_argument("--theta", type=_theta_arg, default="auto-deviation",
                         help="bound used when sweeping budgets (default auto-deviation)")
    p_sweep.add_argument("--thetas", type=_int_list, default=None, help="comma list or a:b[:step] range of bounds")
    p_sweep.add_argument("--epsilons", type=_float_list, default=None, help="comma list of budgets")
    p_sweep.add_argument("--private", action="store_true",
                         help="run the full private pipeline instead of non-private projection")
    return parser


def _strategies(name: str) -> list[Strategy]:
    if name == "all":
        return list(Strategy)
    return [Strategy(name)]


def _write_rows(rows: list[MetricsRow], out: str | None) -> None:
    if out:
        emit_csv(rows, out)
        _summarize(rows, sys.stdout)
        print(f"wrote {len(rows)} rows to {out}")
    else:
        _summarize(rows, sys.stderr)
        emit_csv(rows, sys.stdout)


def _summarize(rows: list[MetricsRow], stream) -> None:
    groups: "OrderedDict[tuple, list[MetricsRow]]" = OrderedDict()
    for row in rows:
        groups.setdefault((row.strategy, row.epsilon, row.theta), []).append(row)
    for (strategy, epsilon, theta), grp in groups.items():
        mean = lambda attr: sum(getattr(r, attr) for r in grp) / len(grp)
        stream.write(
            f"{strategy} epsilon={epsilon} theta={theta} trials={len(grp)} "
            f"mae_seq={mean('mae_seq'):.4f} mse_seq={mean('mse_seq'):.4f} "
            f"mae_dist={mean('mae_dist'):.6f} edge_ratio={mean('edge_ratio'):.4f}\n"
        )


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "stats":
            graph, label = load_dataset(args.dataset)
            st = stats(graph)
            print(f"dataset={label}")
            print(f"nodes={st.n}")
            print(f"edges={st.m}")
            print(f"d_min={st.d_min}")
            print(f"d_max={st.d_max}")
            print(f"d_avg={st.d_avg:.4f}")
            return 0

        if args.command == "select-theta":
            graph, _ = load_dataset(args.dataset)
            degs = degree_sequence(graph)
            K = args.K if args.K is not None else max(max(degs), 1)
            tcfg = ThetaSearchConfig(K=K, epsilon=args.epsilon, alpha=args.alpha,
                                     bits=args.bits, method=args.method)
            theta = resolve_theta(graph, tcfg, np.random.default_rng(args.seed), masked=not args.no_mask)
            print(theta)
            return 0

        if args.command in ("project", "release"):
            private = args.command == "release"
            rows: list[MetricsRow] = []
            for strategy in _strategies(args.strategy):
                cfg = ExperimentConfig(
                    dataset=args.dataset, strategy=strategy, epsilon=args.epsilon, alpha=args.alpha,
                    theta=args.theta, K=args.K, p_size=args.psize, bits=args.bits,
                    trials=args.trials, seed=args.seed, private=private,
                    projection_only=not private, masked=not args.no_mask,
                )
                rows.extend(run_pipeline(cfg)[0])
            _write_rows(rows, args.out)
            return 0

        if args.command == "sweep":
            if (args.thetas is None) == (args.epsilons is None):
                print("usage: degreeldp sweep needs exactly one of --thetas or --epsilons", file=sys.stderr)
                return 2
            rows = []
            grid = [("theta", v) for v in args.thetas] if args.thetas else [("epsilon", v) for v in args.epsilons]
            for strategy in _strategies(args.strategy):
                for kind, value in grid:
                    cfg = ExperimentConfig(
                        dataset=args.dataset, strategy=strategy,
                        epsilon=value if kind == "epsilon" else args.epsilon,
                        alpha=args.alpha,
                        theta=value if kind == "theta" else args.theta,
                        K=args.K, p_size=args.psize, bits=args.bits,
                        trials=args.trials, seed=args.seed, private=args.private,
                        projection_only=not args.private, masked=not args.no_mask,
                    )
                    rows.extend(run_pipeline(cfg)[0])
            _write_rows(rows, args.out)
            return 0
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
