#!/usr/bin/env python3
"""Download the SNAP edge lists used in the benchmark experiments.

Files land in ./data by default, or in $LDP_DEGREE_DATA_DIR when set.
They stay gzipped; the loader reads .gz transparently.  Re-running skips
anything already on disk.
"""

import argparse
import os
import sys
import urllib.request
from pathlib import Path

SNAP = "https://snap.stanford.edu/data"

DATASETS = {
    "facebook": f"{SNAP}/facebook_combined.txt.gz",
    "wiki-vote": f"{SNAP}/wiki-Vote.txt.gz",
    "ca-hepph": f"{SNAP}/ca-HepPh.txt.gz",
    "cit-hepph": f"{SNAP}/cit-HepPh.txt.gz",
    "email-enron": f"{SNAP}/email-Enron.txt.gz",
    "loc-brightkite": f"{SNAP}/loc-brightkite_edges.txt.gz",
    "twitter": f"{SNAP}/twitter_combined.txt.gz",
    "com-dblp": f"{SNAP}/bigdata/communities/com-dblp.ungraph.txt.gz",
}


def default_data_dir() -> Path:
    env = os.environ.get("LDP_DEGREE_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"


def fetch(name: str, url: str, out_dir: Path, force: bool) -> bool:
    dest = out_dir / url.rsplit("/", 1)[1]
    if dest.exists() and not force:
        print(f"{name}: already present ({dest})")
        return True
    print(f"{name}: downloading {url}")
    try:
        with urllib.request.urlopen(url, timeout=120) as resp:
            payload = resp.read()
    except OSError as exc:
        print(f"{name}: failed ({exc})", file=sys.stderr)
        return False
    dest.write_bytes(payload)
    print(f"{name}: wrote {dest} ({len(payload)} bytes)")
    return True


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", nargs="*", metavar="NAME",
                    help=f"subset to fetch (choices: {', '.join(DATASETS)})")
    ap.add_argument("--dir", type=Path, default=None,
                    help="output directory (default: $LDP_DEGREE_DATA_DIR or ./data)")
    ap.add_argument("--force", action="store_true", help="re-download even if present")
    args = ap.parse_args(argv)

    wanted = args.only or list(DATASETS)
    unknown = [w for w in wanted if w not in DATASETS]
    if unknown:
        ap.error(f"unknown dataset(s): {', '.join(unknown)}")

    out_dir = args.dir or default_data_dir()
    out_dir.mkdir(parents=True, exist_ok=True)

    failed = [name for name in wanted if not fetch(name, DATASETS[name], out_dir, args.force)]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
