#!/usr/bin/env python3
"""Run every verification claim and write one JSON record per claim.

    python3 scripts/reproduce_main_result.py --out results/claims.jsonl
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from defekt.catalog import claim_ids, verify
from defekt.enumerate import default_threads


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/claims.jsonl"))
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--claim", action="append", help="restrict to these claim ids")
    args = ap.parse_args(argv)

    ids = args.claim or claim_ids()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    failed = []
    start = time.perf_counter()
    with args.out.open("w") as fh:
        for cid in ids:
            report = verify(cid, threads=args.threads)
            fh.write(json.dumps(report.to_json()) + "\n")
            print(report.summary(), flush=True)
            if not report.passed:
                failed.append(cid)
    print(f"{len(ids) - len(failed)}/{len(ids)} claims pass in {time.perf_counter() - start:.1f}s; wrote {args.out}")
    if failed:
        print("failing: " + " ".join(failed), file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
