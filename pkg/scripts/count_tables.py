#!/usr/bin/env python3
"""Per-order census of triangle-free graphs: class counts, chi_1 = 3 counts, face statistics.

Prints a CSV table to stdout, e.g.

    python3 scripts/count_tables.py --max-order 11 > results/census.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from defekt.colour import chi_k, is_mk_colourable
from defekt.enumerate import MAX_SEARCH_ORDER, default_threads, triangle_free_level
from defekt.graph import odd_girth
from defekt.planar import face_profile, is_maximal_tfp, planar_embedding

FIELDS = ["order", "planar", "classes", "chi1_eq_3", "mtfp_odd", "f5_histogram"]


def chi1_eq_3(graphs) -> int:
    return sum(1 for g in graphs if is_mk_colourable(g, 2, 1) is None and chi_k(g, 1) == 3)


def census_row(n: int, planar: bool, threads: int, full_limit: int) -> dict | None:
    if not planar and n > full_limit:
        return None
    graphs = triangle_free_level(n, planar, threads).graphs
    row = {"order": n, "planar": int(planar), "classes": len(graphs), "chi1_eq_3": chi1_eq_3(graphs)}
    if planar and n >= 3:
        mtfp = [g for g in graphs if g.is_connected() and odd_girth(g) is not None and is_maximal_tfp(g)]
        f5 = Counter(face_profile(planar_embedding(g)).f5 for g in mtfp)
        row["mtfp_odd"] = len(mtfp)
        row["f5_histogram"] = ";".join(f"{k}:{v}" for k, v in sorted(f5.items()))
    return row


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=11)
    ap.add_argument("--full-limit", type=int, default=10, help="largest order for the non-planar census")
    ap.add_argument("--threads", type=int, default=default_threads())
    args = ap.parse_args(argv)
    if not 1 <= args.max_order <= MAX_SEARCH_ORDER:
        ap.error(f"--max-order must lie in 1..{MAX_SEARCH_ORDER}")

    writer = csv.DictWriter(sys.stdout, fieldnames=FIELDS, restval="")
    writer.writeheader()
    for planar in (False, True):
        for n in range(1, args.max_order + 1):
            row = census_row(n, planar, args.threads, args.full_limit)
            if row is not None:
                writer.writerow(row)
                sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
