#!/usr/bin/env python3
"""Run the full verification sweep and write the JSON summary.

Usage: python scripts/run_sweep.py [out.json]
"""

import sys
import time

from idemgraph.sweep import SweepConfig, run_sweep, summary_json


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "sweep_summary.json"
    t0 = time.time()
    summary = run_sweep(SweepConfig())
    elapsed = time.time() - t0
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(summary_json(summary))
    print(
        f"{summary['rings_checked']} rings "
        f"({summary['product_rings_checked']} products, "
        f"{summary['total_vertices']} vertices), "
        f"{summary['properties_checked']} property checks, "
        f"{summary['mismatch_count']} mismatches in {elapsed:.1f}s -> {out}"
    )
    return 2 if summary["mismatch_count"] else 0


if __name__ == "__main__":
    sys.exit(main())
