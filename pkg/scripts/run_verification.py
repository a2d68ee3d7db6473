#!/usr/bin/env python3
"""Run the full desk-scale verification suite and write a JSON report.

Usage:
    python scripts/run_verification.py [--max-size N] [--max-worlds K] [--out FILE]

Prints one line per check and exits non-zero if any check fails.
"""

import argparse
import json
import sys
import time

from latmodal.harness import HarnessConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--max-worlds", type=int, default=3)
    parser.add_argument("--twist-atoms", type=int, default=2)
    parser.add_argument("--out", default=None, help="write the JSON reports here")
    args = parser.parse_args()

    config = HarnessConfig(
        size_bound=args.max_size,
        world_bound=args.max_worlds,
        twist_atoms=args.twist_atoms,
    )
    start = time.perf_counter()
    reports, status = run_suite(config)
    elapsed = time.perf_counter() - start

    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{verdict}  {report.theorem:18s} cases={report.cases}")
        for failure in report.failures[:3]:
            print(f"      failure: {failure}")
    print(f"{len(reports)} checks in {elapsed:.1f}s, exit {status}")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump([r.to_dict() for r in reports], handle, indent=2, sort_keys=True)
        print(f"wrote {args.out}")
    return status


if __name__ == "__main__":
    sys.exit(main())
