#!/usr/bin/env python3
"""Run every verification sweep over all canonical DOWs up to a size.

Prints one summary line per sweep plus a timing footer; exits nonzero if
any sweep finds a counterexample.  Larger sizes grow fast: size 5 means
945 classes and a quadratic pair scan in each.
"""
import argparse
import sys
import time

from dowkit.classifier import (
    verify_generator_families,
    verify_no_mixed,
    verify_sequential_gaps,
    verify_structure_witnesses,
)
from dowkit.word_graph import build_nodes


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--nu-max", type=int, default=3)
    ap.add_argument(
        "--quiet", action="store_true", help="only print failures and the footer"
    )
    args = ap.parse_args()

    start = time.perf_counter()
    reports = []
    for w in build_nodes(args.max_size):
        reports.append(verify_no_mixed(w, args.nu_max))
        for nu in range(2, args.nu_max + 1):
            reports.append(verify_sequential_gaps(w, nu))
            reports.append(verify_structure_witnesses(w, nu))
    reports.append(verify_generator_families(args.nu_max))

    ok = True
    checked = 0
    for report in reports:
        checked += report.checked
        if not args.quiet or not report.ok:
            print(report.summary())
        for failure in report.failures:
            print(f"  counterexample: {failure}", file=sys.stderr)
        ok = ok and report.ok
    elapsed = time.perf_counter() - start
    print(
        f"{len(reports)} sweeps, {checked} checks, {elapsed:.2f}s: "
        f"{'all clear' if ok else 'FAILURES'}"
    )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
