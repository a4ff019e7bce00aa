#!/usr/bin/env python3
"""Tabulate the exact multiples connecting Fueter images to sequence terms.

For each odd dimension and initial degree, prints the rational constant
relating the Fueter image of the shifted complex monomial to the n-th
sequence term, together with the exact-equality verdict.
"""

import argparse
import sys

from monappell.fueter import check_fueter_appell_match
from monappell.sequences import SequenceSpec


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, nargs="+", default=[3, 5])
    parser.add_argument("--k", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--n-max", type=int, default=4)
    args = parser.parse_args()

    bad = [m for m in args.m if m % 2 == 0]
    if bad:
        parser.error(f"only odd dimensions are supported, got {bad}")

    failures = 0
    print(f"{'m':>3} {'k':>3} {'n':>3} {'multiple':>14}  verdict")
    for m in args.m:
        for k in args.k:
            spec = SequenceSpec.builtin(m, k, args.n_max)
            for n in range(args.n_max + 1):
                report = check_fueter_appell_match(spec, n)
                entry = report.entries[0]
                verdict = "exact" if entry.passed else "MISMATCH"
                failures += not entry.passed
                print(f"{m:>3} {k:>3} {n:>3} {entry.params['lambda']:>14}  {verdict}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
