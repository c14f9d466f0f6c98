#!/usr/bin/env python3
"""Search for counterexamples to the two-parameter bundle identity when the
two polarization forms are independent (not proportional).

The registered suite only covers the rank-one reductions; this explorer
probes the general diagonal case.  Usage:
python scripts/explore_general_forms.py [--seed 0] [--trials 100]
"""

import argparse
import sys

from thetachi.identities import explore_split2_general


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    args = parser.parse_args()

    reports = explore_split2_general(args.seed, args.trials)
    failures = [r for r in reports if not r.passed]
    for failure in failures:
        print("COUNTEREXAMPLE", failure.instantiation, failure.residual)
    print(f"{len(reports)} independent-form draws, {len(failures)} failures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
