#!/usr/bin/env python3
"""Run the full law sweep over every named instance and print a summary.

Same configuration as the acceptance gate: 1000 cases per instance,
500 for bushes (budget 30).
"""

import sys
import time

from lndt.codes import resolve_alias
from lndt.laws import GenConfig, run_laws

SWEEP = [
    ("list", 1000, 20),
    ("nest", 1000, 20),
    ("maybe", 1000, 20),
    ("sqlist", 1000, 20),
    ("nperfect:3", 1000, 20),
    ("bush", 500, 30),
]


def main() -> int:
    total_failures = 0
    for alias, cases, budget in SWEEP:
        start = time.perf_counter()
        report = run_laws(resolve_alias(alias), GenConfig(budget, 7, tuple(range(10))), cases)
        elapsed = time.perf_counter() - start
        failures = report.total_failures()
        total_failures += failures
        print(f"{alias:12s} {cases:5d} cases  {failures} failures  ({elapsed:.2f}s)")
        if failures:
            print(report.to_text())
    print("all laws hold" if total_failures == 0 else f"{total_failures} failures")
    return 0 if total_failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
