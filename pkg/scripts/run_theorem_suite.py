#!/usr/bin/env python3
"""Run the property suite over the default corpus and the named fixtures and
print one line per manifest entry.  Exit status 1 on any failing or missing
entry."""
from __future__ import annotations

import argparse
import logging
import sys

from homlie.suite import MANIFEST, run


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", nargs="*", choices=sorted(MANIFEST), help="run a subset of entries")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-v", "--verbose", action="store_true", help="list every case")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    report = run(only=args.only, seed=args.seed)
    groups = report.by_theorem()
    for key in report.keys:
        cases = groups.get(key, [])
        bad = [c for c in cases if not c.passed]
        status = "FAIL" if bad or not cases else "ok"
        print(f"{status:<4} {key:<30} {len(cases):>4} cases  {report.seconds.get(key, 0):6.2f} s  {MANIFEST[key][0]}")
        for c in (cases if args.verbose else bad):
            print(f"       {'+' if c.passed else '-'} {c.case}  {c.detail}")
    if report.missing:
        print("missing:", ", ".join(report.missing))
    total = len(report.cases)
    print(f"{total - len(report.failures())}/{total} cases passed; suite {'passed' if report.passed else 'FAILED'}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
