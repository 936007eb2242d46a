#!/usr/bin/env python3
"""Tabulate every multiplicative Hom-Lie structure on GF(p)^n (default the
2-dimensional ones over GF(2)): twist, bracket, restrictability, alpha-center
dimension and the number of p-structures, with the brute-force cross-checks."""
from __future__ import annotations

import argparse
import json
import sys

from homlie.core import axiom_report, center, format_vector
from homlie.oracle import all_hom_lie_algebras, brute_p_structures, brute_restrictable
from homlie.restricted import count_p_structures, is_restrictable


def rows(p: int, n: int):
    for k, L in enumerate(all_hom_lie_algebras(p, n)):
        cert = is_restrictable(L)
        brute = brute_restrictable(L)
        count = count_p_structures(L) if cert.decision else 0
        flags = axiom_report(L)
        yield {
            "index": k,
            "alpha": [format_vector(L.names, L.twist(e)) for e in L.basis()],
            "brackets": {
                f"{L.names[i]},{L.names[j]}": format_vector(L.names, L.c[i][j])
                for i in range(n) for j in range(i + 1, n) if any(L.c[i][j])
            },
            "regular": flags.regular,
            "abelian": flags.abelian,
            "center_dim": center(L).dim,
            "restrictable": cert.decision,
            "p_structures": count,
            "brute_agrees": brute.decision == cert.decision and len(brute_p_structures(L)) == count,
        }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    table = list(rows(args.p, args.dim))
    if args.json:
        print(json.dumps(table, indent=2))
    else:
        print(f"{'#':>3}  {'alpha':<18} {'brackets':<18} reg ab  C  restr  #p  ok")
        for r in table:
            br = " ".join(f"[{k}]={v}" for k, v in r["brackets"].items()) or "-"
            print(
                f"{r['index']:>3}  {' '.join(r['alpha']):<18} {br:<18} "
                f"{'y' if r['regular'] else 'n':>3} {'y' if r['abelian'] else 'n':>2} {r['center_dim']:>2}  "
                f"{'yes' if r['restrictable'] else 'no':>5} {r['p_structures']:>3}  {'ok' if r['brute_agrees'] else 'DIFF'}"
            )
        restr = sum(r["restrictable"] for r in table)
        print(f"{len(table)} structures, {restr} restrictable")
    return 0 if all(r["brute_agrees"] for r in table) else 1


if __name__ == "__main__":
    sys.exit(main())
