#!/usr/bin/env python3
"""Regenerate the files under fixtures/ from the library constructors.

    python scripts/make_fixtures.py            # rewrite fixtures/
    python scripts/make_fixtures.py --check    # exit 1 if anything differs
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from homlie import fixtures as fx
from homlie import gfp
from homlie.core import HomMorphism, Subspace, gl_example, quotient
from homlie.envelopes import PEnvelope
from homlie.formats import emit_algebra, emit_envelope, emit_form, emit_morphism
from homlie.morphisms import BilinearForm, push_p
from homlie.restricted import synthesize_p_structure

OUT = Path(__file__).resolve().parents[1] / "fixtures"


def build() -> dict[str, str]:
    files = {}
    files["nonab2.alg"] = emit_algebra(fx.nonab2(), fx.nonab2_p())
    files["nonab2_p3.alg"] = emit_algebra(fx.nonab2(3), fx.nonab2_p(3))
    files["ex34.alg"] = emit_algebra(fx.ex34())
    files["heis3.alg"] = emit_algebra(fx.heis3(), fx.heis3_p())
    files["nr3.alg"] = emit_algebra(fx.nr3())
    files["ab1.alg"] = emit_algebra(fx.ab1())
    files["g2.alg"] = emit_algebra(fx.g2(), fx.g2_p())
    files["sl2_p3.alg"] = emit_algebra(fx.sl2(3), synthesize_p_structure(fx.sl2(3)))
    files["gl2_swap.alg"] = emit_algebra(*gl_example(2, ((0, 1), (1, 0)), 2))

    H = fx.heis3()
    Hz, pr = quotient(H, Subspace.of(H, [(0, 0, 1)]))
    Pz, _ = push_p(pr, fx.heis3_p())
    files["heis3_mod_z.alg"] = emit_algebra(Hz, Pz)
    files["heis3_to_mod_z.map"] = emit_morphism("heis3.alg", "heis3_mod_z.alg", pr)

    G = fx.g2()
    Gq, gq = quotient(G, Subspace.of(G, [(1, 1)]))
    files["g2_mod_ab.alg"] = emit_algebra(Gq)
    files["g2_to_mod_ab.map"] = emit_morphism("g2.alg", "g2_mod_ab.alg", gq)

    N = fx.nonab2()
    files["nonab2_id.map"] = emit_morphism("nonab2.alg", "nonab2.alg", HomMorphism.identity(N))
    # deliberately not a morphism: h -> h, x -> h
    files["nonab2_bad.map"] = emit_morphism("nonab2.alg", "nonab2.alg", HomMorphism(N, N, ((1, 1), (0, 0))))

    E = PEnvelope(fx.ab1(), fx.g2_p(), HomMorphism(fx.ab1(), G, ((1,), (0,))))
    files["ab1_in_g2.env"] = emit_envelope("ab1.alg", "g2.alg", E)
    E = PEnvelope(N, fx.nonab2_p(), HomMorphism.identity(N))
    files["nonab2_self.env"] = emit_envelope("nonab2.alg", "nonab2.alg", E)

    files["nonab2_diag.form"] = emit_form(BilinearForm(N, ((1, 0), (0, 0))))
    files["ab1_unit.form"] = emit_form(BilinearForm(fx.ab1(), gfp.identity(1)))
    return files


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args(argv)
    files = build()
    stale = []
    for name, text in sorted(files.items()):
        path = args.out / name
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
    if args.check:
        for name in stale:
            print(f"differs: {name}")
        print(f"{len(files) - len(stale)}/{len(files)} fixtures up to date")
        return 1 if stale else 0
    print(f"wrote {len(files)} files to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
