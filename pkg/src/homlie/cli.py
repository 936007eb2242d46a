"""Command line interface.

Exit codes: 0 the command ran (the answer is in the report), 2 input or
parse error, 3 precondition violated, 4 obstruction or exhausted search.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import gfp
from . import oracle
from .core import (
    Subspace,
    axiom_report,
    center,
    direct_sum,
    fixed_space,
    format_vector,
    induced_subalgebra,
    lower_central_series,
    quotient,
)
from .envelopes import check_envelope, decompose, is_minimal, minimize
from .errors import (
    CapExceeded,
    DimensionError,
    HomLieError,
    IllDefined,
    NoSolution,
    NotFound,
    NotInvertibleOnPreimage,
    Obstruction,
    ParseError,
    PreconditionError,
    ValidationError,
    ValueOutsideImage,
)
from .formats import (
    emit_algebra,
    parse_expr_text,
    parse_form,
    parse_targets,
    parse_vector_list,
    read_algebra,
    read_envelope,
    read_morphism,
    subspace_text,
)
from .morphisms import check_morphism, form_report, pull_p, push_p
from .restricted import (
    PStructure,
    count_p_structures,
    direct_sum_p,
    is_restrictable,
    iter_p_structures,
    p_closure,
    p_eval,
    p_flag_check,
    restrict_p_structure,
    s_terms,
    synthesize_p_structure,
    verify_p_structure,
)

log = logging.getLogger("homlie")

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_OBSTRUCTION = 0, 2, 3, 4


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, CommandFailed):
        return exc.code
    if isinstance(exc, (ParseError, ValidationError, DimensionError, OSError, UnicodeDecodeError)):
        return EXIT_INPUT
    if isinstance(exc, (Obstruction, NotFound)):
        return EXIT_OBSTRUCTION
    if isinstance(
        exc,
        (PreconditionError, NoSolution, IllDefined, NotInvertibleOnPreimage, ValueOutsideImage, CapExceeded),
    ):
        return EXIT_PRECONDITION
    return EXIT_OBSTRUCTION


# --- helpers ---------------------------------------------------------------------------


def _vec(L, v) -> str:
    return format_vector(L.names, v)


def _images(P) -> dict:
    L = P.algebra
    return {name: _vec(L, y) for name, y in zip(L.names, P.images)}


def _need_pmap(af, what: str = "this command"):
    if af.pmap is None:
        raise CommandFailed(EXIT_PRECONDITION, f"{what} needs pmap lines in the algebra file")
    return af.pmap


def _write(path: str | None, text: str, report: dict, key: str = "file") -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        report["written"] = path
    else:
        report[key] = text


# --- commands --------------------------------------------------------------------------


def cmd_validate(args) -> dict:
    af = read_algebra(args.file)
    L = af.algebra
    rep = {"valid": True, "p": L.p, "dim": L.n, "names": list(L.names), "has_pmap": af.pmap is not None}
    if af.pmap is not None:
        v = verify_p_structure(af.pmap, "basis")
        rep["pmap_valid"] = v.ok
    return rep


def cmd_props(args) -> dict:
    L = read_algebra(args.file).algebra
    ax = axiom_report(L)
    series = lower_central_series(L)
    rep = {
        "p": L.p,
        "dim": L.n,
        "axioms": {k: v for k, v in ax.as_dict().items() if k != "counterexamples"},
        "counterexamples": {
            k: [L.names[i] for i in v] for k, v in ax.counterexamples.items()
        },
        "lower_central_series": list(series.dims),
        "nilpotent": series.nilpotent,
        "nilpotency_class": series.nilpotency_class,
        "alpha_center": subspace_text(L, center(L, "alpha")),
        "center": subspace_text(L, center(L, "ordinary")),
        "fixed_space": subspace_text(L, fixed_space(L)),
        "restrictable": is_restrictable(L).decision,
    }
    return rep


def cmd_center(args) -> dict:
    L = read_algebra(args.file).algebra
    mode = "ordinary" if args.ordinary else "alpha"
    C = center(L, mode)
    return {"mode": mode, "dim": C.dim, "basis": subspace_text(L, C)}


def cmd_restrictable(args) -> dict:
    L = read_algebra(args.file).algebra
    cert = is_restrictable(L)
    rep = {"restrictable": cert.decision}
    if cert.decision:
        rep["witness"] = _images(cert.witness)
        if args.witness:
            Path(args.witness).write_text(emit_algebra(L, cert.witness), encoding="utf-8")
            rep["written"] = args.witness
    else:
        rep["failing_index"] = cert.failing_index
        rep["failing_element"] = L.names[cert.failing_index]
    return rep


def cmd_synthesize(args) -> dict:
    L = read_algebra(args.file).algebra
    targets = None
    if args.targets:
        targets = parse_targets(Path(args.targets).read_text(encoding="utf-8"), L)
    try:
        P = synthesize_p_structure(L, targets)
    except NoSolution as exc:
        raise CommandFailed(
            EXIT_PRECONDITION, f"not restrictable: no p-image for basis element {L.names[exc.index]}"
        ) from exc
    rep = {"images": _images(P), "alpha_center_dim": center(L, "alpha").dim}
    _write(args.output, emit_algebra(L, P), rep)
    return rep


def cmd_verify(args) -> dict:
    af = read_algebra(args.file)
    P = _need_pmap(af)
    mode = "exhaustive" if args.exhaustive else "basis"
    v = verify_p_structure(P, mode)
    rep = {"ok": v.ok, "mode": mode, "checked": v.checked}
    if not v.ok:
        L = af.algebra
        rep["axiom"] = v.axiom
        rep["witness"] = [x if isinstance(x, int) else _vec(L, x) for x in v.witness]
    return rep


def cmd_count(args) -> dict:
    L = read_algebra(args.file).algebra
    rep = {"count": count_p_structures(L), "alpha_center_dim": center(L, "alpha").dim}
    if args.limit is not None:
        listed = []
        for k, P in enumerate(iter_p_structures(L)):
            if k >= args.limit:
                break
            listed.append(_images(P))
        rep["structures"] = listed
    return rep


def cmd_sterms(args) -> dict:
    L = read_algebra(args.file).algebra
    x = parse_expr_text(args.x, L.names, L.p)
    y = parse_expr_text(args.y, L.names, L.p)
    S = s_terms(L, x, y)
    return {
        "x": _vec(L, x),
        "y": _vec(L, y),
        "s": [_vec(L, S[i]) for i in range(1, len(S) + 1)],
        "sum": _vec(L, S.total(L.p, L.n)),
    }


def cmd_peval(args) -> dict:
    af = read_algebra(args.file)
    P = _need_pmap(af)
    L = af.algebra
    x = parse_expr_text(args.x, L.names, L.p)
    return {"x": _vec(L, x), "value": _vec(L, p_eval(P, x))}


def cmd_directsum(args) -> dict:
    a, b = read_algebra(args.a), read_algebra(args.b)
    S = direct_sum(a.algebra, b.algebra)
    P = None
    if a.pmap is not None and b.pmap is not None:
        P = direct_sum_p(a.pmap, b.pmap)
        S = P.algebra
    rep = {"dim": S.n, "names": list(S.names), "has_pmap": P is not None}
    _write(args.output, emit_algebra(S, P), rep)
    return rep


def cmd_quotient(args) -> dict:
    af = read_algebra(args.file)
    L = af.algebra
    I = Subspace.of(L, parse_vector_list(args.ideal, L.names, L.p))
    Q, proj = quotient(L, I)
    rep = {
        "ideal": subspace_text(L, I),
        "dim": Q.n,
        "names": list(Q.names),
        "projection": {name: _vec(Q, proj(e)) for name, e in zip(L.names, L.basis())},
    }
    P = None
    if af.pmap is not None:
        rep["p_ideal"] = p_flag_check(af.pmap, I).p_ideal
        if rep["p_ideal"]:
            # the image of a projection is everything, in the unit basis of Q
            R, _ = push_p(proj, af.pmap)
            P = PStructure(Q, R.images)
    _write(args.output, emit_algebra(Q, P), rep)
    return rep


def cmd_pclosure(args) -> dict:
    af = read_algebra(args.file)
    P = _need_pmap(af)
    L = af.algebra
    S = p_closure(P, parse_vector_list(args.gens, L.names, L.p))
    return {"dim": S.dim, "basis": subspace_text(L, S), "whole": S.is_whole()}


def cmd_morphism(args) -> dict:
    mf = read_morphism(args.mapfile)
    f = mf.morphism
    restricted_with = None
    if args.restricted:
        if mf.source.pmap is None or mf.target.pmap is None:
            raise CommandFailed(EXIT_PRECONDITION, "--restricted needs pmap lines in source and target files")
        restricted_with = (mf.source.pmap, mf.target.pmap)
    r = check_morphism(f, restricted_with)
    rep = {
        "morphism": r.morphism,
        "commutes_with_twist": r.commutes_with_twist,
        "preserves_bracket": r.preserves_bracket,
        "injective": f.is_injective(),
        "surjective": f.is_surjective(),
    }
    if restricted_with is not None:
        rep["restricted"] = r.restricted
        rep["restricted_exhaustive"] = r.restricted_exhaustive
    if r.witness is not None:
        kind, *vs = r.witness
        rep["witness"] = [kind] + [_vec(f.source, v) for v in vs]
    return rep


def cmd_push(args) -> dict:
    mf = read_morphism(args.mapfile)
    P = _need_pmap(mf.source, "push")
    try:
        R, incl = push_p(mf.morphism, P)
    except IllDefined as exc:
        L = mf.source.algebra
        x, x2 = exc.witness
        raise CommandFailed(
            EXIT_PRECONDITION, f"pushed map is ill-defined: {_vec(L, x)} and {_vec(L, x2)} have the same image"
        ) from exc
    M = mf.target.algebra
    rep = {
        "image": subspace_text(M, mf.morphism.image()),
        "images": {_vec(M, incl(e)): _vec(M, incl(y)) for e, y in zip(R.algebra.basis(), R.images)},
        "verified": verify_p_structure(R, "basis").ok,
    }
    _write(args.output, emit_algebra(R.algebra, R), rep)
    return rep


def cmd_pull(args) -> dict:
    mf = read_morphism(args.mapfile)
    f, M = mf.morphism, mf.target.algebra
    g = Subspace.of(M, parse_vector_list(args.sub, M.names, M.p))
    g_alg, _ = induced_subalgebra(M, g)
    if mf.target.pmap is not None:
        if not p_flag_check(mf.target.pmap, g).p_subalgebra:
            raise CommandFailed(EXIT_PRECONDITION, "the subspace is not a p-subalgebra of the target")
        Q, _ = restrict_p_structure(mf.target.pmap, g)
        origin = "restricted from the target"
    else:
        try:
            Q = synthesize_p_structure(g_alg)
        except NoSolution as exc:
            raise CommandFailed(EXIT_PRECONDITION, "the subalgebra is not restrictable") from exc
        origin = "synthesized on the subalgebra"
    R, incl = pull_p(f, g, Q)
    L = f.source
    rep = {
        "sub_p_structure": origin,
        "preimage": [_vec(L, incl(e)) for e in R.algebra.basis()],
        "images": {_vec(L, incl(e)): _vec(L, incl(y)) for e, y in zip(R.algebra.basis(), R.images)},
        "verified": verify_p_structure(R, "basis").ok,
    }
    _write(args.output, emit_algebra(R.algebra, R), rep)
    return rep


def cmd_form(args) -> dict:
    af = read_algebra(args.file)
    L = af.algebra
    form = parse_form(Path(args.formfile).read_text(encoding="utf-8"), L)
    r = form_report(L, form, af.pmap)
    rep = {
        "associative": r.associative,
        "nondegenerate": r.nondegenerate,
        "alpha_center_trivial": r.center_trivial,
        "restrictability_hook": r.hook_triggered,
        "restrictable": r.restrictable,
        "consistent": r.consistent,
    }
    if r.witness is not None:
        rep["witness"] = [_vec(L, v) for v in r.witness]
    return rep


def _envelope_summary(E) -> dict:
    G = E.G
    return {
        "dim": G.n,
        "names": list(G.names),
        "embedding": {n: _vec(G, E.i(e)) for n, e in zip(E.base.names, E.base.basis())},
        "images": _images(E.P),
    }


def cmd_envelope(args) -> dict:
    E = read_envelope(args.envfile)
    action = args.action
    if action == "check":
        r = check_envelope(E)
        return {
            "envelope": r.ok,
            "morphism": r.morphism,
            "injective": r.injective,
            "p_structure_ok": r.p_structure_ok,
            "closure": subspace_text(E.G, r.closure),
        }
    if action == "minimal":
        m = is_minimal(E)
        rep = {"minimal": m.minimal, "alpha_center": subspace_text(E.G, m.center), "base_involutive": m.base_involutive}
        if not m.base_involutive:
            rep["advisory"] = "base is not involutive; the criterion is only known to characterize minimality then"
        return rep
    if action == "minimize":
        M = minimize(E)
        rep = {"minimal": is_minimal(M).minimal, **_envelope_summary(M)}
        _write(args.output, emit_algebra(M.G, M.P), rep)
        return rep
    D = decompose(E)
    G = E.G
    rep = {
        "H": subspace_text(G, D.H_subspace),
        "J": subspace_text(G, D.J),
        "H_envelope": _envelope_summary(D.H),
        "H_minimal": is_minimal(D.H).minimal,
    }
    _write(args.output, emit_algebra(D.H.G, D.H.P), rep)
    return rep


def cmd_oracle(args) -> dict:
    af = read_algebra(args.file)
    L = af.algebra
    brute = oracle.brute_restrictable(L)
    main = is_restrictable(L)
    rep = {
        "brute_restrictable": brute.decision,
        "restrictable": main.decision,
        "agree": brute.decision == main.decision,
    }
    if not brute.decision:
        rep["brute_failing_element"] = _vec(L, brute.failing_element)
        rep["failing_basis_element"] = L.names[main.failing_index] if main.failing_index is not None else None
    if L.p ** (L.n * L.n) <= gfp.LIMITS.budget:
        rep["brute_count"] = len(oracle.brute_p_structures(L))
        rep["count"] = count_p_structures(L)
    if af.pmap is not None:
        audit = oracle.exhaustive_restricted_audit(af.pmap)
        rep["audit_ok"] = audit.ok
        rep["verify_ok"] = verify_p_structure(af.pmap, "exhaustive").ok
        if not audit.ok:
            rep["audit_axiom"] = audit.axiom
    if args.suite:
        from .suite import Corpus, run

        C = Corpus.build()
        C.add(Path(args.file).stem, L)
        res = run(C)
        rep["suite"] = {
            k: {"cases": len(v), "failed": sum(not c.passed for c in v)} for k, v in res.by_theorem().items()
        }
        rep["suite_passed"] = res.passed
        rep["suite_failures"] = [f"{c.theorem}: {c.case} {c.detail}".strip() for c in res.failures()]
    return rep


def cmd_random(args) -> dict:
    spec = oracle.GenSpec(args.p, args.dim, args.seed, args.construction, args.count)
    files = []
    for k in range(spec.count):
        L, P = oracle.random_instance(spec, k)
        files.append(emit_algebra(L, P))
    rep = {"p": spec.p, "dim": spec.dim, "seed": spec.seed, "construction": spec.construction}
    text = "".join(files) if len(files) == 1 else "\n".join(f"# instance {k}\n{t}" for k, t in enumerate(files))
    if args.output and len(files) > 1:
        stem = Path(args.output)
        written = []
        for k, t in enumerate(files):
            path = stem.with_name(f"{stem.stem}_{k}{stem.suffix}")
            path.write_text(t, encoding="utf-8")
            written.append(str(path))
        rep["written"] = written
    else:
        _write(args.output, text, rep)
    return rep


# --- parser and rendering ---------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable report")
    c.add_argument("--stable", action="store_true", default=argparse.SUPPRESS, help="omit timings (golden files)")
    c.add_argument("--no-caps", action="store_true", default=argparse.SUPPRESS, help="lift desk-scale caps")
    c.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="homlie", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--stable", action="store_true")
    ap.add_argument("--no-caps", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "parse and check the axioms").add_argument("file")
    add("props", cmd_props, "axiom flags, series, centres").add_argument("file")
    sp = add("center", cmd_center, "alpha^(p-1)-centre (or ordinary centre)")
    sp.add_argument("file")
    sp.add_argument("--ordinary", action="store_true")
    sp = add("restrictable", cmd_restrictable, "decide restrictability")
    sp.add_argument("file")
    sp.add_argument("--witness", metavar="OUT")
    sp = add("synthesize", cmd_synthesize, "build a p-structure from basis images")
    sp.add_argument("file")
    sp.add_argument("--targets", metavar="FILE")
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("verify-pmap", cmd_verify, "check the pmap lines of a file")
    sp.add_argument("file")
    sp.add_argument("--exhaustive", action="store_true")
    sp = add("count-pmaps", cmd_count, "number of p-structures")
    sp.add_argument("file")
    sp.add_argument("--limit", type=int, metavar="N", help="also list up to N structures")
    sp = add("s-terms", cmd_sterms, "correction terms of the additivity law")
    sp.add_argument("file")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp = add("peval", cmd_peval, "evaluate the pmap")
    sp.add_argument("file")
    sp.add_argument("--x", required=True)
    sp = add("directsum", cmd_directsum, "direct sum of two algebras")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("quotient", cmd_quotient, "quotient by an ideal")
    sp.add_argument("file")
    sp.add_argument("--ideal", required=True, help='comma separated generators, e.g. "z"')
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("pclosure", cmd_pclosure, "p-subalgebra generated by vectors")
    sp.add_argument("file")
    sp.add_argument("--gens", required=True)
    sp = add("morphism", cmd_morphism, "morphism checks")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("mapfile")
    sp.add_argument("--restricted", action="store_true")
    sp = add("push", cmd_push, "push the source pmap to the image")
    sp.add_argument("mapfile")
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("pull", cmd_pull, "pull a pmap back to a preimage")
    sp.add_argument("mapfile")
    sp.add_argument("--sub", required=True)
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("form", cmd_form, "associative bilinear form report")
    sp.add_argument("file")
    sp.add_argument("formfile")
    sp = add("envelope", cmd_envelope, "p-envelope operations")
    sp.add_argument("action", choices=["check", "minimal", "minimize", "decompose"])
    sp.add_argument("envfile")
    sp.add_argument("-o", "--output", metavar="OUT")
    sp = add("oracle", cmd_oracle, "brute-force cross-checks")
    sp.add_argument("file")
    sp.add_argument("--suite", choices=["all"])
    sp = add("random", cmd_random, "seeded random instance")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--construction", choices=list(oracle.CONSTRUCTIONS), default="yau-twist")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("-o", "--output", metavar="OUT")
    return ap


def render(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict):
            if value:
                lines.append(f"{pad}{key}:")
                lines.append(render(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {{}}")
        elif isinstance(value, list):
            if value and all(isinstance(v, dict) for v in value):
                lines.append(f"{pad}{key}:")
                for k, v in enumerate(value):
                    lines.append(f"{pad}  [{k}]")
                    lines.append(render(v, indent + 2))
            else:
                lines.append(f"{pad}{key}: [{', '.join(str(v) for v in value)}]")
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {ln}" for ln in value.rstrip("\n").splitlines())
        elif isinstance(value, bool):
            lines.append(f"{pad}{key}: {'yes' if value else 'no'}")
        elif value is None:
            lines.append(f"{pad}{key}: n/a")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    previous = gfp.set_limits(uncapped=True) if args.no_caps else None
    t0 = time.perf_counter()
    try:
        report = {"command": args.command, **args.fn(args)}
        code = EXIT_OK
    except (HomLieError, CommandFailed, OSError, UnicodeDecodeError) as exc:
        code = exit_code_for(exc)
        report = {"command": args.command, "error": str(exc), "kind": type(exc).__name__, "exit": code}
    finally:
        if previous is not None:
            gfp.set_limits(previous)
    if not args.stable:
        report["elapsed_s"] = round(time.perf_counter() - t0, 4)
    if args.json:
        print(json.dumps(report, indent=2))
    elif "error" in report:
        print(f"error: {report['error']}", file=sys.stderr)
    else:
        print(render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
