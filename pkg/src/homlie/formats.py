"""Line-oriented text formats for algebras, morphisms, envelopes and forms.

Algebra files::

    # comment
    p 2
    dim 2
    names h x
    alpha h = h
    alpha x = x
    bracket h x = x
    pmap h = h
    pmap x = 0

A linear combination is ``c*name`` or ``name`` terms joined by ``+``, or the
literal ``0``.  Coefficients must lie in ``[0, p)``.  Brackets not listed are
zero and ``[b, a] = -[a, b]`` is filled in; an unlisted ``alpha`` line means
``alpha(e) = e``.  ``pmap`` lines are optional but, when present, must cover
every basis element.

Morphism files hold ``source FILE``, ``target FILE`` and ``map e = expr``
lines; envelope files hold ``base FILE``, ``envelope FILE`` and
``embed e = expr`` lines; form files hold ``form a b = c`` lines.  Relative
paths are resolved against the directory of the referring file, and
unlisted ``map``/``embed``/``form`` entries are zero.

:func:`emit_algebra` writes the canonical form; ``emit_algebra(parse(t)) == t``
holds for canonical text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import gfp
from .core import HomLieAlgebra, HomMorphism, Subspace, axiom_report, format_vector
from .envelopes import PEnvelope
from .errors import CapExceeded, DimensionError, ParseError, ValidationError
from .morphisms import BilinearForm
from .restricted import PStructure

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[*+=,])|(?P<bad>\S))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int  # 1-based


def tokenize(text: str, line: int = 0, offset: int = 0) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        col = m.start(kind) + 1 + offset
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", line, col)
        out.append(Token(kind, m.group(kind), col))
        pos = m.end()
    return out


@dataclass
class _Line:
    number: int
    tokens: list[Token]
    end: int  # column just past the content
    rest: str = ""  # untokenized remainder, for lines naming a file

    @property
    def keyword(self) -> str:
        return self.tokens[0].text


def _lines(text: str, file_keywords: tuple[str, ...] = ()) -> list[_Line]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if not content.strip():
            continue
        head, _, rest = content.strip().partition(" ")
        if head in file_keywords:
            col = content.index(head) + 1
            out.append(_Line(number, [Token("name", head, col)], len(content) + 1, rest.strip()))
        else:
            out.append(_Line(number, tokenize(content, number), len(content) + 1))
    return out


def parse_expr(
    tokens: Sequence[Token], names: Sequence[str], p: int, line: int = 0, end: int = 0
) -> gfp.Vec:
    """Parse ``c*name + name + ...`` (or ``0``) into a coordinate vector."""
    index = {name: i for i, name in enumerate(names)}
    out = [0] * len(names)
    toks = list(tokens)
    if not toks:
        raise ParseError("expected a linear combination", line, end)
    if len(toks) == 1 and toks[0].kind == "num" and int(toks[0].text) == 0:
        return tuple(out)
    i = 0
    while True:
        if i >= len(toks):
            raise ParseError("expected a term", line, end)
        t = toks[i]
        coeff = 1
        if t.kind == "num":
            coeff = int(t.text)
            if coeff >= p:
                raise ParseError(f"coefficient {coeff} is not in [0, {p})", line, t.column)
            if i + 1 >= len(toks) or toks[i + 1].text != "*":
                raise ParseError("expected '*' after a coefficient", line, t.column + len(t.text))
            i += 2
            if i >= len(toks):
                raise ParseError("expected a basis name after '*'", line, end)
            t = toks[i]
        if t.kind != "name":
            raise ParseError(f"expected a basis name, got {t.text!r}", line, t.column)
        if t.text not in index:
            raise ParseError(f"undeclared basis name {t.text!r}", line, t.column)
        j = index[t.text]
        out[j] = (out[j] + coeff) % p
        i += 1
        if i == len(toks):
            return tuple(out)
        if toks[i].text != "+":
            raise ParseError(f"expected '+', got {toks[i].text!r}", line, toks[i].column)
        i += 1


def parse_expr_text(text: str, names: Sequence[str], p: int) -> gfp.Vec:
    return parse_expr(tokenize(text), names, p, end=len(text) + 1)


def parse_vector_list(text: str, names: Sequence[str], p: int) -> list[gfp.Vec]:
    """Comma separated expressions, e.g. ``"e, f+z"``; the empty string is the empty list."""
    toks = tokenize(text)
    groups: list[list[Token]] = [[]]
    for t in toks:
        if t.text == ",":
            groups.append([])
        else:
            groups[-1].append(t)
    if groups == [[]]:
        return []
    return [parse_expr(g, names, p, end=len(text) + 1) for g in groups]


def _split_eq(ln: _Line, nlhs: int) -> tuple[list[Token], list[Token]]:
    toks = ln.tokens[1:]
    eq = next((i for i, t in enumerate(toks) if t.text == "="), None)
    if eq is None:
        raise ParseError(f"'{ln.keyword}' line needs '='", ln.number, ln.end)
    lhs, rhs = toks[:eq], toks[eq + 1:]
    if len(lhs) != nlhs or any(t.kind != "name" for t in lhs):
        col = lhs[0].column if lhs else toks[eq].column
        raise ParseError(f"'{ln.keyword}' expects {nlhs} basis name(s) before '='", ln.number, col)
    return lhs, rhs


def _name_index(names: Sequence[str], tok: Token, line: int) -> int:
    try:
        return list(names).index(tok.text)
    except ValueError:
        raise ParseError(f"undeclared basis name {tok.text!r}", line, tok.column) from None


def _int_arg(ln: _Line) -> int:
    if len(ln.tokens) != 2 or ln.tokens[1].kind != "num":
        col = ln.tokens[1].column if len(ln.tokens) > 1 else ln.end
        raise ParseError(f"'{ln.keyword}' expects one integer", ln.number, col)
    return int(ln.tokens[1].text)


@dataclass(frozen=True)
class AlgebraFile:
    algebra: HomLieAlgebra
    pmap: PStructure | None = None


def parse_algebra(text: str, validate: bool = True) -> AlgebraFile:
    p = dim = None
    names: tuple[str, ...] | None = None
    alpha_cols: dict[int, gfp.Vec] = {}
    brackets: dict[tuple[int, int], gfp.Vec] = {}
    pmap: dict[int, gfp.Vec] = {}
    for ln in _lines(text):
        kw = ln.keyword
        if kw == "p":
            if p is not None:
                raise ParseError("modulus declared twice", ln.number, 1)
            p = _int_arg(ln)
            if not gfp.is_prime(p):
                raise ParseError(f"modulus {p} is not prime", ln.number, ln.tokens[1].column)
        elif kw == "dim":
            dim = _int_arg(ln)
        elif kw == "names":
            if names is not None:
                raise ParseError("names declared twice", ln.number, 1)
            toks = ln.tokens[1:]
            for t in toks:
                if t.kind != "name":
                    raise ParseError(f"invalid basis name {t.text!r}", ln.number, t.column)
            names = tuple(t.text for t in toks)
            if len(set(names)) != len(names):
                raise ParseError("basis names must be distinct", ln.number, toks[0].column if toks else 1)
        elif kw in ("alpha", "bracket", "pmap"):
            if p is None or names is None:
                raise ParseError(f"'{kw}' before 'p' and 'names'", ln.number, 1)
            lhs, rhs = _split_eq(ln, 2 if kw == "bracket" else 1)
            v = parse_expr(rhs, names, p, ln.number, ln.end)
            idx = tuple(_name_index(names, t, ln.number) for t in lhs)
            if kw == "alpha":
                if idx[0] in alpha_cols:
                    raise ParseError(f"alpha({lhs[0].text}) given twice", ln.number, lhs[0].column)
                alpha_cols[idx[0]] = v
            elif kw == "pmap":
                if idx[0] in pmap:
                    raise ParseError(f"pmap({lhs[0].text}) given twice", ln.number, lhs[0].column)
                pmap[idx[0]] = v
            else:
                if idx in brackets:
                    raise ParseError("bracket given twice", ln.number, lhs[0].column)
                brackets[idx] = v
        else:
            raise ParseError(f"unknown keyword {kw!r}", ln.number, ln.tokens[0].column)
    if p is None:
        raise ParseError("missing 'p' line")
    if names is None:
        raise ParseError("missing 'names' line")
    n = len(names)
    if dim is not None and dim != n:
        raise ParseError(f"dim {dim} does not match {n} names")
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), v in brackets.items():
        c[i][j] = list(v)
        if i != j:
            neg = tuple((-a) % p for a in v)
            if (j, i) in brackets and brackets[(j, i)] != neg:
                raise ValidationError(
                    f"[{names[i]}, {names[j]}] and [{names[j]}, {names[i]}] are not negatives", (i, j)
                )
            c[j][i] = list(neg)
    alpha = gfp.from_columns([alpha_cols.get(j, gfp.unit_vec(n, j)) for j in range(n)], n) if n else ()
    try:
        L = HomLieAlgebra(p, names, tuple(tuple(tuple(v) for v in row) for row in c), alpha)
    except DimensionError as exc:
        raise ParseError(str(exc)) from exc
    if validate:
        rep = axiom_report(L)
        for flag in ("alternating", "hom_jacobi", "multiplicative"):
            if not getattr(rep, flag):
                ce = rep.counterexamples.get(flag)
                where = ", ".join(names[k] for k in ce) if ce else ""
                raise ValidationError(f"{flag} check fails at ({where})", ce)
    P = None
    if pmap:
        missing = [names[j] for j in range(n) if j not in pmap]
        if missing:
            raise ParseError(f"pmap lines missing for {', '.join(missing)}")
        P = PStructure(L, tuple(pmap[j] for j in range(n)))
    return AlgebraFile(L, P)


def emit_algebra(L: HomLieAlgebra, P: PStructure | None = None) -> str:
    names = L.names
    out = [f"p {L.p}", f"dim {L.n}", "names " + " ".join(names)]
    for j in range(L.n):
        out.append(f"alpha {names[j]} = {format_vector(names, gfp.column(L.alpha, j))}")
    for i in range(L.n):
        for j in range(i + 1, L.n):
            if any(L.c[i][j]):
                out.append(f"bracket {names[i]} {names[j]} = {format_vector(names, L.c[i][j])}")
    if P is not None:
        for j, y in enumerate(P.images):
            out.append(f"pmap {names[j]} = {format_vector(names, y)}")
    return "\n".join(out) + "\n"


def read_algebra(path: str | Path, validate: bool = True) -> AlgebraFile:
    path = Path(path)
    try:
        return parse_algebra(path.read_text(encoding="utf-8"), validate)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.args[0]}") from exc


# --- referring files ---------------------------------------------------------------


def _referring(path: Path, keys: tuple[str, str], entry: str, nlhs: int):
    """Shared reader for morphism and envelope files."""
    text = path.read_text(encoding="utf-8")
    refs: dict[str, AlgebraFile] = {}
    pending = []
    for ln in _lines(text, keys):
        kw = ln.keyword
        if kw in keys:
            if not ln.rest:
                raise ParseError(f"'{kw}' expects a file name", ln.number, ln.end)
            if kw in refs:
                raise ParseError(f"'{kw}' given twice", ln.number, 1)
            ref = Path(ln.rest)
            if not ref.is_absolute():
                ref = path.parent / ref
            refs[kw] = read_algebra(ref)
        elif kw == entry:
            pending.append(ln)
        else:
            raise ParseError(f"unknown keyword {kw!r}", ln.number, ln.tokens[0].column)
    for k in keys:
        if k not in refs:
            raise ParseError(f"{path}: missing '{k}' line")
    src, tgt = refs[keys[0]].algebra, refs[keys[1]].algebra
    cols: dict[int, gfp.Vec] = {}
    for ln in pending:
        lhs, rhs = _split_eq(ln, nlhs)
        j = _name_index(src.names, lhs[0], ln.number)
        if j in cols:
            raise ParseError(f"{entry}({lhs[0].text}) given twice", ln.number, lhs[0].column)
        cols[j] = parse_expr(rhs, tgt.names, tgt.p, ln.number, ln.end)
    F = gfp.from_columns([cols.get(j, gfp.zero_vec(tgt.n)) for j in range(src.n)], tgt.n)
    return refs[keys[0]], refs[keys[1]], F


@dataclass(frozen=True)
class MorphismFile:
    morphism: HomMorphism
    source: AlgebraFile
    target: AlgebraFile


def read_morphism(path: str | Path) -> MorphismFile:
    path = Path(path)
    src, tgt, F = _referring(path, ("source", "target"), "map", 1)
    if src.algebra.p != tgt.algebra.p:
        raise ParseError(f"{path}: source and target have different moduli")
    return MorphismFile(HomMorphism(src.algebra, tgt.algebra, F), src, tgt)


def read_envelope(path: str | Path) -> PEnvelope:
    path = Path(path)
    base, env, F = _referring(path, ("base", "envelope"), "embed", 1)
    if env.pmap is None:
        raise ParseError(f"{path}: the envelope file needs pmap lines")
    if base.algebra.p != env.algebra.p:
        raise ParseError(f"{path}: base and envelope have different moduli")
    return PEnvelope(base.algebra, env.pmap, HomMorphism(base.algebra, env.algebra, F))


def emit_morphism(source_file: str, target_file: str, f: HomMorphism) -> str:
    out = [f"source {source_file}", f"target {target_file}"]
    for j, e in enumerate(f.source.basis()):
        out.append(f"map {f.source.names[j]} = {format_vector(f.target.names, f(e))}")
    return "\n".join(out) + "\n"


def emit_envelope(base_file: str, env_file: str, E: PEnvelope) -> str:
    out = [f"base {base_file}", f"envelope {env_file}"]
    for j, e in enumerate(E.base.basis()):
        out.append(f"embed {E.base.names[j]} = {format_vector(E.G.names, E.i(e))}")
    return "\n".join(out) + "\n"


def parse_form(text: str, L: HomLieAlgebra) -> BilinearForm:
    n, p = L.n, L.p
    G = [[None] * n for _ in range(n)]
    for ln in _lines(text):
        if ln.keyword != "form":
            raise ParseError(f"unknown keyword {ln.keyword!r}", ln.number, ln.tokens[0].column)
        lhs, rhs = _split_eq(ln, 2)
        i, j = (_name_index(L.names, t, ln.number) for t in lhs)
        if len(rhs) != 1 or rhs[0].kind != "num":
            raise ParseError("form value must be a single integer", ln.number, rhs[0].column if rhs else ln.end)
        v = int(rhs[0].text)
        if v >= p:
            raise ParseError(f"coefficient {v} is not in [0, {p})", ln.number, rhs[0].column)
        for a, b in ((i, j), (j, i)):
            if G[a][b] is not None and G[a][b] != v:
                raise ParseError(f"conflicting values for ({L.names[i]}, {L.names[j]})", ln.number, lhs[0].column)
            G[a][b] = v
    return BilinearForm(L, tuple(tuple(v or 0 for v in row) for row in G))


def emit_form(form: BilinearForm) -> str:
    L = form.algebra
    out = []
    for i in range(L.n):
        for j in range(i, L.n):
            if form.gram[i][j]:
                out.append(f"form {L.names[i]} {L.names[j]} = {form.gram[i][j]}")
    return "\n".join(out) + ("\n" if out else "")


def parse_targets(text: str, L: HomLieAlgebra) -> dict[int, gfp.Vec]:
    """``pmap e = expr`` lines naming some basis elements (for synthesis)."""
    out: dict[int, gfp.Vec] = {}
    for ln in _lines(text):
        if ln.keyword != "pmap":
            raise ParseError(f"targets files only hold 'pmap' lines, got {ln.keyword!r}", ln.number, 1)
        lhs, rhs = _split_eq(ln, 1)
        j = _name_index(L.names, lhs[0], ln.number)
        if j in out:
            raise ParseError(f"pmap({lhs[0].text}) given twice", ln.number, lhs[0].column)
        out[j] = parse_expr(rhs, L.names, L.p, ln.number, ln.end)
    return out


def subspace_text(L: HomLieAlgebra, S: Subspace) -> list[str]:
    return [format_vector(L.names, v) for v in S.basis]
