"""Executable property suite.

Each entry of ``MANIFEST`` names a mathematical claim and owns a checker.  A
checker receives the shared :class:`Corpus` and returns ``(case, passed,
detail)`` triples; every comparison is between a main-path routine and a
brute-force computation from :mod:`homlie.oracle` (or a closed form).
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Iterable

from . import fixtures as fx
from . import gfp
from . import oracle as o
from .core import (
    HomLieAlgebra,
    HomMorphism,
    Subspace,
    axiom_report,
    bracket_span,
    center,
    direct_sum,
    gl_example,
    induced_subalgebra,
    is_sub_or_ideal,
    lower_central_series,
    quotient,
)
from .envelopes import PEnvelope, check_envelope, decompose, is_minimal, minimize, subspaces
from .errors import CapExceeded, IllDefined, InvalidTarget, NotInvertibleOnPreimage, Obstruction, ValueOutsideImage
from .morphisms import BilinearForm, check_morphism, form_report, graph_check, preimage, pull_p, push_p
from .restricted import (
    PStructure,
    count_p_structures,
    direct_sum_p,
    enumerate_p_structures,
    fixed_point_check,
    is_restrictable,
    p_closure,
    p_eval,
    p_flag_check,
    p_structure_delta,
    s_terms,
    synthesize_p_structure,
    verify_p_structure,
)

log = logging.getLogger(__name__)

Case = tuple[str, bool, str]


@dataclass(frozen=True)
class SuiteCase:
    theorem: str
    case: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    cases: tuple[SuiteCase, ...]
    seconds: dict = field(default_factory=dict, compare=False)
    keys: tuple[str, ...] = tuple()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases) and not self.missing

    @property
    def missing(self) -> tuple[str, ...]:
        seen = {c.theorem for c in self.cases if c.passed}
        return tuple(k for k in (self.keys or MANIFEST) if k not in seen)

    def by_theorem(self) -> dict[str, list[SuiteCase]]:
        out: dict[str, list[SuiteCase]] = {k: [] for k in MANIFEST}
        for c in self.cases:
            out.setdefault(c.theorem, []).append(c)
        return out

    def failures(self) -> list[SuiteCase]:
        return [c for c in self.cases if not c.passed]


# --- the shared corpus -----------------------------------------------------------


@dataclass
class Corpus:
    specs: list
    seed: int = 0
    algebras: list = field(default_factory=list)  # (label, L)
    restricted: list = field(default_factory=list)  # (label, P)

    @classmethod
    def build(cls, specs=None, seed: int = 0) -> "Corpus":
        specs = o.default_corpus() if specs is None else list(specs)
        C = cls(specs, seed)
        named = [
            ("nonab2/2", fx.nonab2(2)),
            ("nonab2/3", fx.nonab2(3)),
            ("ex34/2", fx.ex34(2)),
            ("heis3/2", fx.heis3(2)),
            ("heis3/3", fx.heis3(3)),
            ("nr3/2", fx.nr3()),
            ("ab1/2", fx.ab1(2)),
            ("g2/2", fx.g2()),
            ("sl2/3", fx.sl2(3)),
        ]
        for label, L in named:
            C.add(label, L)
        C.restricted.append(("g2/2 a->b", fx.g2_p()))
        for S, tag in ((gfp.identity(2), "I"), (((0, 1), (1, 0)), "swap")):
            L, P = gl_example(2, S, 2)
            C.algebras.append((f"gl2/2 {tag}", L))
            C.restricted.append((f"gl2/2 {tag}", P))
        for spec in specs:
            for k in range(spec.count):
                L, _ = o.random_instance(spec, k)
                C.add(f"{spec.construction}/p{spec.p}/n{spec.dim}/s{spec.seed}#{k}", L)
        return C

    def add(self, label: str, L: HomLieAlgebra) -> None:
        self.algebras.append((label, L))
        cert = is_restrictable(L)
        if cert.decision:
            self.restricted.append((label, cert.witness))

    def small(self, max_elems: int = 729):
        return [(lab, L) for lab, L in self.algebras if L.p ** L.n <= max_elems]

    def small_restricted(self, max_elems: int = 729):
        return [(lab, P) for lab, P in self.restricted if P.algebra.p ** P.algebra.n <= max_elems]


# --- helpers ------------------------------------------------------------------------


def _set_span(p: int, vecs: Iterable) -> set:
    """Additive closure of a set of vectors (which over GF(p) is the span)."""
    vecs = [tuple(v) for v in vecs]
    if not vecs:
        return set()
    n = len(vecs[0])
    out = {(0,) * n}
    for v in vecs:
        if v in out:
            continue
        out = {o._add(p, w, o._scale(p, k, v)) for w in out for k in range(p)}
    return out


def _elements(L: HomLieAlgebra) -> list:
    return list(product(range(L.p), repeat=L.n))


def _brute_sub_flags(L: HomLieAlgebra, els: set) -> tuple[bool, bool]:
    alpha_ok = all(o._tw(L, x) in els for x in els)
    sub = alpha_ok and all(o._br(L, x, y) in els for x in els for y in els)
    ideal = alpha_ok and all(o._br(L, x, y) in els for x in els for y in _elements(L))
    return sub, ideal


def _all_subalgebras(L: HomLieAlgebra):
    for k in range(L.n + 1):
        for rows in subspaces(L.p, L.n, k):
            H = Subspace(L.p, L.n, rows)
            if is_sub_or_ideal(L, H).subalgebra:
                yield H


def _all_ideals(L: HomLieAlgebra):
    for H in _all_subalgebras(L):
        if is_sub_or_ideal(L, H).ideal:
            yield H


def _audit(P: PStructure) -> bool:
    return o.exhaustive_restricted_audit(P).ok


def _restricted_pairs(corpus: Corpus, count: int, seed: int, max_dim: int = 5):
    rng = random.Random(seed)
    pool = [(lab, P) for lab, P in corpus.small_restricted() if P.algebra.p == 2]
    pairs = []
    while len(pairs) < count:
        (la, Pa), (lb, Pb) = rng.choice(pool), rng.choice(pool)
        if Pa.algebra.n + Pb.algebra.n <= max_dim:
            pairs.append(((la, Pa), (lb, Pb)))
    return pairs


def morphism_triples(corpus: Corpus, count: int = 20, seed: int = 7):
    """Seeded ``(phi, P, Q)`` with ``phi`` a Hom-Lie morphism between small
    restricted algebras over GF(2) and ``P``, ``Q`` drawn from all their
    p-structures."""
    rng = random.Random(seed)
    pool = [(lab, P) for lab, P in corpus.restricted if P.algebra.p == 2 and P.algebra.n <= 3]
    out = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        (la, Pa), (lb, Pb) = rng.choice(pool), rng.choice(pool)
        L, M = Pa.algebra, Pb.algebra
        if L.p ** (L.n * M.n) > 512:
            continue
        homs = o.enumerate_morphisms(L, M)
        if not homs:
            continue
        phi = rng.choice(homs)
        P = rng.choice(enumerate_p_structures(L))
        Q = rng.choice(enumerate_p_structures(M))
        out.append((f"{la}->{lb}", phi, P, Q))
    return out


def padded_envelopes(P: PStructure, extra: int, seed: int = 0, tries: int = 200):
    """Envelopes ``L ⊕ ab(extra)`` of ``L`` whose p-map leaks into the abelian
    block; only candidates passing :func:`check_envelope` are kept."""
    L = P.algebra
    p, n = L.p, L.n
    A = fx.ab(extra, p, tuple(f"w{i + 1}" for i in range(extra)))
    G = direct_sum(L, A)
    rng = random.Random(seed)
    seen = set()
    out = []
    for _ in range(tries):
        leak = [tuple(rng.randrange(p) for _ in range(extra)) for _ in range(n)]
        shift = [tuple(rng.randrange(p) if r > c else 0 for r in range(extra)) for c in range(extra)]
        images = tuple(tuple(y) + w for y, w in zip(P.images, leak)) + tuple((0,) * n + s for s in shift)
        if images in seen:
            continue
        seen.add(images)
        Q = PStructure(G, images)
        F = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n + extra))
        E = PEnvelope(L, Q, HomMorphism(L, G, F))
        if verify_p_structure(Q, "basis").ok and check_envelope(E).ok:
            out.append(E)
    return out


def envelope_pool(corpus: Corpus) -> list:
    """Small envelopes over involutive bases: self-envelopes, ab1 in G2, and
    padded envelopes."""
    pool = []
    E = PEnvelope(fx.ab1(2), fx.g2_p(), HomMorphism(fx.ab1(2), fx.g2(), ((1,), (0,))))
    pool.append(("ab1<G2", E))
    for lab, P in corpus.small_restricted(64):
        L = P.algebra
        if not axiom_report(L).involutive or L.n > 3:
            continue
        pool.append((f"self {lab}", PEnvelope(L, P, HomMorphism.identity(L))))
        for k, Ek in enumerate(padded_envelopes(P, 1, seed=len(pool))[:2]):
            pool.append((f"pad1 {lab} #{k}", Ek))
        if L.n <= 2:
            for k, Ek in enumerate(padded_envelopes(P, 2, seed=len(pool))[:2]):
                pool.append((f"pad2 {lab} #{k}", Ek))
    return pool


# --- checkers ----------------------------------------------------------------------


def c_hom_lie_axioms(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(243):
        rep = axiom_report(L)
        jac = o.brute_hom_jacobi(L)
        mult = o.brute_is_morphism(HomMorphism(L, L, L.alpha))
        out.append((lab, rep.hom_jacobi == jac and rep.multiplicative == mult, f"jacobi={jac} mult={mult}"))
        ok = True
        for H in [Subspace.of(L, [e]) for e in L.basis()] + [center(L, "alpha"), lower_central_series(L).terms[-1]]:
            flags = is_sub_or_ideal(L, H)
            if (flags.subalgebra, flags.ideal) != _brute_sub_flags(L, set(H.elements())):
                ok = False
        out.append((f"{lab} sub/ideal flags", ok, ""))
    bad = HomLieAlgebra.from_brackets(2, ("a", "b", "c"), {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, 1, 0)})
    bad_rep = axiom_report(bad)
    out.append(("non-Jacobi triple detected", bad_rep.hom_jacobi == o.brute_hom_jacobi(bad), str(bad_rep.hom_jacobi)))
    return out


def c_involutive(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small():
        rep = axiom_report(L)
        brute = rep.multiplicative and all(o._tw(L, x, 2) == x for x in _elements(L))
        out.append((lab, rep.involutive == brute, f"involutive={brute}"))
    return out


def _brute_series(L: HomLieAlgebra) -> list[int]:
    els = _elements(L)
    cur = set(els)
    dims = [len(cur)]
    for _ in range(L.n + 2):
        nxt = _set_span(L.p, {o._br(L, x, y) for x in cur for y in els})
        if not nxt:
            nxt = {(0,) * L.n}
        dims.append(len(nxt))
        if nxt == cur:
            break
        cur = nxt
    return dims


def c_central_series(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(243):
        rep = lower_central_series(L)
        sizes = [L.p ** d for d in rep.dims]
        brute = _brute_series(L)
        ok = sizes == brute[: len(sizes)] and all(b == sizes[-1] for b in brute[len(sizes):])
        ok = ok and rep.nilpotent == (brute[-1] == 1)
        out.append((lab, ok, f"dims={rep.dims}"))
    return out


def c_fixed_point_comparator(C: Corpus) -> list[Case]:
    out = []
    P = fx.nonab2_p(2)
    g = fixed_point_check(P)
    out.append(("nonab2/2 both definitions", g.fixed_point_ok and g.structure_ok, ""))
    Q = PStructure(fx.ex34(2), ((0, 1), (0, 0)))
    g = fixed_point_check(Q)
    out.append(("ex34 h->x: weaker definition only", g.structure_ok and not g.fixed_point_ok and _audit(Q), ""))
    g = fixed_point_check(PStructure.zero(fx.ab(2, 2)))
    out.append(("abelian zero map", g.structure_ok and g.fixed_point_ok, ""))
    for lab, P in C.small_restricted(64):
        L = P.algebra
        if L.p != 2 or L.alpha != gfp.identity(L.n):
            continue
        g = fixed_point_check(P)
        out.append((f"{lab} identity twist, p=2", g.fixed_point_ok == _audit(P), ""))
    return out


def _tamper(P: PStructure) -> PStructure | None:
    L = P.algebra
    Cn = center(L, "alpha")
    for e in L.basis():
        if not Cn.contains(e):
            return PStructure(L, (gfp.vadd(L.p, P.images[0], e),) + tuple(P.images[1:]))
    return None


def c_p_structure_axioms(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted(243):
        main = verify_p_structure(P, "exhaustive").ok
        audit = _audit(P)
        out.append((lab, main and audit, f"main={main} audit={audit}"))
        T = _tamper(P)
        if T is not None:
            main_t = verify_p_structure(T, "exhaustive").ok
            audit_t = o.exhaustive_restricted_audit(T)
            out.append((f"{lab} tampered", not main_t and not audit_t.ok, f"axiom={audit_t.axiom}"))
    for lab, L in C.small(64):
        if L.p != 2:
            continue
        E = L.basis()
        ok = all(s_terms(L, x, y)[1] == L.bracket(x, y) for x in E for y in E)
        out.append((f"{lab} char-2 additivity term", ok, ""))
    for lab, L in C.small(243):
        ok = all(
            tuple(s_terms(L, x, y).terms) == tuple(o.s_terms_interpolated(L, x, y))
            for x in L.basis()
            for y in _elements(L)
        )
        out.append((f"{lab} s-terms vs interpolation", ok, ""))
    return out


def c_p_subalgebra(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted(64):
        L = P.algebra
        ok = True
        for gens in [[]] + [[e] for e in L.basis()]:
            S = p_closure(P, gens)
            if set(S.elements()) != o.brute_p_closure(P, gens) or not p_flag_check(P, S).p_subalgebra:
                ok = False
        out.append((lab, ok, ""))
    P = fx.g2_p()
    out.append(("g2 closure{a} is everything", p_closure(P, [(1, 0)]).is_whole(), ""))
    out.append(("g2 span{a} not p-closed", not p_flag_check(P, Subspace.span(2, 2, [(1, 0)])).p_subalgebra, ""))
    return out


def c_centralizer_semilinear(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small():
        a = set(center(L, "alpha").elements()) == o.brute_center(L)
        b = set(center(L, "ordinary").elements()) == o.brute_center(L, ordinary=True)
        out.append((lab, a and b, ""))
    for p in (2, 3, 5, 7):
        out.append((f"Fermat p={p}", all(pow(k, p, p) == k for k in range(p)), ""))
    return out


def c_center_is_p_ideal(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted():
        L = P.algebra
        if not axiom_report(L).regular:
            continue
        for Q in enumerate_p_structures(L)[:8]:
            cz = set(center(L, "alpha").elements())
            T = o.oracle_table(Q)
            brute = all(T[x] in cz for x in cz) and _brute_sub_flags(L, cz)[1]
            out.append((lab, p_flag_check(Q, center(L, "alpha")).p_ideal and brute, ""))
    return out


def c_frobenius_example(C: Corpus) -> list[Case]:
    out = []
    cases = [(2, gfp.identity(2)), (2, ((0, 1), (1, 0))), (3, ((1, 1), (0, 1))), (3, ((2, 0), (0, 1)))]
    for p, S in cases:
        L, P = gl_example(2, S, p)
        rep = o.exhaustive_restricted_audit(P, P.closed_form)
        agree = all(P.closed_form(x) == p_eval(P, x) for x in _elements(L))
        out.append((f"gl2 p={p} S={S}", rep.ok and agree, ""))
    L, P = gl_example(1, ((1,),), 3)
    out.append(("gl1 p=3", _audit(P) and all(p_eval(P, x) == x for x in _elements(L)), ""))
    return out


def c_nonab2_example(C: Corpus) -> list[Case]:
    out = []
    for p in (2, 3, 5):
        L = fx.nonab2(p)
        P = synthesize_p_structure(L)
        unique = count_p_structures(L) == 1 and P.images == ((1, 0), (0, 0))
        formula = all(
            p_eval(P, (lam, mu)) == (pow(lam, p, p), pow(lam, p - 1, p) * mu % p)
            for lam in range(p)
            for mu in range(p)
        )
        out.append((f"nonab2 p={p}", unique and formula and _audit(P), ""))
    # twisted variant: x^[p]_alpha = alpha^(p-1)(x^[p])
    for p in (2, 3):
        lie = fx.nonab2(p)
        from .core import yau_twist

        A = ((1, 0), (0, 0))
        L = yau_twist(lie, A)
        P0 = synthesize_p_structure(lie)
        images = tuple(gfp.mat_vec(p, gfp.mat_pow(p, A, p - 1), p_eval(P0, e)) for e in lie.basis())
        out.append((f"twisted nonab2 p={p}", _audit(PStructure(L, images)), ""))
    return out


def c_abelian_example(C: Corpus) -> list[Case]:
    out = []
    rng = random.Random(C.seed + 12)
    for p, n in ((2, 2), (2, 3), (3, 2), (5, 2)):
        for t in range(3):
            alpha = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
            L = HomLieAlgebra.from_brackets(p, o._names(n), {}, alpha)
            f = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
            g = gfp.mat_mul(p, gfp.mat_pow(p, alpha, p - 1), f)
            P = PStructure(L, tuple(gfp.column(g, j) for j in range(n)))
            out.append((f"abelian p={p} n={n} #{t}", _audit(P), ""))
    return out


def c_difference_lemma(C: Corpus) -> list[Case]:
    out = []
    rng = random.Random(C.seed + 21)
    for lab, P in C.small_restricted(64):
        L = P.algebra
        try:
            all_p = enumerate_p_structures(L, cap=64)
        except CapExceeded:
            continue
        pairs = [(a, b) for a in all_p for b in all_p]
        if len(pairs) > 16:
            pairs = rng.sample(pairs, 16)
        ok = all(p_structure_delta(a, b).valid for a, b in pairs)
        # the converse direction: P + (linear map into C(L)) is again a p-structure
        Cn = list(center(L, "alpha").elements())
        shift = tuple(gfp.vadd(L.p, y, rng.choice(Cn)) for y in P.images)
        ok = ok and _audit(PStructure(L, shift))
        out.append((lab, ok, f"{len(all_p)} structures"))
    return out


def c_uniqueness(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(27):
        if L.p ** (L.n * L.n) > 2 ** 12:
            continue
        brute = o.brute_p_structures(L)
        cnt = count_p_structures(L)
        law = len(brute) == cnt and (cnt == 0 or cnt == L.p ** (center(L, "alpha").dim * L.n))
        zero_center = center(L, "alpha").is_zero()
        law = law and (not zero_center or cnt <= 1)
        out.append((lab, law and all(_audit(Q) for Q in brute[:16]), f"count={cnt}"))
    for lab, P in C.small_restricted(81):
        L = P.algebra
        if L.n > 4:
            continue
        ok = all(
            p_eval(P, x, order) == p_eval(P, x)
            for order in permutations(range(L.n))
            for x in _elements(L)
        )
        out.append((f"{lab} order independence", ok, ""))
    return out


def c_basis_extension(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted(64):
        L = P.algebra
        try:
            structures = enumerate_p_structures(L, cap=16)
        except CapExceeded:
            structures = [P]
        ok = True
        for Q in structures:
            R = synthesize_p_structure(L, dict(enumerate(Q.images)))
            ok = ok and R.images == Q.images and _audit(R)
        out.append((lab, ok, ""))
        Cn = center(L, "alpha")
        bad = next((e for e in L.basis() if not Cn.contains(e)), None)
        if bad is not None:
            try:
                synthesize_p_structure(L, {0: gfp.vadd(L.p, P.images[0], bad)})
                out.append((f"{lab} invalid target", False, "accepted"))
            except InvalidTarget:
                out.append((f"{lab} invalid target", True, ""))
    return out


def c_direct_sum_p(C: Corpus) -> list[Case]:
    out = []
    for (la, Pa), (lb, Pb) in _restricted_pairs(C, 10, C.seed + 24):
        S = direct_sum_p(Pa, Pb)
        out.append((f"{la} + {lb}", _audit(S) and axiom_report(S.algebra).valid, ""))
    return out


def c_morphism_defs(C: Corpus) -> list[Case]:
    out = []
    for (lab, phi, P, Q) in morphism_triples(C, 10, C.seed + 25):
        L, M = phi.source, phi.target
        TP, TQ = o.oracle_table(P), o.oracle_table(Q)
        brute = all(phi(TP[x]) == TQ[phi(x)] for x in _elements(L))
        rep = check_morphism(phi, (P, Q), exhaustive=True)
        out.append((lab, rep.morphism == o.brute_is_morphism(phi) and rep.restricted == brute, f"restricted={brute}"))
    L, M = fx.heis3(2), fx.nonab2(2)
    rng = random.Random(C.seed + 26)
    for t in range(10):
        F = tuple(tuple(rng.randrange(2) for _ in range(L.n)) for _ in range(M.n))
        f = HomMorphism(L, M, F)
        out.append((f"random matrix #{t}", check_morphism(f).morphism == o.brute_is_morphism(f), ""))
    return out


def c_graph_criterion(C: Corpus) -> list[Case]:
    return [
        (lab, graph_check(phi, P, Q).agree, f"restricted={graph_check(phi, P, Q).restricted_morphism}")
        for lab, phi, P, Q in morphism_triples(C, 20, C.seed + 27)
    ]


def _brute_push_defined(f: HomMorphism, P: PStructure) -> bool:
    T = o.oracle_table(P)
    seen: dict = {}
    for x in _elements(f.source):
        k = f(x)
        v = f(T[x])
        if seen.setdefault(k, v) != v:
            return False
    return True


def c_push_forward(C: Corpus) -> list[Case]:
    out = []
    todo = []
    for lab, P in C.small_restricted(64):
        L = P.algebra
        for I in list(_all_ideals(L))[:6]:
            Q, proj = quotient(L, I)
            todo.append((f"{lab} / {I.basis}", proj, P))
    for lab, phi, P, Q in morphism_triples(C, 10, C.seed + 28):
        todo.append((lab, phi, P))
    for lab, f, P in todo:
        defined = _brute_push_defined(f, P)
        try:
            R, incl = push_p(f, P)
            out.append((lab, defined and _audit(R), "pushed"))
        except IllDefined:
            out.append((lab, not defined, "ill-defined"))
    G = fx.g2()
    _, proj = quotient(G, Subspace.span(2, 2, [(1, 1)]))
    try:
        push_p(proj, fx.g2_p())
        out.append(("g2 / span{a+b}", False, "no error"))
    except IllDefined as exc:
        out.append(("g2 / span{a+b}", True, str(exc.witness)))
    return out


def c_pull_back(C: Corpus) -> list[Case]:
    out = []
    for lab, phi, P, Q in morphism_triples(C, 12, C.seed + 29):
        M = phi.target
        for g in _all_subalgebras(M):
            g_alg, _ = induced_subalgebra(M, g)
            cert = is_restrictable(g_alg)
            if not cert.decision:
                continue
            pre = preimage(phi, g)
            pre_brute = {x for x in _elements(phi.source) if g.contains(phi(x))}
            is_sub = is_sub_or_ideal(phi.source, pre).subalgebra
            try:
                R, incl = pull_p(phi, g, cert.witness)
                ok = set(pre.elements()) == pre_brute and is_sub and _audit(R)
                out.append((f"{lab} g={g.basis}", ok, "pulled"))
            except (NotInvertibleOnPreimage, ValueOutsideImage) as exc:
                out.append((f"{lab} g={g.basis}", set(pre.elements()) == pre_brute and is_sub, type(exc).__name__))
    return out


def c_restrictable_examples(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.algebras:
        if L.is_abelian():
            out.append((f"abelian {lab}", is_restrictable(L).decision, ""))
        s = lower_central_series(L)
        if s.nilpotent and s.nilpotency_class is not None and s.nilpotency_class <= L.p + 1:
            out.append((f"nilpotent {lab}", is_restrictable(L).decision, f"class={s.nilpotency_class}"))
        if L.n < L.p + 2 and s.nilpotent:
            out.append((f"small nilpotent {lab}", is_restrictable(L).decision, ""))
    out.append(("ex34", is_restrictable(fx.ex34(2)).decision and o.brute_restrictable(fx.ex34(2)).decision, ""))
    return out


def c_restrictable_iff_restricted(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small():
        cert = is_restrictable(L)
        brute = o.brute_restrictable(L)
        ok = cert.decision == brute.decision and (not cert.decision or verify_p_structure(cert.witness, "basis").ok)
        out.append((lab, ok, f"restrictable={brute.decision}"))
    agree = all(is_restrictable(L).decision == o.brute_restrictable(L).decision for L in o.all_hom_lie_algebras(2, 2))
    out.append(("all 2-dim over GF(2)", agree, ""))
    return out


def c_surjective_image(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted(243):
        L = P.algebra
        for I in list(_all_ideals(L))[:8]:
            Q, proj = quotient(L, I)
            out.append((f"{lab} / {I.basis}", proj.is_surjective() and o.brute_restrictable(Q).decision, ""))
    return out


def c_direct_sum_restrictable(C: Corpus) -> list[Case]:
    out = []
    pool = [(lab, L) for lab, L in C.small(27) if L.p == 2]
    rng = random.Random(C.seed + 37)
    nr3 = fx.nr3()
    pairs = [(("nr3", nr3), rng.choice(pool)) for _ in range(3)] + [(rng.choice(pool), rng.choice(pool)) for _ in range(8)]
    for (la, A), (lb, B) in pairs:
        S = direct_sum(A, B)
        both = is_restrictable(A).decision and is_restrictable(B).decision
        out.append((f"{la} + {lb}", is_restrictable(S).decision == both == o.brute_restrictable(S).decision, f"{both}"))
    return out


def c_commuting_ideals_sum(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(64):
        ideals = [I for I in _all_ideals(L) if not I.is_zero() and not I.is_whole()]
        found = 0
        for I1, I2 in combinations(ideals, 2):
            if not (I1 + I2).is_whole() or not bracket_span(L, I1, I2).is_zero():
                continue
            a, _ = induced_subalgebra(L, I1)
            b, _ = induced_subalgebra(L, I2)
            if is_restrictable(a).decision and is_restrictable(b).decision:
                found += 1
                out.append((f"{lab} {I1.basis}+{I2.basis}", o.brute_restrictable(L).decision, ""))
                if found >= 3:
                    break
    return out


def c_central_quotient(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(243):
        if not axiom_report(L).regular:
            continue
        Cn = center(L, "alpha")
        D = bracket_span(L, Subspace.whole(L.p, L.n), Subspace.whole(L.p, L.n))
        if not (D + Cn).is_whole():
            continue
        for k in range(Cn.dim + 1):
            for w in subspaces(L.p, Cn.dim, k):
                I = Subspace.span(L.p, L.n, (Cn.from_coordinates(c) for c in w))
                if not is_sub_or_ideal(L, I).ideal:
                    continue
                Q, _ = quotient(L, I)
                out.append((f"{lab} / {I.basis}", o.brute_restrictable(L).decision == o.brute_restrictable(Q).decision, ""))
    return out


def _prop_3_10_condition(L: HomLieAlgebra, H: Subspace) -> bool:
    keys = {o._ad_alpha_key(L, y) for y in H.elements()}
    return all(o._chain_key(L, x) in keys for x in H.elements())


def c_p_subalgebra_criterion(C: Corpus) -> list[Case]:
    out = []
    for lab, P in C.small_restricted(27):
        L = P.algebra
        try:
            structures = enumerate_p_structures(L, cap=64)
        except CapExceeded:
            continue
        for H in _all_subalgebras(L):
            cond = _prop_3_10_condition(L, H)
            some = any(p_flag_check(Q, H).p_subalgebra for Q in structures)
            out.append((f"{lab} H={H.basis}", cond == some, f"cond={cond}"))
    L = fx.nonab2(2)
    H = Subspace.span(2, 2, [(1, 0)])
    out.append(("nonab2 span{h}", _prop_3_10_condition(L, H) and p_flag_check(fx.nonab2_p(2), H).p_subalgebra, ""))
    # gl3 over GF(2): x = E12 + E23 squares to E13, outside span{x} + centre
    L, _ = gl_example(3, gfp.identity(3), 2)
    structures = enumerate_p_structures(L, cap=1024)
    for label, x in (("E12+E23", (0, 1, 0, 0, 0, 1, 0, 0, 0)), ("E12", (0, 1, 0, 0, 0, 0, 0, 0, 0))):
        H = Subspace.of(L, [x])
        cond = _prop_3_10_condition(L, H)
        some = any(p_flag_check(Q, H).p_subalgebra for Q in structures)
        out.append((f"gl3/2 span{{{label}}}", cond == some, f"cond={cond}"))
    return out


def c_associative_forms(C: Corpus) -> list[Case]:
    out = []
    for lab, L in C.small(27):
        n, p = L.n, L.p
        slots = [(i, j) for i in range(n) for j in range(i, n)]
        if p ** len(slots) > 729:
            continue
        els = _elements(L)
        hooks = 0
        ok = True
        for vals in product(range(p), repeat=len(slots)):
            G = [[0] * n for _ in range(n)]
            for (i, j), v in zip(slots, vals):
                G[i][j] = G[j][i] = v
            form = BilinearForm(L, tuple(map(tuple, G)))
            rep = form_report(L, form)
            E = L.basis()
            brute_assoc = all(
                form(x, o._br(L, y, z)) == form(o._br(L, x, o._tw(L, y, p - 1)), z) for x in E for y in E for z in E
            )
            ok = ok and rep.associative == brute_assoc and rep.consistent
            hooks += rep.hook_triggered
        out.append((lab, ok, f"hook triggered {hooks} times"))
    return out


def c_envelope_definition(C: Corpus) -> list[Case]:
    out = []
    for lab, E in envelope_pool(C):
        rep = check_envelope(E)
        closure = o.brute_p_closure(E.P, E.embedded_base().basis)
        brute = o.brute_is_morphism(E.i) and E.i.is_injective() and len(closure) == E.G.p ** E.G.n
        out.append((lab, rep.ok == brute, ""))
    P = direct_sum_p(fx.nonab2_p(2), PStructure.zero(fx.ab1(2)))
    L = fx.nonab2(2)
    E = PEnvelope(L, P, HomMorphism(L, P.algebra, ((1, 0), (0, 1), (0, 0))))
    out.append(("nonab2 in nonab2+ab1", not check_envelope(E).ok, ""))
    return out


def c_envelope_ideal_lemma(C: Corpus) -> list[Case]:
    out = []
    for lab, E in envelope_pool(C):
        try:
            M = minimize(E)
            ok = check_envelope(M).ok and is_minimal(M).minimal and M.G.n <= E.G.n
            out.append((lab, ok, f"dim {E.G.n} -> {M.G.n}"))
        except Obstruction as exc:
            out.append((lab, True, f"obstruction: {exc}"))
    return out


def c_morphism_between_envelopes(C: Corpus) -> list[Case]:
    """For envelopes ``G, G'`` of one base and a morphism ``f`` with ``f∘i = i'``,
    ``G'`` splits as ``f(G) ⊕ J`` with ``J`` an ideal inside ``C(G')``."""
    out = []
    by_base: dict = {}
    for lab, E in envelope_pool(C):
        by_base.setdefault(E.base, []).append((lab, E))
    for base, envs in by_base.items():
        for (la, E1), (lb, E2) in product(envs, repeat=2):
            if E1.G.p ** (E1.G.n * E2.G.n) > 512:
                continue
            for f in o.enumerate_morphisms(E1.G, E2.G):
                if E1.i.then(f).F != E2.i.F:
                    continue
                img = f.image()
                C2 = center(E2.G, "alpha")
                ok = False
                for k in range(C2.dim + 1):
                    for w in subspaces(E2.G.p, C2.dim, k):
                        J = Subspace.span(C2.p, C2.n, (C2.from_coordinates(c) for c in w))
                        if (J & img).is_zero() and (J + img).is_whole() and is_sub_or_ideal(E2.G, J).ideal:
                            ok = True
                out.append((f"{la} -> {lb}", ok, ""))
                break
    return out


def c_envelope_decomposition(C: Corpus) -> list[Case]:
    out = []
    for lab, E in envelope_pool(C):
        D = decompose(E)
        G = E.G
        Cg = center(G, "alpha")
        flags = is_sub_or_ideal(G, D.J)
        ok = (
            (D.H_subspace & D.J).is_zero()
            and (D.H_subspace + D.J).is_whole()
            and flags.ideal
            and D.J <= Cg
            and E.embedded_base() <= D.H_subspace
            and check_envelope(D.H).ok
            and is_minimal(D.H).minimal
        )
        out.append((lab, ok, f"H dim {D.H_subspace.dim}, J dim {D.J.dim}"))
    return out


def c_minimality_criterion(C: Corpus) -> list[Case]:
    out = []
    for lab, E in envelope_pool(C):
        crit = is_minimal(E).minimal
        try:
            smallest = minimize(E).G.n
        except Obstruction:
            continue
        out.append((lab, crit == (E.G.n == smallest), f"dim {E.G.n}, minimal dim {smallest}"))
    return out


def c_minimal_envelopes_isomorphic(C: Corpus) -> list[Case]:
    out = []
    by_base: dict = {}
    for lab, E in envelope_pool(C):
        if E.G.p != 2:
            continue
        try:
            M = minimize(E)
        except Obstruction:
            continue
        if M.G.n <= 3:
            by_base.setdefault(E.base, []).append((lab, M))
    for base, mins in by_base.items():
        la, M0 = mins[0]
        for lb, M1 in mins[1:]:
            iso = o.find_isomorphism(M0.G, M1.G)
            out.append((f"{la} ~ {lb}", iso is not None, ""))
    return out


MANIFEST: dict[str, tuple[str, Callable[[Corpus], list[Case]]]] = {
    "hom_lie_axioms": ("Hom-Jacobi, multiplicativity, subalgebras and ideals", c_hom_lie_axioms),
    "involutive": ("involutive twists", c_involutive),
    "central_series": ("lower central series", c_central_series),
    "fixed_point_comparator": ("p-mappings on the fixed-point space versus p-structures", c_fixed_point_comparator),
    "p_structure_axioms": ("the three p-structure axioms and the char-2 forms", c_p_structure_axioms),
    "p_subalgebra": ("p-subalgebras and the generated p-subalgebra", c_p_subalgebra),
    "centralizer_semilinear": ("alpha^(p-1)-centralizers and p-semilinear maps", c_centralizer_semilinear),
    "center_is_p_ideal": ("C(L) is a p-ideal for regular L", c_center_is_p_ideal),
    "frobenius_example": ("twisted matrix algebras with the Frobenius map", c_frobenius_example),
    "nonab2_example": ("the unique p-map on the 2-dim nonabelian algebra", c_nonab2_example),
    "abelian_example": ("abelian algebras with alpha^(p-1) f", c_abelian_example),
    "difference_lemma": ("differences of p-structures are semilinear into C(L)", c_difference_lemma),
    "uniqueness": ("uniqueness and counting of p-structures", c_uniqueness),
    "basis_extension": ("extension of basis images to a p-structure", c_basis_extension),
    "direct_sum_p": ("direct sums of restricted algebras", c_direct_sum_p),
    "morphism_defs": ("(restricted) morphisms", c_morphism_defs),
    "graph_criterion": ("graph criterion for restricted morphisms", c_graph_criterion),
    "push_forward": ("pushing a p-structure to the image", c_push_forward),
    "pull_back": ("pulling a p-structure back to a preimage", c_pull_back),
    "restrictable_examples": ("abelian, small nilpotent and twisted examples are restrictable", c_restrictable_examples),
    "restrictable_iff_restricted": ("restrictable iff a p-structure exists", c_restrictable_iff_restricted),
    "surjective_image": ("surjective images of restrictable algebras", c_surjective_image),
    "direct_sum_restrictable": ("direct sums are restrictable iff both summands are", c_direct_sum_restrictable),
    "commuting_ideals_sum": ("sums of commuting restrictable ideals", c_commuting_ideals_sum),
    "central_quotient": ("quotients by central ideals when L = [L,L] + C(L)", c_central_quotient),
    "p_subalgebra_criterion": ("ad-criterion for p-subalgebras", c_p_subalgebra_criterion),
    "associative_forms": ("associative nondegenerate forms", c_associative_forms),
    "envelope_definition": ("p-envelopes", c_envelope_definition),
    "envelope_ideal_lemma": ("central ideals of envelopes and minimization", c_envelope_ideal_lemma),
    "morphism_between_envelopes": ("splitting along morphisms of envelopes", c_morphism_between_envelopes),
    "envelope_decomposition": ("G = H + J with J central", c_envelope_decomposition),
    "minimality_criterion": ("minimal iff C(G) inside i(L)", c_minimality_criterion),
    "minimal_envelopes_isomorphic": ("minimal envelopes are isomorphic", c_minimal_envelopes_isomorphic),
}


def run(corpus=None, only: Iterable[str] | None = None, seed: int = 0) -> SuiteReport:
    C = corpus if isinstance(corpus, Corpus) else Corpus.build(corpus, seed)
    keys = list(MANIFEST) if only is None else list(only)
    cases = []
    seconds = {}
    for key in keys:
        _, fn = MANIFEST[key]
        t0 = time.perf_counter()
        try:
            results = fn(C)
        except Exception as exc:  # a crash is a finding, not a suite abort
            log.exception("checker %s crashed", key)
            results = [("crashed", False, f"{type(exc).__name__}: {exc}")]
        seconds[key] = time.perf_counter() - t0
        cases.extend(SuiteCase(key, case, bool(ok), detail) for case, ok, detail in results)
    return SuiteReport(tuple(cases), seconds, tuple(keys))
