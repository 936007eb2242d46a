"""Finite-dimensional p-envelopes: verification, minimality, minimization
by central quotients, and splitting off a central ideal."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from . import gfp
from .core import (
    HomLieAlgebra,
    HomMorphism,
    Subspace,
    axiom_report,
    center,
    induced_subalgebra,
    is_sub_or_ideal,
    quotient,
)
from .errors import CapExceeded, NoSolution, NotFound, Obstruction, PreconditionError
from .morphisms import check_morphism
from .restricted import (
    PStructure,
    enumerate_p_structures,
    p_closure,
    restrict_p_structure,
    synthesize_p_structure,
    verify_p_structure,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PEnvelope:
    base: HomLieAlgebra
    P: PStructure
    i: HomMorphism

    @property
    def G(self) -> HomLieAlgebra:
        return self.P.algebra

    def embedded_base(self) -> Subspace:
        return self.i.image()


@dataclass(frozen=True)
class EnvelopeReport:
    morphism: bool
    injective: bool
    p_structure_ok: bool
    closure: Subspace

    @property
    def generates(self) -> bool:
        return self.closure.is_whole()

    @property
    def ok(self) -> bool:
        return self.morphism and self.injective and self.p_structure_ok and self.generates


def check_envelope(E: PEnvelope) -> EnvelopeReport:
    if E.i.source != E.base or E.i.target != E.G:
        raise PreconditionError("embedding does not go from the base to the envelope algebra")
    morphism = check_morphism(E.i).morphism
    injective = E.i.is_injective()
    p_ok = verify_p_structure(E.P, "basis").ok
    closure = p_closure(E.P, E.embedded_base().basis)
    return EnvelopeReport(morphism, injective, p_ok, closure)


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    base_involutive: bool
    center: Subspace

    @property
    def hypothesis_met(self) -> bool:
        return self.base_involutive


def is_minimal(E: PEnvelope) -> MinimalityReport:
    """``C(G) ⊆ i(L)``.  The criterion is only known to characterize minimality
    for involutive bases; ``base_involutive`` flags that hypothesis."""
    if not check_envelope(E).ok:
        raise PreconditionError("not a p-envelope")
    C = center(E.G, "alpha")
    involutive = axiom_report(E.base).involutive
    if not involutive:
        log.info("minimality criterion applied to a non-involutive base")
    return MinimalityReport(C <= E.embedded_base(), involutive, C)


def _alpha_closure(G: HomLieAlgebra, vectors) -> Subspace:
    V = Subspace.of(G, vectors)
    while True:
        W = V + Subspace.of(G, (G.twist(v) for v in V.basis))
        if W == V:
            return V
        V = W


def _central_complement(G: HomLieAlgebra, iL: Subspace) -> Subspace:
    """A maximal alpha-stable subspace of the ordinary center meeting i(L) trivially."""
    Z = center(G, "ordinary")
    V = Subspace(G.p, G.n)
    candidates = list(Z.basis)
    if G.p ** Z.dim <= gfp.LIMITS.budget:
        candidates += list(Z.elements())
    for v in candidates:
        if V.contains(v):
            continue
        W = _alpha_closure(G, V.basis + (v,))
        if (W & iL).is_zero():
            V = W
    return V


def _regenerate(E: PEnvelope, V: Subspace) -> PEnvelope:
    """Quotient by the central ideal V, re-choose a p-structure, and keep the
    p-subalgebra generated by the image of the base."""
    G = E.G
    Q, proj = quotient(G, V)
    try:
        P = synthesize_p_structure(Q)
    except NoSolution as exc:
        raise Obstruction(f"quotient by {V.basis} is not restrictable", E) from exc
    i_q = E.i.then(proj)
    H = p_closure(P, i_q.image().basis)
    if H.is_whole():
        return PEnvelope(E.base, P, i_q)
    P_H, incl = restrict_p_structure(P, H)
    F = gfp.from_columns([H.coordinates(i_q(e)) for e in E.base.basis()], H.dim)
    return PEnvelope(E.base, P_H, HomMorphism(E.base, P_H.algebra, F))


def minimize(E: PEnvelope, max_rounds: int | None = None) -> PEnvelope:
    """Repeatedly divide out central alpha-stable ideals missing i(L).

    Raises :class:`Obstruction` when no such ideal remains but
    ``C(G) ⊆ i(L)`` still fails.
    """
    if not check_envelope(E).ok:
        raise PreconditionError("not a p-envelope")
    rounds = 0
    while True:
        V = _central_complement(E.G, E.embedded_base())
        if V.is_zero():
            break
        E = _regenerate(E, V)
        rounds += 1
        if max_rounds is not None and rounds >= max_rounds:
            break
    if not (center(E.G, "alpha") <= E.embedded_base()):
        raise Obstruction("no alpha-stable central ideal avoids i(L), yet C(G) is not inside i(L)", E)
    return E


# --- decomposition -------------------------------------------------------------

def subspaces(p: int, m: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every k-dimensional subspace of GF(p)^m, as reduced echelon bases."""
    for pivots in combinations(range(m), k):
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivots]
        for values in product(range(p), repeat=len(slots)):
            rows = [[0] * m for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), a in zip(slots, values):
                rows[r][c] = a
            yield tuple(tuple(r) for r in rows)


def _lift(S: Subspace, coords_basis) -> Subspace:
    return Subspace.span(S.p, S.n, (S.from_coordinates(c) for c in coords_basis))


@dataclass(frozen=True)
class Decomposition:
    H: PEnvelope
    H_subspace: Subspace
    J: Subspace
    inclusion: HomMorphism


def _as_envelope(E: PEnvelope, H: Subspace, max_structures: int) -> PEnvelope | None:
    G = E.G
    H_alg, incl = induced_subalgebra(G, H)
    F = gfp.from_columns([H.coordinates(E.i(e)) for e in E.base.basis()], H.dim)
    i_H = HomMorphism(E.base, H_alg, F)
    try:
        candidates = enumerate_p_structures(H_alg, cap=max_structures)
    except CapExceeded:
        candidates = [synthesize_p_structure(H_alg)]
    for P_H in candidates:
        cand = PEnvelope(E.base, P_H, i_H)
        if check_envelope(cand).ok and center(H_alg, "alpha") <= cand.embedded_base():
            return cand
    return None


def decompose(E: PEnvelope, bound: int | None = None, max_structures: int = 256) -> Decomposition:
    """``G = H ⊕ J`` with ``J`` a Hom-Lie ideal inside ``C(G)`` and ``H ⊇ i(L)`` a
    minimal envelope carrying a freshly chosen p-structure.

    The search runs over subalgebras ``H ⊇ i(L)`` by increasing dimension; the
    canonical complement of ``H`` is tried first as ``J``.
    """
    if not check_envelope(E).ok:
        raise PreconditionError("not a p-envelope")
    G = E.G
    p, n = G.p, G.n
    iL = E.embedded_base()
    C = center(G, "alpha")
    comp = iL.complement()
    bound = gfp.LIMITS.budget if bound is None else bound
    tried = 0
    for d in range(iL.dim, n + 1):
        for w in subspaces(p, comp.dim, d - iL.dim):
            tried += 1
            if tried > bound:
                raise NotFound("search bound exhausted", bound)
            H = iL + _lift(comp, w)
            if not is_sub_or_ideal(G, H).subalgebra:
                continue
            J = _find_central_complement(G, H, C, n - d)
            if J is None:
                continue
            env = _as_envelope(E, H, max_structures)
            if env is None:
                continue
            _, incl = induced_subalgebra(G, H)
            return Decomposition(env, H, J, incl)
    raise NotFound("no decomposition found", bound)


def _find_central_complement(G: HomLieAlgebra, H: Subspace, C: Subspace, k: int) -> Subspace | None:
    def good(J: Subspace) -> bool:
        return (
            J.dim == k
            and (J & H).is_zero()
            and J <= C
            and is_sub_or_ideal(G, J).ideal
        )

    canonical = H.complement()
    if good(canonical):
        return canonical
    if k > C.dim:
        return None
    for w in subspaces(G.p, C.dim, k):
        J = _lift(C, w)
        if good(J):
            return J
    return None
