"""Morphisms, graphs, transport of p-structures, and invariant forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from . import gfp
from .core import (
    HomLieAlgebra,
    HomMorphism,
    Subspace,
    center,
    induced_subalgebra,
    is_sub_or_ideal,
)
from .errors import (
    IllDefined,
    NotAMorphism,
    NotInvertibleOnPreimage,
    PreconditionError,
    ValueOutsideImage,
)
from .gfp import Mat, Vec
from .restricted import (
    PStructure,
    direct_sum_p,
    is_restrictable,
    p_eval,
    p_flag_check,
    verify_p_structure,
)

__all__ = [
    "HomMorphism",
    "BilinearForm",
    "MorphismReport",
    "check_morphism",
    "graph_check",
    "push_p",
    "pull_p",
    "form_report",
]


@dataclass(frozen=True)
class MorphismReport:
    commutes_with_twist: bool
    preserves_bracket: bool
    restricted: bool | None = None
    restricted_exhaustive: bool = False
    witness: tuple | None = None

    @property
    def morphism(self) -> bool:
        return self.commutes_with_twist and self.preserves_bracket


def check_morphism(
    f: HomMorphism,
    restricted_with: tuple[PStructure, PStructure] | None = None,
    exhaustive: bool | None = None,
) -> MorphismReport:
    """Twist compatibility and bracket preservation on basis pairs; with
    p-structures also ``f(x^[p]) = f(x)^[p]`` (on every element when the
    source is small enough, otherwise on the basis)."""
    L, M = f.source, f.target
    p = f.p
    witness = None
    twist_ok = True
    for e in L.basis():
        if f(L.twist(e)) != M.twist(f(e)):
            twist_ok, witness = False, ("twist", e)
            break
    bracket_ok = True
    E = L.basis()
    for i, j in product(range(L.n), repeat=2):
        if f(L.c[i][j]) != M.bracket(f(E[i]), f(E[j])):
            bracket_ok = False
            witness = witness or ("bracket", E[i], E[j])
            break
    if restricted_with is None:
        return MorphismReport(twist_ok, bracket_ok, witness=witness)

    P, Q = restricted_with
    if P.algebra != L or Q.algebra != M:
        raise PreconditionError("p-structures do not match the morphism's source and target")
    if exhaustive is None:
        exhaustive = p ** L.n <= gfp.LIMITS.budget
    points = L.elements() if exhaustive else iter(E)
    restricted = twist_ok and bracket_ok
    for x in points:
        if f(p_eval(P, x)) != p_eval(Q, f(x)):
            restricted = False
            witness = witness or ("p-map", x)
            break
    return MorphismReport(twist_ok, bracket_ok, restricted, exhaustive, witness)


@dataclass(frozen=True)
class GraphReport:
    graph: Subspace
    p_subalgebra: bool
    restricted_morphism: bool

    @property
    def agree(self) -> bool:
        return self.p_subalgebra == self.restricted_morphism


def graph_check(phi: HomMorphism, P: PStructure, Q: PStructure) -> GraphReport:
    """Compare "graph is a p-subalgebra of the sum" with "phi is restricted"."""
    S = direct_sum_p(P, Q)
    L = phi.source
    graph = Subspace.of(S.algebra, (e + phi(e) for e in L.basis()))
    flags = p_flag_check(S, graph)
    rep = check_morphism(phi, (P, Q), exhaustive=True)
    return GraphReport(graph, flags.p_subalgebra, bool(rep.restricted))


def _require_morphism(f: HomMorphism) -> None:
    rep = check_morphism(f)
    if not rep.morphism:
        raise NotAMorphism(f"map is not a Hom-Lie morphism: {rep.witness}")


def push_p(f: HomMorphism, P: PStructure) -> tuple[PStructure, HomMorphism]:
    """Transport ``P`` to the image ``f(L)`` by ``f(x) -> f(x^[p])``.

    The rule is only a function when ``f(x^[p])`` does not depend on the
    representative ``x``; every class of every kernel coset is checked and
    :class:`IllDefined` carries the first colliding pair.  Returns the induced
    p-structure on the image algebra and the inclusion of the image.
    """
    _require_morphism(f)
    L = P.algebra
    if L != f.source:
        raise PreconditionError("p-structure is not on the morphism's source")
    K = f.kernel()
    if not K.is_zero():
        gfp.check_budget(L.p ** L.n, "well-definedness check")
        ker = list(K.elements())
        for x in L.elements():
            fx = f(p_eval(P, x))
            for k in ker:
                if any(k):
                    x2 = gfp.vadd(L.p, x, k)
                    if f(p_eval(P, x2)) != fx:
                        raise IllDefined(x, x2)
    image = f.image()
    sub, incl = induced_subalgebra(f.target, image)
    images = []
    for b in image.basis:
        sol = gfp.solve_affine(L.p, f.F, b, L.n)
        images.append(image.coordinates(f(p_eval(P, sol.particular))))
    return PStructure(sub, tuple(images)), incl


def preimage(f: HomMorphism, g: Subspace) -> Subspace:
    """``{x : f(x) in g}``."""
    p = f.p
    keep = g.complement_indices()
    rows = []
    for j in keep:
        # coordinate j of (f(x) reduced modulo g)
        rows.append(tuple(g.reduce(f(e))[j] for e in f.source.basis()))
    return Subspace(p, f.source.n, gfp.nullspace(p, rows, f.source.n))


def pull_p(f: HomMorphism, g: Subspace, Q: PStructure) -> tuple[PStructure, HomMorphism]:
    """Pull a p-structure on the subalgebra ``g`` of the target back to
    ``f^-1(g)`` by ``x -> f^-1(f(x)^[p])``.

    ``Q`` must live on the induced algebra of ``g``.  ``f`` has to be
    injective on the preimage for the inverse to be single valued.
    """
    _require_morphism(f)
    M = f.target
    g_alg, g_incl = induced_subalgebra(M, g)
    if Q.algebra != g_alg:
        raise PreconditionError("Q must be defined on the induced algebra of g")
    pre = preimage(f, g)
    if not (f.kernel() & pre).is_zero():
        raise NotInvertibleOnPreimage("f has a nonzero kernel inside the preimage")
    pre_alg, pre_incl = induced_subalgebra(f.source, pre)
    f_pre = [f(b) for b in pre.basis]
    reached = Subspace.span(f.p, M.n, f_pre)
    images = []
    for b in pre.basis:
        u = g.coordinates(f(b))
        val = g_incl(p_eval(Q, u))
        if not reached.contains(val):
            raise ValueOutsideImage(f"{M.format(val)} is not in f(f^-1(g))")
        coords = gfp.solve_affine(f.p, gfp.from_columns(f_pre, M.n), val, pre.dim).particular
        images.append(coords)
    return PStructure(pre_alg, tuple(images)), pre_incl


# --- bilinear forms ----------------------------------------------------------

@dataclass(frozen=True)
class BilinearForm:
    algebra: HomLieAlgebra
    gram: Mat

    def __post_init__(self) -> None:
        L = self.algebra
        G = gfp.mat(L.p, self.gram) if L.n else ()
        if L.n and gfp.shape(G) != (L.n, L.n):
            raise PreconditionError(f"form must be {L.n}x{L.n}")
        if G != gfp.transpose(G):
            raise PreconditionError("form must be symmetric")
        object.__setattr__(self, "gram", G)

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        p = self.algebra.p
        return sum(a * b for a, b in zip(x, gfp.mat_vec(p, self.gram, y))) % p


@dataclass(frozen=True)
class FormReport:
    associative: bool
    nondegenerate: bool
    center_trivial: bool
    hook_triggered: bool
    restrictable: bool | None
    witness: tuple | None = None

    @property
    def consistent(self) -> bool:
        """False only if an associative nondegenerate form with trivial center
        sits on a non-restrictable algebra."""
        return not self.hook_triggered or bool(self.restrictable)


def form_report(L: HomLieAlgebra, form: BilinearForm, P: PStructure | None = None) -> FormReport:
    """``form(x, [y, z]) = form([x, alpha^(p-1) y], z)`` on basis triples,
    nondegeneracy by rank, and the restrictability cross-check."""
    if form.algebra != L:
        raise PreconditionError("form is defined on a different algebra")
    if P is not None and P.algebra != L:
        raise PreconditionError("p-structure is defined on a different algebra")
    E = L.basis()
    witness = None
    associative = True
    for x, y, z in product(E, repeat=3):
        lhs = form(x, L.bracket(y, z))
        rhs = form(L.bracket(x, L.twist(y, L.p - 1)), z)
        if lhs != rhs:
            associative, witness = False, (x, y, z)
            break
    nondegenerate = gfp.rank(L.p, form.gram) == L.n
    center_trivial = center(L, "alpha").is_zero()
    hook = associative and nondegenerate and center_trivial
    restrictable = is_restrictable(L).decision if hook else None
    return FormReport(associative, nondegenerate, center_trivial, hook, restrictable, witness)
