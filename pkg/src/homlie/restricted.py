"""p-structures on multiplicative Hom-Lie algebras.

A p-structure is stored by the images ``y_j`` of the basis vectors; its value
on an arbitrary element is reconstructed with the scalar rule and the
additivity correction terms ``s_i`` (see :func:`p_eval`).  The linear system
``ad(y)·alpha^(p-1) = ad(alpha^(p-1) e_j) ··· ad(e_j)`` decides which ``y_j``
are admissible; its solution set is a coset of the alpha^(p-1)-center.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from . import gfp
from .core import (
    HomLieAlgebra,
    Subspace,
    center,
    direct_sum,
    fixed_space,
    is_sub_or_ideal,
)
from .errors import (
    CapExceeded,
    HomLieError,
    InvalidTarget,
    ModulusMismatch,
    NoSolution,
    PreconditionError,
)
from .gfp import Mat, Vec


@dataclass(frozen=True)
class PStructure:
    algebra: HomLieAlgebra
    images: tuple[Vec, ...]
    closed_form: Callable[[Vec], Vec] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        L = self.algebra
        images = tuple(gfp.vec(L.p, y) for y in self.images)
        if len(images) != L.n or any(len(y) != L.n for y in images):
            raise PreconditionError(f"need {L.n} images of length {L.n}")
        object.__setattr__(self, "images", images)

    def __call__(self, x: Sequence[int]) -> Vec:
        return p_eval(self, x)

    @classmethod
    def zero(cls, L: HomLieAlgebra) -> "PStructure":
        return cls(L, tuple(L.zero() for _ in range(L.n)))


@dataclass(frozen=True)
class STerms:
    terms: tuple[Vec, ...]

    def total(self, p: int, n: int) -> Vec:
        return gfp.vsum(p, self.terms, n)

    def __getitem__(self, i: int) -> Vec:
        """1-based, matching ``s_1 .. s_(p-1)``."""
        return self.terms[i - 1]

    def __len__(self) -> int:
        return len(self.terms)


def ad_chain(L: HomLieAlgebra, x: Sequence[int]) -> Mat:
    """``ad(alpha^(p-1) x) ··· ad(alpha x) ad(x)`` as a matrix (p factors)."""
    p = L.p
    M = L.ad(x)
    for j in range(1, p):
        M = gfp.mat_mul(p, L.ad(L.twist(x, j)), M)
    return M


def s_terms(L: HomLieAlgebra, x: Sequence[int], y: Sequence[int]) -> STerms:
    """Correction terms ``s_1 .. s_(p-1)`` of the additivity law.

    The chain ``ad(alpha^(p-2)(kx+y)) ··· ad(kx+y)`` applied to ``x`` is a
    polynomial in ``k`` whose ``k^(i-1)`` coefficient is ``i·s_i(x, y)``.
    """
    p = L.p
    v = gfp.PolyVec.constant(p, x)
    for j in range(p - 1):
        factor = gfp.affine_poly_matrix(p, L.ad(L.twist(y, j)), L.ad(L.twist(x, j)))
        v = gfp.poly_apply(p, factor, v)
    if any(gfp.poly_coeff(v, p - 1)):
        raise HomLieError("leading k^(p-1) coefficient of the s-term chain is nonzero; algebra data is corrupt")
    field_ = gfp.GF(p)
    terms = tuple(gfp.vscale(p, field_.inv(i), gfp.poly_coeff(v, i - 1)) for i in range(1, p))
    return STerms(terms)


def s_sum(L: HomLieAlgebra, x: Sequence[int], y: Sequence[int]) -> Vec:
    return s_terms(L, x, y).total(L.p, L.n)


def p_eval(P: PStructure, x: Sequence[int], order: Sequence[int] | None = None) -> Vec:
    """Value of the p-structure at ``x``.

    ``x`` is built one basis term at a time (ascending index, or ``order``);
    each step adds ``c^p y_j`` and the correction ``sum_i s_i(u, c e_j)`` where
    ``u`` is the partial sum so far.
    """
    L = P.algebra
    p, n = L.p, L.n
    support = [j for j in (range(n) if order is None else order) if x[j] % p]
    u = gfp.zero_vec(n)
    val = gfp.zero_vec(n)
    for j in support:
        c = x[j] % p
        term = gfp.vscale(p, c, gfp.unit_vec(n, j))
        val = gfp.vadd(p, val, gfp.vscale(p, pow(c, p, p), P.images[j]))
        if any(u):
            val = gfp.vadd(p, val, s_sum(L, u, term))
        u = gfp.vadd(p, u, term)
    return val


# --- synthesis -------------------------------------------------------------

@lru_cache(maxsize=256)
def _ad_alpha_system(L: HomLieAlgebra) -> Mat:
    """Matrix of ``y -> ad(y)·alpha^(p-1)`` flattened row-major (n^2 x n)."""
    p, n = L.p, L.n
    A = L.alpha_power(p - 1)
    cols = [gfp.mat_mul(p, L.basis_ads[i], A) for i in range(n)]
    return tuple(tuple(cols[i][r][c] for i in range(n)) for r in range(n) for c in range(n))


def _flatten(M: Mat) -> Vec:
    return tuple(a for row in M for a in row)


def basis_system(L: HomLieAlgebra, j: int) -> tuple[Mat, Vec]:
    """The affine system whose solutions are the admissible images of ``e_j``."""
    return _ad_alpha_system(L), _flatten(ad_chain(L, gfp.unit_vec(L.n, j)))


def solve_basis_image(L: HomLieAlgebra, j: int) -> gfp.SolutionSet:
    A, b = basis_system(L, j)
    return gfp.solve_affine(L.p, A, b, L.n)


def _require_multiplicative(L: HomLieAlgebra) -> None:
    from .core import axiom_report

    if not axiom_report(L).valid:
        raise PreconditionError("p-structures need a multiplicative Hom-Lie algebra")


def synthesize_p_structure(
    L: HomLieAlgebra, targets: Mapping[int, Sequence[int]] | None = None, *, check: bool = True
) -> PStructure:
    """The p-structure with prescribed (or canonical) images of the basis.

    Raises :class:`NoSolution` naming the first basis index whose system is
    inconsistent, and :class:`InvalidTarget` for a prescribed image that
    is not a solution.
    """
    if check:
        _require_multiplicative(L)
    targets = dict(targets or {})
    C = center(L, "alpha")
    images = []
    for j in range(L.n):
        A, b = basis_system(L, j)
        sol = gfp.solve_affine(L.p, A, b, L.n)
        if not sol.solvable:
            raise NoSolution(j, system=(A, b))
        assert Subspace(L.p, L.n, sol.kernel_basis) == C, "solution kernel must equal C(L)"
        if j in targets:
            y = gfp.vec(L.p, targets[j])
            if gfp.mat_vec(L.p, A, y) != b:
                raise InvalidTarget(j)
            images.append(y)
        else:
            images.append(sol.particular)
    return PStructure(L, tuple(images))


@dataclass(frozen=True)
class RestrictabilityCertificate:
    decision: bool
    witness: PStructure | None = None
    failing_index: int | None = None
    system: tuple | None = field(default=None, repr=False)


def is_restrictable(L: HomLieAlgebra) -> RestrictabilityCertificate:
    try:
        P = synthesize_p_structure(L)
    except NoSolution as exc:
        return RestrictabilityCertificate(False, failing_index=exc.index, system=exc.system)
    return RestrictabilityCertificate(True, witness=P)


# --- verification ------------------------------------------------------------

@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    mode: str
    axiom: str | None = None
    witness: tuple | None = None
    checked: int = 0


def verify_p_structure(P: PStructure, mode: str = "basis") -> VerifyReport:
    """Check the p-structure axioms.

    ``basis`` checks the ad identity on basis vectors only, which suffices
    because the values elsewhere come from the basis extension.  ``exhaustive``
    checks the ad identity on every element, homogeneity on every
    (scalar, element) pair and the additivity law on every pair.
    """
    L = P.algebra
    p, n = L.p, L.n
    A = L.alpha_power(p - 1)
    if mode == "basis":
        for j, y in enumerate(P.images):
            e = gfp.unit_vec(n, j)
            if gfp.mat_mul(p, L.ad(y), A) != ad_chain(L, e):
                return VerifyReport(False, mode, "R1", (e,), j + 1)
        return VerifyReport(True, mode, checked=n)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    gfp.check_budget(p ** (2 * n), "exhaustive pair check", pairs=True)
    elements = list(L.elements())
    table = {x: p_eval(P, x) for x in elements}
    checked = 0
    for x in elements:
        checked += 1
        if gfp.mat_mul(p, L.ad(table[x]), A) != ad_chain(L, x):
            return VerifyReport(False, mode, "R1", (x,), checked)
    for k in range(p):
        for x in elements:
            checked += 1
            if table[gfp.vscale(p, k, x)] != gfp.vscale(p, pow(k, p, p), table[x]):
                return VerifyReport(False, mode, "R2", (k, x), checked)
    for x in elements:
        for y in elements:
            checked += 1
            rhs = gfp.vadd(p, gfp.vadd(p, table[x], table[y]), s_sum(L, x, y))
            if table[gfp.vadd(p, x, y)] != rhs:
                return VerifyReport(False, mode, "R3", (x, y), checked)
    return VerifyReport(True, mode, checked=checked)


# --- the set of all p-structures --------------------------------------------

@dataclass(frozen=True)
class DeltaReport:
    f: Mat
    into_center: bool
    semilinear: bool
    exhaustive: bool

    @property
    def valid(self) -> bool:
        return self.into_center and self.semilinear


def p_structure_delta(P1: PStructure, P2: PStructure) -> DeltaReport:
    """``f = P1 - P2``; both conditions of the difference lemma are checked."""
    L = P1.algebra
    if P2.algebra != L:
        raise PreconditionError("p-structures live on different algebras")
    p, n = L.p, L.n
    cols = [gfp.vsub(p, a, b) for a, b in zip(P1.images, P2.images)]
    F = gfp.from_columns(cols, n) if n else ()
    C = center(L, "alpha")
    into_center = all(C.contains(v) for v in cols)
    exhaustive = p ** n <= gfp.LIMITS.budget
    semilinear = True
    if exhaustive:
        for x in L.elements():
            d = gfp.vsub(p, p_eval(P1, x), p_eval(P2, x))
            semilinear = semilinear and d == gfp.mat_vec(p, F, x)
            into_center = into_center and C.contains(d)
            if not (semilinear and into_center):
                break
    return DeltaReport(F, into_center, semilinear, exhaustive)


def count_p_structures(L: HomLieAlgebra) -> int:
    """``|C(L)|^n`` when restrictable, else 0."""
    if not is_restrictable(L).decision:
        return 0
    return L.p ** (center(L, "alpha").dim * L.n)


def iter_p_structures(L: HomLieAlgebra) -> Iterator[PStructure]:
    """All p-structures, lazily: one witness shifted by every linear map into C(L)."""
    cert = is_restrictable(L)
    if not cert.decision:
        return
    base = cert.witness.images
    shifts = list(center(L, "alpha").elements())
    for choice in product(shifts, repeat=L.n):
        yield PStructure(L, tuple(gfp.vadd(L.p, y, s) for y, s in zip(base, choice)))


def enumerate_p_structures(L: HomLieAlgebra, cap: int | None = None) -> list[PStructure]:
    """All p-structures; raises :class:`CapExceeded` above ``cap`` (default: the budget)."""
    total = count_p_structures(L)
    limit = gfp.LIMITS.budget if cap is None else cap
    if total > limit:
        raise CapExceeded(f"{total} p-structures exceed the limit {limit}")
    return list(iter_p_structures(L))


# --- p-subalgebras -----------------------------------------------------------

def p_closure(P: PStructure, generators: Iterable[Sequence[int]]) -> Subspace:
    """Smallest subspace containing the generators that is closed under the
    bracket, the twist and the p-structure."""
    L = P.algebra
    H = Subspace.of(L, generators)
    while True:
        new = list(H.basis)
        new += [L.twist(h) for h in H.basis]
        new += [L.bracket(a, b) for a in H.basis for b in H.basis]
        new += [p_eval(P, h) for h in H.basis]
        nxt = Subspace.of(L, new)
        if nxt == H:
            return H
        H = nxt


@dataclass(frozen=True)
class PFlags:
    subalgebra: bool
    ideal: bool
    p_closed: bool

    @property
    def p_subalgebra(self) -> bool:
        return self.subalgebra and self.p_closed

    @property
    def p_ideal(self) -> bool:
        return self.ideal and self.p_closed


def p_flag_check(P: PStructure, H: Subspace) -> PFlags:
    L = P.algebra
    flags = is_sub_or_ideal(L, H)
    if L.p ** H.dim <= gfp.LIMITS.budget:
        points = H.elements()
    else:
        points = iter(H.basis)
    p_closed = all(H.contains(p_eval(P, h)) for h in points)
    return PFlags(flags.subalgebra, flags.ideal, p_closed)


def direct_sum_p(P: PStructure, Q: PStructure) -> PStructure:
    L, M = P.algebra, Q.algebra
    if L.p != M.p:
        raise ModulusMismatch(f"GF({L.p}) vs GF({M.p})")
    S = direct_sum(L, M)
    images = tuple(y + (0,) * M.n for y in P.images) + tuple((0,) * L.n + y for y in Q.images)
    return PStructure(S, images)


def restrict_p_structure(P: PStructure, H: Subspace) -> tuple[PStructure, "object"]:
    """Restriction of ``P`` to a p-subalgebra, expressed on the induced algebra."""
    from .core import induced_subalgebra

    L = P.algebra
    sub, incl = induced_subalgebra(L, H)
    images = []
    for b in H.basis:
        v = p_eval(P, b)
        if not H.contains(v):
            raise PreconditionError("subspace is not closed under the p-structure")
        images.append(H.coordinates(v))
    return PStructure(sub, tuple(images)), incl


# --- the fixed-point comparator ----------------------------------------------

@dataclass(frozen=True)
class FixedPointReport:
    fixed_space: Subspace
    maps_into_fixed: bool
    bracket_identity: bool
    homogeneous: bool
    additive: bool
    structure_ok: bool
    witness: tuple | None = None

    @property
    def fixed_point_ok(self) -> bool:
        return self.maps_into_fixed and self.bracket_identity and self.homogeneous and self.additive


def fixed_point_check(P: PStructure) -> FixedPointReport:
    """Compare ``P`` against the older fixed-point definition.

    That definition only lives on ``L1 = {x : alpha(x) = x}`` and demands
    ``L1 -> L1`` together with ``[alpha(y), x^[p]] = (ad x)^p (y)``.  The check
    runs over every element of ``L1`` and every basis ``y``.
    """
    L = P.algebra
    p = L.p
    L1 = fixed_space(L)
    pts = list(L1.elements())
    table = {x: p_eval(P, x) for x in pts}
    witness = None
    maps_into = True
    for x in pts:
        if not L1.contains(table[x]):
            maps_into, witness = False, ("maps_into_fixed", x)
            break
    bracket_ok = True
    for x in pts:
        adp = gfp.mat_pow(p, L.ad(x), p)
        for y in L.basis():
            if L.bracket(L.twist(y), table[x]) != gfp.mat_vec(p, adp, y):
                bracket_ok = False
                witness = witness or ("bracket_identity", x, y)
                break
        if not bracket_ok:
            break
    homogeneous = all(
        table[gfp.vscale(p, k, x)] == gfp.vscale(p, pow(k, p, p), table[x]) for k in range(p) for x in pts
    )
    additive = all(
        table[gfp.vadd(p, x, y)] == gfp.vadd(p, gfp.vadd(p, table[x], table[y]), s_sum(L, x, y))
        for x in pts
        for y in pts
    )
    mode = "exhaustive" if p ** (2 * L.n) <= gfp.LIMITS.pair_budget else "basis"
    structure_ok = verify_p_structure(P, mode).ok
    return FixedPointReport(L1, maps_into, bracket_ok, homogeneous, additive, structure_ok, witness)
