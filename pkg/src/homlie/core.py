"""Hom-Lie algebras given by structure constants over GF(p).

An algebra stores ``c[i][j]``, the coordinate vector of ``[e_i, e_j]``, and the
twist matrix ``alpha`` whose column ``j`` is ``alpha(e_j)``.  Subspaces are kept
in reduced echelon form so that equal subspaces compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import gfp
from .errors import (
    DimensionError,
    ModulusMismatch,
    NotAMorphism,
    NotAnIdeal,
    SingularMatrix,
)
from .gfp import Mat, Vec


@dataclass(frozen=True)
class HomLieAlgebra:
    p: int
    names: tuple[str, ...]
    c: tuple[tuple[Vec, ...], ...]
    alpha: Mat

    def __post_init__(self) -> None:
        gfp.check_modulus(self.p)
        n = len(self.names)
        if n > gfp.LIMITS.max_dim:
            raise gfp.CapExceeded(f"dimension {n} exceeds cap max_dim={gfp.LIMITS.max_dim}")
        if len(set(self.names)) != n:
            raise ValueError(f"basis names must be distinct: {self.names}")
        p = self.p
        if len(self.c) != n or any(len(row) != n for row in self.c) or any(
            len(v) != n for row in self.c for v in row
        ):
            raise DimensionError("structure constants must have shape n x n x n")
        c = tuple(tuple(gfp.vec(p, self.c[i][j]) for j in range(n)) for i in range(n))
        alpha = gfp.mat(p, self.alpha)
        if gfp.shape(alpha) != (n, n) and n:
            raise DimensionError(f"twist must be {n}x{n}")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alpha", alpha if n else ())

    @classmethod
    def from_brackets(
        cls,
        p: int,
        names: Sequence[str],
        brackets: dict[tuple[int, int], Sequence[int]] | None = None,
        alpha: Sequence[Sequence[int]] | None = None,
    ) -> "HomLieAlgebra":
        """Build from the brackets ``[e_i, e_j]`` for ``i < j``; the rest is
        completed antisymmetrically.  ``alpha`` defaults to the identity."""
        n = len(names)
        c = [[gfp.zero_vec(n) for _ in range(n)] for _ in range(n)]
        for (i, j), v in (brackets or {}).items():
            v = gfp.vec(p, v)
            c[i][j] = v
            c[j][i] = gfp.vscale(p, -1, v)
        return cls(p, tuple(names), tuple(map(tuple, c)), gfp.identity(n) if alpha is None else alpha)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def dim(self) -> int:
        return len(self.names)

    def basis(self) -> list[Vec]:
        return [gfp.unit_vec(self.n, j) for j in range(self.n)]

    def zero(self) -> Vec:
        return gfp.zero_vec(self.n)

    def elements(self) -> Iterator[Vec]:
        return gfp.all_vectors(self.p, self.n)

    def bracket(self, x: Sequence[int], y: Sequence[int]) -> Vec:
        p, n = self.p, self.n
        acc = [0] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.c[i]
            for j, yj in enumerate(y):
                if yj:
                    s = xi * yj
                    for k, ck in enumerate(row[j]):
                        if ck:
                            acc[k] += s * ck
        return tuple(a % p for a in acc)

    def twist(self, x: Sequence[int], times: int = 1) -> Vec:
        return gfp.mat_vec(self.p, self.alpha_power(times), x)

    def alpha_power(self, e: int) -> Mat:
        return self._alpha_powers[e] if e < len(self._alpha_powers) else gfp.mat_pow(self.p, self.alpha, e)

    @cached_property
    def _alpha_powers(self) -> tuple[Mat, ...]:
        powers = [gfp.identity(self.n)]
        for _ in range(self.p):
            powers.append(gfp.mat_mul(self.p, self.alpha, powers[-1]))
        return tuple(powers)

    @cached_property
    def basis_ads(self) -> tuple[Mat, ...]:
        """``ad(e_i)`` for every basis element; column j is ``[e_i, e_j]``."""
        return tuple(gfp.from_columns(self.c[i]) if self.n else () for i in range(self.n))

    def ad(self, x: Sequence[int]) -> Mat:
        p, n = self.p, self.n
        acc = [[0] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi:
                for r, row in enumerate(self.basis_ads[i]):
                    for col, a in enumerate(row):
                        if a:
                            acc[r][col] += xi * a
        return tuple(tuple(a % p for a in row) for row in acc)

    def is_abelian(self) -> bool:
        return not any(any(v) for row in self.c for v in row)

    def format(self, v: Sequence[int]) -> str:
        return format_vector(self.names, v)


def format_vector(names: Sequence[str], v: Sequence[int]) -> str:
    terms = []
    for name, a in zip(names, v):
        if a == 1:
            terms.append(name)
        elif a:
            terms.append(f"{a}*{name}")
    return "+".join(terms) if terms else "0"


def ad_matrix(L: HomLieAlgebra, x: Sequence[int], mode: str = "plain") -> Mat:
    """``ad(x)``, or ``ad(x)·alpha^(p-1)`` when ``mode == "alpha"``."""
    if mode == "plain":
        return L.ad(x)
    if mode == "alpha":
        return gfp.mat_mul(L.p, L.ad(x), L.alpha_power(L.p - 1))
    raise ValueError(f"unknown ad mode {mode!r}")


# --- subspaces ------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^n; ``basis`` rows are in reduced echelon form."""

    p: int
    n: int
    basis: Mat = ()
    pivots: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        R, piv = gfp.rref(self.p, self.basis, self.n)
        object.__setattr__(self, "basis", R)
        object.__setattr__(self, "pivots", piv)

    @classmethod
    def span(cls, p: int, n: int, vectors: Iterable[Sequence[int]] = ()) -> "Subspace":
        return cls(p, n, tuple(tuple(v) for v in vectors))

    @classmethod
    def whole(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, gfp.identity(n))

    @classmethod
    def of(cls, L: HomLieAlgebra, vectors: Iterable[Sequence[int]] = ()) -> "Subspace":
        return cls.span(L.p, L.n, vectors)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_whole(self) -> bool:
        return self.dim == self.n

    def reduce(self, v: Sequence[int]) -> Vec:
        """``v`` minus its component along the pivot coordinates."""
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = w[pc]
            if f:
                w = [(a - f * b) % self.p for a, b in zip(w, row)]
        return tuple(a % self.p for a in w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[int]) -> Vec:
        """Coordinates of ``v`` with respect to ``basis``."""
        if not self.contains(v):
            raise ValueError(f"{tuple(v)} is not in the subspace")
        return tuple(v[pc] % self.p for pc in self.pivots)

    def from_coordinates(self, coords: Sequence[int]) -> Vec:
        return gfp.vsum(self.p, (gfp.vscale(self.p, a, b) for a, b in zip(coords, self.basis)), self.n)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.p, self.n, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.is_zero() or other.is_zero():
            return Subspace(self.p, self.n)
        rows = self.basis + other.basis
        null = gfp.nullspace(self.p, gfp.transpose(rows), len(rows))
        d = self.dim
        vecs = [
            gfp.vsum(self.p, (gfp.vscale(self.p, a, b) for a, b in zip(coeffs[:d], self.basis)), self.n)
            for coeffs in null
        ]
        return Subspace(self.p, self.n, tuple(vecs))

    def complement_indices(self) -> tuple[int, ...]:
        """Non-pivot coordinates; their unit vectors span a canonical complement."""
        return tuple(j for j in range(self.n) if j not in self.pivots)

    def complement(self) -> "Subspace":
        return Subspace(self.p, self.n, tuple(gfp.unit_vec(self.n, j) for j in self.complement_indices()))

    def elements(self) -> Iterator[Vec]:
        gfp.check_budget(self.p ** self.dim, "enumerating subspace elements")
        for coeffs in product(range(self.p), repeat=self.dim):
            yield self.from_coordinates(coeffs)

    def image(self, A: Sequence[Sequence[int]]) -> "Subspace":
        """Image under a square matrix acting on column vectors."""
        return Subspace(self.p, len(A), tuple(gfp.mat_vec(self.p, A, b) for b in self.basis))


def fixed_space(L: HomLieAlgebra) -> Subspace:
    """``{x : alpha(x) = x}``."""
    A = gfp.mat_sub(L.p, L.alpha, gfp.identity(L.n))
    return Subspace(L.p, L.n, gfp.nullspace(L.p, A, L.n))


def kernel(p: int, F: Sequence[Sequence[int]], ncols: int) -> Subspace:
    return Subspace(p, ncols, gfp.nullspace(p, F, ncols))


def column_space(p: int, F: Sequence[Sequence[int]], nrows: int) -> Subspace:
    return Subspace(p, nrows, gfp.transpose(F) if F and F[0] else ())


# --- axioms ---------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    alternating: bool
    hom_jacobi: bool
    multiplicative: bool
    invertible: bool
    regular: bool
    involutive: bool
    abelian: bool
    counterexamples: dict = field(default_factory=dict, compare=False)

    @property
    def valid(self) -> bool:
        """Alternating, Hom-Jacobi and multiplicative: what the library needs."""
        return self.alternating and self.hom_jacobi and self.multiplicative

    def as_dict(self) -> dict:
        return {
            "alternating": self.alternating,
            "hom_jacobi": self.hom_jacobi,
            "multiplicative": self.multiplicative,
            "invertible": self.invertible,
            "regular": self.regular,
            "involutive": self.involutive,
            "abelian": self.abelian,
            "counterexamples": {k: list(v) for k, v in self.counterexamples.items()},
        }


def hom_jacobi_defect(L: HomLieAlgebra, x, y, z) -> Vec:
    p = L.p
    terms = (
        L.bracket(L.twist(x), L.bracket(y, z)),
        L.bracket(L.twist(y), L.bracket(z, x)),
        L.bracket(L.twist(z), L.bracket(x, y)),
    )
    return gfp.vsum(p, terms, L.n)


def axiom_report(L: HomLieAlgebra) -> AxiomReport:
    """Check every axiom on basis elements; counterexamples are index tuples."""
    p, n = L.p, L.n
    E = L.basis()
    ce: dict[str, tuple] = {}

    alternating = True
    for i in range(n):
        if any(L.c[i][i]):
            alternating = False
            ce.setdefault("alternating", (i, i))
            break
    if alternating:
        for i, j in product(range(n), repeat=2):
            if gfp.vadd(p, L.c[i][j], L.c[j][i]) != L.zero():
                alternating = False
                ce["alternating"] = (i, j)
                break

    hom_jacobi = True
    for i, j, k in product(range(n), repeat=3):
        if any(hom_jacobi_defect(L, E[i], E[j], E[k])):
            hom_jacobi = False
            ce["hom_jacobi"] = (i, j, k)
            break

    multiplicative = True
    for i, j in product(range(n), repeat=2):
        if L.twist(L.c[i][j]) != L.bracket(L.twist(E[i]), L.twist(E[j])):
            multiplicative = False
            ce["multiplicative"] = (i, j)
            break

    invertible = gfp.is_invertible(p, L.alpha) if n else True
    involutive_map = gfp.mat_mul(p, L.alpha, L.alpha) == gfp.identity(n)
    return AxiomReport(
        alternating=alternating,
        hom_jacobi=hom_jacobi,
        multiplicative=multiplicative,
        invertible=invertible,
        regular=invertible and multiplicative,
        involutive=involutive_map and multiplicative,
        abelian=L.is_abelian(),
        counterexamples=ce,
    )


def is_lie_morphism(L: HomLieAlgebra, A: Sequence[Sequence[int]]) -> bool:
    E = L.basis()
    return all(
        gfp.mat_vec(L.p, A, L.c[i][j]) == L.bracket(gfp.mat_vec(L.p, A, E[i]), gfp.mat_vec(L.p, A, E[j]))
        for i, j in product(range(L.n), repeat=2)
    )


def yau_twist(lie: HomLieAlgebra, A: Sequence[Sequence[int]]) -> HomLieAlgebra:
    """``(L, A∘[.,.], A)`` for a Lie algebra ``lie`` and a Lie morphism ``A``."""
    A = gfp.mat(lie.p, A)
    if lie.alpha != gfp.identity(lie.n):
        raise NotAMorphism("yau_twist expects an ordinary Lie algebra (identity twist)")
    rep = axiom_report(lie)
    if not (rep.alternating and rep.hom_jacobi):
        raise NotAMorphism("input is not a Lie algebra")
    if not is_lie_morphism(lie, A):
        raise NotAMorphism("twist matrix is not a Lie algebra morphism")
    c = tuple(tuple(gfp.mat_vec(lie.p, A, lie.c[i][j]) for j in range(lie.n)) for i in range(lie.n))
    return HomLieAlgebra(lie.p, lie.names, c, A)


def gl_example(m: int, S: Sequence[Sequence[int]], p: int):
    """Matrices of size ``m`` under the twisted commutator, with the twist
    ``X -> S X S^-1`` and the p-structure ``X -> alpha^(p-1)(X^p)``.

    Returns ``(algebra, pstructure)``.
    """
    from .restricted import PStructure

    S = gfp.mat(p, S)
    if not gfp.is_invertible(p, S):
        raise SingularMatrix("conjugating matrix must be invertible")
    Sinv = gfp.inverse(p, S)
    names = tuple(f"E{a + 1}{b + 1}" for a in range(m) for b in range(m))
    N = m * m

    def to_mat(v):
        return tuple(tuple(v[a * m + b] for b in range(m)) for a in range(m))

    def to_vec(X):
        return tuple(X[a][b] % p for a in range(m) for b in range(m))

    def conj(X):
        return gfp.mat_mul(p, gfp.mat_mul(p, S, X), Sinv)

    basis = [gfp.unit_vec(N, j) for j in range(N)]
    alpha = gfp.from_columns([to_vec(conj(to_mat(e))) for e in basis])
    lie_c = []
    for ei in basis:
        row = []
        for ej in basis:
            X, Y = to_mat(ei), to_mat(ej)
            row.append(to_vec(gfp.mat_sub(p, gfp.mat_mul(p, X, Y), gfp.mat_mul(p, Y, X))))
        lie_c.append(tuple(row))
    lie = HomLieAlgebra(p, names, tuple(lie_c), gfp.identity(N))
    L = yau_twist(lie, alpha)
    alpha_pm1 = L.alpha_power(p - 1)
    images = tuple(gfp.mat_vec(p, alpha_pm1, to_vec(gfp.mat_pow(p, to_mat(e), p))) for e in basis)

    def frobenius(v):
        return gfp.mat_vec(p, alpha_pm1, to_vec(gfp.mat_pow(p, to_mat(v), p)))

    P = PStructure(L, images)
    object.__setattr__(P, "closed_form", frobenius)
    return L, P


# --- series, centralizers, ideals -----------------------------------------

def bracket_span(L: HomLieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    return Subspace.of(L, (L.bracket(a, b) for a in A.basis for b in B.basis))


@dataclass(frozen=True)
class SeriesReport:
    terms: tuple[Subspace, ...]
    nilpotent: bool
    nilpotency_class: int | None

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)


def lower_central_series(L: HomLieAlgebra) -> SeriesReport:
    """``L^1 = L``, ``L^(k+1) = [L^k, L]`` until the terms stabilize."""
    whole = Subspace.whole(L.p, L.n)
    terms = [whole]
    while True:
        nxt = bracket_span(L, terms[-1], whole)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    last = terms[-1]
    nilpotent = last.is_zero()
    return SeriesReport(tuple(terms), nilpotent, len(terms) if nilpotent else None)


def centralizer(L: HomLieAlgebra, S: Subspace | None = None, mode: str = "alpha") -> Subspace:
    """``{x : [x, alpha^(p-1)(y)] = 0 for y in S}`` (mode ``alpha``) or the
    plain centralizer (mode ``ordinary``).  ``S`` defaults to all of L."""
    if S is None:
        S = Subspace.whole(L.p, L.n)
    if mode == "alpha":
        A = L.alpha_power(L.p - 1)
        targets = [gfp.mat_vec(L.p, A, y) for y in S.basis]
    elif mode == "ordinary":
        targets = list(S.basis)
    else:
        raise ValueError(f"unknown centralizer mode {mode!r}")
    rows: list[Vec] = []
    for w in targets:
        rows.extend(L.ad(w))  # [x, w] = -ad(w) x
    return Subspace(L.p, L.n, gfp.nullspace(L.p, rows, L.n))


def center(L: HomLieAlgebra, mode: str = "alpha") -> Subspace:
    return centralizer(L, None, mode)


@dataclass(frozen=True)
class SubFlags:
    subalgebra: bool
    ideal: bool
    alpha_stable: bool


def is_sub_or_ideal(L: HomLieAlgebra, H: Subspace) -> SubFlags:
    stable = all(H.contains(L.twist(h)) for h in H.basis)
    closed = all(H.contains(L.bracket(a, b)) for a in H.basis for b in H.basis)
    absorbs = all(H.contains(L.bracket(a, e)) for a in H.basis for e in L.basis())
    return SubFlags(subalgebra=stable and closed, ideal=stable and absorbs, alpha_stable=stable)


def subalgebra_closure(L: HomLieAlgebra, generators: Iterable[Sequence[int]]) -> Subspace:
    """Smallest Hom-Lie subalgebra containing the generators."""
    H = Subspace.of(L, generators)
    while True:
        new = list(H.basis)
        new += [L.twist(h) for h in H.basis]
        new += [L.bracket(a, b) for a in H.basis for b in H.basis]
        nxt = Subspace.of(L, new)
        if nxt == H:
            return H
        H = nxt


# --- morphisms (data), direct sums, quotients, subalgebras ---------------------

@dataclass(frozen=True)
class HomMorphism:
    """A linear map ``source -> target``; column j of ``F`` is ``f(e_j)``."""

    source: HomLieAlgebra
    target: HomLieAlgebra
    F: Mat

    def __post_init__(self) -> None:
        if self.source.p != self.target.p:
            raise ModulusMismatch("source and target live over different fields")
        F = gfp.mat(self.source.p, self.F) if self.target.n else ()
        if self.target.n and gfp.shape(F) != (self.target.n, self.source.n):
            raise DimensionError(f"map matrix must be {self.target.n}x{self.source.n}")
        object.__setattr__(self, "F", F)

    @property
    def p(self) -> int:
        return self.source.p

    def __call__(self, x: Sequence[int]) -> Vec:
        if not self.target.n:
            return ()
        return gfp.mat_vec(self.p, self.F, x)

    def image(self) -> Subspace:
        return Subspace.span(self.p, self.target.n, (self(e) for e in self.source.basis()))

    def kernel(self) -> Subspace:
        if not self.target.n:
            return Subspace.whole(self.p, self.source.n)
        return kernel(self.p, self.F, self.source.n)

    def is_injective(self) -> bool:
        return self.kernel().is_zero()

    def is_surjective(self) -> bool:
        return self.image().is_whole()

    def then(self, other: "HomMorphism") -> "HomMorphism":
        """``other ∘ self``."""
        return HomMorphism(self.source, other.target, gfp.mat_mul(self.p, other.F, self.F))

    @classmethod
    def identity(cls, L: HomLieAlgebra) -> "HomMorphism":
        return cls(L, L, gfp.identity(L.n))


def _disjoint_names(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    names = list(a)
    taken = set(names)
    for nm in b:
        new = nm
        while new in taken:
            new += "'"
        taken.add(new)
        names.append(new)
    return tuple(names)


def direct_sum(L: HomLieAlgebra, M: HomLieAlgebra) -> HomLieAlgebra:
    """Block bracket and block twist on ``L ⊕ M``."""
    if L.p != M.p:
        raise ModulusMismatch(f"cannot add algebras over GF({L.p}) and GF({M.p})")
    n, m = L.n, M.n
    N = n + m
    zero = gfp.zero_vec(N)
    c = []
    for i in range(N):
        row = []
        for j in range(N):
            if i < n and j < n:
                row.append(L.c[i][j] + (0,) * m)
            elif i >= n and j >= n:
                row.append((0,) * n + M.c[i - n][j - n])
            else:
                row.append(zero)
        c.append(tuple(row))
    return HomLieAlgebra(L.p, _disjoint_names(L.names, M.names), tuple(c), gfp.block_diag(L.alpha, M.alpha))


def quotient(L: HomLieAlgebra, I: Subspace) -> tuple[HomLieAlgebra, HomMorphism]:
    """``L/I`` on the canonical complement of ``I`` plus the projection."""
    if not is_sub_or_ideal(L, I).ideal:
        raise NotAnIdeal("quotient requires a Hom-Lie ideal")
    keep = I.complement_indices()

    def proj(v):
        r = I.reduce(v)
        return tuple(r[j] for j in keep)

    m = len(keep)
    c = tuple(tuple(proj(L.c[a][b]) for b in keep) for a in keep)
    alpha = gfp.from_columns([proj(L.twist(gfp.unit_vec(L.n, a))) for a in keep], m)
    Q = HomLieAlgebra(L.p, tuple(L.names[j] for j in keep), c, alpha if m else ())
    F = gfp.from_columns([proj(e) for e in L.basis()], m) if m else ()
    return Q, HomMorphism(L, Q, F)


def induced_subalgebra(L: HomLieAlgebra, H: Subspace) -> tuple[HomLieAlgebra, HomMorphism]:
    """``H`` as an algebra in its echelon basis, plus the inclusion into ``L``."""
    if not is_sub_or_ideal(L, H).subalgebra:
        raise NotAMorphism("subspace is not a Hom-Lie subalgebra")
    names = []
    taken = set(L.names)
    for r, b in enumerate(H.basis):
        support = [j for j, a in enumerate(b) if a]
        if len(support) == 1 and b[support[0]] == 1:
            names.append(L.names[support[0]])
        else:
            k = r + 1
            while f"s{k}" in taken:
                k += 1
            names.append(f"s{k}")
            taken.add(f"s{k}")
    c = tuple(tuple(H.coordinates(L.bracket(a, b)) for b in H.basis) for a in H.basis)
    alpha = gfp.from_columns([H.coordinates(L.twist(b)) for b in H.basis], H.dim)
    sub = HomLieAlgebra(L.p, tuple(names), c, alpha if H.dim else ())
    incl = HomMorphism(sub, L, gfp.from_columns(list(H.basis), L.n) if H.dim else tuple(() for _ in range(L.n)))
    return sub, incl


def change_basis(L: HomLieAlgebra, T: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> HomLieAlgebra:
    """The same algebra in the basis given by the columns of ``T``."""
    p = L.p
    T = gfp.mat(p, T)
    if not gfp.is_invertible(p, T):
        raise SingularMatrix("change of basis must be invertible")
    Tinv = gfp.inverse(p, T)
    cols = [gfp.column(T, j) for j in range(L.n)]
    c = tuple(tuple(gfp.mat_vec(p, Tinv, L.bracket(a, b)) for b in cols) for a in cols)
    alpha = gfp.mat_mul(p, Tinv, gfp.mat_mul(p, L.alpha, T))
    return HomLieAlgebra(p, tuple(names) if names else L.names, c, alpha)
