"""Brute-force ground truth and seeded instance generators.

Nothing here calls the elimination routines or the polynomial s-term code of
the main path: brackets are recomputed from the structure constants, ad-chains
are applied element by element, s-terms come from evaluating the chain at
every scalar and interpolating, and membership questions are answered by
enumerating the whole (small) space.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator, Sequence

from . import gfp
from .core import HomLieAlgebra, HomMorphism, Subspace, axiom_report, change_basis, direct_sum, yau_twist
from .errors import CapExceeded, NotFound
from .gfp import Vec
from .restricted import PStructure, is_restrictable

# --- independent primitives ---------------------------------------------------


def _br(L: HomLieAlgebra, x: Sequence[int], y: Sequence[int]) -> Vec:
    p, n = L.p, L.n
    out = [0] * n
    for i in range(n):
        for j in range(n):
            w = x[i] * y[j] % p
            if w:
                v = L.c[i][j]
                for k in range(n):
                    out[k] = (out[k] + w * v[k]) % p
    return tuple(out)


def _tw(L: HomLieAlgebra, x: Sequence[int], times: int = 1) -> Vec:
    p, n = L.p, L.n
    v = tuple(x)
    for _ in range(times):
        out = [0] * n
        for j in range(n):
            if v[j]:
                for i in range(n):
                    out[i] = (out[i] + v[j] * L.alpha[i][j]) % p
        v = tuple(out)
    return v


def _add(p: int, *vs: Sequence[int]) -> Vec:
    return tuple(sum(col) % p for col in zip(*vs))


def _scale(p: int, k: int, v: Sequence[int]) -> Vec:
    return tuple(k * a % p for a in v)


def chain_apply(L: HomLieAlgebra, x: Sequence[int], y: Sequence[int]) -> Vec:
    """``[alpha^(p-1) x, [ ... , [alpha x, [x, y]]]]``."""
    v = tuple(y)
    for j in range(L.p):
        v = _br(L, _tw(L, x, j), v)
    return v


def _lagrange_coefficients(p: int, values: Sequence[int]) -> list[int]:
    """Coefficients of the unique polynomial of degree < p through ``(k, values[k])``."""
    coeffs = [0] * p
    for k in range(p):
        if not values[k]:
            continue
        basis = [1]
        denom = 1
        for m in range(p):
            if m == k:
                continue
            basis = [(a - m * b) % p for a, b in zip([0] + basis, basis + [0])]
            denom = denom * (k - m) % p
        scale = values[k] * pow(denom, p - 2, p) % p
        for i, b in enumerate(basis):
            coeffs[i] = (coeffs[i] + scale * b) % p
    return coeffs


def s_terms_interpolated(L: HomLieAlgebra, x: Sequence[int], y: Sequence[int]) -> list[Vec]:
    """``s_1 .. s_(p-1)`` by evaluating the chain at every k and interpolating."""
    p, n = L.p, L.n
    samples = []
    for k in range(p):
        z = _add(p, _scale(p, k, x), y)
        v = tuple(x)
        for j in range(p - 1):
            v = _br(L, _tw(L, z, j), v)
        samples.append(v)
    per_coord = [_lagrange_coefficients(p, [samples[k][c] for k in range(p)]) for c in range(n)]
    return [tuple(per_coord[c][i - 1] * pow(i, p - 2, p) % p for c in range(n)) for i in range(1, p)]


def oracle_table(P: PStructure) -> dict[Vec, Vec]:
    """Values on every element, peeling off the first basis term each time."""
    L = P.algebra
    p, n = L.p, L.n
    gfp.check_budget(p ** n, "oracle table")
    table: dict[Vec, Vec] = {}
    for x in product(range(p), repeat=n):
        nz = [j for j in range(n) if x[j]]
        if not nz:
            table[x] = (0,) * n
            continue
        j = nz[0]
        head = tuple(x[j] if i == j else 0 for i in range(n))
        rest = tuple(0 if i == j else x[i] for i in range(n))
        val = _add(p, _scale(p, pow(x[j], p, p), P.images[j]), table[rest])
        if any(rest):
            val = _add(p, val, *s_terms_interpolated(L, head, rest))
        table[x] = val
    return table


# --- audits ---------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None
    checked: int = 0


def exhaustive_restricted_audit(
    P: PStructure, table: Callable[[Vec], Vec] | dict | None = None
) -> AuditReport:
    """Check the three p-structure axioms on every element, scalar and pair.

    ``table`` overrides the values of the map (a closed form, say); by default
    they come from :func:`oracle_table`.
    """
    L = P.algebra
    p, n = L.p, L.n
    gfp.check_budget(p ** (2 * n), "exhaustive audit", pairs=True)
    elements = list(product(range(p), repeat=n))
    if table is None:
        T = oracle_table(P)
    elif callable(table):
        T = {x: tuple(table(x)) for x in elements}
    else:
        T = dict(table)
    basis = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    twisted = [_tw(L, e, p - 1) for e in basis]
    checked = 0
    for x in elements:
        checked += 1
        for y, ty in zip(basis, twisted):
            if _br(L, T[x], ty) != chain_apply(L, x, y):
                return AuditReport(False, "R1", (x, y), checked)
    for k in range(p):
        for x in elements:
            checked += 1
            if T[_scale(p, k, x)] != _scale(p, pow(k, p, p), T[x]):
                return AuditReport(False, "R2", (k, x), checked)
    for x in elements:
        for y in elements:
            checked += 1
            rhs = _add(p, T[x], T[y], *s_terms_interpolated(L, x, y)) if p > 1 else None
            if T[_add(p, x, y)] != rhs:
                return AuditReport(False, "R3", (x, y), checked)
    return AuditReport(True, checked=checked)


def _ad_alpha_key(L: HomLieAlgebra, y: Sequence[int]) -> tuple:
    basis = [tuple(1 if i == j else 0 for i in range(L.n)) for j in range(L.n)]
    return tuple(_br(L, y, _tw(L, e, L.p - 1)) for e in basis)


def _chain_key(L: HomLieAlgebra, x: Sequence[int]) -> tuple:
    basis = [tuple(1 if i == j else 0 for i in range(L.n)) for j in range(L.n)]
    return tuple(chain_apply(L, x, e) for e in basis)


def ad_alpha_table(L: HomLieAlgebra) -> dict[tuple, list[Vec]]:
    """Every operator ``ad(y)·alpha^(p-1)`` mapped to the ``y`` realizing it."""
    gfp.check_budget(L.p ** L.n, "ad_alpha table")
    out: dict[tuple, list[Vec]] = {}
    for y in product(range(L.p), repeat=L.n):
        out.setdefault(_ad_alpha_key(L, y), []).append(y)
    return out


@dataclass(frozen=True)
class BruteRestrictable:
    decision: bool
    failing_element: Vec | None = None
    images: tuple[Vec, ...] | None = None


def brute_restrictable(L: HomLieAlgebra) -> BruteRestrictable:
    """Is the p-fold ad-chain of every element of the form ad(y)·alpha^(p-1)?"""
    reach = ad_alpha_table(L)
    for x in product(range(L.p), repeat=L.n):
        if _chain_key(L, x) not in reach:
            return BruteRestrictable(False, failing_element=x)
    basis = [tuple(1 if i == j else 0 for i in range(L.n)) for j in range(L.n)]
    return BruteRestrictable(True, images=tuple(reach[_chain_key(L, e)][0] for e in basis))


def brute_p_structures(L: HomLieAlgebra) -> list[PStructure]:
    """Every tuple of basis images satisfying the ad identity, by enumeration
    of all ``p^(n^2)`` candidate tuples."""
    p, n = L.p, L.n
    gfp.check_budget(p ** (n * n), "candidate image tuples")
    reach = ad_alpha_table(L)
    basis = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    targets = [_chain_key(L, e) for e in basis]
    vectors = list(product(range(p), repeat=n))
    ok_per_index = [{y for y in vectors if _ad_alpha_key(L, y) == t} for t in targets]
    out = []
    for images in product(vectors, repeat=n):
        if all(y in ok for y, ok in zip(images, ok_per_index)):
            out.append(PStructure(L, images))
    return out


def brute_center(L: HomLieAlgebra, ordinary: bool = False) -> set[Vec]:
    e = 0 if ordinary else L.p - 1
    basis = [tuple(1 if i == j else 0 for i in range(L.n)) for j in range(L.n)]
    twisted = [_tw(L, b, e) for b in basis]
    return {
        x for x in product(range(L.p), repeat=L.n) if all(not any(_br(L, x, t)) for t in twisted)
    }


def elements_of(S: Subspace) -> set[Vec]:
    return set(S.elements())


def brute_hom_jacobi(L: HomLieAlgebra) -> bool:
    p = L.p
    els = list(product(range(p), repeat=L.n))
    gfp.check_budget(len(els) ** 3, "element triples", pairs=True)
    for x, y, z in product(els, repeat=3):
        v = _add(
            p,
            _br(L, _tw(L, x), _br(L, y, z)),
            _br(L, _tw(L, y), _br(L, z, x)),
            _br(L, _tw(L, z), _br(L, x, y)),
        )
        if any(v):
            return False
    return True


def brute_is_morphism(f: HomMorphism) -> bool:
    L, M = f.source, f.target
    p = L.p

    def app(x):
        return tuple(sum(f.F[r][c] * x[c] for c in range(L.n)) % p for r in range(M.n))

    els = list(product(range(p), repeat=L.n))
    if any(app(_tw(L, x)) != _tw(M, app(x)) for x in els):
        return False
    return all(app(_br(L, x, y)) == _br(M, app(x), app(y)) for x in els for y in els)


def enumerate_morphisms(L: HomLieAlgebra, M: HomLieAlgebra, cap: int | None = None) -> list[HomMorphism]:
    """Every Hom-Lie morphism ``L -> M`` (basis-level check over all matrices)."""
    p = L.p
    cap = gfp.LIMITS.budget if cap is None else cap
    if p ** (L.n * M.n) > cap:
        raise CapExceeded(f"{p ** (L.n * M.n)} candidate matrices exceed {cap}")
    E = [tuple(1 if i == j else 0 for i in range(L.n)) for j in range(L.n)]
    out = []
    for entries in product(range(p), repeat=L.n * M.n):
        F = tuple(tuple(entries[r * L.n:(r + 1) * L.n]) for r in range(M.n))

        def app(x):
            return tuple(sum(F[r][c] * x[c] for c in range(L.n)) % p for r in range(M.n))

        if any(app(_tw(L, e)) != _tw(M, app(e)) for e in E):
            continue
        if all(app(L.c[i][j]) == _br(M, app(E[i]), app(E[j])) for i in range(L.n) for j in range(L.n)):
            out.append(HomMorphism(L, M, F))
    return out


def find_isomorphism(G1: HomLieAlgebra, G2: HomLieAlgebra) -> HomMorphism | None:
    if G1.n != G2.n or G1.p != G2.p:
        return None
    for f in enumerate_morphisms(G1, G2):
        if gfp.is_invertible(G1.p, f.F):
            return f
    return None


def all_hom_lie_algebras(p: int, n: int, names: Sequence[str] | None = None) -> Iterator[HomLieAlgebra]:
    """Every multiplicative Hom-Lie algebra structure on GF(p)^n."""
    names = tuple(names or (f"e{i + 1}" for i in range(n)))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    gfp.check_budget(p ** (n * len(pairs) + n * n), "structure enumeration")
    for consts in product(product(range(p), repeat=n), repeat=len(pairs)):
        for entries in product(range(p), repeat=n * n):
            alpha = tuple(tuple(entries[r * n:(r + 1) * n]) for r in range(n))
            L = HomLieAlgebra.from_brackets(p, names, dict(zip(pairs, consts)), alpha)
            if axiom_report(L).valid:
                yield L


def brute_p_closure(P: PStructure, generators: Sequence[Sequence[int]]) -> set[Vec]:
    """Intersection of all p-subalgebras containing the generators."""
    from .envelopes import subspaces

    L = P.algebra
    T = oracle_table(P)
    best: set[Vec] | None = None
    gens = [tuple(g) for g in generators]
    for k in range(L.n + 1):
        for rows in subspaces(L.p, L.n, k):
            S = Subspace(L.p, L.n, rows)
            if not all(S.contains(g) for g in gens):
                continue
            els = set(S.elements())
            if all(_tw(L, x) in els and T[x] in els for x in els) and all(
                _br(L, x, y) in els for x in els for y in els
            ):
                best = els if best is None else best & els
    return best if best is not None else set()


# --- generators ---------------------------------------------------------------------

CONSTRUCTIONS = ("yau-twist", "random-multiplicative", "nilpotent", "direct-sum")


@dataclass(frozen=True)
class GenSpec:
    p: int
    dim: int
    seed: int = 0
    construction: str = "yau-twist"
    count: int = 1

    def __post_init__(self) -> None:
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")
        gfp.check_modulus(self.p)
        if self.dim < 1:
            raise ValueError("dimension must be positive")


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


def _lie_pieces(p: int) -> dict[int, list[Callable[[], HomLieAlgebra]]]:
    from . import fixtures as fx

    pieces: dict[int, list[Callable[[], HomLieAlgebra]]] = {
        1: [lambda: fx.ab(1, p)],
        2: [lambda: fx.ab(2, p), lambda: fx.nonab2(p)],
        3: [lambda: fx.heis3(p)],
    }
    pieces[3].append(fx.nr3 if p == 2 else (lambda: fx.sl2(p)))
    return pieces


def _random_invertible(rng: random.Random, p: int, n: int) -> tuple:
    while True:
        T = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        if gfp.is_invertible(p, T):
            return T


def random_lie(rng: random.Random, p: int, n: int) -> HomLieAlgebra:
    """A direct sum of small catalogue Lie algebras in a random basis."""
    pieces = _lie_pieces(p)
    parts = []
    left = n
    while left:
        size = rng.choice([s for s in pieces if s <= left])
        parts.append(rng.choice(pieces[size])())
        left -= size
    L = parts[0]
    for M in parts[1:]:
        L = direct_sum(L, M)
    return change_basis(L, _random_invertible(rng, p, n), _names(n))


def _lie_morphisms(rng: random.Random, L: HomLieAlgebra, tries: int = 2000) -> list:
    from .core import is_lie_morphism

    p, n = L.p, L.n
    if p ** (n * n) <= 4096:
        cands = (tuple(tuple(e[r * n:(r + 1) * n]) for r in range(n)) for e in product(range(p), repeat=n * n))
        return [A for A in cands if is_lie_morphism(L, A)]
    found = [gfp.identity(n), gfp.zero_mat(n)]
    for _ in range(tries):
        A = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        if is_lie_morphism(L, A):
            found.append(A)
    return found


def _yau(rng: random.Random, p: int, n: int) -> HomLieAlgebra:
    lie = random_lie(rng, p, n)
    return yau_twist(lie, rng.choice(_lie_morphisms(rng, lie)))


def _random_multiplicative(rng: random.Random, p: int, n: int, attempts: int) -> HomLieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(attempts):
        density = rng.random()
        brackets = {
            ij: tuple(rng.randrange(p) if rng.random() < density else 0 for _ in range(n)) for ij in pairs
        }
        alpha = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        L = HomLieAlgebra.from_brackets(p, _names(n), brackets, alpha)
        if axiom_report(L).valid:
            return L
    raise NotFound(f"no multiplicative Hom-Lie algebra after {attempts} attempts", attempts)


def _nilpotent(rng: random.Random, p: int, n: int, attempts: int) -> HomLieAlgebra:
    from .core import lower_central_series

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(attempts):
        brackets = {}
        for i, j in pairs:
            brackets[(i, j)] = tuple(rng.randrange(p) if k > j else 0 for k in range(n))
        lie = HomLieAlgebra.from_brackets(p, _names(n), brackets)
        rep = axiom_report(lie)
        series = lower_central_series(lie)
        if rep.hom_jacobi and len(series.terms) <= p + 1 and series.nilpotent:
            return yau_twist(lie, rng.choice(_lie_morphisms(rng, lie)))
    raise NotFound(f"no nilpotent instance after {attempts} attempts", attempts)


def random_instance(spec: GenSpec, index: int = 0, attempts: int = 20000) -> tuple[HomLieAlgebra, PStructure | None]:
    """A deterministic instance for ``spec`` (and ``index`` within its count),
    together with a p-structure whenever the algebra is restrictable."""
    rng = random.Random(f"{spec.construction}|{spec.p}|{spec.dim}|{spec.seed}|{index}")
    p, n = spec.p, spec.dim
    if spec.construction == "yau-twist":
        L = _yau(rng, p, n)
    elif spec.construction == "random-multiplicative":
        L = _random_multiplicative(rng, p, n, attempts)
    elif spec.construction == "nilpotent":
        L = _nilpotent(rng, p, n, attempts)
    else:
        if n < 2:
            L = _yau(rng, p, n)
        else:
            a = rng.randrange(1, n)
            L = direct_sum(_yau(rng, p, a), _yau(rng, p, n - a))
            L = HomLieAlgebra(p, _names(n), L.c, L.alpha)
    cert = is_restrictable(L)
    return L, cert.witness


def generate(spec: GenSpec) -> list[tuple[HomLieAlgebra, PStructure | None]]:
    return [random_instance(spec, k) for k in range(spec.count)]


def default_corpus() -> list[GenSpec]:
    specs = []
    for construction in CONSTRUCTIONS:
        specs.append(GenSpec(2, 2, 1, construction, 2))
        specs.append(GenSpec(2, 3, 2, construction, 2))
        specs.append(GenSpec(3, 2, 3, construction, 1))
    specs.append(GenSpec(3, 3, 4, "nilpotent", 1))
    specs.append(GenSpec(3, 3, 5, "yau-twist", 1))
    return specs


def theorem_suite(corpus: Sequence[GenSpec] | None = None, only=None, seed: int = 0):
    """Run the property suite of :mod:`homlie.suite` over ``corpus`` (the
    default corpus when omitted) plus the named fixtures."""
    from .suite import run

    return run(corpus, only=only, seed=seed)
