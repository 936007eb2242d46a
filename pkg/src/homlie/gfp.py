"""Exact arithmetic over the prime field GF(p).

Scalars are plain ``int`` residues in ``[0, p)``.  Vectors are tuples of
residues and matrices are tuples of row tuples.  Every routine takes the
modulus explicitly so that values stay plain immutable data; the
:class:`GF` object bundles the modulus with scalar operations and is the
single place where a non-prime field would plug in later.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, DegreeOverflow, DimensionError

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


@dataclass(frozen=True)
class Limits:
    """Desk-scale caps.  ``budget`` bounds element-count enumerations."""

    max_p: int = 13
    max_dim: int = 16
    budget: int = 2 ** 16
    pair_budget: int = 2 ** 20


LIMITS = Limits()
_UNCAPPED = Limits(max_p=10 ** 9, max_dim=10 ** 6, budget=2 ** 40, pair_budget=2 ** 60)


def set_limits(limits: Limits | None = None, *, uncapped: bool = False) -> Limits:
    """Replace the global caps; returns the previous value."""
    global LIMITS
    old = LIMITS
    LIMITS = _UNCAPPED if uncapped else (limits or Limits())
    return old


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_modulus(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    if p > LIMITS.max_p:
        raise CapExceeded(f"p={p} exceeds cap max_p={LIMITS.max_p}")


def check_budget(count: int, what: str = "enumeration", pairs: bool = False) -> None:
    cap = LIMITS.pair_budget if pairs else LIMITS.budget
    if count > cap:
        raise CapExceeded(f"{what} needs {count} items, budget is {cap}")


@dataclass(frozen=True)
class GF:
    """The prime field GF(p); scalar operations on int residues."""

    p: int
    _inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_modulus(self.p)
        inv = [0] + [pow(a, self.p - 2, self.p) for a in range(1, self.p)]
        object.__setattr__(self, "_inverses", tuple(inv))

    def __call__(self, a: int) -> int:
        return a % self.p

    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return self._inverses[a]

    def pow(self, a: int, e: int) -> int:
        return pow(a % self.p, e, self.p)

    def frobenius(self, a: int) -> int:
        """``a**p``; the identity map on GF(p)."""
        return pow(a % self.p, self.p, self.p)


# --- vectors ---------------------------------------------------------------

def vec(p: int, entries: Iterable[int]) -> Vec:
    return tuple(int(a) % p for a in entries)


def zero_vec(n: int) -> Vec:
    return (0,) * n


def unit_vec(n: int, j: int) -> Vec:
    return tuple(1 if i == j else 0 for i in range(n))


def vadd(p: int, u: Sequence[int], v: Sequence[int]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} != {len(v)}")
    return tuple((a + b) % p for a, b in zip(u, v))


def vsub(p: int, u: Sequence[int], v: Sequence[int]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} != {len(v)}")
    return tuple((a - b) % p for a, b in zip(u, v))


def vscale(p: int, c: int, v: Sequence[int]) -> Vec:
    return tuple(c * a % p for a in v)


def vsum(p: int, vectors: Iterable[Sequence[int]], n: int) -> Vec:
    acc = [0] * n
    for v in vectors:
        for i, a in enumerate(v):
            acc[i] += a
    return tuple(a % p for a in acc)


def is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def all_vectors(p: int, n: int) -> Iterator[Vec]:
    """Every vector of GF(p)^n in lexicographic order."""
    check_budget(p ** n, f"enumerating GF({p})^{n}")
    return product(range(p), repeat=n)


# --- matrices --------------------------------------------------------------

def mat(p: int, rows: Iterable[Iterable[int]]) -> Mat:
    out = tuple(vec(p, r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise DimensionError("matrix rows have different lengths")
    return out


def zero_mat(m: int, n: int | None = None) -> Mat:
    return tuple((0,) * (m if n is None else n) for _ in range(m))


def identity(n: int) -> Mat:
    return tuple(unit_vec(n, i) for i in range(n))


def shape(A: Sequence[Sequence[int]]) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def transpose(A: Sequence[Sequence[int]]) -> Mat:
    return tuple(zip(*A)) if A else ()


def from_columns(columns: Sequence[Sequence[int]], nrows: int | None = None) -> Mat:
    if not columns:
        return tuple(() for _ in range(nrows or 0))
    return tuple(tuple(col[i] for col in columns) for i in range(len(columns[0])))


def column(A: Sequence[Sequence[int]], j: int) -> Vec:
    return tuple(row[j] for row in A)


def mat_vec(p: int, A: Sequence[Sequence[int]], v: Sequence[int]) -> Vec:
    if A and len(A[0]) != len(v):
        raise DimensionError(f"cannot apply {shape(A)} matrix to length-{len(v)} vector")
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in A)


def mat_mul(p: int, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Mat:
    if A and len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {shape(A)} by {shape(B)}")
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in Bt) for row in A)


def mat_add(p: int, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Mat:
    if shape(A) != shape(B):
        raise DimensionError(f"shapes differ: {shape(A)} vs {shape(B)}")
    return tuple(vadd(p, r, s) for r, s in zip(A, B))


def mat_sub(p: int, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Mat:
    if shape(A) != shape(B):
        raise DimensionError(f"shapes differ: {shape(A)} vs {shape(B)}")
    return tuple(vsub(p, r, s) for r, s in zip(A, B))


def mat_scale(p: int, c: int, A: Sequence[Sequence[int]]) -> Mat:
    return tuple(vscale(p, c, r) for r in A)


def mat_pow(p: int, A: Sequence[Sequence[int]], e: int) -> Mat:
    n = len(A)
    result = identity(n)
    base = tuple(tuple(r) for r in A)
    while e > 0:
        if e & 1:
            result = mat_mul(p, result, base)
        base = mat_mul(p, base, base)
        e >>= 1
    return result


def block_diag(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Mat:
    m, n = len(A), len(B)
    rows = [tuple(r) + (0,) * n for r in A]
    rows += [(0,) * m + tuple(r) for r in B]
    return tuple(rows)


# --- elimination -----------------------------------------------------------

def rref(p: int, rows: Iterable[Sequence[int]], ncols: int | None = None) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    M = [[a % p for a in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [a * inv % p for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r]), tuple(pivots)


def rank(p: int, A: Sequence[Sequence[int]]) -> int:
    return len(rref(p, A)[1])


def nullspace(p: int, A: Sequence[Sequence[int]], ncols: int | None = None) -> Mat:
    """Basis of ``{x : A x = 0}`` in reduced echelon form."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    R, pivots = rref(p, A, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for row, pc in zip(R, pivots):
            x[pc] = -row[f] % p
        basis.append(x)
    return rref(p, basis, n)[0]


def inverse(p: int, A: Sequence[Sequence[int]]) -> Mat:
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("only square matrices are invertible")
    aug = [tuple(r) + unit_vec(n, i) for i, r in enumerate(A)]
    R, pivots = rref(p, aug, n)
    if pivots != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(row[n:] for row in R)


def is_invertible(p: int, A: Sequence[Sequence[int]]) -> bool:
    return len(A) == (len(A[0]) if A else 0) and rank(p, A) == len(A)


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of ``A x = b``: ``particular + span(kernel_basis)``."""

    solvable: bool
    particular: Vec | None
    kernel_basis: Mat

    def size(self, p: int) -> int:
        return p ** len(self.kernel_basis) if self.solvable else 0

    def elements(self, p: int) -> Iterator[Vec]:
        if not self.solvable:
            return
        for coeffs in product(range(p), repeat=len(self.kernel_basis)):
            x = self.particular
            for c, k in zip(coeffs, self.kernel_basis):
                if c:
                    x = vadd(p, x, vscale(p, c, k))
            yield x


def solve_affine(p: int, A: Sequence[Sequence[int]], b: Sequence[int], ncols: int | None = None) -> SolutionSet:
    """Solve ``A x = b`` exactly; free variables are set to zero."""
    if len(A) != len(b):
        raise DimensionError(f"{len(A)} equations but right-hand side of length {len(b)}")
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    aug = [tuple(r) + (bi,) for r, bi in zip(A, b)]
    R, pivots = rref(p, aug, n + 1)
    if pivots and pivots[-1] == n:
        return SolutionSet(False, None, ())
    x = [0] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    kernel = nullspace(p, [r[:n] for r in R], n)
    return SolutionSet(True, tuple(x), kernel)


# --- polynomial vectors in one variable k ----------------------------------

Poly = tuple[int, ...]


def _trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(p: int, a: Sequence[int], b: Sequence[int]) -> Poly:
    m = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(m)])


def poly_mul(p: int, a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def poly_eval(p: int, a: Sequence[int], k: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * k + c) % p
    return acc


@dataclass(frozen=True)
class PolyVec:
    """A vector whose coordinates are polynomials in ``k`` over GF(p)."""

    p: int
    coords: tuple[Poly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(_trim([c % self.p for c in q]) for q in self.coords))

    @classmethod
    def constant(cls, p: int, v: Sequence[int]) -> "PolyVec":
        return cls(p, tuple((a,) for a in v))

    @property
    def degree(self) -> int:
        return max((len(q) - 1 for q in self.coords), default=-1)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "PolyVec") -> "PolyVec":
        return PolyVec(self.p, tuple(poly_add(self.p, a, b) for a, b in zip(self.coords, other.coords)))

    def at(self, k: int) -> Vec:
        return tuple(poly_eval(self.p, q, k) for q in self.coords)


PolyMat = tuple[tuple[Poly, ...], ...]


def affine_poly_matrix(p: int, const: Sequence[Sequence[int]], linear: Sequence[Sequence[int]]) -> PolyMat:
    """The matrix ``const + k * linear`` with polynomial entries."""
    return tuple(tuple(_trim([a % p, b % p]) for a, b in zip(r0, r1)) for r0, r1 in zip(const, linear))


def poly_apply(p: int, M: Sequence[Sequence[Sequence[int]]], v: PolyVec, max_degree: int | None = None) -> PolyVec:
    """Exact product of a polynomial matrix with a polynomial vector."""
    if M and len(M[0]) != len(v):
        raise DimensionError(f"cannot apply {len(M)}x{len(M[0])} matrix to length-{len(v)} vector")
    cap = p - 1 if max_degree is None else max_degree
    out = []
    for row in M:
        acc: Poly = ()
        for entry, coord in zip(row, v.coords):
            if entry and coord:
                acc = poly_add(p, acc, poly_mul(p, entry, coord))
        out.append(acc)
    result = PolyVec(p, tuple(out))
    if result.degree > cap:
        raise DegreeOverflow(f"product has degree {result.degree} > {cap}")
    return result


def poly_coeff(v: PolyVec, i: int) -> Vec:
    """The vector of ``k**i`` coefficients of ``v``."""
    if not 0 <= i <= v.p - 1:
        raise IndexError(f"coefficient index {i} outside 0..{v.p - 1}")
    return tuple(q[i] if i < len(q) else 0 for q in v.coords)
