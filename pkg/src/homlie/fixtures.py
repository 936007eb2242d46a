"""Small named algebras used throughout the tests and the CLI.

``nonab2``  basis h, x with [h, x] = x and identity twist.
``ex34``    nonab2 twisted by h -> h, x -> 0 (zero bracket, singular twist).
``heis3``   Heisenberg algebra e, f, z with [e, f] = z.
``nr3``     x, u, v with [x, u] = v, [x, v] = u + v over GF(2); not restrictable.
``g2``      2-dim abelian over GF(2) with a^[2] = b, b^[2] = 0.
``ab(n)``   n-dim abelian, identity twist.
``sl2``     h, e, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h (odd p).
"""
from __future__ import annotations

from . import gfp
from .core import HomLieAlgebra, yau_twist
from .restricted import PStructure


def nonab2(p: int = 2) -> HomLieAlgebra:
    return HomLieAlgebra.from_brackets(p, ("h", "x"), {(0, 1): (0, 1)})


def nonab2_p(p: int = 2) -> PStructure:
    """h -> h, x -> 0."""
    return PStructure(nonab2(p), ((1, 0), (0, 0)))


def ex34(p: int = 2) -> HomLieAlgebra:
    return yau_twist(nonab2(p), ((1, 0), (0, 0)))


def heis3(p: int = 2) -> HomLieAlgebra:
    return HomLieAlgebra.from_brackets(p, ("e", "f", "z"), {(0, 1): (0, 0, 1)})


def heis3_p(p: int = 2, e_image=(0, 0, 1)) -> PStructure:
    """e -> z, f -> 0, z -> 0 by default."""
    return PStructure(heis3(p), (tuple(e_image), (0, 0, 0), (0, 0, 0)))


def nr3() -> HomLieAlgebra:
    return HomLieAlgebra.from_brackets(2, ("x", "u", "v"), {(0, 1): (0, 0, 1), (0, 2): (0, 1, 1)})


def ab(n: int = 1, p: int = 2, names: tuple[str, ...] | None = None) -> HomLieAlgebra:
    if names is None:
        names = ("a",) if n == 1 else tuple(f"a{i + 1}" for i in range(n))
    return HomLieAlgebra.from_brackets(p, names, {}, gfp.identity(n))


def ab1(p: int = 2) -> HomLieAlgebra:
    return ab(1, p, ("a",))


def g2() -> HomLieAlgebra:
    return ab(2, 2, ("a", "b"))


def g2_p() -> PStructure:
    return PStructure(g2(), ((0, 1), (0, 0)))


def sl2(p: int = 3) -> HomLieAlgebra:
    return HomLieAlgebra.from_brackets(
        p, ("h", "e", "f"), {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}
    )


ALGEBRAS = {
    "nonab2": nonab2,
    "ex34": ex34,
    "heis3": heis3,
    "nr3": lambda p=2: nr3(),
    "ab1": ab1,
    "g2": lambda p=2: g2(),
    "sl2": sl2,
}
