"""Exception hierarchy.  Every error the library raises on purpose derives
from :class:`HomLieError` so callers (the CLI in particular) can map them
to exit codes."""
from __future__ import annotations

from typing import Any


class HomLieError(Exception):
    pass


class DimensionError(HomLieError, ValueError):
    pass


class CapExceeded(HomLieError):
    """A desk-scale cap (modulus, dimension or enumeration budget) was hit."""


class DegreeOverflow(HomLieError, ArithmeticError):
    """A polynomial product exceeded its degree bound; indicates a logic error."""


class PreconditionError(HomLieError, ValueError):
    pass


class ModulusMismatch(PreconditionError):
    pass


class NotAMorphism(PreconditionError):
    pass


class NotAnIdeal(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


class NoSolution(HomLieError):
    """The p-th power ad-chain of basis element ``index`` is not of the form ad(y)·α^{p-1}."""

    def __init__(self, index: int, message: str = "", system: Any = None):
        self.index = index
        self.system = system
        super().__init__(message or f"no p-image exists for basis element {index}")


class InvalidTarget(PreconditionError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"prescribed image of basis element {index} violates its system")


class IllDefined(HomLieError):
    """Pushing a p-structure forward depends on the choice of representative."""

    def __init__(self, x, x_prime, message: str = ""):
        self.witness = (x, x_prime)
        super().__init__(message or f"representatives {x} and {x_prime} push to different values")


class NotInvertibleOnPreimage(HomLieError):
    pass


class ValueOutsideImage(HomLieError):
    pass


class Obstruction(HomLieError):
    """Minimization got stuck: C(G) is not inside i(L) but no admissible quotient exists."""

    def __init__(self, message: str, envelope: Any = None):
        self.envelope = envelope
        super().__init__(message)


class NotFound(HomLieError):
    def __init__(self, message: str, bound: int | None = None):
        self.bound = bound
        super().__init__(message)


class ParseError(HomLieError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


class ValidationError(HomLieError):
    def __init__(self, message: str, counterexample: Any = None):
        self.counterexample = counterexample
        super().__init__(message)
