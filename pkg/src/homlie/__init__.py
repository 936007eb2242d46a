"""Exact computations with multiplicative Hom-Lie algebras over GF(p):
axioms, p-structures, restrictability, morphisms and p-envelopes."""
from .core import (
    AxiomReport,
    HomLieAlgebra,
    HomMorphism,
    Subspace,
    axiom_report,
    center,
    centralizer,
    direct_sum,
    gl_example,
    lower_central_series,
    quotient,
    yau_twist,
)
from .envelopes import PEnvelope, check_envelope, decompose, is_minimal, minimize
from .errors import HomLieError
from .gfp import GF, LIMITS, Limits, set_limits
from .restricted import (
    PStructure,
    enumerate_p_structures,
    is_restrictable,
    p_closure,
    p_eval,
    s_terms,
    synthesize_p_structure,
    verify_p_structure,
)

__version__ = "0.1.0"
