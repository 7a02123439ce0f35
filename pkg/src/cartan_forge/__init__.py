"""Exact variational calculus on jet spaces.

Differential polynomials and forms in the adapted (dx, theta) basis, the
Euler operator, integration by parts, Noether correction forms, restriction
to solved-form PDE systems and internal Lagrangians.
"""

from .equations import EqSystem, Extension, HypothesisError, IdealWitness, NonTerminationError, extend_form
from .expr import Expr
from .forms import (DForm, EvolutionaryField, contact_part, de_rham, horizontal_diff,
                    horizontal_part, in_CpLambda, interior_evolutionary, lie_evolutionary, wedge)
from .jet import JetSpace, JetVar, MultiIndex
from .kernels import BACKEND
from .lagrangian import (LagrangianClass, PresymplecticRep, action_from_internal, gauge_compare,
                         internal_of_lagrangian, is_internal_lagrangian, presymplectic_cocycle_check,
                         presymplectic_of, shift_witness)
from .parser import ParseError, parse, parse_form
from .problem import Problem, load, loads
from .variational import (CDiffOp, SourceForm, adjoint, euler, horizontal_primitive, ibp_operator,
                          ibp_scalar, linearization, noether_form, noether_identity_check)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CDiffOp", "DForm", "EqSystem", "EvolutionaryField", "Expr", "Extension",
    "HypothesisError", "IdealWitness", "JetSpace", "JetVar", "LagrangianClass", "MultiIndex",
    "NonTerminationError", "ParseError", "PresymplecticRep", "Problem", "SourceForm",
    "action_from_internal", "adjoint", "contact_part", "de_rham", "euler", "extend_form",
    "gauge_compare", "horizontal_diff", "horizontal_part", "horizontal_primitive", "ibp_operator",
    "ibp_scalar", "in_CpLambda", "interior_evolutionary", "internal_of_lagrangian",
    "is_internal_lagrangian", "lie_evolutionary", "linearization", "load", "loads",
    "noether_form", "noether_identity_check", "parse", "parse_form", "presymplectic_cocycle_check",
    "presymplectic_of", "shift_witness", "wedge",
]
