"""Equilibrium existential graphs: diagrams, their formula readings, and
here-and-there / equilibrium model checking over finite Herbrand domains."""

from .diagram import Diagram, parse_diagram, print_diagram, validate
from .errors import (
    ArityError, EmptyDomainError, EqGraphError, FreeVariableError, GuardExceeded, ParseError, ValidationError,
)
from .formula import Signature, free_vars, parse_formula, print_formula, signature_of
from .render import layout, to_svg
from .semantics import (
    HTStructure, World, equilibrium_models, eval_classical, eval_ht, ground, ht_equivalent, ht_models,
    models_classical,
)
from .translate import to_classical_formula, to_formula

__version__ = "0.1.0"
