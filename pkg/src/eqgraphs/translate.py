"""Reading diagrams as formulas.

Two readings are provided.  ``to_formula`` is the equilibrium reading: a
conditional reads as a universally closed implication from its antecedent to
the disjunction of its consequents.  ``to_classical_formula`` treats every
rectangle as one more cut, which gives the classical existential-graph
reading of the same drawing.  The two are classically equivalent.
"""
from __future__ import annotations

from .diagram import Conditional, Diagram, EqLink, LineRef, PredApp, Region, validate
from .errors import ValidationError
from .formula import (
    Atom, Const, Eq, Exists, Forall, Formula, Implies, Var, conjoin, disjoin, neg,
)

__all__ = ["to_formula", "to_classical_formula"]


def _term(arg):
    if isinstance(arg, LineRef):
        return Var(arg.name)
    return Const(arg.name)


def _quantify(kind, names, body):
    for name in sorted(names, reverse=True):
        body = kind(name, body)
    return body


def _element(el, read_conditional) -> Formula:
    if isinstance(el, PredApp):
        return Atom(el.pred, tuple(_term(a) for a in el.args))
    if isinstance(el, EqLink):
        return Eq(_term(el.left), _term(el.right))
    return read_conditional(el)


def _checked(d: Diagram):
    problems = validate(d)
    if problems:
        raise ValidationError(problems)


# -- equilibrium reading -----------------------------------------------------

def _region_qel(region: Region) -> Formula:
    body = conjoin(_element(el, _conditional_qel) for el in region.elements)
    return _quantify(Exists, region.lines, body)


def _conditional_qel(c: Conditional) -> Formula:
    ant = c.antecedent
    head = disjoin(_region_qel(r) for r in c.consequents)
    if ant.elements:
        body = Implies(conjoin(_element(el, _conditional_qel) for el in ant.elements), head)
    else:
        body = head
    return _quantify(Forall, ant.lines, body)


def to_formula(d: Diagram) -> Formula:
    _checked(d)
    return _region_qel(d.page)


# -- classical reading -------------------------------------------------------

def _region_classical(region: Region) -> Formula:
    body = conjoin(_element(el, _conditional_classical) for el in region.elements)
    return _quantify(Exists, region.lines, body)


def _conditional_classical(c: Conditional) -> Formula:
    ant = c.antecedent
    parts = [_element(el, _conditional_classical) for el in ant.elements]
    parts += [neg(_region_classical(r)) for r in c.consequents]
    return neg(_quantify(Exists, ant.lines, conjoin(parts)))


def to_classical_formula(d: Diagram) -> Formula:
    _checked(d)
    return _region_classical(d.page)
