"""Seeded random instances for exhaustive cross-checks.

All generators take a ``random.Random`` so a run is reproducible from its seed.
"""
from __future__ import annotations

import random

from .diagram import Conditional, ConstRef, Diagram, EqLink, LineRef, PredApp, Region, RegionKind
from .formula import (
    BOT, TOP, And, Atom, Const, Eq, Exists, Forall, Formula, Implies, Or, Signature, Var, neg,
)
from .semantics import HTStructure

__all__ = [
    "DEFAULT_PREDICATES", "random_ground_formula", "random_sentence", "random_ht_structure", "random_diagram",
]

DEFAULT_PREDICATES = {"p": 1, "q": 2, "r": 0}


def random_ground_formula(rng: random.Random, atoms, depth: int = 4) -> Formula:
    """A quantifier-free formula over ``atoms``; may include constant equalities."""
    if depth <= 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.08:
            return TOP
        if roll < 0.16:
            return BOT
        if roll < 0.24:
            return Eq(Const(rng.choice("ab")), Const(rng.choice("ab")))
        return rng.choice(atoms)
    op = rng.choice([And, Or, Implies, Implies, "not"])
    if op == "not":
        return neg(random_ground_formula(rng, atoms, depth - 1))
    return op(random_ground_formula(rng, atoms, depth - 1), random_ground_formula(rng, atoms, depth - 1))


def random_sentence(rng: random.Random, predicates=None, constants=("a", "b"), depth: int = 4,
                    variables=("X", "Y")) -> Formula:
    """A closed formula mixing quantifiers, connectives, atoms and equalities."""
    predicates = predicates or DEFAULT_PREDICATES

    def term(scope):
        if scope and rng.random() < 0.7:
            return Var(rng.choice(scope))
        return Const(rng.choice(constants))

    def go(d, scope):
        if d <= 0 or rng.random() < 0.15:
            roll = rng.random()
            if roll < 0.05:
                return TOP
            if roll < 0.1:
                return BOT
            if roll < 0.2:
                return Eq(term(scope), term(scope))
            name = rng.choice(sorted(predicates))
            return Atom(name, tuple(term(scope) for _ in range(predicates[name])))
        roll = rng.random()
        if roll < 0.3:
            var = rng.choice(variables)
            kind = Forall if rng.random() < 0.5 else Exists
            return kind(var, go(d - 1, scope + [var]))
        if roll < 0.4:
            return neg(go(d - 1, scope))
        op = rng.choice([And, Or, Implies])
        return op(go(d - 1, scope), go(d - 1, scope))

    return go(depth, [])


def random_ht_structure(rng: random.Random, sig: Signature) -> HTStructure:
    atoms = sig.atoms()
    there = frozenset(a for a in atoms if rng.random() < 0.5)
    here = frozenset(a for a in there if rng.random() < 0.5)
    return HTStructure(sig, here, there)


def random_diagram(rng: random.Random, predicates=None, max_lines: int = 2, max_depth: int = 3,
                   constants=("a", "b")) -> Diagram:
    """A valid diagram with at most ``max_lines`` identity lines and conditional depth ``max_depth``."""
    predicates = predicates or DEFAULT_PREDICATES
    pool = ["X", "Y", "Z", "W"][:max_lines]
    used: list[str] = []

    def arg(scope):
        if scope and rng.random() < 0.8:
            return LineRef(rng.choice(scope))
        return ConstRef(rng.choice(constants))

    def region(kind, depth, scope, min_elems=0, max_elems=3):
        lines = []
        if len(used) < len(pool) and rng.random() < 0.45:
            name = pool[len(used)]
            used.append(name)
            lines.append(name)
        scope = scope + lines
        elements = []
        for _ in range(rng.randint(min_elems, max_elems)):
            roll = rng.random()
            if depth < max_depth and roll < 0.4:
                elements.append(conditional(depth + 1, scope))
            elif 0.4 <= roll < 0.52:
                elements.append(EqLink(arg(scope), arg(scope)))
            else:
                name = rng.choice(sorted(predicates))
                elements.append(PredApp(name, tuple(arg(scope) for _ in range(predicates[name]))))
        return Region(kind, tuple(lines), tuple(elements)), scope

    def conditional(depth, scope):
        ant, inner = region(RegionKind.ANTECEDENT, depth, scope)
        cons = tuple(region(RegionKind.CONSEQUENT, depth, inner, 0, 2)[0] for _ in range(rng.randint(0, 2)))
        return Conditional(ant, cons, negation=not cons and rng.random() < 0.5)

    page, _ = region(RegionKind.PAGE, 0, [], 1, 3)
    return Diagram(page)
