"""Classical, here-and-there and equilibrium semantics over Herbrand domains.

``eval_classical`` and ``eval_ht`` follow the satisfaction clauses one by
one and are meant to be read.  Model enumeration goes through a separate
search: the ground sentence is compiled once, and a depth-first walk over
atom assignments cuts any branch whose three-valued (Kleene) value is
already false.  The cut is sound because a branch is only dropped when
every completion falsifies the sentence.

Interpretations are ``frozenset``s of ground atoms.  Results are listed in
ascending order of the bitmask over the sorted atom list (bit ``i`` is the
``i``-th atom of ``Signature.atoms()``).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyDomainError, FreeVariableError, GuardExceeded
from .formula import (
    And, Atom, Bot, Const, Eq, Exists, Forall, Formula, Implies, Or, Signature, Top, Var,
    conjoin, conjuncts, disjoin, free_vars, has_quantifiers, signature_of, substitute,
)

__all__ = [
    "World", "HTStructure", "DEFAULT_GUARD",
    "ground", "eval_classical", "eval_ht", "facts",
    "models_classical", "ht_models", "equilibrium_models", "ht_equivalent", "classically_equivalent",
    "classical_difference",
]

DEFAULT_GUARD = 16


class World(Enum):
    HERE = "h"
    THERE = "t"


H, T = World.HERE, World.THERE


@dataclass(frozen=True)
class HTStructure:
    domain: Signature
    here: frozenset
    there: frozenset

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError("here-world atoms must be a subset of there-world atoms")

    @property
    def total(self) -> bool:
        return self.here == self.there


# -- grounding ---------------------------------------------------------------

def ground(f: Formula, sig: Signature) -> Formula:
    """Expand quantifiers over ``sig.constants``; the result is quantifier-free."""
    free = free_vars(f)
    if free:
        raise FreeVariableError(free)
    if has_quantifiers(f) and not sig.constants:
        raise EmptyDomainError()
    domain = [Const(c) for c in sig.constants]

    def go(g):
        if isinstance(g, Forall):
            return conjoin(go(substitute(g.body, g.var, d)) for d in domain)
        if isinstance(g, Exists):
            return disjoin(go(substitute(g.body, g.var, d)) for d in domain)
        if isinstance(g, (And, Or, Implies)):
            return type(g)(go(g.left), go(g.right))
        return g

    return go(f)


# -- literal evaluators ------------------------------------------------------

def _not_ground(f):
    return ValueError(f"formula is not ground: {f}")


def _check_term(t):
    if isinstance(t, Var):
        raise ValueError(f"variable {t.name} in a ground formula")


def eval_classical(interp, f: Formula, sig: Signature | None = None) -> bool:
    """Truth of ground ``f`` in the classical Herbrand structure ``interp``."""
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        for a in f.args:
            _check_term(a)
        return f in interp
    if isinstance(f, Eq):
        _check_term(f.left)
        _check_term(f.right)
        return f.left == f.right
    if isinstance(f, And):
        return eval_classical(interp, f.left) and eval_classical(interp, f.right)
    if isinstance(f, Or):
        return eval_classical(interp, f.left) or eval_classical(interp, f.right)
    if isinstance(f, Implies):
        return not eval_classical(interp, f.left) or eval_classical(interp, f.right)
    raise _not_ground(f)


def eval_ht(m: HTStructure, w, f: Formula) -> bool:
    """``m, w |= f`` for ground ``f``; ``w`` is a ``World`` or ``"h"``/``"t"``."""
    w = World(w)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        for a in f.args:
            _check_term(a)
        return f in (m.here if w is H else m.there)
    if isinstance(f, Eq):
        _check_term(f.left)
        _check_term(f.right)
        return f.left == f.right
    if isinstance(f, And):
        return eval_ht(m, w, f.left) and eval_ht(m, w, f.right)
    if isinstance(f, Or):
        return eval_ht(m, w, f.left) or eval_ht(m, w, f.right)
    if isinstance(f, Implies):
        if w is T:
            return not eval_ht(m, T, f.left) or eval_ht(m, T, f.right)
        return eval_ht(m, T, f) and (not eval_ht(m, H, f.left) or eval_ht(m, H, f.right))
    raise _not_ground(f)


def facts(g: Formula) -> frozenset:
    """Atoms that are top-level conjuncts of ``g``; every model contains them at both worlds."""
    return frozenset(c for c in conjuncts(g) if isinstance(c, Atom))


# -- compiled search ---------------------------------------------------------

_TOP, _BOT, _ATOM, _AND, _OR, _IMP = range(6)


class _Compiled:
    """A ground sentence as a tree of tuples ``(op, node_id, *payload)``.

    Nested conjunctions and disjunctions are flattened; equality between
    constants becomes a truth constant, since it holds at both worlds alike.
    """

    def __init__(self, g: Formula, atoms: list[Atom]):
        self.atoms = atoms
        self.index = {a: i for i, a in enumerate(atoms)}
        self.size = 0
        self.root = self._compile(g)

    def _new_id(self):
        self.size += 1
        return self.size - 1

    def _compile(self, g):
        if isinstance(g, Top):
            return (_TOP, self._new_id())
        if isinstance(g, Bot):
            return (_BOT, self._new_id())
        if isinstance(g, Eq):
            return (_TOP if g.left == g.right else _BOT, self._new_id())
        if isinstance(g, Atom):
            if g not in self.index:
                raise ValueError(f"atom {g} is outside the signature")
            return (_ATOM, self._new_id(), 1 << self.index[g])
        if isinstance(g, (And, Or)):
            kind = type(g)
            parts, stack = [], [g]
            while stack:
                x = stack.pop()
                if isinstance(x, kind):
                    stack.append(x.right)
                    stack.append(x.left)
                else:
                    parts.append(x)
            op = _AND if kind is And else _OR
            return (op, self._new_id(), tuple(self._compile(p) for p in parts))
        if isinstance(g, Implies):
            return (_IMP, self._new_id(), self._compile(g.left), self._compile(g.right))
        raise _not_ground(g)

    # three-valued value of the classical reading under a partial assignment
    def kleene_t(self, node, tm, fm):
        op = node[0]
        if op == _ATOM:
            b = node[2]
            return 1 if tm & b else (0 if fm & b else None)
        if op == _AND:
            res = 1
            for c in node[2]:
                v = self.kleene_t(c, tm, fm)
                if v == 0:
                    return 0
                if v is None:
                    res = None
            return res
        if op == _OR:
            res = 0
            for c in node[2]:
                v = self.kleene_t(c, tm, fm)
                if v == 1:
                    return 1
                if v is None:
                    res = None
            return res
        if op == _IMP:
            a = self.kleene_t(node[2], tm, fm)
            if a == 0:
                return 1
            b = self.kleene_t(node[3], tm, fm)
            if b == 1:
                return 1
            if a == 1 and b == 0:
                return 0
            return None
        return 1 if op == _TOP else 0

    def there_values(self, there):
        """Truth at the there-world of every node, indexed by node id."""
        out = [False] * self.size

        def go(node):
            op = node[0]
            if op == _ATOM:
                v = bool(there & node[2])
            elif op == _AND:
                v = all([go(c) for c in node[2]])
            elif op == _OR:
                v = any([go(c) for c in node[2]])
            elif op == _IMP:
                a, b = go(node[2]), go(node[3])
                v = (not a) or b
            else:
                v = op == _TOP
            out[node[1]] = v
            return v

        go(self.root)
        return out

    # three-valued value at the here-world; the there-world is fully known
    def kleene_h(self, node, tvals, tm, fm):
        op = node[0]
        if op == _ATOM:
            b = node[2]
            return 1 if tm & b else (0 if fm & b else None)
        if op == _AND:
            res = 1
            for c in node[2]:
                v = self.kleene_h(c, tvals, tm, fm)
                if v == 0:
                    return 0
                if v is None:
                    res = None
            return res
        if op == _OR:
            res = 0
            for c in node[2]:
                v = self.kleene_h(c, tvals, tm, fm)
                if v == 1:
                    return 1
                if v is None:
                    res = None
            return res
        if op == _IMP:
            if not tvals[node[1]]:
                return 0
            a = self.kleene_h(node[2], tvals, tm, fm)
            if a == 0:
                return 1
            b = self.kleene_h(node[3], tvals, tm, fm)
            if b == 1:
                return 1
            if a == 1 and b == 0:
                return 0
            return None
        return 1 if op == _TOP else 0


def _search(bits, tm, fm, check):
    """Yield every total assignment (as a true-mask) extending ``tm``/``fm`` that ``check`` accepts.

    ``bits`` lists the unassigned atom bits, most significant first, so
    assignments come out in ascending order.
    """
    v = check(tm, fm)
    if v == 0:
        return
    if v == 1:
        # every completion satisfies
        k = len(bits)
        rev = bits[::-1]
        for n in range(1 << k):
            m = tm
            for j in range(k):
                if n >> j & 1:
                    m |= rev[j]
            yield m
        return
    b, rest = bits[0], bits[1:]
    yield from _search(rest, tm, fm | b, check)
    yield from _search(rest, tm | b, fm, check)


class _Problem:
    def __init__(self, f: Formula, sig: Signature | None, guard: int | None, prune: bool):
        sig = signature_of(f) if sig is None else sig.union(signature_of(f))
        count = sig.atom_count()
        if guard is not None and count > guard:
            raise GuardExceeded(count, guard)
        self.sig = sig
        g = ground(f, sig)
        self.atoms = sig.atoms()
        self.c = _Compiled(g, self.atoms)
        self.all_mask = (1 << len(self.atoms)) - 1
        forced = 0
        if prune:
            for a in facts(g):
                forced |= 1 << self.c.index[a]
        self.forced = forced

    def bits_of(self, mask):
        return [1 << i for i in range(len(self.atoms) - 1, -1, -1) if mask >> i & 1]

    def interp(self, mask) -> frozenset:
        return frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)

    def classical(self):
        c = self.c
        free = self.bits_of(self.all_mask & ~self.forced)
        yield from _search(free, self.forced, 0, lambda tm, fm: c.kleene_t(c.root, tm, fm))

    def here_models(self, there):
        c = self.c
        tvals = c.there_values(there)
        if not tvals[c.root[1]]:
            return
        forced = self.forced & there
        free = self.bits_of(there & ~forced)
        yield from _search(free, forced, self.all_mask & ~there,
                           lambda tm, fm: c.kleene_h(c.root, tvals, tm, fm))


def models_classical(f: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD, prune=False):
    """All classical Herbrand models of sentence ``f``."""
    p = _Problem(f, sig, guard, prune)
    return [p.interp(m) for m in sorted(p.classical())]


def ht_models(f: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD, prune=False):
    """All here-and-there models as ``(here, there)`` pairs, ordered by there-mask then here-mask."""
    p = _Problem(f, sig, guard, prune)
    out = []
    for there in sorted(p.classical()):
        for here in sorted(p.here_models(there)):
            out.append((p.interp(here), p.interp(there)))
    return out


def equilibrium_models(f: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD, prune=False):
    """Stable models: total models with no here-and-there model below them."""
    p = _Problem(f, sig, guard, prune)
    out = []
    for there in sorted(p.classical()):
        if not any(here != there for here in p.here_models(there)):
            out.append(p.interp(there))
    return out


def _joint(f, g, sig):
    joint = signature_of(f).union(signature_of(g))
    return joint if sig is None else sig.union(joint)


def ht_equivalent(f: Formula, g: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD) -> bool:
    sig = _joint(f, g, sig)
    return ht_models(f, sig, guard=guard) == ht_models(g, sig, guard=guard)


def classical_difference(f: Formula, g: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD):
    """An interpretation that is a model of exactly one of ``f``, ``g``; None when they agree."""
    sig = _joint(f, g, sig)
    mf = set(models_classical(f, sig, guard=guard))
    mg = set(models_classical(g, sig, guard=guard))
    diff = mf ^ mg
    if not diff:
        return None
    atoms = sig.atoms()
    key = {a: i for i, a in enumerate(atoms)}
    return min(diff, key=lambda i: sum(1 << key[a] for a in i))


def classically_equivalent(f: Formula, g: Formula, sig: Signature | None = None, *, guard=DEFAULT_GUARD) -> bool:
    return classical_difference(f, g, sig, guard=guard) is None
