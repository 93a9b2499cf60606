"""First-order formulas over a function-free language.

Negation is not a primitive: ``not f`` is ``Implies(f, BOT)``.  Terms starting
with an uppercase letter are variables, everything else is a constant.

Concrete syntax (``;`` starts a comment)::

    formula  := impl
    impl     := disj [ "->" impl ]
    disj     := conj { "v" conj }
    conj     := unary { "&" unary }
    unary    := "not" unary | quant | "top" | "bot" | atom | "(" formula ")"
    quant    := ("forall" | "exists") VAR+ "(" formula ")"
    atom     := IDENT [ "(" term { "," term } ")" ] | term ("=" | "!=") term

Precedence is ``not`` > ``&`` > ``v`` > ``->``; ``->`` associates to the right,
``&`` and ``v`` to the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .errors import ArityError, ParseError

__all__ = [
    "Const", "Var", "Term",
    "Formula", "Top", "Bot", "TOP", "BOT", "Atom", "Eq", "And", "Or", "Implies", "Forall", "Exists",
    "Signature", "neg", "is_neg", "conjoin", "disjoin", "conjuncts",
    "parse_formula", "parse_term", "print_formula", "free_vars", "is_ground", "has_quantifiers",
    "substitute", "signature_of", "subformulas",
]


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __str__(self):
        return self.name


Term = Const | Var

_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
_CONST_RE = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")


def parse_term(name: str) -> Term:
    if _VAR_RE.match(name):
        return Var(name)
    if _CONST_RE.match(name):
        return Const(name)
    raise ParseError(f"not a term: {name!r}")


# -- formulas ----------------------------------------------------------------

class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    def __str__(self):
        return print_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: tuple[Term, ...] = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    def sort_key(self):
        return (self.pred, len(self.args), tuple(a.name for a in self.args))


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def is_neg(f: Formula) -> bool:
    return isinstance(f, Implies) and f.right == BOT and f.left != BOT


def conjoin(fs) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``TOP``."""
    fs = list(fs)
    if not fs:
        return TOP
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def disjoin(fs) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``BOT``."""
    fs = list(fs)
    if not fs:
        return BOT
    out = fs[0]
    for f in fs[1:]:
        out = Or(out, f)
    return out


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten nested ``And`` nodes, left to right."""
    out, stack = [], [f]
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.append(g.right)
            stack.append(g.left)
        else:
            out.append(g)
    return out


def subformulas(f: Formula):
    """Yield every node of ``f`` in pre-order."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, (And, Or, Implies)):
            stack.append(g.right)
            stack.append(g.left)
        elif isinstance(g, (Forall, Exists)):
            stack.append(g.body)


# -- structural utilities ----------------------------------------------------

def _term_vars(t):
    return {t.name} if isinstance(t, Var) else set()


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset(a.name for a in f.args if isinstance(a, Var))
    if isinstance(f, Eq):
        return frozenset(_term_vars(f.left) | _term_vars(f.right))
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    return frozenset()


def has_quantifiers(f: Formula) -> bool:
    return any(isinstance(g, (Forall, Exists)) for g in subformulas(f))


def is_ground(f: Formula) -> bool:
    """True when ``f`` has neither quantifiers nor variables."""
    for g in subformulas(f):
        if isinstance(g, (Forall, Exists)):
            return False
        if isinstance(g, Atom) and any(isinstance(a, Var) for a in g.args):
            return False
        if isinstance(g, Eq) and (isinstance(g.left, Var) or isinstance(g.right, Var)):
            return False
    return True


def substitute(f: Formula, var: str, term: Term) -> Formula:
    """Replace free occurrences of variable ``var`` by ``term``."""

    def sub_term(t):
        return term if isinstance(t, Var) and t.name == var else t

    def go(g):
        if isinstance(g, Atom):
            if not g.args:
                return g
            return Atom(g.pred, tuple(sub_term(a) for a in g.args))
        if isinstance(g, Eq):
            return Eq(sub_term(g.left), sub_term(g.right))
        if isinstance(g, (And, Or, Implies)):
            return type(g)(go(g.left), go(g.right))
        if isinstance(g, (Forall, Exists)):
            if g.var == var:
                return g
            return type(g)(g.var, go(g.body))
        return g

    return go(f)


def _collect(f: Formula, constants: set, arities: dict):
    for g in subformulas(f):
        if isinstance(g, Atom):
            arities.setdefault(g.pred, set()).add(len(g.args))
            constants.update(a.name for a in g.args if isinstance(a, Const))
        elif isinstance(g, Eq):
            constants.update(t.name for t in (g.left, g.right) if isinstance(t, Const))


def check_arities(arities: dict) -> dict[str, int]:
    for pred, ks in sorted(arities.items()):
        if len(ks) > 1:
            raise ArityError(pred, ks)
    return {pred: next(iter(ks)) for pred, ks in arities.items()}


@dataclass(frozen=True)
class Signature:
    """A language: the Herbrand domain (constants) and predicate arities."""

    constants: tuple[str, ...] = ()
    predicates: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "constants", tuple(sorted(set(self.constants))))
        preds = self.predicates
        if isinstance(preds, dict):
            preds = preds.items()
        arities: dict[str, set] = {}
        for name, k in preds:
            arities.setdefault(name, set()).add(k)
        check_arities(arities)
        object.__setattr__(
            self, "predicates", tuple(sorted((name, next(iter(ks))) for name, ks in arities.items()))
        )

    @property
    def arities(self) -> dict[str, int]:
        return dict(self.predicates)

    def atoms(self) -> list[Atom]:
        """All ground atoms At(D,P), sorted by predicate then arguments."""
        consts = [Const(c) for c in self.constants]
        return [Atom(p, args) for p, k in self.predicates for args in product(consts, repeat=k)]

    def atom_count(self) -> int:
        n = len(self.constants)
        return sum(n ** k for _, k in self.predicates)

    def union(self, other: "Signature") -> "Signature":
        return Signature(self.constants + other.constants, self.predicates + other.predicates)

    def with_constants(self, extra) -> "Signature":
        return Signature(self.constants + tuple(extra), self.predicates)


def signature_of(f: Formula, extra_constants=()) -> Signature:
    constants: set[str] = set()
    arities: dict[str, set] = {}
    _collect(f, constants, arities)
    preds = check_arities(arities)
    return Signature(tuple(constants) + tuple(extra_constants), tuple(preds.items()))


# -- printing ----------------------------------------------------------------

_IMPL, _DISJ, _CONJ, _UNARY = 1, 2, 3, 4


def _fmt_atom(f: Atom) -> str:
    if not f.args:
        return f.pred
    return f"{f.pred}({','.join(a.name for a in f.args)})"


def _fmt_quant(f) -> str:
    kind = type(f)
    names = []
    body = f
    while isinstance(body, kind):
        names.append(body.var)
        body = body.body
    word = "forall" if kind is Forall else "exists"
    return f"{word} {' '.join(names)} ({_fmt(body, 0)})"


def _fmt(f: Formula, ctx: int) -> str:
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Atom):
        return _fmt_atom(f)
    if isinstance(f, Eq):
        return f"{f.left.name} = {f.right.name}"
    if isinstance(f, (Forall, Exists)):
        return _fmt_quant(f)
    if is_neg(f):
        g = f.left
        inner = f"({_fmt(g, 0)})" if isinstance(g, (Forall, Exists)) else _fmt(g, _UNARY)
        return "not " + inner
    if isinstance(f, Implies):
        s, level = f"{_fmt(f.left, _DISJ)} -> {_fmt(f.right, _IMPL)}", _IMPL
    elif isinstance(f, Or):
        s, level = f"{_fmt(f.left, _DISJ)} v {_fmt(f.right, _CONJ)}", _DISJ
    elif isinstance(f, And):
        s, level = f"{_fmt(f.left, _CONJ)} & {_fmt(f.right, _UNARY)}", _CONJ
    else:
        raise TypeError(f"not a formula: {f!r}")
    return f"({s})" if level < ctx else s


def print_formula(f: Formula) -> str:
    return _fmt(f, 0)


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<ws>\s+|;[^\n]*)|(?P<op>->|!=|[=&(),])|(?P<word>[A-Za-z0-9_]+)|(?P<bad>.)")
_KEYWORDS = {"forall", "exists", "not", "top", "bot", "v"}


def _tokenize(text):
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN_RE.finditer(text):
        col = m.start() - line_start + 1
        kind = m.lastgroup
        value = m.group()
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", line, col)
        if kind == "word":
            if value in _KEYWORDS:
                kind = "kw"
            elif _VAR_RE.match(value):
                kind = "var"
            elif _CONST_RE.match(value):
                kind = "const"
            else:
                raise ParseError(f"bad identifier {value!r}", line, col)
        if kind != "ws":
            tokens.append((kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + value.rindex("\n") + 1
    tokens.append(("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected):
        kind, value, line, col = self.peek()
        found = "end of input" if kind == "eof" else repr(value)
        return ParseError(f"expected {expected}, found {found}", line, col)

    def accept(self, value):
        kind, text = self.peek()[:2]
        if kind in ("op", "kw") and text == value:
            self.pos += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            raise self.error(repr(value))

    def formula(self):
        left = self.disj()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disj(self):
        left = self.conj()
        while self.accept("v"):
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.accept("&"):
            left = And(left, self.unary())
        return left

    def unary(self):
        kind, value = self.peek()[:2]
        if kind == "kw":
            if value == "not":
                self.next()
                return neg(self.unary())
            if value in ("forall", "exists"):
                return self.quant()
            if value == "top":
                self.next()
                return TOP
            if value == "bot":
                self.next()
                return BOT
            raise self.error("a formula")
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        if kind == "var":
            return self.equality(Var(self.next()[1]))
        if kind == "const":
            name = self.next()[1]
            if self.accept("("):
                args = [self.term()]
                while self.accept(","):
                    args.append(self.term())
                self.expect(")")
                return Atom(name, tuple(args))
            if self.peek()[1] in ("=", "!="):
                return self.equality(Const(name))
            return Atom(name)
        raise self.error("a formula")

    def equality(self, left):
        if self.accept("="):
            return Eq(left, self.term())
        if self.accept("!="):
            return neg(Eq(left, self.term()))
        raise self.error("'=' or '!='")

    def term(self):
        kind, value = self.peek()[:2]
        if kind == "var":
            self.next()
            return Var(value)
        if kind == "const":
            self.next()
            return Const(value)
        raise self.error("a term")

    def quant(self):
        kind = Forall if self.next()[1] == "forall" else Exists
        names = []
        while self.peek()[0] == "var":
            names.append(self.next()[1])
        if not names:
            raise self.error("a variable")
        self.expect("(")
        body = self.formula()
        self.expect(")")
        for name in reversed(names):
            body = kind(name, body)
        return body


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek()[0] != "eof":
        raise p.error("end of input")
    signature_of(f)  # arity check
    return f
