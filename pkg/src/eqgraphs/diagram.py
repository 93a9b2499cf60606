"""Equilibrium existential graphs as a tree of regions.

A diagram is a Page region.  Regions hold identity-line declarations and
elements: predicate applications, equality links and conditionals.  A
conditional is an ellipse whose interior (the antecedent) may contain any
number of consequent rectangles.

Identity lines are named.  The region that declares a line is its home
region; the line may be referenced there or anywhere nested inside it.
Consequent rectangles count as nested inside their conditional's antecedent.

The textual form is an s-expression language::

    file     := item*
    item     := "(" "line" VAR ")" | "(" IDENT arg* ")" | "(" "eq" arg arg ")"
              | "(" "not" item* ")" | "(" "cond" item* thenblk* ")"
    thenblk  := "(" "then" item* ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import ParseError, ValidationError

__all__ = [
    "RegionKind", "LineRef", "ConstRef", "PredApp", "EqLink", "Conditional", "Region", "Diagram",
    "Violation", "UnboundLine", "DuplicateLine", "ArityConflict", "BadName", "BadRegionKind",
    "validate", "parse_diagram", "print_diagram", "iter_conditionals", "diagram_depth",
]


class RegionKind(Enum):
    PAGE = "page"
    ANTECEDENT = "antecedent"
    CONSEQUENT = "consequent"


@dataclass(frozen=True)
class LineRef:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ConstRef:
    name: str

    def __str__(self):
        return self.name


ArgRef = LineRef | ConstRef


@dataclass(frozen=True)
class PredApp:
    pred: str
    args: tuple[ArgRef, ...] = ()


@dataclass(frozen=True)
class EqLink:
    left: ArgRef
    right: ArgRef


@dataclass(frozen=True)
class Region:
    kind: RegionKind
    lines: tuple[str, ...] = ()
    elements: tuple = ()


@dataclass(frozen=True)
class Conditional:
    antecedent: Region
    consequents: tuple[Region, ...] = ()
    # written with the `(not ...)` shorthand; affects printing only
    negation: bool = False


Element = PredApp | EqLink | Conditional


@dataclass(frozen=True)
class Diagram:
    page: Region = field(default_factory=lambda: Region(RegionKind.PAGE))


# -- validation --------------------------------------------------------------

class Violation:
    def __eq__(self, other):
        return type(self) is type(other) and vars(self) == vars(other)

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(vars(self).items()))))

    def __repr__(self):
        args = ", ".join(repr(v) for v in vars(self).values())
        return f"{type(self).__name__}({args})"


class UnboundLine(Violation):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return f"line {self.name} is referenced outside the region that declares it"


class DuplicateLine(Violation):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return f"line {self.name} is declared more than once"


class ArityConflict(Violation):
    def __init__(self, pred):
        self.pred = pred

    def __str__(self):
        return f"predicate {self.pred} is used with different arities"


class BadName(Violation):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return f"{self.name!r} is not a valid name in this position"


class BadRegionKind(Violation):
    def __init__(self, where):
        self.where = where

    def __str__(self):
        return f"region kind mismatch: {self.where}"


_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
_CONST_RE = re.compile(r"[a-z0-9][A-Za-z0-9_]*\Z")
_RESERVED = {"line", "cond", "then", "eq", "not"}


def iter_conditionals(region: Region):
    for el in region.elements:
        if isinstance(el, Conditional):
            yield el
            yield from iter_conditionals(el.antecedent)
            for c in el.consequents:
                yield from iter_conditionals(c)


def diagram_depth(d: Diagram) -> int:
    """Maximum conditional nesting depth."""

    def go(region):
        best = 0
        for el in region.elements:
            if isinstance(el, Conditional):
                inner = max([go(el.antecedent)] + [go(c) for c in el.consequents])
                best = max(best, 1 + inner)
        return best

    return go(d.page)


def validate(d: Diagram) -> list[Violation]:
    found: list[Violation] = []

    def add(v):
        if v not in found:
            found.append(v)

    declared: set[str] = set()
    arities: dict[str, set] = {}

    if not isinstance(d, Diagram) or not isinstance(d.page, Region) or d.page.kind is not RegionKind.PAGE:
        add(BadRegionKind("the root region must be the page"))
        return found

    def check_arg(arg, scope):
        if isinstance(arg, LineRef):
            if not _VAR_RE.match(arg.name):
                add(BadName(arg.name))
            elif arg.name not in scope:
                add(UnboundLine(arg.name))
        elif isinstance(arg, ConstRef):
            if not _CONST_RE.match(arg.name) or arg.name in all_names:
                add(BadName(arg.name))
        else:
            add(BadName(repr(arg)))

    def walk(region, scope, expected):
        if region.kind is not expected:
            add(BadRegionKind(f"expected {expected.value}, got {region.kind.value}"))
        for name in region.lines:
            if not _VAR_RE.match(name):
                add(BadName(name))
            if name in declared:
                add(DuplicateLine(name))
            declared.add(name)
        scope = scope | set(region.lines)
        for el in region.elements:
            if isinstance(el, PredApp):
                if not _CONST_RE.match(el.pred) or el.pred in _RESERVED:
                    add(BadName(el.pred))
                arities.setdefault(el.pred, set()).add(len(el.args))
                for a in el.args:
                    check_arg(a, scope)
            elif isinstance(el, EqLink):
                check_arg(el.left, scope)
                check_arg(el.right, scope)
            elif isinstance(el, Conditional):
                if el.negation and el.consequents:
                    add(BadRegionKind("a negation cannot have consequents"))
                inner = walk(el.antecedent, scope, RegionKind.ANTECEDENT)
                for c in el.consequents:
                    walk(c, inner, RegionKind.CONSEQUENT)
            else:
                add(BadName(repr(el)))
        return scope

    # constants are checked against every line name, wherever declared
    def collect(region):
        for name in region.lines:
            yield name
        for el in region.elements:
            if isinstance(el, Conditional):
                yield from collect(el.antecedent)
                for c in el.consequents:
                    yield from collect(c)

    all_names = set(collect(d.page))
    walk(d.page, frozenset(), RegionKind.PAGE)
    for pred, ks in sorted(arities.items()):
        if len(ks) > 1:
            add(ArityConflict(pred))
    return found


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<ws>\s+|;[^\n]*)|(?P<open>\()|(?P<close>\))|(?P<sym>[A-Za-z0-9_]+)|(?P<bad>.)")


def _tokenize(text):
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN_RE.finditer(text):
        kind, value = m.lastgroup, m.group()
        col = m.start() - line_start + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", line, col)
        if kind != "ws":
            tokens.append((kind, value, line, col))
        if "\n" in value:
            line += value.count("\n")
            line_start = m.start() + value.rindex("\n") + 1
    return tokens


def _read_sexprs(text):
    """Nested lists of (value, line, col) leaves; each list carries its opening position."""
    stack = [[]]
    opens = []
    for kind, value, line, col in _tokenize(text):
        if kind == "open":
            stack.append([])
            opens.append((line, col))
        elif kind == "close":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", line, col)
            items = stack.pop()
            stack[-1].append(_SList(items, *opens.pop()))
        else:
            stack[-1].append((value, line, col))
    if len(stack) > 1:
        line, col = opens[-1]
        raise ParseError("unclosed '('", line, col)
    return stack[0]


class _SList(list):
    def __init__(self, items, line, col):
        super().__init__(items)
        self.line = line
        self.col = col


def _arg(tok):
    value, line, col = tok
    if _VAR_RE.match(value):
        return LineRef(value)
    if _CONST_RE.match(value):
        return ConstRef(value)
    raise ParseError(f"bad argument {value!r}", line, col)


def _region(items, kind, allow_then=False):
    lines, elements, thens = [], [], []
    for item in items:
        if not isinstance(item, _SList):
            value, line, col = item
            raise ParseError(f"expected '(' before {value!r}", line, col)
        if not item or isinstance(item[0], _SList):
            raise ParseError("expected a keyword or predicate name after '('", item.line, item.col)
        head, line, col = item[0]
        rest = item[1:]
        if head == "line":
            if len(rest) != 1 or isinstance(rest[0], _SList) or not _VAR_RE.match(rest[0][0]):
                raise ParseError("(line ...) takes exactly one uppercase name", line, col)
            lines.append(rest[0][0])
        elif head == "then":
            if not allow_then:
                raise ParseError("(then ...) is only allowed directly inside (cond ...)", line, col)
            thens.append(_region(rest, RegionKind.CONSEQUENT))
        elif head == "cond":
            ant, cons = _region(rest, RegionKind.ANTECEDENT, allow_then=True)
            elements.append(Conditional(ant, tuple(cons)))
        elif head == "not":
            ant = _region(rest, RegionKind.ANTECEDENT)
            elements.append(Conditional(ant, (), negation=True))
        elif head == "eq":
            if len(rest) != 2 or any(isinstance(r, _SList) for r in rest):
                raise ParseError("(eq ...) takes exactly two arguments", line, col)
            elements.append(EqLink(_arg(rest[0]), _arg(rest[1])))
        else:
            if not _CONST_RE.match(head):
                raise ParseError(f"bad predicate name {head!r}", line, col)
            for r in rest:
                if isinstance(r, _SList):
                    raise ParseError(f"arguments of {head} must be names", r.line, r.col)
            elements.append(PredApp(head, tuple(_arg(r) for r in rest)))
    region = Region(kind, tuple(lines), tuple(elements))
    if allow_then:
        return region, thens
    return region


def parse_diagram(text: str) -> Diagram:
    d = Diagram(_region(_read_sexprs(text), RegionKind.PAGE))
    problems = validate(d)
    if problems:
        raise ValidationError(problems)
    return d


# -- printing ----------------------------------------------------------------

_WRAP_AT = 100


def _fmt_items(region: Region) -> list[str]:
    out = [f"(line {name})" for name in region.lines]
    for el in region.elements:
        if isinstance(el, PredApp):
            out.append("(" + " ".join([el.pred] + [a.name for a in el.args]) + ")")
        elif isinstance(el, EqLink):
            out.append(f"(eq {el.left.name} {el.right.name})")
        else:
            head = "not" if el.negation and not el.consequents else "cond"
            parts = [head] + _fmt_items(el.antecedent)
            parts += ["(" + " ".join(["then"] + _fmt_items(c)) + ")" for c in el.consequents]
            out.append("(" + " ".join(parts) + ")")
    return out


def print_diagram(d: Diagram) -> str:
    """Canonical text: lines first, then elements, ``then`` blocks last.

    Top-level items share one line unless that line would be long, in which
    case each gets its own.
    """
    items = _fmt_items(d.page)
    flat = " ".join(items)
    if len(flat) <= _WRAP_AT:
        return flat
    return "\n".join(items)
