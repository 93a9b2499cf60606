import pytest
from hypothesis import given, settings, strategies as st

from eqgraphs.errors import ArityError, ParseError
from eqgraphs.formula import (
    BOT, TOP, And, Atom, Const, Eq, Exists, Forall, Implies, Or, Signature, Var, free_vars, neg,
    parse_formula, print_formula, signature_of, subformulas,
)
from eqgraphs.harness import random_sentence

p, q, r = Atom("p"), Atom("q"), Atom("r")
X = Var("X")


def man(t):
    return Atom("man", (t,))


def mortal(t):
    return Atom("mortal", (t,))


def test_parse_toss():
    assert parse_formula("toss -> head v tails") == Implies(Atom("toss"), Or(Atom("head"), Atom("tails")))


def test_parse_top():
    assert parse_formula("top") == TOP
    assert parse_formula("bot") == BOT


def test_parse_forall():
    assert parse_formula("forall X (man(X) -> mortal(X))") == Forall("X", Implies(man(X), mortal(X)))


def test_not_and_inequality_are_sugar():
    assert parse_formula("not p") == Implies(p, BOT)
    assert parse_formula("X != a") == Implies(Eq(X, Const("a")), BOT)
    assert parse_formula("not X = a") == parse_formula("X != a")


def test_precedence():
    assert parse_formula("not p & q v r -> p") == Implies(Or(And(neg(p), q), r), p)
    assert parse_formula("p -> q -> r") == Implies(p, Implies(q, r))
    assert parse_formula("p & q & r") == And(And(p, q), r)
    assert parse_formula("p v q v r") == Or(Or(p, q), r)


def test_multi_variable_quantifier():
    f = parse_formula("exists X Y (edge(X,Y))")
    assert f == Exists("X", Exists("Y", Atom("edge", (X, Var("Y")))))


def test_quantifier_as_operand():
    f = parse_formula("god(X) & forall Y (god(Y))")
    assert isinstance(f, And) and isinstance(f.right, Forall)


def test_comments_and_whitespace():
    assert parse_formula("p ; first\n  &\tq ; second") == And(p, q)


@pytest.mark.parametrize("text", ["p &", "forall (p)", "p(X", "(p", "p q", "X", "p # q", "forall x (p)"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_formula("p &\n  & q")
    assert (info.value.line, info.value.column) == (2, 3)


def test_arity_error_names_predicate():
    with pytest.raises(ArityError) as info:
        parse_formula("in(a) & in(a,b)")
    assert info.value.predicate == "in"


@pytest.mark.parametrize("f, text", [
    (Implies(p, BOT), "not p"),
    (Or(p, Implies(p, BOT)), "p v not p"),
    (Forall("X", Implies(man(X), Atom("mortal"))), "forall X (man(X) -> mortal)"),
    (Implies(BOT, BOT), "bot -> bot"),
    (neg(Exists("X", man(X))), "not (exists X (man(X)))"),
    (And(p, Forall("X", man(X))), "p & forall X (man(X))"),
    (neg(Eq(X, Const("a"))), "not X = a"),
])
def test_print(f, text):
    assert print_formula(f) == text


def test_print_parenthesizes_by_precedence():
    assert print_formula(Implies(Implies(p, q), q)) == "(p -> q) -> q"
    assert print_formula(And(p, And(q, r))) == "p & (q & r)"
    assert print_formula(And(Or(p, q), r)) == "(p v q) & r"
    assert print_formula(neg(And(p, q))) == "not (p & q)"


@pytest.mark.parametrize("text, expected", [
    ("man(X) -> mortal(X)", {"X"}),
    ("forall X (man(X) -> mortal(X))", set()),
    ("exists X (adores(Y,X))", {"Y"}),
    ("X = Y & forall X (p(X))", {"X", "Y"}),
])
def test_free_vars(text, expected):
    assert free_vars(parse_formula(text)) == expected


def test_signature_of():
    s = signature_of(parse_formula("edge(a,b) & edge(b,a)"))
    assert s.constants == ("a", "b") and s.arities == {"edge": 2}
    s = signature_of(parse_formula("p"), ["a"])
    assert s.constants == ("a",) and s.arities == {"p": 0}
    s = signature_of(parse_formula("forall X (p(X))"))
    assert s.constants == () and s.atoms() == []


def test_signature_sorts_and_dedupes():
    s = Signature(("b", "a", "b"), {"q": 2, "p": 0})
    assert s.constants == ("a", "b")
    assert [print_formula(a) for a in s.atoms()] == ["p", "q(a,a)", "q(a,b)", "q(b,a)", "q(b,b)"]
    assert s.atom_count() == 5
    with pytest.raises(ArityError):
        Signature((), (("p", 0), ("p", 1)))


def _no_negation_nodes(f):
    return all(type(g).__name__ not in ("Not", "Neg", "Negation") for g in subformulas(f))


@settings(max_examples=1000, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(0, 5))
def test_round_trip(rng, depth):
    f = random_sentence(rng, depth=depth)
    text = print_formula(f)
    g = parse_formula(text)
    assert g == f
    assert _no_negation_nodes(g)
    assert signature_of(parse_formula(print_formula(g))) == signature_of(f)
