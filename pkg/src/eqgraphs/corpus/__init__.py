"""Bundled example diagrams and the Hamiltonian cycle program.

Each entry ``<name>`` is stored as ``<name>.eg`` (the diagram) with sidecars:

* ``<name>.qel.golden`` - canonical text of its equilibrium reading;
* ``<name>.ref`` - the formula as usually written (may differ from the golden
  text by an intuitionistically valid rewrite such as ``not exists`` versus
  ``forall ... not``);
* ``<name>.stable.golden`` (optional) - the stable models, in ``eqgraph models``
  output format.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..diagram import Diagram, parse_diagram
from ..formula import Atom, Const, Formula, conjoin, parse_formula

__all__ = [
    "CorpusEntry", "names", "load_entry", "corpus",
    "HAMILTONIAN_RULES", "hamiltonian_program", "hamiltonian_instance",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: str
    diagram: Diagram
    expected: Formula
    golden: str
    reference: Formula
    stable: str | None = None


def _root():
    return resources.files(__name__)


def _walk(node, prefix=""):
    for child in sorted(node.iterdir(), key=lambda c: c.name):
        if child.is_dir():
            if child.name != "__pycache__":
                yield from _walk(child, prefix + child.name + "/")
        elif child.name.endswith(".eg"):
            yield prefix + child.name[:-3]


def names() -> list[str]:
    return sorted(_walk(_root()))


def _read(name, suffix):
    node = _root()
    for part in (name + suffix).split("/"):
        node = node / part
    if not node.is_file():
        return None
    return node.read_text(encoding="utf-8")


def load_entry(name: str) -> CorpusEntry:
    source = _read(name, ".eg")
    if source is None:
        raise KeyError(name)
    golden = _read(name, ".qel.golden").strip()
    stable = _read(name, ".stable.golden")
    return CorpusEntry(
        name=name,
        source=source,
        diagram=parse_diagram(source),
        expected=parse_formula(golden),
        golden=golden,
        reference=parse_formula(_read(name, ".ref")),
        stable=stable,
    )


def corpus() -> list[tuple[str, Diagram, Formula]]:
    out = []
    for name in names():
        e = load_entry(name)
        out.append((e.name, e.diagram, e.expected))
    return out


# -- Hamiltonian cycles ------------------------------------------------------

HAMILTONIAN_RULES = (
    "forall X Y (edge(X,Y) -> node(X) & node(Y))",
    "forall X Y (edge(X,Y) -> in(X,Y) v not in(X,Y))",
    "not (exists X Y Z (in(X,Y) & in(X,Z) & Y != Z))",
    "not (exists X Y Z (X != Y & in(X,Z) & in(Y,Z)))",
    "forall X Y (in(X,Y) -> reach(X,Y))",
    "forall X Y Z (reach(X,Y) & in(Y,Z) -> reach(X,Z))",
    "not (exists X Y (node(X) & node(Y) & not reach(X,Y)))",
)


def hamiltonian_program() -> Formula:
    """Conjunction of the seven closed formulas of the encoding, in order."""
    return conjoin(parse_formula(r) for r in HAMILTONIAN_RULES)


def hamiltonian_instance(edges) -> Formula:
    """The program conjoined with one ``edge`` fact per directed edge."""
    edges = list(edges)
    if not edges:
        raise ValueError("a Hamiltonian instance needs at least one edge")
    facts = [Atom("edge", (Const(a), Const(b))) for a, b in edges]
    return conjoin([hamiltonian_program()] + facts)
