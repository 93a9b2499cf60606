"""``eqgraph`` command line.

Exit codes: 0 success, 1 input error, 2 atom guard exceeded, 3 empty domain.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import parse_diagram, print_diagram
from .errors import EmptyDomainError, EqGraphError, GuardExceeded
from .formula import Signature, parse_formula, print_formula, signature_of
from .render import layout, to_svg
from .semantics import DEFAULT_GUARD, classical_difference, equilibrium_models, ht_models, models_classical
from .translate import to_classical_formula, to_formula

EXIT_INPUT, EXIT_GUARD, EXIT_DOMAIN = 1, 2, 3


def format_interp(interp) -> str:
    atoms = sorted(interp, key=lambda a: a.sort_key())
    return "{" + ", ".join(print_formula(a) for a in atoms) + "}"


def _atom_list(interp):
    return [print_formula(a) for a in sorted(interp, key=lambda a: a.sort_key())]


def format_models(models, mode: str = "equilibrium") -> str:
    """Text listing, one model per line, with a count footer."""
    if mode == "ht":
        lines = [f"h={format_interp(h)} t={format_interp(t)}" for h, t in models]
    else:
        lines = [format_interp(m) for m in models]
    lines.append(f"{len(models)} model(s)")
    return "\n".join(lines)


def _domain(text):
    if not text:
        return ()
    return tuple(c.strip() for c in text.split(",") if c.strip())


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise EqGraphError(f"cannot read {path}: {exc.strerror}") from exc


def _load_diagram(path):
    return parse_diagram(_read(path))


def _load_sentence(path):
    """Diagrams (``.eg``) are read through the equilibrium translation; ``.qel`` files are formulas."""
    suffix = Path(path).suffix
    if suffix == ".qel":
        return parse_formula(_read(path))
    if suffix == ".eg":
        return to_formula(_load_diagram(path))
    raise EqGraphError(f"{path}: expected a .eg diagram or a .qel formula file")


def cmd_translate(args):
    d = _load_diagram(args.input)
    f = to_classical_formula(d) if args.dialect == "classical" else to_formula(d)
    print(print_formula(f))
    return 0


def cmd_models(args):
    f = _load_sentence(args.input)
    sig = signature_of(f, _domain(args.domain))
    run = {"classical": models_classical, "ht": ht_models, "equilibrium": equilibrium_models}[args.mode]
    models = run(f, sig, guard=args.guard, prune=args.prune)
    if args.json:
        if args.mode == "ht":
            payload = [[_atom_list(h), _atom_list(t)] for h, t in models]
        else:
            payload = [_atom_list(m) for m in models]
        print(json.dumps(payload))
    else:
        print(format_models(models, args.mode))
    return 0


def cmd_check_peirce(args):
    d = _load_diagram(args.input)
    qel, classical = to_formula(d), to_classical_formula(d)
    sig = signature_of(qel, _domain(args.domain))
    witness = classical_difference(qel, classical, sig, guard=args.guard)
    if witness is None:
        print("EQUIVALENT")
        return 0
    which = "equilibrium" if witness in set(models_classical(qel, sig, guard=args.guard)) else "classical"
    print("NOT EQUIVALENT")
    print(f"witness: {format_interp(witness)} satisfies only the {which} reading")
    return 1


def cmd_render(args):
    svg = to_svg(layout(_load_diagram(args.input), args.style))
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0


def cmd_fmt(args):
    text = print_diagram(_load_diagram(args.input))
    print(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="eqgraph", description="Equilibrium existential graphs toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="print the formula read from a diagram")
    p.add_argument("input")
    p.add_argument("--dialect", choices=["qel", "classical"], default="qel")
    p.set_defaults(func=cmd_translate)

    def guard_args(p):
        p.add_argument("--domain", default="", help="extra constants, comma separated")
        p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="maximum number of ground atoms")

    p = sub.add_parser("models", help="enumerate models of a diagram or formula")
    p.add_argument("input")
    p.add_argument("--mode", choices=["classical", "ht", "equilibrium"], default="equilibrium")
    guard_args(p)
    p.add_argument("--prune", action="store_true", help="force top-level facts into every model")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("check-peirce", help="compare the equilibrium and classical readings classically")
    p.add_argument("input")
    guard_args(p)
    p.set_defaults(func=cmd_check_peirce)

    p = sub.add_parser("render", help="write an SVG drawing")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--style", choices=["equilibrium", "peirce"], default="equilibrium")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fmt", help="print the canonical form of a diagram")
    p.add_argument("input")
    p.set_defaults(func=cmd_fmt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"eqgraph: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except EmptyDomainError as exc:
        print(f"eqgraph: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except EqGraphError as exc:
        print(f"eqgraph: {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
